#include "deligne/textio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "deligne/errors.hpp"

namespace deligne {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(i) + " in \"" + s + "\"");
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++i;
    }
    long integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) {
            i = start;
            fail("expected an integer");
        }
        if (i - digits > 9) {
            i = start;
            fail("integer too large");
        }
        return std::stol(s.substr(start, i - start));
    }
    void end() {
        skip_ws();
        if (i != s.size()) fail("trailing characters");
    }
};

Partition parse_parts(Cursor& c, char close) {
    std::vector<int> parts;
    if (c.peek(close)) return Partition();
    for (;;) {
        size_t at = c.i;
        long v = c.integer();
        if (v <= 0) {
            c.i = at;
            c.fail("parts must be positive");
        }
        if (!parts.empty() && v > parts.back()) {
            c.i = at;
            c.fail("parts not weakly decreasing");
        }
        parts.push_back(static_cast<int>(v));
        if (!c.peek(',')) break;
        ++c.i;
    }
    return Partition(parts);
}

}  // namespace

Bipartition parse_bipartition(const std::string& s) {
    Cursor c{s};
    c.expect('(');
    Partition b = parse_parts(c, '|');
    c.expect('|');
    Partition w = parse_parts(c, ')');
    c.expect(')');
    c.end();
    return {b, w};
}

Delta parse_delta(const std::string& s) {
    Cursor c{s};
    if (c.peek('t')) {
        ++c.i;
        c.end();
        return Delta::t();
    }
    long p = c.integer();
    long q = 1;
    if (c.peek('/')) {
        ++c.i;
        size_t at = c.i;
        q = c.integer();
        if (q <= 0) {
            c.i = at;
            c.fail(q == 0 ? "zero denominator" : "denominator must be positive");
        }
    }
    c.end();
    Rational v(p, q);
    v.canonicalize();
    return Delta::at(v);
}

nlohmann::json bipartition_json(const Bipartition& b) { return {b.black.parts(), b.white.parts()}; }

Bipartition bipartition_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("bipartition must be a pair of part lists");
    try {
        return {Partition(j[0].get<std::vector<int>>()), Partition(j[1].get<std::vector<int>>())};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad bipartition: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json vector_json(const RingVector& v) {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["ring"] = v.generic() ? "t" : "delta";
    if (!v.generic()) j["delta"] = v.tag().str();
    j["terms"] = nlohmann::json::array();
    for (const auto& [b, c] : v.terms()) j["terms"].push_back({{"bp", bipartition_json(b)}, {"coeff", c}});
    return j;
}

RingVector vector_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) throw ParseError("vector JSON needs a \"terms\" array");
    if (j.contains("schema") && j["schema"] != kSchema) throw ParseError("unsupported schema");
    Delta tag = Delta::t();
    std::string ring = j.value("ring", "t");
    if (ring == "delta") {
        if (!j.contains("delta") || !j["delta"].is_string()) throw ParseError("ring \"delta\" needs a \"delta\" string");
        tag = parse_delta(j["delta"].get<std::string>());
        if (tag.generic) throw ParseError("ring \"delta\" with delta t");
    } else if (ring != "t") {
        throw ParseError("ring must be \"t\" or \"delta\"");
    }
    RingVector v(tag);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("bp") || !t.contains("coeff") || !t["coeff"].is_number_integer())
            throw ParseError("each term needs \"bp\" and an integer \"coeff\"");
        v.add(bipartition_from_json(t["bp"]), t["coeff"].get<long long>());
    }
    return v;
}

RingVector parse_vector_json(const std::string& s) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return vector_from_json(j);
}

std::string vector_text(const RingVector& v) {
    if (v.is_zero()) return "0\n";
    std::ostringstream os;
    for (const auto& [b, c] : v.terms()) os << c << " " << b.str() << "\n";
    return os.str();
}

nlohmann::json polynomial_json(const LaurentPolynomial& p) {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["m"] = p.m();
    j["n"] = p.n();
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) j["terms"].push_back({{"exp", e}, {"coeff", c}});
    return j;
}

nlohmann::json caps_json(const WeightDiagram& x, const std::vector<Cap>& caps) {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["delta"] = x.delta;
    j["window"] = {x.left, x.right};
    j["labels"] = x.label_string();
    j["caps"] = nlohmann::json::array();
    for (auto [a, b] : caps) j["caps"].push_back({a, b});
    return j;
}

// ---- LR cache file ---------------------------------------------------------

namespace {
constexpr const char* kCacheHeader = "# deligne lr cache v1";

bool parse_record(const std::string& line, lr_cache::Record& r) {
    try {
        Cursor c{line};
        c.expect('(');
        r.nu = parse_parts(c, '|');
        c.expect('|');
        r.lam = parse_parts(c, '|');
        c.expect('|');
        r.mu = parse_parts(c, ')');
        c.expect(')');
        c.expect('-');
        c.expect('>');
        r.value = c.integer();
        c.end();
    } catch (const Error&) {
        return false;
    }
    // structurally impossible records mean the file is not ours
    return r.value >= 0 && r.nu.size() == r.lam.size() + r.mu.size() && r.nu.contains(r.lam) && r.nu.contains(r.mu);
}
}  // namespace

std::size_t load_lr_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0;
    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader) return 0;
    std::vector<lr_cache::Record> recs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        lr_cache::Record r;
        if (!parse_record(line, r)) return 0;  // corrupt: discard everything
        recs.push_back(std::move(r));
    }
    // spot-check a spread of records against a fresh computation
    const std::size_t samples = std::min<std::size_t>(recs.size(), 32);
    for (std::size_t k = 0; k < samples; ++k) {
        const auto& r = recs[samples == 1 ? 0 : k * (recs.size() - 1) / (samples - 1)];  // both ends included
        if (lr_cache::compute(r.nu, r.lam, r.mu) != r.value) return 0;
    }
    for (const auto& r : recs) lr_cache::insert(r);
    return recs.size();
}

void save_lr_cache(const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw DomainError("cannot write cache file " + path);
        out << kCacheHeader << "\n";
        for (const auto& r : lr_cache::snapshot())
            out << "(" << r.nu.str() << "|" << r.lam.str() << "|" << r.mu.str() << ") -> " << r.value << "\n";
        if (!out) throw DomainError("cannot write cache file " + path);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw DomainError("cannot replace cache file " + path);
}

}  // namespace deligne
