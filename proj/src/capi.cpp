#include <iomanip>
#include <new>
#include <sstream>
#include <string>

#include "deligne/checks.hpp"
#include "deligne/deligne.h"
#include "deligne/errors.hpp"
#include "deligne/grothendieck.hpp"
#include "deligne/schur.hpp"
#include "deligne/textio.hpp"

struct dg_context {
    int threads = 1;
    std::string cache_path;
    std::string error;
};

struct dg_result {
    std::string text;
    std::string json;
    bool has_integer = false;
    long long integer = 0;
    bool passed = true;
};

namespace {

using namespace deligne;
using nlohmann::json;

template <class Fn>
int guarded(dg_context* ctx, Fn fn) {
    if (!ctx) return DG_ERR_DOMAIN;
    ctx->error.clear();
    try {
        fn();
        return DG_OK;
    } catch (const Error& e) {
        ctx->error = e.what();
        return static_cast<int>(e.kind());
    } catch (const std::bad_alloc&) {
        ctx->error = "out of memory";
        return DG_ERR_INTERNAL;
    } catch (const std::exception& e) {
        ctx->error = std::string("internal: ") + e.what();
        return DG_ERR_INTERNAL;
    }
}

std::string need(const char* s, const char* what) {
    if (!s) throw ParseError(std::string("missing ") + what);
    return s;
}

void need_out(dg_result** out) {
    if (!out) throw DomainError("null result pointer");
    *out = nullptr;
}

void check_mn(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("m and n must be nonnegative");
}

dg_result* vector_result(const RingVector& v) {
    auto* r = new dg_result;
    r->text = vector_text(v);
    r->json = vector_json(v).dump();
    return r;
}

dg_result* integer_result(json j, const std::string& key, long long v) {
    auto* r = new dg_result;
    j[key] = v;
    r->text = std::to_string(v) + "\n";
    r->json = j.dump();
    r->has_integer = true;
    r->integer = v;
    return r;
}

}  // namespace

extern "C" {

const char* dg_version(void) { return "1.0.0"; }

dg_context* dg_context_new(void) { return new (std::nothrow) dg_context; }

void dg_context_free(dg_context* ctx) { delete ctx; }

const char* dg_last_error(const dg_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

int dg_set_threads(dg_context* ctx, int threads) {
    return guarded(ctx, [&] {
        if (threads < 1 || threads > 256) throw DomainError("threads must be in 1..256");
        ctx->threads = threads;
    });
}

int dg_cache_open(dg_context* ctx, const char* path) {
    return guarded(ctx, [&] {
        ctx->cache_path = need(path, "cache path");
        load_lr_cache(ctx->cache_path);
    });
}

int dg_cache_save(dg_context* ctx) {
    return guarded(ctx, [&] {
        if (!ctx->cache_path.empty()) save_lr_cache(ctx->cache_path);
    });
}

int dg_lift(dg_context* ctx, const char* delta, const char* bp, dg_result** out) {
    return guarded(ctx, [&] {
        need_out(out);
        Delta d = parse_delta(need(delta, "delta"));
        Bipartition b = parse_bipartition(need(bp, "bipartition"));
        if (d.generic) throw DomainError("lift needs a numeric delta");
        *out = vector_result(lift(RingVector(b, d)));
    });
}

int dg_unlift(dg_context* ctx, const char* delta, const char* vector_json_text, dg_result** out) {
    return guarded(ctx, [&] {
        need_out(out);
        Delta d = parse_delta(need(delta, "delta"));
        RingVector v = parse_vector_json(need(vector_json_text, "vector"));
        if (d.generic) throw DomainError("unlift needs a numeric delta");
        if (!v.generic()) throw DomainError("unlift takes an element of R_t (ring \"t\")");
        *out = vector_result(unlift(v, d));
    });
}

int dg_tensor(dg_context* ctx, const char* delta, const char* bp1, const char* bp2, dg_result** out) {
    return guarded(ctx, [&] {
        need_out(out);
        Delta d = parse_delta(need(delta, "delta"));
        Bipartition a = parse_bipartition(need(bp1, "bipartition"));
        Bipartition b = parse_bipartition(need(bp2, "bipartition"));
        *out = vector_result(product_at(RingVector(a, d), RingVector(b, d)));
    });
}

int dg_char(dg_context* ctx, int m, int n, const char* bp, dg_result** out) {
    return guarded(ctx, [&] {
        need_out(out);
        Bipartition b = parse_bipartition(need(bp, "bipartition"));
        check_mn(m, n);
        LaurentPolynomial p = character(b, m, n);
        auto* r = new dg_result;
        r->text = p.is_zero() ? "0\n" : p.str();
        json j = polynomial_json(p);
        j["bp"] = bipartition_json(b);
        r->json = j.dump();
        *out = r;
    });
}

int dg_dim(dg_context* ctx, int m, int n, const char* bp, dg_result** out) {
    return guarded(ctx, [&] {
        need_out(out);
        Bipartition b = parse_bipartition(need(bp, "bipartition"));
        check_mn(m, n);
        json j{{"schema", kSchema}, {"m", m}, {"n", n}, {"bp", bipartition_json(b)}};
        *out = integer_result(j, "dim", dim_W(b, m, n));
    });
}

int dg_caps(dg_context* ctx, const char* delta, const char* bp, dg_result** out) {
    return guarded(ctx, [&] {
        need_out(out);
        Delta d = parse_delta(need(delta, "delta"));
        Bipartition b = parse_bipartition(need(bp, "bipartition"));
        if (!d.is_integer()) throw DomainError("caps needs an integer delta");
        WeightDiagram x = weight_diagram(b, d.as_long());
        auto caps = cap_diagram(x);
        auto* r = new dg_result;
        r->json = caps_json(x, caps).dump();
        std::ostringstream os;
        os << "window [" << x.left << "," << x.right << "]\n" << "labels " << x.label_string() << "\ncaps";
        for (auto [i, j] : caps) os << " (" << i << "," << j << ")";
        os << "\n";
        r->text = os.str();
        *out = r;
    });
}

int dg_cross(dg_context* ctx, int m, int n, const char* bp, dg_result** out) {
    return guarded(ctx, [&] {
        need_out(out);
        Bipartition b = parse_bipartition(need(bp, "bipartition"));
        check_mn(m, n);
        bool c = is_cross(b, m, n), a = is_almost_cross(b, m, n);
        auto* r = new dg_result;
        json j{{"schema", kSchema}, {"m", m}, {"n", n}, {"bp", bipartition_json(b)}, {"cross", c}, {"almost_cross", a}};
        r->json = j.dump();
        r->text = std::string("cross ") + (c ? "yes" : "no") + "\nalmost-cross " + (a ? "yes" : "no") + "\n";
        r->has_integer = true;
        r->integer = c ? 1 : 0;
        *out = r;
    });
}

int dg_form(dg_context* ctx, const char* delta, const char* bp1, const char* bp2, dg_result** out) {
    return guarded(ctx, [&] {
        need_out(out);
        Delta d = parse_delta(need(delta, "delta"));
        Bipartition a = parse_bipartition(need(bp1, "bipartition"));
        Bipartition b = parse_bipartition(need(bp2, "bipartition"));
        json j{{"schema", kSchema}, {"delta", d.str()}, {"bp", {bipartition_json(a), bipartition_json(b)}}};
        *out = integer_result(j, "form", bilinear_form(a, b, d));
    });
}

int dg_check(dg_context* ctx, const char* suite, int dump_diagrams, dg_result** out) {
    return guarded(ctx, [&] {
        need_out(out);
        std::vector<json> dump;
        auto rows = run_checks(need(suite, "suite"), ctx->threads, dump_diagrams ? &dump : nullptr);
        auto* r = new dg_result;
        std::ostringstream os;
        os << std::left << std::setw(8) << "suite" << std::right << std::setw(8) << "cases" << std::setw(8) << "passed"
           << std::setw(8) << "failed" << "\n";
        json j{{"schema", kSchema}, {"suites", json::array()}};
        for (const auto& row : rows) {
            os << std::left << std::setw(8) << row.suite << std::right << std::setw(8) << row.cases << std::setw(8)
               << row.cases - row.failed << std::setw(8) << row.failed << "\n";
            for (const auto& f : row.failures) os << "  FAIL " << f << "\n";
            j["suites"].push_back({{"suite", row.suite},
                                   {"cases", row.cases},
                                   {"passed", row.cases - row.failed},
                                   {"failed", row.failed},
                                   {"failures", row.failures}});
            if (row.failed) r->passed = false;
        }
        os << (r->passed ? "PASS" : "FAIL") << "\n";
        for (const auto& d : dump) os << d.dump() << "\n";
        j["passed"] = r->passed;
        if (dump_diagrams) j["diagrams"] = dump;
        r->text = os.str();
        r->json = j.dump();
        *out = r;
    });
}

const char* dg_result_text(const dg_result* r) { return r ? r->text.c_str() : ""; }

const char* dg_result_json(const dg_result* r) { return r ? r->json.c_str() : ""; }

int dg_result_integer(const dg_result* r, long long* value) {
    if (!r || !value || !r->has_integer) return DG_ERR_DOMAIN;
    *value = r->integer;
    return DG_OK;
}

int dg_result_passed(const dg_result* r) { return r && r->passed ? 1 : 0; }

void dg_result_free(dg_result* r) { delete r; }

}  // extern "C"
