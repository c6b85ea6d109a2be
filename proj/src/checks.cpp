#include "deligne/checks.hpp"

#include <functional>

#include "deligne/errors.hpp"
#include "deligne/oracle.hpp"
#include "deligne/parallel.hpp"
#include "deligne/schur.hpp"
#include "deligne/textio.hpp"

namespace deligne {

namespace {

void record(CheckRow& row, bool ok, const std::string& what) {
    ++row.cases;
    if (ok) return;
    ++row.failed;
    if (row.failures.size() < 10) row.failures.push_back(what);
}

Bipartition bp(const char* s) { return parse_bipartition(s); }

RingVector vec(std::initializer_list<std::pair<const char*, long long>> terms, Delta tag = Delta::t()) {
    RingVector v(tag);
    for (auto [s, c] : terms) v.add(bp(s), c);
    return v;
}

LaurentPolynomial poly12(std::initializer_list<std::pair<Exponents, long long>> terms) {
    LaurentPolynomial p(1, 2);
    for (const auto& [e, c] : terms) p.add(e, c);
    return p;
}

CheckRow golden() {
    CheckRow row{"golden", 0, 0, {}};
    {
        auto x = weight_diagram(bp("(5,5,4,4,3,3|5,5,5,4,3,2)"), 1);
        record(row, cap_diagram(x) == std::vector<Cap>{{-5, 5}, {-4, 2}, {-3, -2}, {3, 4}}, "caps of ((5,5,4,4,3,3),(5,5,5,4,3,2)) at 1");
    }
    auto lift_is = [&](const char* lam, Delta d, RingVector want, const std::string& what) {
        record(row, lift(RingVector(bp(lam), d)) == want, what);
    };
    lift_is("(1|1)", Delta::at(0), vec({{"(1|1)", 1}, {"(|)", 1}}), "lift_0 (1|1)");
    for (Delta d : {Delta::at(-2), Delta::at(-1), Delta::at(1), Delta::at(2), Delta::at(Rational(1, 2))})
        lift_is("(1|1)", d, vec({{"(1|1)", 1}}), "lift_" + d.str() + " (1|1)");
    lift_is("(3,2|3,1)", Delta::at(-1), vec({{"(3,2|3,1)", 1}, {"(3|1,1)", 1}, {"(2,2|3)", 1}, {"(2|1)", 1}}), "lift_-1 (3,2|3,1)");
    lift_is("(2,2|3,1)", Delta::at(-1), vec({{"(2,2|3,1)", 1}, {"(2|1,1)", 1}}), "lift_-1 (2,2|3,1)");
    lift_is("(2,2,1|3,1)", Delta::at(-1), vec({{"(2,2,1|3,1)", 1}}), "lift_-1 (2,2,1|3,1)");
    lift_is("(2,2|2,1)", Delta::at(-1), vec({{"(2,2|2,1)", 1}, {"(2,1|1,1)", 1}}), "lift_-1 (2,2|2,1)");

    record(row, product_generic(vec({{"(1|)", 1}}), vec({{"(|1)", 1}})) == vec({{"(1|1)", 1}, {"(|)", 1}}), "(1|)(|1) in R_t");
    record(row,
           product_generic(vec({{"(2|)", 1}}), vec({{"(1|1)", 1}})) ==
               vec({{"(2,1|1)", 1}, {"(3|1)", 1}, {"(1,1|)", 1}, {"(2|)", 1}}),
           "(2|)(1|1) in R_t");

    auto at = [&](const char* a, const char* b, Delta d, std::initializer_list<std::pair<const char*, long long>> want) {
        record(row, product_at(RingVector(bp(a), d), RingVector(bp(b), d)) == vec(want, d),
               std::string(a) + std::string(b) + " at " + d.str());
    };
    at("(2|)", "(1|1)", Delta::at(0), {{"(2,1|1)", 1}, {"(3|1)", 1}, {"(1,1|)", 1}, {"(2|)", 2}});
    at("(2|)", "(1|1)", Delta::at(-1), {{"(2,1|1)", 1}, {"(3|1)", 1}, {"(2|)", 1}});
    at("(2|)", "(1|1)", Delta::at(1), {{"(2,1|1)", 1}, {"(3|1)", 1}, {"(1,1|)", 1}});
    at("(2|)", "(1|1)", Delta::at(-2), {{"(2,1|1)", 1}, {"(3|1)", 1}, {"(1,1|)", 1}});
    at("(2|)", "(1|1)", Delta::at(3), {{"(2,1|1)", 1}, {"(3|1)", 1}, {"(1,1|)", 1}, {"(2|)", 1}});
    at("(2|)", "(1|1)", Delta::at(Rational(1, 2)), {{"(2,1|1)", 1}, {"(3|1)", 1}, {"(1,1|)", 1}, {"(2|)", 1}});
    at("(2,2|3,1)", "(1|)", Delta::at(-1), {{"(3,2|3,1)", 1}, {"(2,2,1|3,1)", 1}, {"(2,2|2,1)", 1}});

    record(row,
           composite_schur(bp("(1|2)"), 1, 2) == poly12({{{1, -1, -1}, 1},
                                                         {{-1, 1, -1}, 1},
                                                         {{-1, -1, 1}, 1},
                                                         {{-2, 1, 0}, 1},
                                                         {{-2, 0, 1}, 1},
                                                         {{-1, 0, 0}, 2},
                                                         {{0, -1, 0}, 1},
                                                         {{0, 0, -1}, 1}}),
           "s_(1|2)(1|2)");
    record(row,
           composite_schur(bp("(1,1|3)"), 1, 2) == poly12({{{-3, 2, 0}, 1},
                                                           {{-3, 1, 1}, 1},
                                                           {{-3, 0, 2}, 1},
                                                           {{-2, 2, -1}, 1},
                                                           {{-2, -1, 2}, 1},
                                                           {{-2, 1, 0}, 2},
                                                           {{-2, 0, 1}, 2},
                                                           {{-1, 0, 0}, 1},
                                                           {{-1, 1, -1}, 1},
                                                           {{-1, -1, 1}, 1},
                                                           {{1, -1, -1}, -1}}),
           "s_(1,1|3)(1|2)");
    record(row,
           character(bp("(1,1|3)"), 1, 2) == poly12({{{-3, 2, 0}, 1},
                                                     {{-3, 1, 1}, 1},
                                                     {{-3, 0, 2}, 1},
                                                     {{-2, 2, -1}, 1},
                                                     {{-2, -1, 2}, 1},
                                                     {{-2, 1, 0}, 3},
                                                     {{-2, 0, 1}, 3},
                                                     {{-1, 1, -1}, 2},
                                                     {{-1, -1, 1}, 2},
                                                     {{-1, 0, 0}, 3},
                                                     {{0, -1, 0}, 1},
                                                     {{0, 0, -1}, 1}}),
           "ch W(1,1|3)(1|2)");
    return row;
}

CheckRow lr_suite(int threads) {
    CheckRow row{"lr", 0, 0, {}};
    std::vector<std::tuple<Partition, Partition, Partition>> triples;
    for (int n = 0; n <= 8; ++n)
        for (const auto& nu : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& lam : partitions_of(k))
                    for (const auto& mu : partitions_of(n - k)) triples.emplace_back(nu, lam, mu);
    std::vector<char> ok(triples.size());
    parallel_for(triples.size(), threads, [&](size_t i) {
        auto& [nu, lam, mu] = triples[i];
        ok[i] = lr_coefficient(nu, lam, mu) == lr_oracle(nu, lam, mu);
    });
    for (size_t i = 0; i < triples.size(); ++i) {
        auto& [nu, lam, mu] = triples[i];
        record(row, ok[i], "LR(" + nu.str() + ";" + lam.str() + "," + mu.str() + ")");
    }
    return row;
}

CheckRow gamma_suite(int threads) {
    CheckRow row{"gamma", 0, 0, {}};
    std::vector<std::pair<Bipartition, Bipartition>> pairs;
    for (const auto& l : bipartitions_up_to(2, 2))
        for (const auto& m : bipartitions_up_to(2, 2))
            if (l.black.size() + m.black.size() <= 2 && l.white.size() + m.white.size() <= 2) pairs.emplace_back(l, m);
    std::vector<char> ok(pairs.size());
    parallel_for(pairs.size(), threads, [&](size_t i) {
        const auto& [l, m] = pairs[i];
        ok[i] = gamma_oracle(l, m, 6) == product_generic(RingVector(l), RingVector(m));
    });
    for (size_t i = 0; i < pairs.size(); ++i) record(row, ok[i], pairs[i].first.str() + pairs[i].second.str());
    return row;
}

CheckRow hom_suite(int threads, std::vector<nlohmann::json>* dump) {
    CheckRow row{"hom", 0, 0, {}};
    const std::vector<Rational> deltas{-2, -1, 0, 1, 2, Rational(1, 2)};
    std::vector<Bipartition> bps;
    for (const auto& b : bipartitions_up_to(3, 3))
        if (b.total() <= 3) bps.push_back(b);
    std::vector<std::vector<char>> ok(deltas.size());
    std::vector<std::vector<nlohmann::json>> dumps(deltas.size());
    parallel_for(deltas.size(), threads, [&](size_t k) {
        HomOracle o(deltas[k]);
        HomOracle conj(deltas[k], 0xc0ffee + k);  // other idempotents, same answers
        Delta d = Delta::at(deltas[k]);
        for (const auto& l : bps)
            for (const auto& m : bps) {
                long long f = bilinear_form(l, m, d);
                ok[k].push_back(o.hom_dim(l, m) == f && conj.hom_dim(l, m) == f);
            }
        if (dump)
            for (const auto& l : bps) {
                const AlgebraContext& ctx = o.context(l.black.size(), l.white.size());
                nlohmann::json j{{"schema", kSchema}, {"delta", deltas[k].get_str()}, {"bp", bipartition_json(l)}};
                j["terms"] = nlohmann::json::array();
                const Vec& e = o.primitive(l);
                for (size_t i = 0; i < e.size(); ++i)
                    if (e[i] != 0)
                        j["terms"].push_back({{"diagram", nlohmann::json::parse(diagram_json(ctx.basis()[i]))},
                                              {"coeff", e[i].get_str()}});
                dumps[k].push_back(std::move(j));
            }
    });
    for (size_t k = 0; k < deltas.size(); ++k) {
        size_t idx = 0;
        for (const auto& l : bps)
            for (const auto& m : bps)
                record(row, ok[k][idx++], "Hom(" + l.str() + "," + m.str() + ") at " + deltas[k].get_str());
        if (dump) dump->insert(dump->end(), dumps[k].begin(), dumps[k].end());
    }
    return row;
}

}  // namespace

std::vector<CheckRow> run_checks(const std::string& suite, int threads, std::vector<nlohmann::json>* dump) {
    std::vector<CheckRow> rows;
    bool all = suite == "all";
    if (!all && suite != "lr" && suite != "gamma" && suite != "hom" && suite != "golden")
        throw DomainError("unknown suite '" + suite + "' (lr|gamma|hom|golden|all)");
    if (all || suite == "golden") rows.push_back(golden());
    if (all || suite == "lr") rows.push_back(lr_suite(threads));
    if (all || suite == "gamma") rows.push_back(gamma_suite(threads));
    if (all || suite == "hom") rows.push_back(hom_suite(threads, dump));
    return rows;
}

}  // namespace deligne
