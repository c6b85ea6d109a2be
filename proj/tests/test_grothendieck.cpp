#include <random>

#include "deligne/errors.hpp"
#include "deligne/grothendieck.hpp"
#include "deligne/oracle.hpp"
#include "doctest.h"

using namespace deligne;

namespace {

const Bipartition E{};
const Bipartition B{{1}, {}};   // (box, empty)
const Bipartition W{{}, {1}};   // (empty, box)
const Bipartition BB{{1}, {1}};

RingVector vec(std::initializer_list<std::pair<Bipartition, long long>> terms, Delta tag = Delta::t()) {
    RingVector v(tag);
    for (const auto& [b, c] : terms) v.add(b, c);
    return v;
}

Bipartition random_bp(std::mt19937& g, int r, int s) {
    auto all = bipartitions_up_to(r, s);
    return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(g)];
}

RingVector random_vec(std::mt19937& g, int r, int s, Delta tag) {
    RingVector v(tag);
    int n = std::uniform_int_distribution<int>(1, 3)(g);
    for (int k = 0; k < n; ++k) v.add(random_bp(g, r, s), std::uniform_int_distribution<int>(-2, 3)(g));
    return v;
}

const std::vector<Rational> kDeltas{-2, -1, 0, 1, 2, Rational(1, 2)};

}  // namespace

TEST_CASE("koike gamma examples") {
    CHECK(koike_gamma(B, W, BB) == 1);
    CHECK(koike_gamma(B, W, E) == 1);
    Bipartition two{{2}, {}};
    std::vector<Bipartition> support{{{2, 1}, {1}}, {{3}, {1}}, {{1, 1}, {}}, {{2}, {}}};
    for (const auto& nu : bipartitions_up_to(3, 1)) CHECK(koike_gamma(two, BB, nu) == (std::count(support.begin(), support.end(), nu) ? 1 : 0));
    for (const auto& lam : bipartitions_up_to(2, 2))
        for (const auto& nu : bipartitions_up_to(2, 2)) CHECK(koike_gamma(lam, E, nu) == (lam == nu));
}

TEST_CASE("generic products") {
    CHECK(product_generic(RingVector(B), RingVector(W)) == vec({{BB, 1}, {E, 1}}));
    RingVector want = vec({{{{2, 1}, {1}}, 1}, {{{3}, {1}}, 1}, {{{1, 1}, {}}, 1}, {{{2}, {}}, 1}});
    CHECK(product_generic(RingVector(Bipartition{{2}, {}}), RingVector(BB)) == want);
    std::mt19937 g(4);
    for (int k = 0; k < 20; ++k) {
        RingVector x = random_vec(g, 2, 2, Delta::t());
        CHECK(product_generic(RingVector(E), x) == x);
    }
    CHECK_THROWS_AS(product_generic(RingVector(B, Delta::at(0)), RingVector(B)), DomainError);
}

TEST_CASE("koike gamma agrees with the paired-skew product") {
    for (const auto& lam : bipartitions_up_to(2, 2))
        for (const auto& mu : bipartitions_up_to(2, 2)) {
            RingVector p = product_generic(RingVector(lam), RingVector(mu));
            for (const auto& nu : bipartitions_up_to(4, 4)) REQUIRE(p.coeff(nu) == koike_gamma(lam, mu, nu));
            for (const auto& [nu, c] : p.terms()) {
                REQUIRE(nu.black.size() <= lam.black.size() + mu.black.size());
                REQUIRE(nu.white.size() <= lam.white.size() + mu.white.size());
                REQUIRE(c > 0);
            }
        }
}

TEST_CASE("pieri rules") {
    CHECK(pieri(Bipartition{{2}, {}}, Color::Black) == vec({{{{3}, {}}, 1}, {{{2, 1}, {}}, 1}}));
    RingVector want = vec({{{{3, 2}, {3, 1}}, 1}, {{{2, 2, 1}, {3, 1}}, 1}, {{{2, 2}, {3}}, 1}, {{{2, 2}, {2, 1}}, 1}});
    CHECK(pieri(Bipartition{{2, 2}, {3, 1}}, Color::Black) == want);
    std::mt19937 g(5);
    for (int k = 0; k < 200; ++k) {
        Bipartition lam = random_bp(g, 4, 4);
        REQUIRE(pieri(lam, Color::Black) == product_generic(RingVector(lam), RingVector(B)));
        REQUIRE(pieri(lam, Color::White) == product_generic(RingVector(lam), RingVector(W)));
    }
}

TEST_CASE("mixed products") {
    CHECK(mixed_product(Partition{1}, Partition{1}) == vec({{BB, 1}, {E, 1}}));
    CHECK(mixed_product(Partition{2, 1}, Partition{}) == vec({{{{2, 1}, {}}, 1}}));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& l : partitions_of(a))
                for (const auto& m : partitions_of(b))
                    REQUIRE(mixed_product(l, m) == product_generic(RingVector(Bipartition{l, {}}), RingVector(Bipartition{{}, m})));
}

TEST_CASE("commutativity and associativity") {
    std::mt19937 g(6);
    for (int k = 0; k < 40; ++k) {
        RingVector x(random_bp(g, 2, 1)), y(random_bp(g, 1, 2)), z(random_bp(g, 1, 1));
        REQUIRE(product_generic(x, y) == product_generic(y, x));
        REQUIRE(product_generic(product_generic(x, y), z) == product_generic(x, product_generic(y, z)));
        REQUIRE(dual_vector(product_generic(x, y)) == product_generic(dual_vector(x), dual_vector(y)));
    }
}

TEST_CASE("lift golden values") {
    CHECK(lift(RingVector(BB, Delta::at(0))) == vec({{BB, 1}, {E, 1}}));
    for (const auto& d : {Rational(-2), Rational(-1), Rational(1), Rational(2), Rational(1, 2)})
        CHECK(lift(RingVector(BB, Delta::at(d))) == vec({{BB, 1}}));
    Delta m1 = Delta::at(-1);
    CHECK(lift(RingVector(Bipartition{{3, 2}, {3, 1}}, m1)) ==
          vec({{{{3, 2}, {3, 1}}, 1}, {{{3}, {1, 1}}, 1}, {{{2, 2}, {3}}, 1}, {{{2}, {1}}, 1}}));
    CHECK(lift(RingVector(Bipartition{{2, 2}, {3, 1}}, m1)) == vec({{{{2, 2}, {3, 1}}, 1}, {{{2}, {1, 1}}, 1}}));
    CHECK(lift(RingVector(Bipartition{{2, 2, 1}, {3, 1}}, m1)) == vec({{{{2, 2, 1}, {3, 1}}, 1}}));
    CHECK(lift(RingVector(Bipartition{{2, 2}, {2, 1}}, m1)) == vec({{{{2, 2}, {2, 1}}, 1}, {{{2, 1}, {1, 1}}, 1}}));
    // one-sided bipartitions always lift to themselves
    for (long d = -3; d <= 3; ++d)
        for (const auto& lam : bipartitions_up_to(4, 4))
            if (lam.black.empty() || lam.white.empty()) REQUIRE(lift(RingVector(lam, Delta::at(d))) == vec({{lam, 1}}));
    CHECK_THROWS_AS(lift(RingVector(BB)), DomainError);
}

TEST_CASE("unlift") {
    CHECK(unlift(vec({{BB, 1}, {E, 1}}), Delta::at(0)) == vec({{BB, 1}}, Delta::at(0)));
    CHECK(unlift(vec({{BB, 1}}), Delta::at(Rational(1, 2))) == vec({{BB, 1}}, Delta::at(Rational(1, 2))));
    std::mt19937 g(8);
    for (int k = 0; k < 500; ++k) {
        Delta d = Delta::at(kDeltas[k % kDeltas.size()]);
        RingVector x = random_vec(g, 4, 4, d);
        RingVector l = lift(x);
        REQUIRE(unlift(l, d) == x);
        REQUIRE(lift(unlift(l, d)) == l);
    }
    CHECK_THROWS_AS(unlift(vec({{BB, 1}}, Delta::at(0)), Delta::at(0)), DomainError);
}

TEST_CASE("products at specific delta") {
    Bipartition two{{2}, {}};
    Bipartition t21{{2, 1}, {1}}, t3{{3}, {1}}, t11{{1, 1}, {}};
    auto at = [&](Rational d) { return product_at(RingVector(two, Delta::at(d)), RingVector(BB, Delta::at(d))); };
    auto want = [&](Rational d, long long c11, long long c2) {
        return vec({{t21, 1}, {t3, 1}, {t11, c11}, {two, c2}}, Delta::at(d));
    };
    CHECK(at(0) == want(0, 1, 2));
    CHECK(at(-1) == want(-1, 0, 1));
    CHECK(at(1) == want(1, 1, 0));
    CHECK(at(-2) == want(-2, 1, 0));
    CHECK(at(3) == want(3, 1, 1));
    CHECK(at(Rational(1, 2)) == want(Rational(1, 2), 1, 1));
    Delta m1 = Delta::at(-1);
    CHECK(product_at(RingVector(Bipartition{{2, 2}, {3, 1}}, m1), RingVector(B, m1)) ==
          vec({{{{3, 2}, {3, 1}}, 1}, {{{2, 2, 1}, {3, 1}}, 1}, {{{2, 2}, {2, 1}}, 1}}, m1));
    CHECK(product_at(RingVector(B), RingVector(W)) == vec({{BB, 1}, {E, 1}}));
    CHECK_THROWS_AS(product_at(RingVector(B, Delta::at(0)), RingVector(W, Delta::at(1))), DomainError);
}

TEST_CASE("semisimple parameters match the generic product") {
    std::mt19937 g(9);
    Delta h = Delta::at(Rational(1, 2));
    for (int k = 0; k < 30; ++k) {
        Bipartition a = random_bp(g, 2, 2), b = random_bp(g, 2, 2);
        REQUIRE(product_at(RingVector(a, h), RingVector(b, h)) ==
                product_generic(RingVector(a), RingVector(b)).retagged(h));
    }
}

TEST_CASE("products at integer delta have nonnegative coefficients") {
    for (long d = -2; d <= 2; ++d)
        for (const auto& a : bipartitions_up_to(2, 2))
            for (const auto& b : bipartitions_up_to(1, 1)) {
                RingVector p = product_at(RingVector(a, Delta::at(d)), RingVector(b, Delta::at(d)));
                for (const auto& [nu, c] : p.terms()) REQUIRE(c > 0);
            }
}

TEST_CASE("bilinear form") {
    CHECK(bilinear_form(Bipartition{{3, 2}, {3, 1}}, Bipartition{{2}, {1}}, Delta::at(-1)) == 1);
    std::mt19937 g(10);
    auto bps = bipartitions_up_to(3, 3);
    for (const auto& dv : kDeltas) {
        Delta d = Delta::at(dv);
        for (const auto& l : bps)
            for (const auto& m : bps) {
                long long f = bilinear_form(l, m, d);
                REQUIRE(f == bilinear_form(m, l, d));
                REQUIRE(f == bilinear_form(m.dual(), l.dual(), d));
                if (l == m) REQUIRE(f >= 1);
                if (l.black.size() + m.white.size() != l.white.size() + m.black.size()) REQUIRE(f == 0);
                if (!d.is_integer()) REQUIRE(f == (l == m));
            }
    }
    CHECK(bilinear_form(BB, BB, Delta::t()) == 1);
    CHECK(bilinear_form(BB, E, Delta::t()) == 0);
}

TEST_CASE("form invariance (xy, z) = (x, z y*)") {
    auto form = [](const RingVector& a, const RingVector& b) {
        long long s = 0;
        for (const auto& [x, c] : a.terms())
            for (const auto& [y, e] : b.terms()) s += c * e * bilinear_form(x, y, a.tag());
        return s;
    };
    std::mt19937 g(12);
    for (int k = 0; k < 60; ++k) {
        Delta d = Delta::at(kDeltas[k % kDeltas.size()]);
        RingVector x(random_bp(g, 2, 1), d), y(random_bp(g, 1, 1), d), z(random_bp(g, 2, 2), d);
        REQUIRE(form(product_at(x, y), z) == form(x, product_at(z, dual_vector(y))));
    }
}

TEST_CASE("dual") {
    CHECK(dual_vector(RingVector(B)) == RingVector(W));
    std::mt19937 g(14);
    for (int k = 0; k < 20; ++k) {
        RingVector x = random_vec(g, 3, 3, Delta::t());
        CHECK(dual_vector(dual_vector(x)) == x);
    }
}

TEST_CASE("ring vector bookkeeping") {
    RingVector x = vec({{B, 2}, {W, -1}});
    CHECK((x - x).is_zero());
    CHECK((x + x).coeff(B) == 4);
    CHECK(x.scaled(0).is_zero());
    CHECK_THROWS_AS(x + RingVector(B, Delta::at(1)), DomainError);
}
