#include <random>

#include "deligne/capdiagrams.hpp"
#include "deligne/errors.hpp"
#include "doctest.h"

using namespace deligne;

namespace {

Bipartition random_bp(std::mt19937& g, int r, int s) {
    auto all = bipartitions_up_to(r, s);
    return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(g)];
}

std::vector<Cap> caps_of(const Bipartition& b, long d) { return cap_diagram(weight_diagram(b, d)); }

}  // namespace

TEST_CASE("weight diagram of the empty bipartition at 0") {
    WeightDiagram x = weight_diagram(Bipartition{}, 0);
    for (long i = x.left - 3; i <= 0; ++i) CHECK(x.at(i) == Label::Up);
    for (long i = 1; i <= x.right + 3; ++i) CHECK(x.at(i) == Label::Down);
    CHECK(cap_diagram(x).empty());
    CHECK(decode(x) == Bipartition{});
}

TEST_CASE("weight diagram of (1|1) at 0") {
    Bipartition bb{{1}, {1}};
    WeightDiagram x = weight_diagram(bb, 0);
    CHECK(x.at(0) == Label::Down);
    CHECK(x.at(1) == Label::Up);
    CHECK(x.at(-1) == Label::Up);
    CHECK(x.at(-7) == Label::Up);
    CHECK(x.at(2) == Label::Down);
    CHECK(x.at(9) == Label::Down);
    CHECK(cap_diagram(x) == std::vector<Cap>{{0, 1}});
    CHECK(decode(x.swapped(0, 1)) == Bipartition{});
}

TEST_CASE("cap diagram golden value") {
    Bipartition lam{{5, 5, 4, 4, 3, 3}, {5, 5, 5, 4, 3, 2}};
    std::vector<Cap> want{{-5, 5}, {-4, 2}, {-3, -2}, {3, 4}};
    CHECK(caps_of(lam, 1) == want);
    CHECK(cap_diagram_fixed_point(weight_diagram(lam, 1)) == want);
}

TEST_CASE("linkage at -1 for (3,2|3,1)") {
    Bipartition lam{{3, 2}, {3, 1}};
    WeightDiagram x = weight_diagram(lam, -1);
    CHECK(cap_diagram(x) == std::vector<Cap>{{-1, 1}, {2, 3}});
    CHECK(decode(x.swapped(-1, 1)) == Bipartition{{3}, {1, 1}});
    CHECK(decode(x.swapped(2, 3)) == Bipartition{{2, 2}, {3}});
    CHECK(decode(x.swapped(-1, 1).swapped(2, 3)) == Bipartition{{2}, {1}});
    std::set<Bipartition> want{lam, {{3}, {1, 1}}, {{2, 2}, {3}}, {{2}, {1}}};
    CHECK(linked_set(lam, -1) == want);
    CHECK(d_prime(lam, Bipartition{{2}, {1}}, Delta::at(-1)) == 1);
    CHECK(d_prime(lam, Bipartition{{2}, {2}}, Delta::at(-1)) == 0);
    for (const auto& mu : want) CHECK(decode(weight_diagram(mu, -1)) == mu);
}

TEST_CASE("linkage of (1|1)") {
    Bipartition bb{{1}, {1}};
    for (long d : {-3, -2, -1, 1, 2, 3}) CHECK(linked_set(bb, d) == std::set<Bipartition>{bb});
    CHECK(linked_set(bb, 0) == std::set<Bipartition>{bb, Bipartition{}});
}

TEST_CASE("non-integer and generic delta give the Kronecker delta") {
    std::mt19937 g(1);
    for (int k = 0; k < 100; ++k) {
        Bipartition a = random_bp(g, 3, 3), b = random_bp(g, 3, 3);
        CHECK(d_prime(a, b, Delta::at(Rational(1, 2))) == (a == b));
        CHECK(d_prime(a, b, Delta::t()) == (a == b));
    }
}

TEST_CASE("encode/decode round trip") {
    std::mt19937 g(2);
    for (int k = 0; k < 500; ++k) {
        Bipartition b = random_bp(g, 6, 6);
        long d = std::uniform_int_distribution<long>(-5, 5)(g);
        WeightDiagram x = weight_diagram(b, d);
        REQUIRE(decode(x) == b);
        long cross = 0, circ = 0;
        for (Label l : x.labels) {
            cross += l == Label::Cross;
            circ += l == Label::Circle;
        }
        REQUIRE(cross - circ == d);
        // the window can be widened without changing anything
        REQUIRE(x.at(x.left - 1) == Label::Up);
        REQUIRE(x.at(x.right + 1) == Label::Down);
    }
}

TEST_CASE("decode rejects malformed diagrams") {
    WeightDiagram x = weight_diagram(Bipartition{{1}, {1}}, 0);
    x.labels[0] = Label::Cross;  // breaks the cross/circle count
    CHECK_THROWS_AS(decode(x), DomainError);
}

TEST_CASE("cap structure, swap sizes, fixed point agreement") {
    for (long d = -4; d <= 4; ++d)
        for (const auto& lam : bipartitions_up_to(6, 6)) {
            WeightDiagram x = weight_diagram(lam, d);
            auto caps = cap_diagram(x);
            REQUIRE(caps == cap_diagram_fixed_point(x));
            for (size_t a = 0; a < caps.size(); ++a) {
                auto [i, j] = caps[a];
                REQUIRE(i < j);
                REQUIRE(x.at(i) == Label::Down);
                REQUIRE(x.at(j) == Label::Up);
                for (size_t b = 0; b < caps.size(); ++b) {
                    auto [k, l] = caps[b];
                    bool crossing = i < k && k < j && j < l;
                    REQUIRE_FALSE(crossing);
                }
                Bipartition mu = decode(x.swapped(i, j));
                REQUIRE(mu.black.size() == lam.black.size() + i - j);
                REQUIRE(mu.white.size() == lam.white.size() + i - j);
            }
        }
}

TEST_CASE("unitriangularity and linked set size") {
    for (long d = -3; d <= 3; ++d)
        for (const auto& lam : bipartitions_up_to(4, 4)) {
            auto linked = linked_set(lam, d);
            REQUIRE(linked.count(lam) == 1);
            REQUIRE(linked.size() == (size_t{1} << caps_of(lam, d).size()));
            for (const auto& mu : linked) {
                if (mu == lam) continue;
                int i = lam.black.size() - mu.black.size();
                REQUIRE(i > 0);
                REQUIRE(lam.white.size() - mu.white.size() == i);
            }
        }
}

TEST_CASE("almost-cross bipartitions have no caps at m - n") {
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            for (const auto& b : bipartitions_up_to(6, 6))
                if (is_almost_cross(b, m, n)) CHECK(caps_of(b, m - n).empty());
}

TEST_CASE("delta helpers") {
    CHECK(Delta::at(Rational(4, 2)).is_integer());
    CHECK(Delta::at(Rational(4, 2)).as_long() == 2);
    CHECK_FALSE(Delta::t().is_integer());
    CHECK(Delta::at(Rational(-2, 3)).str() == "-2/3");
    CHECK(Delta::t().str() == "t");
}
