#pragma once
// Weight diagrams x_lambda(delta), cap diagrams and decomposition numbers D'.
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deligne/combinatorics.hpp"
#include "deligne/scalar.hpp"

namespace deligne {

enum class Label : char { Up = '^', Down = 'v', Cross = 'x', Circle = 'o' };

// delta is either generic (t) or an exact rational.
struct Delta {
    bool generic = true;
    Rational value = 0;

    static Delta t() { return {}; }
    static Delta at(const Rational& v) {
        Rational c = v;
        c.canonicalize();
        return {false, c};
    }
    static Delta at(long v) { return at(Rational(v)); }
    bool is_integer() const { return !generic && value.get_den() == 1; }
    long as_long() const;  // requires is_integer()
    std::string str() const;  // "t", "-1", "2/3"
    friend bool operator==(const Delta& a, const Delta& b) {
        return a.generic == b.generic && (a.generic || a.value == b.value);
    }
};

struct WeightDiagram {
    long delta = 0;
    long left = 0, right = 0;  // inclusive window; Up below it, Down above it
    std::vector<Label> labels;

    Label at(long i) const;
    std::string label_string() const;  // one char per window position
    // swap Up/Down at positions i and j
    WeightDiagram swapped(long i, long j) const;
};

using Cap = std::pair<long, long>;

WeightDiagram weight_diagram(const Bipartition& lam, long delta);
Bipartition decode(const WeightDiagram& x);
std::vector<Cap> cap_diagram(const WeightDiagram& x);  // sorted
// the literal fixed-point formulation (used to cross-check the stack scan)
std::vector<Cap> cap_diagram_fixed_point(const WeightDiagram& x);

std::set<Bipartition> linked_set(const Bipartition& lam, long delta);
int d_prime(const Bipartition& lam, const Bipartition& mu, const Delta& delta);

}  // namespace deligne
