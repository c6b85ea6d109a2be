#pragma once
// Exact rational linear algebra for the oracle.
#include <optional>
#include <vector>

#include "deligne/scalar.hpp"

namespace deligne {

using Vec = std::vector<Rational>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);

// Incrementally row-reduced span. Every stored row remembers how it was
// built from the inserted generators, so membership tests also return the
// combination.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t generators() const { return ngen_; }
    // Insert a generator; returns false (and records nothing but the
    // generator slot) when it is already in the span.
    bool insert(const Vec& v);
    // v = residual + sum_g combo[g] * generator_g
    Vec reduce(const Vec& v, Vec* combo = nullptr) const;
    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

private:
    std::size_t dim_;
    std::size_t ngen_ = 0;
    std::vector<Vec> rows_;    // echelon rows, pivot entry 1
    std::vector<std::size_t> pivots_;
    std::vector<Vec> combos_;  // rows_[i] = sum combos_[i][g] gen_g
};

std::size_t rank(const std::vector<Vec>& rows);
// basis of { x : A x = 0 } where A is given by rows
std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols);

}  // namespace deligne
