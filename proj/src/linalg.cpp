#include "deligne/linalg.hpp"

#include "deligne/errors.hpp"

namespace deligne {

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    DELIGNE_CHECK(a.size() == b.size(), "vector size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    DELIGNE_CHECK(a.size() == b.size(), "vector size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rational& c, const Vec& v) {
    Vec r(v.size());
    if (c == 0) return r;
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Vec Span::reduce(const Vec& v, Vec* combo) const {
    DELIGNE_CHECK(v.size() == dim_, "span dimension mismatch");
    Vec r = v;
    if (combo) combo->assign(ngen_, Rational(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational c = r[pivots_[i]];
        if (c == 0) continue;
        for (size_t k = 0; k < dim_; ++k)
            if (rows_[i][k] != 0) r[k] -= c * rows_[i][k];
        if (combo)
            for (size_t g = 0; g < combos_[i].size(); ++g)
                if (combos_[i][g] != 0) (*combo)[g] += c * combos_[i][g];
    }
    return r;
}

bool Span::insert(const Vec& v) {
    Vec combo;
    Vec r = reduce(v, &combo);
    std::size_t g = ngen_++;
    for (auto& c : combos_) c.resize(ngen_);
    size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) return false;
    // r = v - sum combo gen  ->  combination for the new row
    Vec rc(ngen_);
    for (size_t k = 0; k < g; ++k) rc[k] = -combo[k];
    rc[g] = 1;
    Rational inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    for (auto& x : rc) x *= inv;
    // keep rows fully reduced at the new pivot
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rational c = rows_[i][p];
        if (c == 0) continue;
        for (size_t k = 0; k < dim_; ++k) rows_[i][k] -= c * r[k];
        for (size_t k = 0; k < ngen_; ++k) combos_[i][k] -= c * rc[k];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    combos_.push_back(std::move(rc));
    return true;
}

std::size_t rank(const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    Span s(rows[0].size());
    for (const auto& r : rows) s.insert(r);
    return s.rank();
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols) {
    // reduced row echelon form
    std::vector<Vec> m = rows;
    std::vector<std::size_t> pivcol;
    size_t prow = 0;
    for (size_t c = 0; c < ncols && prow < m.size(); ++c) {
        size_t p = prow;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[prow]);
        Rational inv = 1 / m[prow][c];
        for (auto& x : m[prow]) x *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == prow || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t k = 0; k < ncols; ++k) m[i][k] -= f * m[prow][k];
        }
        pivcol.push_back(c);
        ++prow;
    }
    std::vector<char> is_piv(ncols, 0);
    for (auto c : pivcol) is_piv[c] = 1;
    std::vector<Vec> out;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        Vec x(ncols);
        x[f] = 1;
        for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = -m[i][f];
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace deligne
