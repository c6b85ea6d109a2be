#pragma once
// Laurent polynomial characters for gl(m|n): complete supersymmetric
// polynomials, composite supersymmetric Schur polynomials, ch W and dim W.
#include <map>
#include <string>
#include <vector>

#include "deligne/combinatorics.hpp"

namespace deligne {

using Exponents = std::vector<int>;  // x_1..x_m then y_1..y_n

// graded-lex: higher total degree first, then lexicographically larger first
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class LaurentPolynomial {
public:
    using Terms = std::map<Exponents, long long, GradedLex>;

    LaurentPolynomial(int m, int n) : m_(m), n_(n) {}
    static LaurentPolynomial constant(int m, int n, long long c);
    static LaurentPolynomial monomial(int m, int n, Exponents e, long long c = 1);

    int m() const { return m_; }
    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(const Exponents& e) const;

    void add(const Exponents& e, long long c);
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial scaled(long long c) const;
    LaurentPolynomial bar() const;  // x_i -> 1/x_i, y_j -> 1/y_j
    long long at_ones() const;

    // one "c * x1^a ... yn^b" line per term, canonical order
    std::string str() const;
    std::string monomial_str(const Exponents& e) const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void check_vars(const LaurentPolynomial& o) const;
    int m_, n_;
    Terms terms_;
};

LaurentPolynomial complete_susy(int k, int m, int n);
LaurentPolynomial complete_susy_bar(int k, int m, int n);
// extra_p / extra_q pad the determinant with zero parts (result unchanged)
LaurentPolynomial composite_schur(const Bipartition& lam, int m, int n, int extra_p = 0, int extra_q = 0);
LaurentPolynomial character(const Bipartition& lam, int m, int n);
int edeg(const LaurentPolynomial& f);

long long dim_entry(int k, int m, int n);
long long dim_composite(const Bipartition& lam, int m, int n);
long long dim_W(const Bipartition& lam, int m, int n);

}  // namespace deligne
