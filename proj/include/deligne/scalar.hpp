#pragma once
// Polynomials and rational functions in one variable t over Q.
#include <gmpxx.h>

#include <string>
#include <vector>

namespace deligne {

using Rational = mpq_class;

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);
    static Polynomial t();
    static Polynomial monomial(const Rational& c, int degree);
    explicit Polynomial(std::vector<Rational> coeffs);  // low degree first

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    // Euclidean division; divisor must be nonzero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    static Polynomial gcd(Polynomial a, Polynomial b);  // monic, or zero
    // s*a + u*b = gcd(a,b)
    static Polynomial xgcd(const Polynomial& a, const Polynomial& b, Polynomial& s, Polynomial& u);

    std::string str(const char* var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// p/q reduced, q monic.
class Scalar {
public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(const Rational& c) : num_(c), den_(Rational(1)) {}
    Scalar(long c) : Scalar(Rational(c)) {}
    Scalar(int c) : Scalar(Rational(c)) {}
    Scalar(const Polynomial& p, const Polynomial& q);
    static Scalar t() { return Scalar(Polynomial::t(), Polynomial(Rational(1))); }
    static Scalar t_pow(int k);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Value at t = delta; throws DomainError at a pole.
    Rational eval(const Rational& delta) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string str() const;

private:
    void normalize();
    Polynomial num_, den_;
};

}  // namespace deligne
