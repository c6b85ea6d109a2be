#include "deligne/scalar.hpp"

#include <sstream>

#include "deligne/errors.hpp"

namespace deligne {

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::t() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    Polynomial p;
    if (c == 0) return p;
    p.c_.assign(degree + 1, Rational(0));
    p.c_[degree] = c;
    return p;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    Rational l = lead();
    for (auto& x : r.c_) x /= l;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    q = Polynomial();
    r = a;
    int db = b.degree();
    if (r.degree() < db) return;
    q.c_.assign(r.degree() - db + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rational f = r.lead() / b.lead();
        q.c_[k] = f;
        for (int i = 0; i <= db; ++i) r.c_[i + k] -= f * b.c_[i];
        r.trim();
    }
    q.trim();
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial Polynomial::xgcd(const Polynomial& a, const Polynomial& b, Polynomial& s, Polynomial& u) {
    Polynomial r0 = a, r1 = b, s0(Rational(1)), s1, u0, u1(Rational(1));
    while (!r1.is_zero()) {
        Polynomial q, r;
        divmod(r0, r1, q, r);
        Polynomial s2 = s0 - q * s1, u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) {
        s = s0;
        u = u0;
        return r0;
    }
    Rational l = r0.lead();
    s = s0 * Polynomial(Rational(1) / l);
    u = u0 * Polynomial(Rational(1) / l);
    return r0.monic();
}

std::string Polynomial::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = (a == 1);
        if (!unit || i == 0) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Scalar::Scalar(const Polynomial& p, const Polynomial& q) : num_(p), den_(q) {
    if (q.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

Scalar Scalar::t_pow(int k) {
    if (k >= 0) return Scalar(Polynomial::monomial(Rational(1), k), Polynomial(Rational(1)));
    return Scalar(Polynomial(Rational(1)), Polynomial::monomial(Rational(1), -k));
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            Polynomial q, r;
            Polynomial::divmod(num_, g, q, r);
            num_ = q;
            Polynomial::divmod(den_, g, q, r);
            den_ = q;
        }
    }
    Rational l = den_.lead();
    if (l != 1) {
        Polynomial inv(Rational(1) / l);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational Scalar::eval(const Rational& delta) const {
    Rational d = den_.eval(delta);
    if (d == 0) throw DomainError("scalar has a pole at delta = " + delta.get_str());
    return num_.eval(delta) / d;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DomainError("scalar division by zero");
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Scalar::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace deligne
