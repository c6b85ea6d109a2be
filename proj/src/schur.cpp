#include "deligne/schur.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "deligne/capdiagrams.hpp"
#include "deligne/errors.hpp"

namespace deligne {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    long sa = std::accumulate(a.begin(), a.end(), 0L), sb = std::accumulate(b.begin(), b.end(), 0L);
    if (sa != sb) return sa > sb;
    return a > b;
}

LaurentPolynomial LaurentPolynomial::constant(int m, int n, long long c) {
    LaurentPolynomial p(m, n);
    p.add(Exponents(m + n, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(int m, int n, Exponents e, long long c) {
    if (static_cast<int>(e.size()) != m + n) throw DomainError("exponent vector has the wrong length");
    LaurentPolynomial p(m, n);
    p.add(e, c);
    return p;
}

long long LaurentPolynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add(const Exponents& e, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (fresh) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

void LaurentPolynomial::check_vars(const LaurentPolynomial& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DomainError("Laurent polynomials in different variable sets");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r += o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const { return *this + o.scaled(-1); }

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    check_vars(o);
    LaurentPolynomial r(m_, n_);
    Exponents e(m_ + n_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            for (int i = 0; i < m_ + n_; ++i) e[i] = a[i] + b[i];
            r.add(e, checked_mul(ca, cb));
        }
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(long long c) const {
    LaurentPolynomial r(m_, n_);
    for (const auto& [e, x] : terms_) r.add(e, checked_mul(x, c));
    return r;
}

LaurentPolynomial LaurentPolynomial::bar() const {
    LaurentPolynomial r(m_, n_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (int& x : f) x = -x;
        r.add(f, c);
    }
    return r;
}

long long LaurentPolynomial::at_ones() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
}

std::string LaurentPolynomial::monomial_str(const Exponents& e) const {
    std::string s;
    for (int i = 0; i < m_ + n_; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += (i < m_ ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - m_ + 1)) + "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string LaurentPolynomial::str() const {
    std::ostringstream os;
    for (const auto& [e, c] : terms_) {
        bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        os << c;
        if (!constant) os << " * " << monomial_str(e);
        os << "\n";
    }
    return os.str();
}

// ---- h_k -------------------------------------------------------------------

namespace {

void compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& emit) {
    if (parts == 0) {
        if (total == 0) emit();
        return;
    }
    if (parts == 1) {
        cur.push_back(total);
        emit();
        cur.pop_back();
        return;
    }
    for (int a = total; a >= 0; --a) {
        cur.push_back(a);
        compositions(total - a, parts - 1, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

LaurentPolynomial complete_susy(int k, int m, int n) {
    LaurentPolynomial out(m, n);
    if (k < 0) return out;
    for (int i = 0; i <= std::min(k, n); ++i) {
        // h_{k-i}(x) * e_i(y)
        std::vector<int> xs;
        compositions(k - i, m, xs, [&] {
            std::vector<int> sel(n, 0);
            std::fill(sel.end() - i, sel.end(), 1);
            do {
                Exponents e = xs;
                e.insert(e.end(), sel.begin(), sel.end());
                out.add(e, 1);
            } while (std::next_permutation(sel.begin(), sel.end()));
        });
    }
    return out;
}

LaurentPolynomial complete_susy_bar(int k, int m, int n) { return complete_susy(k, m, n).bar(); }

namespace {

// determinant by expansion along the last row with memoized column subsets
template <class T, class Mul>
T subset_det(const std::vector<std::vector<T>>& M, const T& one, const T& zero, Mul mul,
             const std::function<bool(const T&)>& is_zero) {
    int N = static_cast<int>(M.size());
    if (N == 0) return one;
    DELIGNE_CHECK(N <= 20, "determinant too large");
    std::vector<T> dp(1u << N, zero);
    std::vector<char> have(1u << N, 0);
    dp[0] = one;
    have[0] = 1;
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
        int k = __builtin_popcount(mask);
        T acc = zero;
        bool any = false;
        int greater = 0;
        for (int c = N - 1; c >= 0; --c) {
            if (!(mask >> c & 1)) continue;
            unsigned rest = mask & ~(1u << c);
            if (have[rest] && !is_zero(M[k - 1][c])) {
                T term = mul(M[k - 1][c], dp[rest]);
                if (greater % 2) acc = acc - term;
                else acc = acc + term;
                any = true;
            }
            ++greater;
        }
        if (any && !is_zero(acc)) {
            dp[mask] = acc;
            have[mask] = 1;
        }
    }
    return have[(1u << N) - 1] ? dp[(1u << N) - 1] : zero;
}

// entry (i,col) of the composite determinant, 1-based row i; returns the
// index k and whether it is a barred entry.
std::pair<int, bool> entry_index(const Bipartition& lam, int, int q, int i, int col) {
    if (col <= q) {
        int j = q - col + 1;
        return {lam.white.part(j) + col - i, true};
    }
    int k = col - q;
    return {lam.black.part(k) + i - (q + k), false};
}

}  // namespace

LaurentPolynomial composite_schur(const Bipartition& lam, int m, int n, int extra_p, int extra_q) {
    int p = lam.black.length() + extra_p, q = lam.white.length() + extra_q;
    int N = p + q;
    std::map<int, LaurentPolynomial> h, hb;
    auto get = [&](int k, bool barred) -> const LaurentPolynomial& {
        auto& cache = barred ? hb : h;
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, barred ? complete_susy_bar(k, m, n) : complete_susy(k, m, n)).first;
        return it->second;
    };
    std::vector<std::vector<LaurentPolynomial>> M(N, std::vector<LaurentPolynomial>(N, LaurentPolynomial(m, n)));
    for (int i = 1; i <= N; ++i)
        for (int c = 1; c <= N; ++c) {
            auto [k, barred] = entry_index(lam, p, q, i, c);
            M[i - 1][c - 1] = get(k, barred);
        }
    return subset_det<LaurentPolynomial>(
        M, LaurentPolynomial::constant(m, n, 1), LaurentPolynomial(m, n),
        [](const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; },
        [](const LaurentPolynomial& a) { return a.is_zero(); });
}

LaurentPolynomial character(const Bipartition& lam, int m, int n) {
    LaurentPolynomial out(m, n);
    for (const auto& mu : linked_set(lam, m - n)) out += composite_schur(mu, m, n);
    return out;
}

int edeg(const LaurentPolynomial& f) {
    if (f.is_zero()) throw DomainError("edeg of the zero polynomial");
    int k = f.m() + f.n();
    DELIGNE_CHECK(k <= 24, "too many variables for edeg");
    long best = std::numeric_limits<long>::min();
    for (unsigned long eps = 0; eps < (1ul << k); ++eps) {
        long deg = std::numeric_limits<long>::min();
        for (const auto& [e, c] : f.terms()) {
            long d = 0;
            for (int i = 0; i < k; ++i) d += (eps >> i & 1) ? -e[i] : e[i];
            deg = std::max(deg, d);
        }
        best = std::max(best, deg);
    }
    return static_cast<int>(best);
}

namespace {
mpz_class binom(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

mpz_class dim_entry_z(int k, int m, int n) {
    if (k < 0) return 0;
    if (m == 0) return binom(n, k);
    mpz_class s = 0;
    for (int i = 0; i <= k; ++i) s += binom(m + k - i - 1, m - 1) * binom(n, i);
    return s;
}

long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p()) throw InternalError("integer overflow");
    return z.get_si();
}
}  // namespace

long long dim_entry(int k, int m, int n) { return to_ll(dim_entry_z(k, m, n)); }

long long dim_composite(const Bipartition& lam, int m, int n) {
    int p = lam.black.length(), q = lam.white.length(), N = p + q;
    std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N));
    for (int i = 1; i <= N; ++i)
        for (int c = 1; c <= N; ++c) M[i - 1][c - 1] = dim_entry_z(entry_index(lam, p, q, i, c).first, m, n);
    mpz_class d = subset_det<mpz_class>(
        M, mpz_class(1), mpz_class(0), [](const mpz_class& a, const mpz_class& b) { return mpz_class(a * b); },
        [](const mpz_class& a) { return a == 0; });
    return to_ll(d);
}

long long dim_W(const Bipartition& lam, int m, int n) {
    long long s = 0;
    for (const auto& mu : linked_set(lam, m - n)) s = checked_add(s, dim_composite(mu, m, n));
    DELIGNE_CHECK(s >= 0, "negative dimension");
    return s;
}

}  // namespace deligne
