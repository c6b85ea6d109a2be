#include "deligne/grothendieck.hpp"

#include <algorithm>

#include "deligne/errors.hpp"

namespace deligne {

RingVector::RingVector(const Bipartition& b, Delta tag, long long c) : tag_(std::move(tag)) { add(b, c); }

long long RingVector::coeff(const Bipartition& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? 0 : it->second;
}

void RingVector::add(const Bipartition& b, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(b, c);
    if (fresh) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

void RingVector::check_tag(const RingVector& o) const {
    if (!(tag_ == o.tag_)) throw DomainError("ring vectors from different rings (" + tag_.str() + " vs " + o.tag_.str() + ")");
}

RingVector& RingVector::operator+=(const RingVector& o) {
    check_tag(o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

RingVector RingVector::operator+(const RingVector& o) const {
    RingVector r = *this;
    r += o;
    return r;
}

RingVector RingVector::operator-(const RingVector& o) const { return *this + o.scaled(-1); }

RingVector RingVector::scaled(long long c) const {
    RingVector r(tag_);
    for (const auto& [b, x] : terms_) r.add(b, checked_mul(x, c));
    return r;
}

RingVector RingVector::retagged(Delta tag) const {
    RingVector r = *this;
    r.tag_ = std::move(tag);
    return r;
}

namespace {

// sum_kappa LR^{p}_{kappa,alpha} LR^{q}_{kappa,beta} over kappa |- k
std::map<std::pair<Partition, Partition>, long long> paired_skew(const Partition& p, const Partition& q, int k) {
    std::map<std::pair<Partition, Partition>, long long> out;
    for (const auto& kappa : partitions_of(k)) {
        if (!p.contains(kappa) || !q.contains(kappa)) continue;
        auto sa = lr_skew(p, kappa);
        if (sa.empty()) continue;
        auto sb = lr_skew(q, kappa);
        for (const auto& [alpha, ca] : sa)
            for (const auto& [beta, cb] : sb) {
                auto& slot = out[{alpha, beta}];
                slot = checked_add(slot, checked_mul(ca, cb));
            }
    }
    return out;
}

void gamma_row(const Bipartition& lam, const Bipartition& mu, RingVector& out) {
    int a = lam.black.size(), b = lam.white.size(), c = mu.black.size(), d = mu.white.size();
    for (int k = 0; k <= std::min(a, d); ++k) {
        auto A = paired_skew(lam.black, mu.white, k);
        for (int g = 0; g <= std::min(b, c); ++g) {
            auto B = paired_skew(lam.white, mu.black, g);  // (eta, theta)
            for (const auto& [ab, ca] : A)
                for (const auto& [et, cb] : B) {
                    long long w = checked_mul(ca, cb);
                    auto nb = lr_product(ab.first, et.second);  // alpha * theta
                    auto nw = lr_product(ab.second, et.first);  // beta * eta
                    for (const auto& [p, cp] : nb)
                        for (const auto& [q, cq] : nw) out.add({p, q}, checked_mul(w, checked_mul(cp, cq)));
                }
        }
    }
}

}  // namespace

long long koike_gamma(const Bipartition& lam, const Bipartition& mu, const Bipartition& nu) {
    int a = lam.black.size(), b = lam.white.size(), c = mu.black.size(), d = mu.white.size();
    int nb = nu.black.size(), nw = nu.white.size();
    long long total = 0;
    for (int k = 0; k <= std::min(a, d); ++k) {
        int g = a + c - nb - k;
        if (g < 0 || g > std::min(b, c) || d - k + b - g != nw) continue;
        for (const auto& kappa : partitions_of(k))
            for (const auto& gamma : partitions_of(g))
                for (const auto& [alpha, l1] : lr_skew(lam.black, kappa)) {
                    for (const auto& [beta, l2] : lr_skew(mu.white, kappa))
                        for (const auto& [eta, l3] : lr_skew(lam.white, gamma))
                            for (const auto& [theta, l4] : lr_skew(mu.black, gamma)) {
                                long long x = lr_coefficient(nu.black, alpha, theta);
                                if (!x) continue;
                                long long y = lr_coefficient(nu.white, beta, eta);
                                if (!y) continue;
                                long long term = checked_mul(checked_mul(l1, l2), checked_mul(l3, l4));
                                total = checked_add(total, checked_mul(term, checked_mul(x, y)));
                            }
                }
    }
    return total;
}

RingVector product_generic(const RingVector& x, const RingVector& y) {
    if (!x.generic() || !y.generic()) throw DomainError("product_generic needs two elements of R_t");
    RingVector out;
    for (const auto& [l, cl] : x.terms())
        for (const auto& [m, cm] : y.terms()) {
            RingVector row;
            gamma_row(l, m, row);
            out += row.scaled(checked_mul(cl, cm));
        }
    return out;
}

RingVector pieri(const Bipartition& lam, Color color) {
    RingVector out;
    if (color == Color::Black) {
        for (const auto& p : box_moves(lam.black, BoxMove::Add)) out.add({p, lam.white}, 1);
        for (const auto& q : box_moves(lam.white, BoxMove::Remove)) out.add({lam.black, q}, 1);
    } else {
        for (const auto& q : box_moves(lam.white, BoxMove::Add)) out.add({lam.black, q}, 1);
        for (const auto& p : box_moves(lam.black, BoxMove::Remove)) out.add({p, lam.white}, 1);
    }
    return out;
}

RingVector mixed_product(const Partition& black_only, const Partition& white_only) {
    RingVector out;
    int k_max = std::min(black_only.size(), white_only.size());
    for (int k = 0; k <= k_max; ++k)
        for (const auto& [ab, c] : paired_skew(black_only, white_only, k)) out.add({ab.first, ab.second}, c);
    return out;
}

RingVector lift(const RingVector& x) {
    if (x.generic()) throw DomainError("lift needs an element of R_delta");
    RingVector out;
    if (!x.tag().is_integer()) return x.retagged(Delta::t());
    long d = x.tag().as_long();
    for (const auto& [l, c] : x.terms())
        for (const auto& mu : linked_set(l, d)) out.add(mu, c);
    return out;
}

RingVector unlift(const RingVector& x, const Delta& delta) {
    if (!x.generic()) throw DomainError("unlift needs an element of R_t");
    if (delta.generic) return x;
    RingVector work = x.retagged(delta), out(delta);
    if (!delta.is_integer()) return work;
    std::size_t guard = 0;
    while (!work.is_zero()) {
        // the last entry has the largest total size
        auto [lam, c] = *work.terms().rbegin();
        out.add(lam, c);
        work = work - lift(RingVector(lam, delta)).retagged(delta).scaled(c);
        DELIGNE_CHECK(++guard < 1000000, "unlift did not terminate");
    }
    return out;
}

RingVector product_at(const RingVector& x, const RingVector& y) {
    if (!(x.tag() == y.tag())) throw DomainError("product_at: elements of different rings");
    if (x.generic()) return product_generic(x, y);
    RingVector out = unlift(product_generic(lift(x), lift(y)), x.tag());
    for (const auto& [b, c] : out.terms()) DELIGNE_CHECK(c > 0, "negative multiplicity in product_at");
    return out;
}

long long bilinear_form(const Bipartition& lam, const Bipartition& mu, const Delta& delta) {
    if (!delta.is_integer()) return lam == mu ? 1 : 0;
    long d = delta.as_long();
    auto a = linked_set(lam, d);
    auto b = linked_set(mu, d);
    long long n = 0;
    for (const auto& v : a)
        if (b.count(v)) ++n;
    return n;
}

RingVector dual_vector(const RingVector& x) {
    RingVector out(x.tag());
    for (const auto& [b, c] : x.terms()) out.add(b.dual(), c);
    return out;
}

}  // namespace deligne
