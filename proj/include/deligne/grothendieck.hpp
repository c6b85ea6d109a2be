#pragma once
// The split Grothendieck rings R_t and R_delta on the bipartition basis.
#include <map>

#include "deligne/capdiagrams.hpp"
#include "deligne/combinatorics.hpp"

namespace deligne {

class RingVector {
public:
    RingVector() = default;  // zero of R_t
    explicit RingVector(Delta tag) : tag_(std::move(tag)) {}
    RingVector(const Bipartition& b, Delta tag = Delta::t(), long long c = 1);

    const Delta& tag() const { return tag_; }
    bool generic() const { return tag_.generic; }
    const std::map<Bipartition, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(const Bipartition& b) const;

    void add(const Bipartition& b, long long c);
    RingVector& operator+=(const RingVector& o);
    RingVector operator+(const RingVector& o) const;
    RingVector operator-(const RingVector& o) const;
    RingVector scaled(long long c) const;
    RingVector retagged(Delta tag) const;

    friend bool operator==(const RingVector& a, const RingVector& b) {
        return a.tag_ == b.tag_ && a.terms_ == b.terms_;
    }

private:
    void check_tag(const RingVector& o) const;
    Delta tag_;
    std::map<Bipartition, long long> terms_;  // canonical order
};

long long koike_gamma(const Bipartition& lam, const Bipartition& mu, const Bipartition& nu);
RingVector product_generic(const RingVector& x, const RingVector& y);
RingVector pieri(const Bipartition& lam, Color color);
RingVector mixed_product(const Partition& black_only, const Partition& white_only);

RingVector lift(const RingVector& x);                    // R_delta -> R_t
RingVector unlift(const RingVector& x, const Delta& delta);  // R_t -> R_delta
RingVector product_at(const RingVector& x, const RingVector& y);
long long bilinear_form(const Bipartition& lam, const Bipartition& mu, const Delta& delta);
RingVector dual_vector(const RingVector& x);

}  // namespace deligne
