#pragma once
// Brute-force verifiers: LR by monomial expansion, Koike's product by GL_d
// character multiplication, Hom dimensions by idempotent splitting in B_{r,s}.
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "deligne/diagrams.hpp"
#include "deligne/grothendieck.hpp"
#include "deligne/linalg.hpp"

namespace deligne {

long long lr_oracle(const Partition& nu, const Partition& lam, const Partition& mu);
RingVector gamma_oracle(const Bipartition& lam, const Bipartition& mu, int d);

// B_{r,s}(delta) with a precomputed multiplication table.
class AlgebraContext {
public:
    AlgebraContext(int r, int s, Rational delta);

    int r() const { return r_; }
    int s() const { return s_; }
    const Rational& delta() const { return delta_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<WalledDiagram>& basis() const { return basis_; }
    int index_of(const WalledDiagram& d) const;

    Vec mul(const Vec& a, const Vec& b) const;  // a after b
    Vec identity() const;
    Vec unit_vector(std::size_t i) const;
    Vec from(const AlgebraElement& a) const;   // specialize at delta
    AlgebraElement to_element(const Vec& v) const;
    bool pi_nonzero(const Vec& v) const;
    Rational regular_trace(const Vec& v) const;  // trace of left multiplication

private:
    int r_, s_;
    Rational delta_;
    std::vector<WalledDiagram> basis_;
    std::map<WalledDiagram, int> index_;
    std::vector<std::pair<int, int>> table_;  // (result index, loops)
    std::vector<Rational> dpow_;
};

// Mutually orthogonal primitive idempotents summing to z. seed 0 gives the
// canonical search order; other seeds randomize it (a conjugate answer).
std::vector<Vec> split_idempotents(const AlgebraContext& ctx, const Vec& z, std::uint64_t seed = 0);

// u e u^{-1} for a random unit u (deterministic in seed).
Vec random_conjugate(const AlgebraContext& ctx, const Vec& e, std::uint64_t seed);

// dim Hom(L(lam), L(mu)) at a rational delta, from first principles.
// A nonzero seed randomizes the split and conjugates every e_lam by a random
// unit, which must not change any dimension.
class HomOracle {
public:
    explicit HomOracle(Rational delta, std::uint64_t seed = 0) : delta_(std::move(delta)), seed_(seed) {}
    long long hom_dim(const Bipartition& lam, const Bipartition& mu);
    // the same dimension computed directly as e_mu Hom(w_lam, w_mu) e_lam
    long long hom_dim_direct(const Bipartition& lam, const Bipartition& mu);
    const AlgebraContext& context(int r, int s);
    const Vec& primitive(const Bipartition& lam);  // e_lam in B_{r,s}

private:
    Rational delta_;
    std::uint64_t seed_;
    std::map<std::pair<int, int>, std::unique_ptr<AlgebraContext>> ctx_;
    std::map<Bipartition, Vec> e_;
};

long long hom_dim_oracle(const Bipartition& lam, const Bipartition& mu, const Rational& delta);

}  // namespace deligne
