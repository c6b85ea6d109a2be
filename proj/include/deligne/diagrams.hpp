#pragma once
// Walled Brauer diagrams: (w,w')-diagrams, composition with loop scalars,
// the monoidal structure maps and the idempotents built from symmetrizers.
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deligne/combinatorics.hpp"
#include "deligne/scalar.hpp"

namespace deligne {

struct Word {
    std::vector<Color> letters;

    static Word w(int r, int s);  // r blacks then s whites
    static Word parse(const std::string& bw);  // over "bw"
    int size() const { return static_cast<int>(letters.size()); }
    int blacks() const;
    int whites() const { return size() - blacks(); }
    Word dual() const;
    Word operator+(const Word& o) const;  // concatenation
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters <=> b.letters; }
};

// Vertex ids: bottom row 0..b-1, then top row b..b+t-1, left to right.
class WalledDiagram {
public:
    // mate[v] is the vertex matched with v. Validates the matching and the
    // color rule; throws DomainError.
    WalledDiagram(Word bottom, Word top, std::vector<int> mate);

    const Word& bottom() const { return bottom_; }
    const Word& top() const { return top_; }
    const std::vector<int>& mate() const { return mate_; }
    int propagating() const;

    // sorted list of ((row,index),(row,index)); row 0 = bottom, 1 = top, 1-based index
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges() const;

    friend bool operator==(const WalledDiagram& a, const WalledDiagram& b) {
        return a.mate_ == b.mate_ && a.bottom_ == b.bottom_ && a.top_ == b.top_;
    }
    friend bool operator<(const WalledDiagram& a, const WalledDiagram& b) {
        if (a.bottom_ != b.bottom_) return a.bottom_ < b.bottom_;
        if (a.top_ != b.top_) return a.top_ < b.top_;
        return a.mate_ < b.mate_;
    }

private:
    friend struct DiagramAccess;
    WalledDiagram() = default;
    Word bottom_, top_;
    std::vector<int> mate_;
};

std::vector<WalledDiagram> enumerate_diagrams(const Word& bottom, const Word& top);

// Stack Y on top of X (X.top == Y.bottom); returns Y.X and the loop count.
std::pair<WalledDiagram, int> compose_diagrams(const WalledDiagram& Y, const WalledDiagram& X);
WalledDiagram tensor(const WalledDiagram& a, const WalledDiagram& b);
WalledDiagram flip(const WalledDiagram& d);

// Permutation diagram on r same-colored strands: bottom i -> top sigma(i).
WalledDiagram permutation_diagram(const std::vector<int>& sigma, Color c);

class AlgebraElement {
public:
    AlgebraElement(Word bottom, Word top) : bottom_(std::move(bottom)), top_(std::move(top)) {}
    AlgebraElement(const WalledDiagram& d, const Scalar& c = Scalar(1));

    const Word& bottom() const { return bottom_; }
    const Word& top() const { return top_; }
    const std::map<WalledDiagram, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const WalledDiagram& d) const;

    void add(const WalledDiagram& d, const Scalar& c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& c) const;

    // value of every coefficient at t = delta (throws at a pole)
    std::map<WalledDiagram, Rational> specialize(const Rational& delta) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.terms_ == b.terms_;
    }

private:
    Word bottom_, top_;
    std::map<WalledDiagram, Scalar> terms_;
};

// Y after X; throws DomainError on a word mismatch.
AlgebraElement compose(const AlgebraElement& Y, const AlgebraElement& X);
AlgebraElement tensor(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement flip(const AlgebraElement& a);

namespace structural {
AlgebraElement id(const Word& w);
AlgebraElement braiding(const Word& w1, const Word& w2);  // w1 w2 -> w2 w1
AlgebraElement ev(const Word& w);                          // w* w -> 1
AlgebraElement coev(const Word& w);                        // 1 -> w w*
AlgebraElement psi(int r, int s);                          // w_{r,s} -> w_{r+1,s+1}
AlgebraElement psihat(int r, int s);                       // w_{r+1,s+1} -> w_{r,s}
AlgebraElement phi(int r, int s);                          // s > 0
AlgebraElement phihat(int r, int s);                       // r > 0
}  // namespace structural

AlgebraElement young_symmetrizer(const Partition& alpha, Color c = Color::Black);
AlgebraElement z_idempotent(const Bipartition& lam);
AlgebraElement pi_projection(const AlgebraElement& a);

// The explicit small-rank idempotents of B_{1,1}: id - (1/t) coev_b ev_w and
// (1/t) coev_b ev_w.
AlgebraElement e_box_box();
AlgebraElement e_empty_1();

// e^{(i)} recursion with generic scalars; e must live in B_{r,s} for lam |- (r,s).
AlgebraElement e_raise(const AlgebraElement& e, const Bipartition& lam, int i);

std::string diagram_json(const WalledDiagram& d);  // debug serialization

}  // namespace deligne
