#include "deligne/diagrams.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "deligne/errors.hpp"
#include "json.hpp"

namespace deligne {

// ---- words -----------------------------------------------------------------

Word Word::w(int r, int s) {
    Word x;
    x.letters.assign(r, Color::Black);
    x.letters.insert(x.letters.end(), s, Color::White);
    return x;
}

Word Word::parse(const std::string& bw) {
    Word x;
    for (char c : bw) {
        if (c == 'b') x.letters.push_back(Color::Black);
        else if (c == 'w') x.letters.push_back(Color::White);
        else throw ParseError(std::string("bad letter in word: ") + c);
    }
    return x;
}

int Word::blacks() const {
    return static_cast<int>(std::count(letters.begin(), letters.end(), Color::Black));
}

Word Word::dual() const {
    Word x = *this;
    for (auto& c : x.letters) c = (c == Color::Black) ? Color::White : Color::Black;
    return x;
}

Word Word::operator+(const Word& o) const {
    Word x = *this;
    x.letters.insert(x.letters.end(), o.letters.begin(), o.letters.end());
    return x;
}

std::string Word::str() const {
    std::string s;
    for (auto c : letters) s += (c == Color::Black ? 'b' : 'w');
    return s;
}

// ---- diagrams --------------------------------------------------------------

struct DiagramAccess {
    static WalledDiagram make(Word b, Word t, std::vector<int> mate) {
        WalledDiagram d;
        d.bottom_ = std::move(b);
        d.top_ = std::move(t);
        d.mate_ = std::move(mate);
        return d;
    }
};

namespace {

Color color_of(const Word& b, const Word& t, int v) {
    return v < b.size() ? b.letters[v] : t.letters[v - b.size()];
}

bool edge_ok(const Word& b, const Word& t, int u, int v) {
    bool same_row = (u < b.size()) == (v < b.size());
    bool same_color = color_of(b, t, u) == color_of(b, t, v);
    return same_row != same_color;
}

}  // namespace

WalledDiagram::WalledDiagram(Word bottom, Word top, std::vector<int> mate)
    : bottom_(std::move(bottom)), top_(std::move(top)), mate_(std::move(mate)) {
    int n = bottom_.size() + top_.size();
    if (static_cast<int>(mate_.size()) != n) throw DomainError("matching has wrong vertex count");
    for (int v = 0; v < n; ++v) {
        int u = mate_[v];
        if (u < 0 || u >= n || u == v || mate_[u] != v) throw DomainError("not a perfect matching");
        if (!edge_ok(bottom_, top_, u, v)) throw DomainError("edge violates the color rule");
    }
}

int WalledDiagram::propagating() const {
    int b = bottom_.size(), c = 0;
    for (int v = 0; v < b; ++v)
        if (mate_[v] >= b) ++c;
    return c;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> WalledDiagram::edges() const {
    int b = bottom_.size();
    auto rc = [b](int v) { return v < b ? std::make_pair(0, v + 1) : std::make_pair(1, v - b + 1); };
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
    for (int v = 0; v < static_cast<int>(mate_.size()); ++v)
        if (v < mate_[v]) out.push_back({rc(v), rc(mate_[v])});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void enum_rec(const Word& b, const Word& t, std::vector<int>& mate, std::vector<WalledDiagram>& out) {
    int n = static_cast<int>(mate.size());
    int u = 0;
    while (u < n && mate[u] >= 0) ++u;
    if (u == n) {
        out.push_back(DiagramAccess::make(b, t, mate));
        return;
    }
    for (int v = u + 1; v < n; ++v) {
        if (mate[v] >= 0 || !edge_ok(b, t, u, v)) continue;
        mate[u] = v;
        mate[v] = u;
        enum_rec(b, t, mate, out);
        mate[u] = mate[v] = -1;
    }
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<WalledDiagram> enumerate_diagrams(const Word& bottom, const Word& top) {
    std::vector<WalledDiagram> out;
    int r = bottom.blacks(), s = bottom.whites(), r2 = top.blacks(), s2 = top.whites();
    if (r + s2 != r2 + s) return out;
    std::vector<int> mate(bottom.size() + top.size(), -1);
    enum_rec(bottom, top, mate, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<WalledDiagram, int> compose_diagrams(const WalledDiagram& Y, const WalledDiagram& X) {
    if (!(X.top() == Y.bottom())) throw DomainError("compose: word mismatch");
    int nA = X.bottom().size(), nB = X.top().size(), nC = Y.top().size();
    int N = nA + nB + nC;
    UnionFind uf(N);
    const auto& mx = X.mate();
    const auto& my = Y.mate();
    for (int v = 0; v < nA + nB; ++v) uf.unite(v, mx[v]);
    for (int v = 0; v < nB + nC; ++v) uf.unite(nA + v, nA + my[v]);

    // outer vertices: X bottom and Y top
    std::vector<int> first(N, -1);
    std::vector<int> mate(nA + nC, -1);
    auto outer_id = [&](int g) { return g < nA ? g : g - nB; };
    std::vector<char> has_outer(N, 0);
    for (int g = 0; g < N; ++g) {
        if (g >= nA && g < nA + nB) continue;
        int root = uf.find(g);
        has_outer[root] = 1;
        if (first[root] < 0) first[root] = g;
        else {
            int a = outer_id(first[root]), b = outer_id(g);
            mate[a] = b;
            mate[b] = a;
        }
    }
    int loops = 0;
    std::vector<char> seen(N, 0);
    for (int g = nA; g < nA + nB; ++g) {
        int root = uf.find(g);
        if (!has_outer[root] && !seen[root]) {
            seen[root] = 1;
            ++loops;
        }
    }
    return {DiagramAccess::make(X.bottom(), Y.top(), std::move(mate)), loops};
}

WalledDiagram tensor(const WalledDiagram& a, const WalledDiagram& b) {
    int ab = a.bottom().size(), at = a.top().size(), bb = b.bottom().size(), bt = b.top().size();
    int B = ab + bb;
    auto ma = [&](int v) { return v < ab ? v : B + (v - ab); };
    auto mb = [&](int v) { return v < bb ? ab + v : B + at + (v - bb); };
    std::vector<int> mate(B + at + bt);
    for (int v = 0; v < ab + at; ++v) mate[ma(v)] = ma(a.mate()[v]);
    for (int v = 0; v < bb + bt; ++v) mate[mb(v)] = mb(b.mate()[v]);
    return DiagramAccess::make(a.bottom() + b.bottom(), a.top() + b.top(), std::move(mate));
}

WalledDiagram flip(const WalledDiagram& d) {
    int b = d.bottom().size(), t = d.top().size();
    auto m = [&](int v) { return v < b ? t + v : v - b; };
    std::vector<int> mate(b + t);
    for (int v = 0; v < b + t; ++v) mate[m(v)] = m(d.mate()[v]);
    return DiagramAccess::make(d.top(), d.bottom(), std::move(mate));
}

WalledDiagram permutation_diagram(const std::vector<int>& sigma, Color c) {
    int r = static_cast<int>(sigma.size());
    Word w;
    w.letters.assign(r, c);
    std::vector<int> mate(2 * r);
    for (int i = 0; i < r; ++i) {
        mate[i] = r + sigma[i];
        mate[r + sigma[i]] = i;
    }
    return WalledDiagram(w, w, std::move(mate));
}

// ---- algebra elements ------------------------------------------------------

AlgebraElement::AlgebraElement(const WalledDiagram& d, const Scalar& c) : bottom_(d.bottom()), top_(d.top()) {
    add(d, c);
}

Scalar AlgebraElement::coeff(const WalledDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Scalar() : it->second;
}

void AlgebraElement::add(const WalledDiagram& d, const Scalar& c) {
    if (!(d.bottom() == bottom_) || !(d.top() == top_)) throw DomainError("diagram outside element context");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (!(o.bottom_ == bottom_) || !(o.top_ == top_)) throw DomainError("adding elements of different Hom spaces");
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r += o;
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + o.scaled(Scalar(-1)); }

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r(bottom_, top_);
    if (c.is_zero()) return r;
    for (const auto& [d, x] : terms_) r.terms_.emplace(d, x * c);
    return r;
}

std::map<WalledDiagram, Rational> AlgebraElement::specialize(const Rational& delta) const {
    std::map<WalledDiagram, Rational> out;
    for (const auto& [d, c] : terms_) {
        Rational v = c.eval(delta);
        if (v != 0) out.emplace(d, v);
    }
    return out;
}

AlgebraElement compose(const AlgebraElement& Y, const AlgebraElement& X) {
    if (!(X.top() == Y.bottom())) throw DomainError("compose: word mismatch");
    AlgebraElement r(X.bottom(), Y.top());
    for (const auto& [dy, cy] : Y.terms())
        for (const auto& [dx, cx] : X.terms()) {
            auto [d, loops] = compose_diagrams(dy, dx);
            Scalar c = cy * cx;
            if (loops) c *= Scalar::t_pow(loops);
            r.add(d, c);
        }
    return r;
}

AlgebraElement tensor(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r(a.bottom() + b.bottom(), a.top() + b.top());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) r.add(tensor(da, db), ca * cb);
    return r;
}

AlgebraElement flip(const AlgebraElement& a) {
    AlgebraElement r(a.top(), a.bottom());
    for (const auto& [d, c] : a.terms()) r.add(flip(d), c);
    return r;
}

// ---- structure maps --------------------------------------------------------

namespace structural {

namespace {
Word mono(int k, Color c) {
    Word w;
    w.letters.assign(k, c);
    return w;
}
const Word kB = mono(1, Color::Black);
const Word kW = mono(1, Color::White);
}  // namespace

AlgebraElement id(const Word& w) {
    int n = w.size();
    std::vector<int> mate(2 * n);
    for (int i = 0; i < n; ++i) {
        mate[i] = n + i;
        mate[n + i] = i;
    }
    return AlgebraElement(WalledDiagram(w, w, std::move(mate)));
}

AlgebraElement braiding(const Word& w1, const Word& w2) {
    int a = w1.size(), b = w2.size(), n = a + b;
    std::vector<int> mate(2 * n);
    for (int i = 0; i < a; ++i) {
        mate[i] = n + b + i;
        mate[n + b + i] = i;
    }
    for (int j = 0; j < b; ++j) {
        mate[a + j] = n + j;
        mate[n + j] = a + j;
    }
    return AlgebraElement(WalledDiagram(w1 + w2, w2 + w1, std::move(mate)));
}

AlgebraElement ev(const Word& w) {
    int n = w.size();
    std::vector<int> mate(2 * n);
    for (int i = 0; i < n; ++i) {
        mate[i] = n + i;
        mate[n + i] = i;
    }
    return AlgebraElement(WalledDiagram(w.dual() + w, Word{}, std::move(mate)));
}

AlgebraElement coev(const Word& w) {
    int n = w.size();
    std::vector<int> mate(2 * n);
    for (int i = 0; i < n; ++i) {
        mate[i] = n + i;
        mate[n + i] = i;
    }
    return AlgebraElement(WalledDiagram(Word{}, w + w.dual(), std::move(mate)));
}

AlgebraElement psi(int r, int s) {
    return tensor(tensor(id(mono(r, Color::Black)), coev(kB)), id(mono(s, Color::White)));
}

AlgebraElement psihat(int r, int s) {
    return tensor(tensor(id(mono(r, Color::Black)), ev(kW)), id(mono(s, Color::White)));
}

AlgebraElement phi(int r, int s) {
    if (s <= 0) throw DomainError("phi_{r,s} needs s > 0");
    AlgebraElement inner = compose(tensor(ev(kW), id(kW)), tensor(id(kB), braiding(kW, kW)));
    return tensor(tensor(id(mono(r, Color::Black)), inner), id(mono(s - 1, Color::White)));
}

AlgebraElement phihat(int r, int s) {
    if (r <= 0) throw DomainError("phihat_{r,s} needs r > 0");
    AlgebraElement inner = compose(tensor(id(kB), ev(kW)), tensor(braiding(kB, kB), id(kW)));
    return tensor(tensor(id(mono(r - 1, Color::Black)), inner), id(mono(s, Color::White)));
}

}  // namespace structural

// ---- symmetrizers ----------------------------------------------------------

namespace {

int perm_sign(const std::vector<int>& p) {
    int sgn = 1;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

std::mutex g_young_mu;
std::map<std::pair<Partition, Color>, AlgebraElement> g_young;

}  // namespace

AlgebraElement young_symmetrizer(const Partition& alpha, Color c) {
    {
        std::lock_guard lk(g_young_mu);
        auto it = g_young.find({alpha, c});
        if (it != g_young.end()) return it->second;
    }
    int r = alpha.size();
    Word w;
    w.letters.assign(r, c);
    // canonical tableau: fill rows left to right, top to bottom
    std::vector<int> row(r), col(r);
    for (int i = 0, k = 0; i < alpha.length(); ++i)
        for (int j = 0; j < alpha.part(i + 1); ++j, ++k) {
            row[k] = i;
            col[k] = j;
        }
    AlgebraElement a(w, w), b(w, w);
    std::vector<int> p(r);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool rows = true, cols = true;
        for (int k = 0; k < r; ++k) {
            rows = rows && row[p[k]] == row[k];
            cols = cols && col[p[k]] == col[k];
        }
        if (rows) a.add(permutation_diagram(p, c), Scalar(1));
        if (cols) b.add(permutation_diagram(p, c), Scalar(perm_sign(p)));
    } while (std::next_permutation(p.begin(), p.end()));
    mpz_class fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    Rational norm(mpz_class(static_cast<long>(standard_tableaux(alpha))), fact);
    norm.canonicalize();
    DELIGNE_CHECK(norm != 0, "zero symmetrizer normalization");
    AlgebraElement z = compose(a, b).scaled(Scalar(norm));
    DELIGNE_CHECK(compose(z, z) == z, "young symmetrizer is not idempotent");
    std::lock_guard lk(g_young_mu);
    g_young.emplace(std::make_pair(alpha, c), z);
    return z;
}

AlgebraElement z_idempotent(const Bipartition& lam) {
    return tensor(young_symmetrizer(lam.black, Color::Black), young_symmetrizer(lam.white, Color::White));
}

AlgebraElement pi_projection(const AlgebraElement& a) {
    const Word& w = a.bottom();
    if (!(a.top() == w) || !(w == Word::w(w.blacks(), w.whites())))
        throw DomainError("pi projection needs an element of B_{r,s}");
    AlgebraElement r(w, w);
    for (const auto& [d, c] : a.terms())
        if (d.propagating() == w.size()) r.add(d, c);
    return r;
}

AlgebraElement e_empty_1() {
    using namespace structural;
    Word b = Word::w(1, 0), wh = Word::w(0, 1);
    return compose(coev(b), ev(wh)).scaled(Scalar(1) / Scalar::t());
}

AlgebraElement e_box_box() { return structural::id(Word::w(1, 1)) - e_empty_1(); }

AlgebraElement e_raise(const AlgebraElement& e, const Bipartition& lam, int i) {
    using namespace structural;
    int r = lam.black.size(), s = lam.white.size();
    if (!(e.bottom() == Word::w(r, s)) || !(e.top() == Word::w(r, s))) throw DomainError("e_raise: element not in B_{r,s}");
    AlgebraElement cur = e;
    for (int k = 1; k <= i; ++k) {
        int R = r + k - 1, S = s + k - 1;
        if (s > 0) cur = compose(psi(R, S), compose(cur, phi(R, S)));
        else if (r > 0) cur = compose(psi(R, S), compose(cur, phihat(R, S)));
        else cur = compose(psi(R, S), compose(cur, psihat(R, S))).scaled(Scalar(1) / Scalar::t());
    }
    return cur;
}

std::string diagram_json(const WalledDiagram& d) {
    nlohmann::json j;
    j["bottom"] = d.bottom().str();
    j["top"] = d.top().str();
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : d.edges()) j["edges"].push_back({{u.first, u.second}, {v.first, v.second}});
    return j.dump();
}

}  // namespace deligne
