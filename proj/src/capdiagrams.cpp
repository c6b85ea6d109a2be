#include "deligne/capdiagrams.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "deligne/errors.hpp"

namespace deligne {

long Delta::as_long() const {
    DELIGNE_CHECK(is_integer() && value.get_num().fits_slong_p(), "delta is not a machine integer");
    return value.get_num().get_si();
}

std::string Delta::str() const { return generic ? "t" : value.get_str(); }

Label WeightDiagram::at(long i) const {
    if (i < left) return Label::Up;
    if (i > right) return Label::Down;
    return labels[i - left];
}

std::string WeightDiagram::label_string() const {
    std::string s;
    for (auto l : labels) s += static_cast<char>(l);
    return s;
}

WeightDiagram WeightDiagram::swapped(long i, long j) const {
    WeightDiagram y = *this;
    for (long p : {i, j}) {
        DELIGNE_CHECK(p >= left && p <= right, "swap outside the window");
        Label& l = y.labels[p - left];
        if (l == Label::Up) l = Label::Down;
        else if (l == Label::Down) l = Label::Up;
        else throw InternalError("swap of a non-oriented label");
    }
    return y;
}

namespace {

bool in_up(const Bipartition& lam, long i) {
    const Partition& b = lam.black;
    if (i <= -b.length()) return true;  // tail k > l: value 1-k
    for (int k = 1; k <= b.length(); ++k)
        if (b.part(k) - k + 1 == i) return true;
    return false;
}

bool in_down(const Bipartition& lam, long delta, long i) {
    const Partition& w = lam.white;
    if (i + delta >= w.length() + 1) return true;  // tail k > l: value k - delta
    for (int k = 1; k <= w.length(); ++k)
        if (k - delta - w.part(k) == i) return true;
    return false;
}

Label label_at(const Bipartition& lam, long delta, long i) {
    bool u = in_up(lam, i), d = in_down(lam, delta, i);
    if (u && d) return Label::Cross;
    if (u) return Label::Up;
    if (d) return Label::Down;
    return Label::Circle;
}

}  // namespace

WeightDiagram weight_diagram(const Bipartition& lam, long delta) {
    const Partition& b = lam.black;
    const Partition& w = lam.white;
    long L = std::min<long>(1 - delta - w.part(1), -b.length()) - 1;
    long R = std::max<long>(b.part(1), w.length() - delta) + 1;
    // extend until one extra position on each side already shows the tail label
    while (label_at(lam, delta, L) != Label::Up || label_at(lam, delta, L - 1) != Label::Up) --L;
    while (label_at(lam, delta, R) != Label::Down || label_at(lam, delta, R + 1) != Label::Down) ++R;
    WeightDiagram x;
    x.delta = delta;
    x.left = L;
    x.right = R;
    for (long i = L; i <= R; ++i) x.labels.push_back(label_at(lam, delta, i));
    return x;
}

Bipartition decode(const WeightDiagram& x) {
    long crosses = 0, circles = 0;
    for (auto l : x.labels) {
        if (l == Label::Cross) ++crosses;
        if (l == Label::Circle) ++circles;
    }
    if (crosses - circles != x.delta) throw DomainError("weight diagram: #x - #o != delta");

    std::vector<int> black, white;
    // a_k: positions labelled Up or Cross, descending; lam_k = a_k + k - 1
    {
        long k = 1;
        for (long i = x.right; i >= x.left; --i) {
            Label l = x.at(i);
            if (l != Label::Up && l != Label::Cross) continue;
            long v = i + k - 1;
            if (v < 0) throw DomainError("weight diagram: negative black part");
            black.push_back(static_cast<int>(v));
            ++k;
        }
        // tail below the window: a_k = left - 1, left - 2, ... gives constant value
        if (x.left - 1 + k - 1 != 0) throw DomainError("weight diagram: bad left tail");
    }
    {
        long k = 1;
        for (long i = x.left; i <= x.right; ++i) {
            Label l = x.at(i);
            if (l != Label::Down && l != Label::Cross) continue;
            long v = k - x.delta - i;
            if (v < 0) throw DomainError("weight diagram: negative white part");
            white.push_back(static_cast<int>(v));
            ++k;
        }
        if (k - x.delta - (x.right + 1) != 0) throw DomainError("weight diagram: bad right tail");
    }
    return {Partition(black), Partition(white)};
}

std::vector<Cap> cap_diagram(const WeightDiagram& x) {
    std::vector<Cap> caps;
    std::vector<long> stack;
    for (long i = x.left; i <= x.right; ++i) {
        Label l = x.at(i);
        if (l == Label::Down) stack.push_back(i);
        else if (l == Label::Up && !stack.empty()) {
            caps.emplace_back(stack.back(), i);
            stack.pop_back();
        }
    }
    std::sort(caps.begin(), caps.end());
    return caps;
}

std::vector<Cap> cap_diagram_fixed_point(const WeightDiagram& x) {
    long n = x.right - x.left + 1;
    std::vector<char> capped(n, 0);
    std::vector<Cap> caps;
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Cap> step;
        for (long i = 0; i < n; ++i) {
            if (capped[i] || x.labels[i] != Label::Down) continue;
            for (long j = i + 1; j < n; ++j) {
                if (capped[j]) continue;
                Label l = x.labels[j];
                if (l == Label::Cross || l == Label::Circle) continue;
                if (l == Label::Up) step.emplace_back(i, j);
                break;
            }
        }
        for (auto [i, j] : step) {
            capped[i] = capped[j] = 1;
            caps.emplace_back(x.left + i, x.left + j);
            changed = true;
        }
    }
    std::sort(caps.begin(), caps.end());
    return caps;
}

namespace {
std::mutex g_link_mu;
std::map<std::pair<Bipartition, long>, std::set<Bipartition>> g_link;
}  // namespace

std::set<Bipartition> linked_set(const Bipartition& lam, long delta) {
    auto key = std::make_pair(lam, delta);
    {
        std::lock_guard lk(g_link_mu);
        auto it = g_link.find(key);
        if (it != g_link.end()) return it->second;
    }
    WeightDiagram x = weight_diagram(lam, delta);
    std::vector<Cap> caps = cap_diagram(x);
    DELIGNE_CHECK(caps.size() < 40, "too many caps");
    std::set<Bipartition> out;
    for (unsigned long long mask = 0; mask < (1ull << caps.size()); ++mask) {
        WeightDiagram y = x;
        for (size_t c = 0; c < caps.size(); ++c)
            if (mask >> c & 1) y = y.swapped(caps[c].first, caps[c].second);
        out.insert(decode(y));
    }
    std::lock_guard lk(g_link_mu);
    g_link.emplace(key, out);
    return out;
}

int d_prime(const Bipartition& lam, const Bipartition& mu, const Delta& delta) {
    if (!delta.is_integer()) return lam == mu ? 1 : 0;
    if (lam == mu) return 1;
    int db = lam.black.size() - mu.black.size();
    if (db <= 0 || db != lam.white.size() - mu.white.size()) return 0;
    return linked_set(lam, delta.as_long()).count(mu) ? 1 : 0;
}

}  // namespace deligne
