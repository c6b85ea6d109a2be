#include "deligne/combinatorics.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "deligne/errors.hpp"

namespace deligne {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && p_[i] > p_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int x : p_) s += x;
    return s;
}

bool Partition::contains(const Partition& o) const {
    if (o.length() > length()) return false;
    for (int i = 0; i < o.length(); ++i)
        if (o.p_[i] > p_[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p_[i]);
    }
    return s;
}

std::string Bipartition::str() const { return "(" + black.str() + "|" + white.str() + ")"; }

bool operator<(const Bipartition& a, const Bipartition& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    int ba = a.black.size(), bb = b.black.size();
    if (ba != bb) return ba < bb;
    if (a.black != b.black) return a.black < b.black;
    return a.white < b.white;
}

Partition transpose(const Partition& p) {
    std::vector<int> t;
    for (int i = 1; i <= p.part(1); ++i) {
        int c = 0;
        for (int x : p.parts())
            if (x >= i) ++c;
        t.push_back(c);
    }
    return Partition(std::move(t));
}

std::vector<Partition> box_moves(const Partition& p, BoxMove dir) {
    std::vector<Partition> out;
    const auto& v = p.parts();
    int len = p.length();
    if (dir == BoxMove::Add) {
        for (int i = 0; i <= len; ++i) {
            int cur = i < len ? v[i] : 0;
            if (i == 0 || v[i - 1] > cur) {
                std::vector<int> w = v;
                if (i == len) w.push_back(1);
                else ++w[i];
                out.emplace_back(std::move(w));
            }
        }
    } else {
        for (int i = 0; i < len; ++i) {
            int next = i + 1 < len ? v[i + 1] : 0;
            if (v[i] > next) {
                std::vector<int> w = v;
                --w[i];
                out.emplace_back(std::move(w));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::mutex g_part_mu;
std::map<int, std::vector<Partition>> g_partitions;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw DomainError("negative partition size");
    std::lock_guard<std::mutex> lk(g_part_mu);
    auto it = g_partitions.find(n);
    if (it != g_partitions.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return g_partitions.emplace(n, std::move(out)).first->second;
}

std::vector<Bipartition> bipartitions_of(int r, int s) {
    std::vector<Bipartition> out;
    for (const auto& a : partitions_of(r))
        for (const auto& b : partitions_of(s)) out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bipartition> bipartitions_up_to(int r, int s) {
    std::vector<Bipartition> out;
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= s; ++j) {
            auto v = bipartitions_of(i, j);
            out.insert(out.end(), v.begin(), v.end());
        }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Littlewood-Richardson -------------------------------------------------

namespace {

struct LRSearch {
    std::vector<std::pair<int, int>> cells;  // (row, col) in reading order
    std::vector<std::vector<int>> fill;      // fill[row][col], 0 = inside lam
    std::vector<int> lam_row;
    std::vector<int> content;  // mu
    std::vector<int> count;
    long long found = 0;

    void run(size_t idx) {
        if (idx == cells.size()) {
            ++found;
            return;
        }
        auto [i, j] = cells[idx];
        int hi = static_cast<int>(content.size());
        // row weakly increasing: we fill right to left
        if (j + 1 < static_cast<int>(fill[i].size()) && j + 1 >= lam_row[i]) hi = std::min(hi, fill[i][j + 1]);
        int lo = 1;
        if (i > 0 && j < static_cast<int>(fill[i - 1].size()) && j >= lam_row[i - 1]) lo = fill[i - 1][j] + 1;
        hi = std::min(hi, i + 1);  // an entry k never sits above row k
        for (int k = lo; k <= hi; ++k) {
            if (count[k - 1] >= content[k - 1]) continue;
            if (k > 1 && count[k - 1] + 1 > count[k - 2]) continue;  // lattice
            ++count[k - 1];
            fill[i][j] = k;
            run(idx + 1);
            --count[k - 1];
        }
        fill[i][j] = 0;
    }
};

long long lr_compute(const Partition& nu, const Partition& lam, const Partition& mu) {
    if (nu.size() != lam.size() + mu.size()) return 0;
    if (!nu.contains(lam) || !nu.contains(mu)) return 0;
    if (mu.empty()) return 1;
    LRSearch s;
    int rows = nu.length();
    s.fill.resize(rows);
    s.lam_row.resize(rows);
    for (int i = 0; i < rows; ++i) {
        s.fill[i].assign(nu.part(i + 1), 0);
        s.lam_row[i] = lam.part(i + 1);
        for (int j = nu.part(i + 1) - 1; j >= lam.part(i + 1); --j) s.cells.push_back({i, j});
    }
    s.content = mu.parts();
    s.count.assign(mu.length(), 0);
    s.run(0);
    return s.found;
}

using LRKey = std::tuple<Partition, Partition, Partition>;
std::shared_mutex g_lr_mu;
std::map<LRKey, long long> g_lr;
std::atomic<bool> g_lr_enabled{true};

std::mutex g_prod_mu;
std::map<std::pair<Partition, Partition>, std::map<Partition, long long>> g_prod, g_skew;

}  // namespace

long long lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu) {
    if (nu.size() != lam.size() + mu.size() || !nu.contains(lam) || !nu.contains(mu)) return 0;
    if (!g_lr_enabled.load()) return lr_compute(nu, lam, mu);
    LRKey key{nu, lam, mu};
    {
        std::shared_lock lk(g_lr_mu);
        auto it = g_lr.find(key);
        if (it != g_lr.end()) return it->second;
    }
    long long v = lr_compute(nu, lam, mu);
    std::unique_lock lk(g_lr_mu);
    g_lr.emplace(std::move(key), v);
    return v;
}

std::map<Partition, long long> lr_product(const Partition& lam, const Partition& mu) {
    auto key = std::make_pair(lam, mu);
    {
        std::lock_guard lk(g_prod_mu);
        auto it = g_prod.find(key);
        if (it != g_prod.end()) return it->second;
    }
    std::map<Partition, long long> out;
    for (const auto& nu : partitions_of(lam.size() + mu.size())) {
        if (!nu.contains(lam) || !nu.contains(mu)) continue;
        long long c = lr_coefficient(nu, lam, mu);
        if (c) out[nu] = c;
    }
    std::lock_guard lk(g_prod_mu);
    g_prod.emplace(key, out);
    return out;
}

std::map<Partition, long long> lr_skew(const Partition& nu, const Partition& lam) {
    std::map<Partition, long long> out;
    if (!nu.contains(lam)) return out;
    auto key = std::make_pair(nu, lam);
    {
        std::lock_guard lk(g_prod_mu);
        auto it = g_skew.find(key);
        if (it != g_skew.end()) return it->second;
    }
    for (const auto& mu : partitions_of(nu.size() - lam.size())) {
        if (!nu.contains(mu)) continue;
        long long c = lr_coefficient(nu, lam, mu);
        if (c) out[mu] = c;
    }
    std::lock_guard lk(g_prod_mu);
    g_skew.emplace(key, out);
    return out;
}

long long standard_tableaux(const Partition& p) {
    mpz_class num = 1, den = 1;
    for (int i = 2; i <= p.size(); ++i) num *= i;
    Partition t = transpose(p);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j) den *= (p.part(i) - j) + (t.part(j) - i) + 1;
    mpz_class q = num / den;
    DELIGNE_CHECK(q * den == num && q.fits_slong_p(), "hook length formula");
    return q.get_si();
}

bool is_hook(const Partition& p, int m, int n) { return p.part(m + 1) <= n; }

bool is_cross(const Bipartition& b, int m, int n) {
    for (int k = 0; k <= m; ++k)
        if (b.black.part(k + 1) + b.white.part(m - k + 1) <= n) return true;
    return false;
}

bool is_almost_cross(const Bipartition& b, int m, int n) {
    if (b.black.length() > m + 1 || b.white.length() > m + 1) return false;
    for (int k = 0; k <= m; ++k)
        if (b.black.part(k + 1) + b.white.part(m - k + 1) != n + 1) return false;
    return true;
}

namespace lr_cache {

void clear() {
    std::unique_lock lk(g_lr_mu);
    g_lr.clear();
}

std::size_t size() {
    std::shared_lock lk(g_lr_mu);
    return g_lr.size();
}

std::vector<Record> snapshot() {
    std::shared_lock lk(g_lr_mu);
    std::vector<Record> out;
    out.reserve(g_lr.size());
    for (const auto& [k, v] : g_lr) out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
    return out;
}

void insert(const Record& r) {
    std::unique_lock lk(g_lr_mu);
    g_lr[{r.nu, r.lam, r.mu}] = r.value;
}

void set_enabled(bool on) { g_lr_enabled.store(on); }

long long compute(const Partition& nu, const Partition& lam, const Partition& mu) {
    if (nu.size() != lam.size() + mu.size() || !nu.contains(lam) || !nu.contains(mu)) return 0;
    return lr_compute(nu, lam, mu);
}

}  // namespace lr_cache

}  // namespace deligne
