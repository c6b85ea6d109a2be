#pragma once
// Partitions, bipartitions and Littlewood-Richardson coefficients.
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace deligne {

enum class Color : std::uint8_t { Black, White };

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    // Throws DomainError unless parts are weakly decreasing and positive
    // (trailing zeros are dropped).
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return p_; }
    int size() const;
    int length() const { return static_cast<int>(p_.size()); }
    bool empty() const { return p_.empty(); }
    // 1-based part; 0 beyond the length
    int part(int k) const { return (k >= 1 && k <= length()) ? p_[k - 1] : 0; }
    bool contains(const Partition& other) const;  // Young diagram inclusion

    std::string str() const;  // "3,2,1"; "" for the empty partition

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.p_ <=> b.p_; }

private:
    std::vector<int> p_;
};

struct Bipartition {
    Partition black;  // lambda bullet
    Partition white;  // lambda circ

    int total() const { return black.size() + white.size(); }
    int length() const { return black.length() + white.length(); }
    Bipartition dual() const { return {white, black}; }
    std::string str() const;  // "(3,2|3,1)"

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Canonical order: total size, black size, then black and white lexicographically.
bool operator<(const Bipartition& a, const Bipartition& b);
inline bool operator>(const Bipartition& a, const Bipartition& b) { return b < a; }

Partition transpose(const Partition& p);

enum class BoxMove { Add, Remove };
std::vector<Partition> box_moves(const Partition& p, BoxMove dir);

// All partitions of n, in decreasing lexicographic order.
const std::vector<Partition>& partitions_of(int n);
std::vector<Bipartition> bipartitions_of(int r, int s);
// every bipartition with |black| <= r and |white| <= s
std::vector<Bipartition> bipartitions_up_to(int r, int s);

long long lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu);
// s_lam * s_mu = sum_nu c nu
std::map<Partition, long long> lr_product(const Partition& lam, const Partition& mu);
// skew expansion: s_{nu/lam} = sum_mu c s_mu
std::map<Partition, long long> lr_skew(const Partition& nu, const Partition& lam);

// number of standard tableaux (hook length formula)
long long standard_tableaux(const Partition& p);

bool is_hook(const Partition& p, int m, int n);
bool is_cross(const Bipartition& b, int m, int n);
bool is_almost_cross(const Bipartition& b, int m, int n);

// Process-wide LR memo. Thread safe; persistence is driven from the CLI.
namespace lr_cache {
struct Record {
    Partition nu, lam, mu;
    long long value;
};
void clear();
std::size_t size();
std::vector<Record> snapshot();
void insert(const Record& r);
void set_enabled(bool on);
// the tableau count itself, bypassing the memo
long long compute(const Partition& nu, const Partition& lam, const Partition& mu);
}  // namespace lr_cache

}  // namespace deligne

template <>
struct std::hash<deligne::Partition> {
    std::size_t operator()(const deligne::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};
