#pragma once
// Graded alphabet, partitions and weights.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc {

struct Alphabet {
    int m = 2;
    int n = 1;

    Alphabet() = default;
    Alphabet(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n < 0) throw std::invalid_argument("alphabet: need m >= 1, n >= 0");
    }
    int size() const { return m + n; }
    bool even(int a) const { return a <= m; }
    bool odd(int a) const { return a > m; }
    // parity 0 for even letters, 1 for odd ones
    int parity(int a) const { return a <= m ? 0 : 1; }
    bool contains(int a) const { return a >= 1 && a <= m + n; }
    bool operator==(const Alphabet&) const = default;
};

enum class Kind { b, c, d };

struct GType {
    Kind kind = Kind::d;
    GType() = default;
    explicit GType(Kind k) : kind(k) {}
    int r() const { return kind == Kind::b ? 2 : 1; }
    char name() const { return kind == Kind::b ? 'b' : kind == Kind::c ? 'c' : 'd'; }
    static GType parse(const std::string& s) {
        if (s == "b") return GType(Kind::b);
        if (s == "c") return GType(Kind::c);
        if (s == "d") return GType(Kind::d);
        throw std::invalid_argument("unknown type '" + s + "'");
    }
    bool operator==(const GType&) const = default;
};

using Partition = std::vector<int>;

inline Partition normalize(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline int part(const Partition& p, size_t i) { return i < p.size() ? p[i] : 0; }

inline Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    q.assign(p.front(), 0);
    for (int r : p)
        for (int j = 0; j < r; ++j) ++q[j];
    return q;
}

inline int size(const Partition& p) {
    int s = 0;
    for (int r : p) s += r;
    return s;
}

// lambda_{m+1} <= n
inline bool hook_check(const Partition& p, const Alphabet& A) {
    return part(p, A.m) <= A.n;
}

inline bool parity_family_check(const Partition& p, GType g) {
    switch (g.kind) {
    case Kind::b: return true;
    case Kind::c:
        return std::all_of(p.begin(), p.end(), [](int r) { return r % 2 == 0; });
    case Kind::d: {
        Partition q = conjugate(p);
        return std::all_of(q.begin(), q.end(), [](int r) { return r % 2 == 0; });
    }
    }
    return false;
}

struct Weight {
    std::vector<int> delta;  // coefficient of delta_a at index a-1
    int level = 0;           // coefficient of Lambda_0

    Weight() = default;
    explicit Weight(int len) : delta(len, 0) {}
    bool operator==(const Weight&) const = default;
    Weight& operator+=(const Weight& o) {
        if (delta.size() < o.delta.size()) delta.resize(o.delta.size(), 0);
        for (size_t i = 0; i < o.delta.size(); ++i) delta[i] += o.delta[i];
        level += o.level;
        return *this;
    }
    Weight operator-(const Weight& o) const {
        Weight w = *this;
        if (w.delta.size() < o.delta.size()) w.delta.resize(o.delta.size(), 0);
        for (size_t i = 0; i < o.delta.size(); ++i) w.delta[i] -= o.delta[i];
        w.level -= o.level;
        return w;
    }
};

inline Weight hook_weight(const Partition& p, const Alphabet& A) {
    if (!hook_check(p, A)) throw std::invalid_argument("hook_weight: not an (m|n)-hook partition");
    Weight w(A.size());
    for (int i = 0; i < A.m; ++i) w.delta[i] = part(p, i);
    Partition rest;
    for (size_t i = A.m; i < p.size(); ++i) rest.push_back(p[i]);
    Partition mu = conjugate(rest);
    for (int j = 0; j < A.n; ++j) w.delta[A.m + j] = part(mu, j);
    return w;
}

// Weight of a multiset of letters, each contributing -delta_a.
inline Weight letters_weight(const std::vector<int>& letters, const Alphabet& A) {
    Weight w(A.size());
    for (int a : letters) w.delta[a - 1] -= 1;
    return w;
}

// All partitions of total size s (weakly decreasing parts).
inline std::vector<Partition> partitions_of(int s) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto& self, int left, int maxp) -> void {
        if (left == 0) { out.push_back(cur); return; }
        for (int k = std::min(left, maxp); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, s, s);
    return out;
}

}  // namespace sc
