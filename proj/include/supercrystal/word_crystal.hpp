#pragma once
// Crystal operators e_i, f_i (1 <= i < m+n) on words and tableaux,
// tensor product rules, crystal graphs and isomorphism tests.

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tableau.hpp"

namespace sc {

struct Sign {
    int pos = 0;
    char s = '+';
};

// '+' for the letter i, '-' for i+1, read left to right.
inline std::vector<Sign> signature(const Word& w, int i) {
    std::vector<Sign> out;
    for (int p = 0; p < static_cast<int>(w.size()); ++p) {
        if (w[p] == i) out.push_back({p, '+'});
        else if (w[p] == i + 1) out.push_back({p, '-'});
    }
    return out;
}

// Cancels adjacent pairs (first, second) until none is left.
inline std::vector<Sign> reduce_signs(const std::vector<Sign>& sig, char first, char second) {
    std::vector<Sign> st;
    for (auto& s : sig) {
        if (!st.empty() && st.back().s == first && s.s == second) st.pop_back();
        else st.push_back(s);
    }
    return st;
}

inline void check_index(int i, const Alphabet& A) {
    if (i < 1 || i >= A.size()) throw std::invalid_argument("crystal index out of range");
}

// Position changed by f_i (or e_i when raise is true), if any.
inline std::optional<int> word_op_position(const Word& w, int i, const Alphabet& A, bool raise) {
    check_index(i, A);
    if (i == A.m) {
        for (int p = 0; p < static_cast<int>(w.size()); ++p) {
            if (w[p] == i || w[p] == i + 1) {
                if (!raise && w[p] == i) return p;
                if (raise && w[p] == i + 1) return p;
                return std::nullopt;
            }
        }
        return std::nullopt;
    }
    auto sig = signature(w, i);
    if (i < A.m) {
        auto red = reduce_signs(sig, '+', '-');
        if (!raise) {
            for (auto& s : red)
                if (s.s == '+') return s.pos;
        } else {
            for (auto it = red.rbegin(); it != red.rend(); ++it)
                if (it->s == '-') return it->pos;
        }
        return std::nullopt;
    }
    auto red = reduce_signs(sig, '-', '+');
    if (!raise) {
        for (auto it = red.rbegin(); it != red.rend(); ++it)
            if (it->s == '+') return it->pos;
    } else {
        for (auto& s : red)
            if (s.s == '-') return s.pos;
    }
    return std::nullopt;
}

inline std::optional<Word> word_f(Word w, int i, const Alphabet& A) {
    auto p = word_op_position(w, i, A, false);
    if (!p) return std::nullopt;
    w[*p] = i + 1;
    return w;
}

inline std::optional<Word> word_e(Word w, int i, const Alphabet& A) {
    auto p = word_op_position(w, i, A, true);
    if (!p) return std::nullopt;
    w[*p] = i;
    return w;
}

template <class T, class Op>
int string_length(T b, Op op) {
    int k = 0;
    while (true) {
        auto nb = op(b);
        if (!nb) return k;
        b = *nb;
        ++k;
    }
}

inline int word_phi(const Word& w, int i, const Alphabet& A) {
    return string_length(w, [&](const Word& x) { return word_f(x, i, A); });
}
inline int word_eps(const Word& w, int i, const Alphabet& A) {
    return string_length(w, [&](const Word& x) { return word_e(x, i, A); });
}

// Operators on tableaux go through the column reading word.
inline std::optional<Tableau> tableau_op(const Tableau& T, int i, const Alphabet& A, bool raise) {
    Word w = word(T);
    auto p = word_op_position(w, i, A, raise);
    if (!p) return std::nullopt;
    Tableau U = T;
    int idx = *p;
    for (auto& c : U.cols) {
        if (idx < static_cast<int>(c.size())) {
            c[idx] = raise ? i : i + 1;
            break;
        }
        idx -= static_cast<int>(c.size());
    }
    if (!is_semistandard(U, A)) throw std::logic_error("tableau operator left the semistandard set");
    return U;
}
inline std::optional<Tableau> tableau_f(const Tableau& T, int i, const Alphabet& A) { return tableau_op(T, i, A, false); }
inline std::optional<Tableau> tableau_e(const Tableau& T, int i, const Alphabet& A) { return tableau_op(T, i, A, true); }

inline std::optional<Grid> grid_op(const Grid& G, int i, const Alphabet& A, bool raise) {
    Word w = word(G);
    auto p = word_op_position(w, i, A, raise);
    if (!p) return std::nullopt;
    Grid H = G;
    int idx = 0;
    for (int x = G.max_x(); x >= G.min_x(); --x) {
        for (int y = G.max_y(); y >= G.min_y(); --y) {
            if (!G.has(x, y)) continue;
            if (idx == *p) {
                H.set(x, y, raise ? i : i + 1);
                return H;
            }
            ++idx;
        }
    }
    return std::nullopt;
}

// Which factor of b1 (x) b2 the operator acts on.
enum class Side { left, right, none };

inline Side tensor_f_side(int i, const Alphabet& A, int eps1, int phi1, int eps2, int phi2) {
    Side s;
    if (i == A.m) s = (eps1 + phi1 > 0) ? Side::left : Side::right;
    else if (i < A.m) s = phi1 > eps2 ? Side::left : Side::right;
    else s = phi2 > eps1 ? Side::right : Side::left;
    int phi = s == Side::left ? phi1 : phi2;
    return phi > 0 ? s : Side::none;
}

inline Side tensor_e_side(int i, const Alphabet& A, int eps1, int phi1, int eps2, int phi2) {
    Side s;
    if (i == A.m) s = (eps1 + phi1 > 0) ? Side::left : Side::right;
    else if (i < A.m) s = phi1 >= eps2 ? Side::left : Side::right;
    else s = phi2 >= eps1 ? Side::right : Side::left;
    int eps = s == Side::left ? eps1 : eps2;
    return eps > 0 ? s : Side::none;
}

// ---------------------------------------------------------------------------
// Crystal graphs

struct Edge {
    int from, to, i;
    bool operator<(const Edge& o) const { return std::tie(from, to, i) < std::tie(o.from, o.to, o.i); }
};

template <class T>
struct CrystalGraph {
    std::vector<T> vertices;
    std::vector<Weight> weights;
    std::vector<Edge> edges;  // f_i maps from -> to
};

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("crystal graph exceeded the vertex budget") {}
};

// Op(const T&, int i, bool raise) -> optional<T>; Wt(const T&) -> Weight.
template <class T, class Op, class Wt>
CrystalGraph<T> crystal_graph(const std::vector<T>& seeds, const std::vector<int>& indices, Op op, Wt wt, size_t budget = 200000) {
    std::map<T, int> id;
    CrystalGraph<T> G;
    std::deque<int> queue;
    auto visit = [&](const T& b) {
        auto it = id.find(b);
        if (it != id.end()) return it->second;
        if (G.vertices.size() >= budget) throw BudgetExceeded();
        int k = static_cast<int>(G.vertices.size());
        id.emplace(b, k);
        G.vertices.push_back(b);
        G.weights.push_back(wt(b));
        queue.push_back(k);
        return k;
    };
    for (auto& s : seeds) visit(s);
    std::set<Edge> edges;
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        T b = G.vertices[k];
        for (int i : indices) {
            if (auto nb = op(b, i, false)) edges.insert({k, visit(*nb), i});
            if (auto nb = op(b, i, true)) edges.insert({visit(*nb), k, i});
        }
    }
    G.edges.assign(edges.begin(), edges.end());
    return G;
}

struct PairedResult {
    bool ok = true;
    bool complete = true;  // false when the budget stopped the search
    size_t visited = 0;
    std::string reason;
};

// Walks the components of b1 and b2 simultaneously. Operators must be
// defined together and weights must agree along the way.
template <class T1, class T2, class Op1, class Op2, class W1, class W2>
PairedResult paired_walk(const T1& b1, const T2& b2, const std::vector<int>& indices, Op1 op1, Op2 op2, W1 w1, W2 w2,
                         size_t budget = 200000) {
    PairedResult res;
    std::map<T1, T2> fwd;
    std::map<T2, T1> bwd;
    std::deque<std::pair<T1, T2>> queue;
    auto link = [&](const T1& x, const T2& y) -> bool {
        auto it = fwd.find(x);
        if (it != fwd.end()) return it->second == y;
        if (bwd.count(y)) return false;
        if (!(w1(x) == w2(y))) return false;
        fwd.emplace(x, y);
        bwd.emplace(y, x);
        queue.push_back({x, y});
        return true;
    };
    if (!link(b1, b2)) return {false, true, 0, "weights differ at the start"};
    while (!queue.empty()) {
        if (fwd.size() > budget) {
            res.complete = false;
            break;
        }
        auto [x, y] = queue.front();
        queue.pop_front();
        for (int i : indices)
            for (bool raise : {false, true}) {
                auto nx = op1(x, i, raise);
                auto ny = op2(y, i, raise);
                if (nx.has_value() != ny.has_value()) {
                    res.ok = false;
                    res.reason = std::string(raise ? "e_" : "f_") + std::to_string(i) + " defined on one side only";
                    res.visited = fwd.size();
                    return res;
                }
                if (nx && !link(*nx, *ny)) {
                    res.ok = false;
                    res.reason = "inconsistent pairing";
                    res.visited = fwd.size();
                    return res;
                }
            }
    }
    res.visited = fwd.size();
    return res;
}

// Isomorphism of two finite crystal graphs: component by component,
// trying every weight-compatible anchor.
template <class T1, class T2>
bool graphs_isomorphic(const CrystalGraph<T1>& G1, const CrystalGraph<T2>& G2) {
    if (G1.vertices.size() != G2.vertices.size() || G1.edges.size() != G2.edges.size()) return false;
    auto adj = [](size_t n, const std::vector<Edge>& E) {
        std::vector<std::map<int, int>> out(n), in(n);
        for (auto& e : E) {
            out[e.from][e.i] = e.to;
            in[e.to][e.i] = e.from;
        }
        return std::make_pair(out, in);
    };
    auto [o1, i1] = adj(G1.vertices.size(), G1.edges);
    auto [o2, i2] = adj(G2.vertices.size(), G2.edges);
    size_t n = G1.vertices.size();
    std::vector<int> map1(n, -1), used2(n, 0);
    auto tryMatch = [&](int a, int b, std::vector<int>& m1, std::vector<int>& m2) -> bool {
        std::deque<std::pair<int, int>> q{{a, b}};
        m1[a] = b;
        m2[b] = a;
        while (!q.empty()) {
            auto [x, y] = q.front();
            q.pop_front();
            if (!(G1.weights[x] == G2.weights[y])) return false;
            for (auto* pr : {&o1, &i1}) {
                auto& A1 = (*pr)[x];
                auto& A2 = (pr == &o1 ? o2 : i2)[y];
                if (A1.size() != A2.size()) return false;
                for (auto& [i, nx] : A1) {
                    auto it = A2.find(i);
                    if (it == A2.end()) return false;
                    int ny = it->second;
                    if (m1[nx] == -1 && m2[ny] == -1) {
                        m1[nx] = ny;
                        m2[ny] = nx;
                        q.push_back({nx, ny});
                    } else if (m1[nx] != ny) {
                        return false;
                    }
                }
            }
        }
        return true;
    };
    for (size_t a = 0; a < n; ++a) {
        if (map1[a] != -1) continue;
        bool found = false;
        for (size_t b = 0; b < n && !found; ++b) {
            if (used2[b] || !(G1.weights[a] == G2.weights[b])) continue;
            auto m1 = map1;
            std::vector<int> m2i(n, -1);
            for (size_t t = 0; t < n; ++t)
                if (map1[t] != -1) m2i[map1[t]] = static_cast<int>(t);
            if (tryMatch(static_cast<int>(a), static_cast<int>(b), m1, m2i)) {
                map1 = m1;
                for (size_t t = 0; t < n; ++t)
                    if (m2i[t] != -1) used2[t] = 1;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace sc
