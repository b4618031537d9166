#pragma once
// Two-rowed arrays (x_k; y_k), k >= -1, the encoding T(c) for i > m,
// the map F, array signatures and operators, reduced decompositions and
// the gluing procedures that rebuild kappa(c) for c supported in the
// triangle from i.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "correspondence.hpp"

namespace sc {

struct TwoRowedArray {
    // entry k sits at index k + 1; trailing zeros are trimmed
    std::vector<int> x, y;

    static void check_key(int k) {
        if (k < -1) throw std::invalid_argument("two-rowed array: index below -1");
    }
    static int get(const std::vector<int>& row, int k) {
        size_t at = static_cast<size_t>(k + 1);
        return k >= -1 && at < row.size() ? row[at] : 0;
    }
    int X(int k) const { return get(x, k); }
    int Y(int k) const { return get(y, k); }
    static void set(std::vector<int>& row, int k, int v) {
        check_key(k);
        if (v < 0) throw std::invalid_argument("two-rowed array: negative entry");
        size_t at = static_cast<size_t>(k + 1);
        if (at >= row.size()) {
            if (v == 0) return;
            row.resize(at + 1, 0);
        }
        row[at] = v;
        while (!row.empty() && row.back() == 0) row.pop_back();
    }
    void setX(int k, int v) { set(x, k, v); }
    void setY(int k, int v) { set(y, k, v); }
    int max_k() const { return std::max(-1, static_cast<int>(std::max(x.size(), y.size())) - 2); }
    bool empty() const { return x.empty() && y.empty(); }
    bool operator==(const TwoRowedArray&) const = default;
    bool operator<(const TwoRowedArray& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
};

inline TwoRowedArray operator+(TwoRowedArray a, const TwoRowedArray& b) {
    for (int k = -1; k <= b.max_k(); ++k) {
        if (b.X(k)) a.setX(k, a.X(k) + b.X(k));
        if (b.Y(k)) a.setY(k, a.Y(k) + b.Y(k));
    }
    return a;
}

// X_k(a): x_{k+1} = a, y_k = a
inline TwoRowedArray block(int k, int a) {
    TwoRowedArray X;
    X.setX(k + 1, a);
    X.setY(k, a);
    return X;
}

inline int qpart(int z) { return z / 2; }
inline int rpart(int z) { return z % 2; }

inline TwoRowedArray F_map(const TwoRowedArray& T) {
    int K = T.max_k() + 2;
    size_t n = static_cast<size_t>(K + 2);  // k = -1..K
    std::vector<int> yp(n), z(n), Xm(n);
    auto at = [](int k) { return static_cast<size_t>(k + 1); };
    for (int k = -1; k <= K; ++k) yp[at(k)] = rpart(T.Y(k)) + 2 * qpart(k - 1 >= -1 ? T.Y(k - 1) : 0);
    TwoRowedArray out;
    for (int k = -1; k <= K; ++k) {
        int zprev = k > -1 ? z[at(k - 1)] : 0;
        z[at(k)] = std::min(T.X(k), yp[at(k)]);
        Xm[at(k)] = T.X(k) - z[at(k)] + zprev;
        out.setY(k, yp[at(k)] - z[at(k)] + zprev);
    }
    for (int k = -1; k <= K; ++k) out.setX(k, rpart(Xm[at(k)]) + 2 * qpart(k > -1 ? Xm[at(k - 1)] : 0));
    return out;
}

struct ArraySign {
    int k = 0;
    char s = '+';
    bool operator==(const ArraySign&) const = default;
};

// High k first; column k contributes -^{y_k} +^{x_k}.
inline std::vector<ArraySign> sigma(const TwoRowedArray& X) {
    std::vector<ArraySign> s;
    for (int k = X.max_k(); k >= -1; --k) {
        for (int t = 0; t < X.Y(k); ++t) s.push_back({k, '-'});
        for (int t = 0; t < X.X(k); ++t) s.push_back({k, '+'});
    }
    return s;
}

// Cancels (+,-) pairs, + to the left of -.
inline std::vector<ArraySign> reduce_sigma(const std::vector<ArraySign>& s) {
    std::vector<ArraySign> st;
    for (auto& a : s) {
        if (!st.empty() && st.back().s == '+' && a.s == '-') st.pop_back();
        else st.push_back(a);
    }
    return st;
}

inline std::string to_string(const std::vector<ArraySign>& s) {
    std::string out;
    for (auto& a : s) out += a.s;
    return out;
}

inline std::optional<TwoRowedArray> apply_f_array(const TwoRowedArray& X) {
    auto red = reduce_sigma(sigma(X));
    for (auto& a : red)
        if (a.s == '+') {
            TwoRowedArray Y = X;
            Y.setX(a.k, Y.X(a.k) - 1);
            Y.setY(a.k, Y.Y(a.k) + 1);
            return Y;
        }
    return std::nullopt;
}

inline std::optional<TwoRowedArray> apply_e_array(const TwoRowedArray& X) {
    auto red = reduce_sigma(sigma(X));
    for (auto it = red.rbegin(); it != red.rend(); ++it)
        if (it->s == '-') {
            TwoRowedArray Y = X;
            Y.setX(it->k, Y.X(it->k) + 1);
            Y.setY(it->k, Y.Y(it->k) - 1);
            return Y;
        }
    return std::nullopt;
}

// Reduced: min(x_{k+1}, y_k) <= 1 for every k.
inline bool is_reduced(const TwoRowedArray& X) {
    for (int k = -1; k <= X.max_k(); ++k)
        if (std::min(X.X(k + 1), X.Y(k)) > 1) return false;
    return true;
}

struct ReducedDecomposition {
    TwoRowedArray reduced;
    std::map<int, int> a;  // k -> a_k, X = reduced + sum X_k(2 a_k)
};

inline ReducedDecomposition reduced_decompose(const TwoRowedArray& X) {
    ReducedDecomposition d{X, {}};
    for (int k = -1; k <= X.max_k(); ++k) {
        int a = std::min(X.X(k + 1) / 2, X.Y(k) / 2);
        if (!a) continue;
        d.a[k] = a;
        d.reduced.setX(k + 1, d.reduced.X(k + 1) - 2 * a);
        d.reduced.setY(k, d.reduced.Y(k) - 2 * a);
    }
    return d;
}

// ---------------------------------------------------------------------------
// i > m

// x_k / y_k count i / i+1 in column k of Q_i(c); columns 0 and -1 come
// from the triangle (a, b, c) = (c_(i,i), c_(i,i+1), c_(i+1,i+1)).
inline TwoRowedArray build_T_array(const MatrixElement& x, int i) {
    if (x.g.kind != Kind::d || i <= x.A.m || i >= x.A.size()) throw std::invalid_argument("build_T_array needs type d and i > m");
    if (!supported_in_upper(x, i)) throw std::invalid_argument("build_T_array: support must lie in the triangle from i");
    auto s = region_split(x, i);
    auto pq = pq_pair(kappa_d(s.upper), s.lozenge);
    TwoRowedArray T;
    for (auto& [p, a] : pq.Q.cells) {
        int k = -p.first + 1;
        if (a == i) T.setX(k, T.X(k) + 1);
        else if (a == i + 1) T.setY(k, T.Y(k) + 1);
        else throw std::logic_error("build_T_array: unexpected recording letter");
    }
    int a = x.get(i, i), b = x.get(i, i + 1), c = x.get(i + 1, i + 1);
    T.setX(0, b + 2 * a);
    T.setY(0, 2 * c + b % 2);
    T.setY(-1, 2 * (b / 2));
    return T;
}

// Column k of FX (i's above i+1's) goes on top of column k of P.
inline Tableau glue_gt_m(Tableau P, const TwoRowedArray& FX, int i, const Alphabet& A) {
    for (int k = 1; k <= FX.max_k(); ++k) {
        std::vector<int> add(FX.X(k), i);
        add.insert(add.end(), FX.Y(k), i + 1);
        if (add.empty()) continue;
        while (P.ncols() < k) P.cols.push_back({});
        auto& col = P.cols[k - 1];
        col.insert(col.begin(), add.begin(), add.end());
    }
    if (!P.empty() && !is_semistandard(P, A)) throw std::logic_error("glue_gt_m: result is not semistandard");
    return P;
}

// ---------------------------------------------------------------------------
// i < m

// Two-row normal tableau with letters i, i+1: top i^alpha (i+1)^beta, bottom (i+1)^gamma.
struct TwoRowNormal {
    int alpha = 0, beta = 0, gamma = 0;
};

// Jeu de taquin rectification of a filling by i, i+1 (both even).
inline TwoRowNormal rectify_two_letters(const Grid& Q, int i, const Alphabet& A) {
    TwoRowNormal t;
    if (Q.empty()) return t;
    int x0 = Q.min_x() - Q.size(), ytop = Q.max_y();
    auto N = normal_from_grid(rectify(Q, x0, ytop, A));
    if (N.size() > 2) throw std::logic_error("rectify_two_letters: more than two rows");
    for (int a : N.empty() ? std::vector<int>{} : N[0]) {
        if (a == i) ++t.alpha;
        else if (a == i + 1) ++t.beta;
        else throw std::logic_error("rectify_two_letters: unexpected letter");
    }
    if (N.size() == 2)
        for (int a : N[1]) {
            if (a != i + 1) throw std::logic_error("rectify_two_letters: unexpected letter");
            ++t.gamma;
        }
    return t;
}

struct Level {
    std::vector<int> top, bottom;  // left to right, right-aligned against each other
};

inline int leading_dominoes(const Level& L, int i) {
    int w = static_cast<int>(std::max(L.top.size(), L.bottom.size()));
    int offTop = w - static_cast<int>(L.top.size()), offBot = w - static_cast<int>(L.bottom.size());
    int n = 0;
    for (int col = 0; col < w; ++col) {
        if (col < offTop || col < offBot) break;
        if (L.top[col - offTop] == i && L.bottom[col - offBot] == i + 1) ++n;
        else break;
    }
    return n;
}

// Algorithm for i < m. P, Q come from pq_pair(kappa(c_upper), c_lozenge),
// b = c_(i,i+1), mu = row lengths of kappa(c_upper) from the bottom.
inline Tableau glue_lt_m(const Tableau& P, const Grid& Q, int b, const Partition& mu, int i, const Alphabet& A,
                         std::vector<Tableau>* chain = nullptr) {
    auto rows = rows_bottom_first(P);  // rows[r] = row r+1 from the bottom
    int h = static_cast<int>(rows.size());
    int L = h / 2 + 1;
    auto rowOf = [&](int r) -> std::vector<int> { return r <= h ? rows[r - 1] : std::vector<int>{}; };
    auto levelOf = [&](int l, int dominoes) {
        Grid Ql;
        for (auto& [p, a] : Q.cells)
            if (p.second + 1 == 2 * l - 1 || p.second + 1 == 2 * l) Ql.set(p.first, p.second, a);
        auto t = rectify_two_letters(Ql, i, A);
        Level lv;
        lv.top.assign(dominoes, i);
        lv.bottom.assign(dominoes, i + 1);
        lv.top.insert(lv.top.end(), t.alpha, i);
        lv.top.insert(lv.top.end(), t.beta, i + 1);
        lv.bottom.insert(lv.bottom.end(), t.gamma, i + 1);
        auto pt = rowOf(2 * l), pb = rowOf(2 * l - 1);
        lv.top.insert(lv.top.end(), pt.begin(), pt.end());
        lv.bottom.insert(lv.bottom.end(), pb.begin(), pb.end());
        return lv;
    };
    auto assemble = [&](const std::vector<Level>& levels) {
        std::vector<std::vector<int>> rb;
        for (auto& lv : levels) {
            rb.push_back(lv.bottom);
            rb.push_back(lv.top);
        }
        while (!rb.empty() && rb.back().empty()) rb.pop_back();
        return from_rows_bottom_first(rb);
    };
    // levels[l-1] holds level l; built from the top down
    std::vector<Level> levels(L);
    levels[L - 1] = levelOf(L, b);
    auto snapshot = [&](int lowest) {
        if (!chain) return;
        std::vector<Level> part(levels.begin() + (lowest - 1), levels.end());
        std::vector<std::vector<int>> rb;
        for (auto& lv : part) {
            rb.push_back(lv.bottom);
            rb.push_back(lv.top);
        }
        while (!rb.empty() && rb.back().empty()) rb.pop_back();
        chain->push_back(from_rows_bottom_first(rb));
    };
    snapshot(L);
    for (int l = L - 1; l >= 1; --l) {
        Level& up = levels[l];
        int width = static_cast<int>(std::max(up.top.size(), up.bottom.size()));
        int room = part(mu, 2 * l - 2) - part(mu, 2 * l);  // mu_{2l-1} - mu_{2l+1}
        int move = 0;
        if (width > room) move = std::min(leading_dominoes(up, i), width - room);
        up.top.erase(up.top.begin(), up.top.begin() + move);
        up.bottom.erase(up.bottom.begin(), up.bottom.begin() + move);
        levels[l - 1] = levelOf(l, move);
        snapshot(l);
    }
    auto T = assemble(levels);
    if (!T.empty() && !is_semistandard(T, A)) throw std::logic_error("glue_lt_m: result is not semistandard");
    return T;
}

// kappa(c) rebuilt from the recording data, c supported in the triangle from i, i != m.
inline Tableau glue(const MatrixElement& x, int i, std::vector<Tableau>* chain = nullptr) {
    if (x.g.kind != Kind::d) throw std::invalid_argument("glue needs type d");
    auto s = region_split(x, i);
    if (!s.complement.c.empty()) throw std::invalid_argument("glue: support must lie in the triangle from i");
    auto upper = kappa_d(s.upper);
    auto pq = pq_pair(upper, s.lozenge);
    if (i > x.A.m) return glue_gt_m(pq.P, F_map(build_T_array(x, i)), i, x.A);
    if (i < x.A.m) return glue_lt_m(pq.P, pq.Q, x.get(i, i + 1), shape(upper), i, x.A, chain);
    throw std::invalid_argument("glue: i = m has no gluing procedure");
}

}  // namespace sc
