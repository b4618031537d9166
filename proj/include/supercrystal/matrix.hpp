#pragma once
// Matrix crystals M^g: upper-triangular multiplicity arrays over the
// positive roots of the odd nilradical, the type d biword codec, f0/e0,
// the symmetric operators for types b and c, and the type d rules on
// the triangular regions.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "word_crystal.hpp"

namespace sc {

using CellIJ = std::pair<int, int>;

// Cells (i,j), i <= j, carrying a multiplicity for the given type.
inline std::vector<CellIJ> matrix_cells(GType g, const Alphabet& A) {
    std::vector<CellIJ> out;
    int N = A.size();
    for (int i = 1; i <= N; ++i)
        for (int j = i; j <= N; ++j) {
            if (i == j) {
                bool ok = g.kind == Kind::b || (g.kind == Kind::c && A.even(i)) || (g.kind == Kind::d && A.odd(i));
                if (!ok) continue;
            }
            out.push_back({i, j});
        }
    return out;
}

struct MatrixElement {
    GType g;
    Alphabet A;
    std::map<CellIJ, int> c;  // zero entries are never stored

    MatrixElement() = default;
    MatrixElement(GType g_, Alphabet A_) : g(g_), A(A_) {}

    int get(int i, int j) const {
        auto it = c.find({i, j});
        return it == c.end() ? 0 : it->second;
    }
    void set(int i, int j, int v) {
        if (v < 0) throw std::invalid_argument("negative multiplicity");
        if (v == 0) c.erase({i, j});
        else c[{i, j}] = v;
    }
    void add(int i, int j, int d) { set(i, j, get(i, j) + d); }
    int total() const {
        int s = 0;
        for (auto& [p, v] : c) s += v;
        return s;
    }
    bool operator==(const MatrixElement& o) const { return c == o.c && g == o.g && A == o.A; }
    bool operator<(const MatrixElement& o) const { return c < o.c; }
};

inline bool is_cell(GType g, const Alphabet& A, int i, int j) {
    if (i < 1 || j > A.size() || i > j) return false;
    if (i < j) return true;
    return g.kind == Kind::b || (g.kind == Kind::c && A.even(i)) || (g.kind == Kind::d && A.odd(i));
}

inline bool valid(const MatrixElement& x) {
    for (auto& [p, v] : x.c) {
        auto [i, j] = p;
        if (!is_cell(x.g, x.A, i, j) || v <= 0) return false;
        if (x.A.parity(i) != x.A.parity(j) && v > 1) return false;
    }
    return true;
}

inline void require_valid(const MatrixElement& x) {
    if (!valid(x)) throw std::invalid_argument("matrix element violates the type constraints");
}

inline Weight weight(const MatrixElement& x) {
    Weight w(x.A.size());
    for (auto& [p, v] : x.c) {
        auto [i, j] = p;
        if (i < j) {
            w.delta[i - 1] -= v;
            w.delta[j - 1] -= v;
        } else {
            w.delta[i - 1] -= 2 * v / x.g.r();
        }
    }
    return w;
}

// ---------------------------------------------------------------------------
// Type d biwords

struct Biword {
    std::vector<int> top, bottom;
    bool operator==(const Biword&) const = default;
};

// (i1,j1) <=' (i2,j2)
inline bool biletter_leq(const Alphabet& A, int i1, int j1, int i2, int j2) {
    if (i1 != i2) return i1 < i2;
    return A.even(i1) ? j1 >= j2 : j1 <= j2;
}

inline Biword to_biword(const MatrixElement& x) {
    std::vector<std::pair<int, int>> letters;
    for (auto& [p, v] : x.c)
        for (int t = 0; t < v; ++t) letters.push_back(p);
    std::stable_sort(letters.begin(), letters.end(), [&](const CellIJ& a, const CellIJ& b) {
        if (a == b) return false;
        return biletter_leq(x.A, a.first, a.second, b.first, b.second);
    });
    Biword bw;
    for (auto [i, j] : letters) {
        bw.top.push_back(i);
        bw.bottom.push_back(j);
    }
    return bw;
}

inline MatrixElement from_biword(const Biword& bw, GType g, const Alphabet& A) {
    if (bw.top.size() != bw.bottom.size()) throw std::invalid_argument("biword rows differ in length");
    MatrixElement x(g, A);
    for (size_t k = 0; k < bw.top.size(); ++k) {
        int i = bw.top[k], j = bw.bottom[k];
        if (!is_cell(g, A, i, j)) throw std::invalid_argument("biletter outside the root set");
        if (k && !biletter_leq(A, bw.top[k - 1], bw.bottom[k - 1], i, j))
            throw std::invalid_argument("biword is not sorted");
        x.add(i, j, 1);
    }
    require_valid(x);
    return x;
}

// ---------------------------------------------------------------------------
// f0 / e0

inline CellIJ alpha0_cell(GType g) { return g.kind == Kind::d ? CellIJ{1, 2} : CellIJ{1, 1}; }

inline std::optional<MatrixElement> f0(const MatrixElement& x) {
    auto [i, j] = alpha0_cell(x.g);
    MatrixElement y = x;
    y.add(i, j, 1);
    if (!valid(y)) return std::nullopt;  // only when c_(1,2) is capped, i.e. m = 1
    return y;
}

inline std::optional<MatrixElement> e0(const MatrixElement& x) {
    auto [i, j] = alpha0_cell(x.g);
    if (x.get(i, j) == 0) return std::nullopt;
    MatrixElement y = x;
    y.add(i, j, -1);
    return y;
}

// ---------------------------------------------------------------------------
// Types b and c: symmetric matrices

using Square = std::vector<std::vector<int>>;  // 1-based, size N+1

inline Square symmetrize(const MatrixElement& x) {
    if (x.g.kind == Kind::d) throw std::invalid_argument("symmetrize: type d has no symmetric model");
    int N = x.A.size();
    Square m(N + 1, std::vector<int>(N + 1, 0));
    for (auto& [p, v] : x.c) {
        auto [i, j] = p;
        if (i == j) m[i][i] = 2 * v / x.g.r();
        else m[i][j] = m[j][i] = v;
    }
    return m;
}

inline MatrixElement desymmetrize(const Square& m, GType g, const Alphabet& A) {
    int N = A.size();
    MatrixElement x(g, A);
    for (int i = 1; i <= N; ++i)
        for (int j = i; j <= N; ++j) {
            if (m[i][j] != m[j][i]) throw std::logic_error("desymmetrize: matrix is not symmetric");
            int v = m[i][j];
            if (i == j) {
                if ((v * g.r()) % 2) throw std::logic_error("desymmetrize: odd diagonal entry");
                v = v * g.r() / 2;
                if (v && !is_cell(g, A, i, i)) throw std::logic_error("desymmetrize: diagonal entry not allowed");
            }
            if (v) x.set(i, j, v);
        }
    if (!valid(x)) throw std::logic_error("desymmetrize: result violates the type constraints");
    return x;
}

// Column word of column j: one row (j even) read as a decreasing word,
// one column (j odd) read as an increasing word. Each letter remembers its row.
inline std::vector<std::pair<int, int>> column_word(const Square& m, int j, const Alphabet& A) {
    std::vector<std::pair<int, int>> w;  // (letter, row index)
    int N = A.size();
    if (A.even(j)) {
        for (int i = N; i >= 1; --i)
            for (int t = 0; t < m[i][j]; ++t) w.push_back({i, i});
    } else {
        for (int i = 1; i <= N; ++i)
            for (int t = 0; t < m[i][j]; ++t) w.push_back({i, i});
    }
    return w;
}

inline Word matrix_word(const Square& m, const Alphabet& A) {
    Word w;
    for (int j = 1; j <= A.size(); ++j)
        for (auto [a, r] : column_word(m, j, A)) w.push_back(a);
    return w;
}

// Row operator on m: acts on the letter chosen by the word rule.
inline std::optional<Square> square_op(const Square& m, int i, const Alphabet& A, bool raise) {
    std::vector<int> colOf;
    Word w;
    for (int j = 1; j <= A.size(); ++j)
        for (auto [a, r] : column_word(m, j, A)) {
            w.push_back(a);
            colOf.push_back(j);
        }
    auto p = word_op_position(w, i, A, raise);
    if (!p) return std::nullopt;
    Square n = m;
    int j = colOf[*p];
    if (raise) {
        --n[i + 1][j];
        ++n[i][j];
    } else {
        --n[i][j];
        ++n[i + 1][j];
    }
    return n;
}

inline Square transpose(const Square& m) {
    Square t = m;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) t[i][j] = m[j][i];
    return t;
}

inline std::optional<MatrixElement> bc_op(const MatrixElement& x, int i, bool raise) {
    if (x.g.kind == Kind::d) throw std::invalid_argument("bc operators need type b or c");
    check_index(i, x.A);
    auto m = symmetrize(x);
    auto m1 = square_op(m, i, x.A, raise);
    if (!m1) return std::nullopt;
    auto m2 = square_op(transpose(*m1), i, x.A, raise);
    if (!m2) return std::nullopt;
    return desymmetrize(transpose(*m2), x.g, x.A);
}

inline std::optional<MatrixElement> bc_f_i(const MatrixElement& x, int i) { return bc_op(x, i, false); }
inline std::optional<MatrixElement> bc_e_i(const MatrixElement& x, int i) { return bc_op(x, i, true); }

// ---------------------------------------------------------------------------
// Regions (type d)

enum class Region { complement, triangle, lozenge, upper };

inline Region region_of(int i, int k, int l) {
    if (k < i) return Region::complement;
    if (k >= i + 2) return Region::upper;
    if (l <= i + 1) return Region::triangle;
    return Region::lozenge;
}

inline bool supported_in_upper(const MatrixElement& x, int i) {
    for (auto& [p, v] : x.c)
        if (p.first < i) return false;
    return true;
}

struct RegionSplit {
    MatrixElement complement, triangle, lozenge, upper;
};

inline RegionSplit region_split(const MatrixElement& x, int i) {
    RegionSplit s{MatrixElement(x.g, x.A), MatrixElement(x.g, x.A), MatrixElement(x.g, x.A), MatrixElement(x.g, x.A)};
    for (auto& [p, v] : x.c) {
        switch (region_of(i, p.first, p.second)) {
        case Region::complement: s.complement.set(p.first, p.second, v); break;
        case Region::triangle: s.triangle.set(p.first, p.second, v); break;
        case Region::lozenge: s.lozenge.set(p.first, p.second, v); break;
        case Region::upper: s.upper.set(p.first, p.second, v); break;
        }
    }
    return s;
}

inline MatrixElement restrict_upper(const MatrixElement& x, int i) {
    MatrixElement y(x.g, x.A);
    for (auto& [p, v] : x.c)
        if (p.first >= i) y.set(p.first, p.second, v);
    return y;
}

// i = m
inline std::optional<MatrixElement> d_f_m(const MatrixElement& x) {
    int m = x.A.m, N = x.A.size();
    if (!supported_in_upper(x, m)) throw std::invalid_argument("d_f_m: support must lie in the triangle from m");
    int k0 = 0, k1 = 0;
    for (int k = m + 1; k <= N && !k0; ++k)
        if (x.get(m, k) == 1) k0 = k;
    for (int k = m + 1; k <= N && !k1; ++k)
        if (x.get(m + 1, k) != 0) k1 = k;
    if (!k0 || (k1 && k1 < k0)) return std::nullopt;
    MatrixElement y = x;
    y.add(m, k0, -1);
    y.add(m + 1, k0, 1);
    if (!valid(y)) throw std::logic_error("d_f_m produced an invalid element");
    return y;
}

// Inverse of d_f_m, found among the elements one step away.
inline std::optional<MatrixElement> d_e_m(const MatrixElement& x) {
    int m = x.A.m, N = x.A.size();
    if (!supported_in_upper(x, m)) throw std::invalid_argument("d_e_m: support must lie in the triangle from m");
    for (int k = m + 1; k <= N; ++k) {
        if (x.get(m + 1, k) == 0 || x.get(m, k) != 0) continue;
        MatrixElement y = x;
        y.add(m + 1, k, -1);
        y.add(m, k, 1);
        if (!valid(y)) continue;
        auto back = d_f_m(y);
        if (back && *back == x) return y;
    }
    return std::nullopt;
}

struct Triple {
    int a = 0, b = 0, c = 0;
    bool operator==(const Triple&) const = default;
};

inline std::optional<Triple> d_f_i_triangle(Triple t) {
    if (t.b % 2 == 0 && t.a >= 1) return Triple{t.a - 1, t.b + 1, t.c};
    if (t.b % 2 == 1) return Triple{t.a, t.b - 1, t.c + 1};
    return std::nullopt;
}

inline std::optional<Triple> d_e_i_triangle(Triple t) {
    if (t.b % 2 == 1) return Triple{t.a + 1, t.b - 1, t.c};
    if (t.c >= 1) return Triple{t.a, t.b + 1, t.c - 1};
    return std::nullopt;
}

inline int triangle_phi(Triple t) { return 2 * t.a + t.b % 2; }
inline int triangle_eps(Triple t) { return 2 * t.c + t.b % 2; }

// Lozenge word: for j = i+2..N, odd j gives i^a (i+1)^b, even j gives (i+1)^b i^a,
// with a = c_(i,j), b = c_(i+1,j). Each letter remembers its column j.
inline std::pair<Word, std::vector<int>> lozenge_word(const MatrixElement& x, int i) {
    Word w;
    std::vector<int> col;
    for (int j = i + 2; j <= x.A.size(); ++j) {
        int a = x.get(i, j), b = x.get(i + 1, j);
        auto put = [&](int letter, int times) {
            for (int t = 0; t < times; ++t) {
                w.push_back(letter);
                col.push_back(j);
            }
        };
        if (x.A.odd(j)) {
            put(i, a);
            put(i + 1, b);
        } else {
            put(i + 1, b);
            put(i, a);
        }
    }
    return {w, col};
}

inline std::optional<MatrixElement> d_op_on_bti(const MatrixElement& x, int i, bool raise) {
    if (x.g.kind != Kind::d) throw std::invalid_argument("d_f_i_on_bti needs type d");
    check_index(i, x.A);
    if (i == x.A.m) return raise ? d_e_m(x) : d_f_m(x);
    if (!supported_in_upper(x, i)) throw std::invalid_argument("d_f_i_on_bti: support must lie in the triangle from i");
    auto [w, col] = lozenge_word(x, i);
    auto applyLozenge = [&]() -> std::optional<MatrixElement> {
        auto p = word_op_position(w, i, x.A, raise);
        if (!p) return std::nullopt;
        MatrixElement y = x;
        int j = col[*p];
        if (raise) {
            y.add(i + 1, j, -1);
            y.add(i, j, 1);
        } else {
            y.add(i, j, -1);
            y.add(i + 1, j, 1);
        }
        return y;
    };
    if (i < x.A.m) return applyLozenge();
    Triple t{x.get(i, i), x.get(i, i + 1), x.get(i + 1, i + 1)};
    int eps2 = word_eps(w, i, x.A), phi2 = word_phi(w, i, x.A);
    Side s = raise ? tensor_e_side(i, x.A, triangle_eps(t), triangle_phi(t), eps2, phi2)
                   : tensor_f_side(i, x.A, triangle_eps(t), triangle_phi(t), eps2, phi2);
    if (s == Side::none) return std::nullopt;
    if (s == Side::right) return applyLozenge();
    auto nt = raise ? d_e_i_triangle(t) : d_f_i_triangle(t);
    if (!nt) return std::nullopt;
    MatrixElement y = x;
    y.set(i, i, nt->a);
    y.set(i, i + 1, nt->b);
    y.set(i + 1, i + 1, nt->c);
    if (!valid(y)) throw std::logic_error("triangle rule produced an invalid element");
    return y;
}

inline std::optional<MatrixElement> d_f_i_on_bti(const MatrixElement& x, int i) { return d_op_on_bti(x, i, false); }
inline std::optional<MatrixElement> d_e_i_on_bti(const MatrixElement& x, int i) { return d_op_on_bti(x, i, true); }

// ---------------------------------------------------------------------------
// Enumeration

// Every element with total multiplicity at most `budget`, in a fixed order.
template <class F>
void for_each_matrix(GType g, const Alphabet& A, int budget, F f) {
    auto cells = matrix_cells(g, A);
    MatrixElement x(g, A);
    auto rec = [&](auto& self, size_t idx, int left) -> void {
        if (idx == cells.size()) {
            f(x);
            return;
        }
        auto [i, j] = cells[idx];
        int cap = A.parity(i) != A.parity(j) ? std::min(1, left) : left;
        for (int v = 0; v <= cap; ++v) {
            x.set(i, j, v);
            self(self, idx + 1, left - v);
        }
        x.set(i, j, 0);
    };
    rec(rec, 0, budget);
}

inline std::vector<MatrixElement> enumerate_matrices(GType g, const Alphabet& A, int budget) {
    std::vector<MatrixElement> out;
    for_each_matrix(g, A, budget, [&](const MatrixElement& x) { out.push_back(x); });
    return out;
}

inline std::string to_string(const MatrixElement& x) {
    std::string s = std::string(1, x.g.name()) + "{";
    bool first = true;
    for (auto& [p, v] : x.c) {
        if (!first) s += ", ";
        first = false;
        s += "(" + std::to_string(p.first) + "," + std::to_string(p.second) + "):" + std::to_string(v);
    }
    return s + "}";
}

}  // namespace sc
