#pragma once
// Hook semistandard tableaux on anti-normal shapes, column insertion,
// Burge insertion, and a free-form grid for skew fillings and jeu de taquin.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphabet.hpp"

namespace sc {

using Word = std::vector<int>;

// Anti-normal tableau anchored at the bottom-right corner.
// cols[0] is the rightmost column; each column is listed top to bottom.
// Columns are bottom-aligned, so row r (counted from the bottom, 0-based)
// of column k holds cols[k][len-1-r].
struct Tableau {
    std::vector<std::vector<int>> cols;

    bool empty() const { return cols.empty(); }
    int ncols() const { return static_cast<int>(cols.size()); }
    int height(int k) const { return k < ncols() ? static_cast<int>(cols[k].size()) : 0; }
    int at(int k, int r) const { return cols[k][cols[k].size() - 1 - r]; }
    int& at(int k, int r) { return cols[k][cols[k].size() - 1 - r]; }
    bool has(int k, int r) const { return k >= 0 && k < ncols() && r >= 0 && r < height(k); }
    int boxes() const {
        int s = 0;
        for (auto& c : cols) s += static_cast<int>(c.size());
        return s;
    }
    bool operator==(const Tableau&) const = default;
    bool operator<(const Tableau& o) const { return cols < o.cols; }
};

// Cell of an anti-normal tableau: column from the right, row from the bottom.
struct Cell {
    int col = 0;
    int row = 0;
    bool operator==(const Cell&) const = default;
};

// delta with delta_1 = length of the bottom row
inline Partition shape(const Tableau& T) {
    Partition colLens;
    for (auto& c : T.cols) colLens.push_back(static_cast<int>(c.size()));
    return conjugate(colLens);
}

inline std::vector<std::vector<int>> rows_bottom_first(const Tableau& T) {
    std::vector<std::vector<int>> rows;
    int h = T.height(0);
    for (int r = 0; r < h; ++r) {
        std::vector<int> row;
        for (int k = T.ncols() - 1; k >= 0; --k)
            if (T.height(k) > r) row.push_back(T.at(k, r));
        rows.push_back(row);
    }
    return rows;
}

// rows listed bottom first, each left to right, right-aligned
inline Tableau from_rows_bottom_first(const std::vector<std::vector<int>>& rows) {
    Tableau T;
    for (size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (r && row.size() > rows[r - 1].size()) throw std::invalid_argument("rows do not form an anti-normal shape");
        if (r == 0) T.cols.assign(row.size(), {});
        for (size_t j = 0; j < row.size(); ++j) {
            int k = static_cast<int>(row.size() - 1 - j);
            T.cols[k].insert(T.cols[k].begin(), row[j]);
        }
    }
    return T;
}

// rows listed top first, right-aligned
inline Tableau from_rows_top_first(std::vector<std::vector<int>> rows) {
    std::reverse(rows.begin(), rows.end());
    return from_rows_bottom_first(rows);
}

inline Word word(const Tableau& T) {
    Word w;
    for (auto& c : T.cols) w.insert(w.end(), c.begin(), c.end());
    return w;
}

inline std::vector<int> letters(const Tableau& T) { return word(T); }

inline bool column_ok(const std::vector<int>& col, const Alphabet& A) {
    for (size_t t = 1; t < col.size(); ++t) {
        if (col[t - 1] > col[t]) return false;
        if (col[t - 1] == col[t] && A.even(col[t])) return false;
    }
    return true;
}

inline bool row_pair_ok(int left, int right, const Alphabet& A) {
    if (left > right) return false;
    if (left == right && A.odd(left)) return false;
    return true;
}

inline bool is_semistandard(const Tableau& T, const Alphabet& A) {
    for (int k = 0; k < T.ncols(); ++k) {
        if (T.cols[k].empty()) return false;
        if (k && T.height(k) > T.height(k - 1)) return false;
        for (int a : T.cols[k])
            if (!A.contains(a)) return false;
        if (!column_ok(T.cols[k], A)) return false;
    }
    for (int k = 1; k < T.ncols(); ++k)
        for (int r = 0; r < T.height(k); ++r)
            if (!row_pair_ok(T.at(k, r), T.at(k - 1, r), A)) return false;
    return true;
}

struct BumpingRecord {
    std::vector<Cell> route;  // one box per visited column, columns increasing
    Cell terminal;
};

// Column insertion into an anti-normal tableau. The letter enters the
// rightmost column; in each column it replaces the bottommost entry y with
// y <= x (x even) or y < x (x odd), and y moves one column to the left.
// When nothing is replaced the letter is put on top of the column.
inline std::pair<Tableau, BumpingRecord> column_insert(Tableau T, int x, const Alphabet& A) {
    BumpingRecord rec;
    int k = 0;
    while (true) {
        if (k == T.ncols()) T.cols.push_back({});
        auto& col = T.cols[k];
        int pos = -1;
        for (int t = static_cast<int>(col.size()) - 1; t >= 0; --t) {
            bool hit = A.even(x) ? col[t] <= x : col[t] < x;
            if (hit) { pos = t; break; }
        }
        if (pos < 0) {
            col.insert(col.begin(), x);
            Cell c{k, static_cast<int>(col.size()) - 1};
            rec.route.push_back(c);
            rec.terminal = c;
            if (k > 0 && T.height(k) > T.height(k - 1))
                throw std::logic_error("column_insert: shape left the anti-normal family");
            return {T, rec};
        }
        rec.route.push_back(Cell{k, static_cast<int>(col.size()) - 1 - pos});
        std::swap(col[pos], x);
        ++k;
    }
}

inline Tableau insert_word(Tableau T, const Word& w, const Alphabet& A) {
    for (int x : w) T = column_insert(std::move(T), x, A).first;
    return T;
}

// ((w_l <- w_{l-1}) ...) <- w_1
inline Tableau insertion_tableau(const Word& w, const Alphabet& A) {
    Tableau T;
    for (auto it = w.rbegin(); it != w.rend(); ++it) T = column_insert(std::move(T), *it, A).first;
    return T;
}

// Burge insertion: insert j, then place i directly above the terminal box.
inline std::pair<Tableau, BumpingRecord> burge_insert_rec(const Tableau& T, int i, int j, const Alphabet& A) {
    auto [U, rec] = column_insert(T, j, A);
    int k = rec.terminal.col;
    U.cols[k].insert(U.cols[k].begin(), i);
    if (k > 0 && U.height(k) > U.height(k - 1))
        throw std::logic_error("burge_insert: shape left the anti-normal family");
    if (!column_ok(U.cols[k], A)) throw std::logic_error("burge_insert: added letter breaks the column");
    int r = U.height(k) - 1;
    if (U.has(k + 1, r) && !row_pair_ok(U.at(k + 1, r), i, A)) throw std::logic_error("burge_insert: added letter breaks a row");
    if (U.has(k - 1, r) && !row_pair_ok(i, U.at(k - 1, r), A)) throw std::logic_error("burge_insert: added letter breaks a row");
    return {U, rec};
}

inline Tableau burge_insert(const Tableau& T, int i, int j, const Alphabet& A) {
    return burge_insert_rec(T, i, j, A).first;
}

// Reverse of column insertion. The letter y sits at the top of column k
// (it is removed there); it travels right and the letter leaving column 0
// is returned.
inline std::pair<Tableau, int> reverse_bump_from(Tableau T, int k, const Alphabet& A) {
    if (k >= T.ncols() || T.cols[k].empty()) throw std::logic_error("reverse_bump_from: empty column");
    if (k + 1 < T.ncols() && T.height(k + 1) >= T.height(k))
        throw std::logic_error("reverse_bump_from: not a removable corner");
    int y = T.cols[k].front();
    T.cols[k].erase(T.cols[k].begin());
    if (T.cols[k].empty()) T.cols.erase(T.cols.begin() + k);
    for (int c = k - 1; c >= 0; --c) {
        auto& col = T.cols[c];
        int pos = -1;
        for (int t = 0; t < static_cast<int>(col.size()); ++t) {
            bool hit = A.even(col[t]) ? col[t] >= y : col[t] > y;
            if (hit) { pos = t; break; }
        }
        if (pos < 0) throw std::logic_error("reverse_bump_from: no entry to displace");
        std::swap(col[pos], y);
    }
    return {T, y};
}

inline Tableau restrict_geq(const Tableau& T, int k) {
    Tableau U;
    for (auto& c : T.cols) {
        std::vector<int> d;
        for (int a : c)
            if (a >= k) d.push_back(a);
        if (!d.empty()) U.cols.push_back(d);
    }
    return U;
}

// ---------------------------------------------------------------------------
// Free-form fillings of the plane. x grows to the right, y grows upward.

struct Grid {
    std::map<std::pair<int, int>, int> cells;  // (x, y) -> letter

    bool has(int x, int y) const { return cells.count({x, y}) != 0; }
    int at(int x, int y) const { return cells.at({x, y}); }
    void set(int x, int y, int a) { cells[{x, y}] = a; }
    void erase(int x, int y) { cells.erase({x, y}); }
    bool empty() const { return cells.empty(); }
    int size() const { return static_cast<int>(cells.size()); }
    bool operator==(const Grid&) const = default;

    int min_x() const { int v = 1 << 30; for (auto& [p, a] : cells) v = std::min(v, p.first); return v; }
    int max_x() const { int v = -(1 << 30); for (auto& [p, a] : cells) v = std::max(v, p.first); return v; }
    int min_y() const { int v = 1 << 30; for (auto& [p, a] : cells) v = std::min(v, p.second); return v; }
    int max_y() const { int v = -(1 << 30); for (auto& [p, a] : cells) v = std::max(v, p.second); return v; }

    // entries of column x listed top to bottom
    std::vector<int> column(int x) const {
        std::vector<std::pair<int, int>> v;
        for (auto& [p, a] : cells)
            if (p.first == x) v.push_back({-p.second, a});
        std::sort(v.begin(), v.end());
        std::vector<int> out;
        for (auto& [y, a] : v) out.push_back(a);
        return out;
    }
};

inline Word word(const Grid& G) {
    Word w;
    if (G.empty()) return w;
    for (int x = G.max_x(); x >= G.min_x(); --x) {
        auto c = G.column(x);
        w.insert(w.end(), c.begin(), c.end());
    }
    return w;
}

// Adjacent cells obey the hook semistandard rules.
inline bool is_semistandard(const Grid& G, const Alphabet& A) {
    for (auto& [p, a] : G.cells) {
        auto [x, y] = p;
        if (!A.contains(a)) return false;
        if (G.has(x + 1, y) && !row_pair_ok(a, G.at(x + 1, y), A)) return false;
        if (G.has(x, y - 1)) {
            int b = G.at(x, y - 1);
            if (a > b || (a == b && A.even(a))) return false;
        }
    }
    return true;
}

// Anti-normal tableau placed with its bottom-right cell at (x0, y0).
inline Grid to_grid(const Tableau& T, int x0 = 0, int y0 = 0) {
    Grid G;
    for (int k = 0; k < T.ncols(); ++k)
        for (int r = 0; r < T.height(k); ++r) G.set(x0 - k, y0 + r, T.at(k, r));
    return G;
}

// Reads an anti-normal tableau back from a grid (columns must be bottom-aligned).
inline Tableau from_grid_antinormal(const Grid& G) {
    Tableau T;
    if (G.empty()) return T;
    int y0 = G.min_y();
    for (int x = G.max_x(); x >= G.min_x(); --x) {
        auto c = G.column(x);
        if (c.empty()) throw std::logic_error("from_grid_antinormal: gap in columns");
        for (int y = y0; y < y0 + static_cast<int>(c.size()); ++y)
            if (!G.has(x, y)) throw std::logic_error("from_grid_antinormal: columns not bottom-aligned");
        T.cols.push_back(c);
    }
    return T;
}

// Normal (English) tableau given by rows listed top first, left-aligned.
using NormalTableau = std::vector<std::vector<int>>;

inline Grid to_grid(const NormalTableau& N, int x0 = 0, int ytop = 0) {
    Grid G;
    for (size_t i = 0; i < N.size(); ++i)
        for (size_t j = 0; j < N[i].size(); ++j) G.set(x0 + static_cast<int>(j), ytop - static_cast<int>(i), N[i][j]);
    return G;
}

inline NormalTableau normal_from_grid(const Grid& G) {
    NormalTableau N;
    if (G.empty()) return N;
    int x0 = G.min_x();
    for (int y = G.max_y(); y >= G.min_y(); --y) {
        std::vector<int> row;
        for (int x = x0; G.has(x, y); ++x) row.push_back(G.at(x, y));
        N.push_back(row);
    }
    while (!N.empty() && N.back().empty()) N.pop_back();
    return N;
}

inline Word word(const NormalTableau& N) { return word(to_grid(N)); }

inline bool is_normal_shape(const NormalTableau& N) {
    for (size_t i = 1; i < N.size(); ++i)
        if (N[i].size() > N[i - 1].size() || N[i].empty()) return false;
    return true;
}

// One forward slide: the hole is filled from the right or from below until
// it has no neighbour. Returns the final position of the hole.
inline std::pair<int, int> jdt_slide(Grid& G, int x, int y, const Alphabet& A) {
    if (G.has(x, y)) throw std::invalid_argument("jdt_slide: position is occupied");
    if (!G.has(x + 1, y) && !G.has(x, y - 1)) throw std::invalid_argument("jdt_slide: hole has no neighbour");
    while (true) {
        bool r = G.has(x + 1, y), d = G.has(x, y - 1);
        if (!r && !d) return {x, y};
        bool horizontal;
        if (r && d) {
            int b = G.at(x + 1, y), c = G.at(x, y - 1);
            horizontal = b < c || (b == c && A.odd(b));
        } else {
            horizontal = r;
        }
        if (horizontal) {
            G.set(x, y, G.at(x + 1, y));
            G.erase(x + 1, y);
            ++x;
        } else {
            G.set(x, y, G.at(x, y - 1));
            G.erase(x, y - 1);
            --y;
        }
    }
}

// Rectifies a skew filling to a normal shape whose top-left cell is (x0, ytop).
// Rows must start weakly to the left going down (a skew shape).
inline Grid rectify(Grid G, int x0, int ytop, const Alphabet& A) {
    while (true) {
        int best = 1 << 30, bestStart = 0;
        for (int y = ytop; y >= G.min_y() && !G.empty(); --y) {
            int start = 1 << 30;
            for (auto& [p, a] : G.cells)
                if (p.second == y) start = std::min(start, p.first);
            if (start == (1 << 30)) continue;
            if (start > x0) { best = y; bestStart = start; }
        }
        if (best == (1 << 30)) break;
        jdt_slide(G, bestStart - 1, best, A);
    }
    // close up empty rows at the top
    return G;
}

inline std::string to_string(const Tableau& T) {
    std::ostringstream os;
    auto rows = rows_bottom_first(T);
    int w = T.ncols();
    for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
        for (int j = 0; j < w - static_cast<int>(rows[r].size()); ++j) os << " .";
        for (int a : rows[r]) os << ' ' << a;
        os << '\n';
    }
    return os.str();
}

inline std::string to_string(const Grid& G) {
    std::ostringstream os;
    if (G.empty()) return "(empty)\n";
    for (int y = G.max_y(); y >= G.min_y(); --y) {
        os << (y == 0 ? "L" : " ");
        for (int x = G.min_x(); x <= G.max_x(); ++x) {
            if (G.has(x, y)) os << ' ' << G.at(x, y);
            else os << " .";
        }
        os << '\n';
    }
    return os.str();
}

// S / T when T is a subtableau of S (both anti-normal, bottom-right anchored).
inline std::optional<Grid> subtableau_diff(const Tableau& S, const Tableau& T) {
    if (T.ncols() > S.ncols()) return std::nullopt;
    Grid D;
    for (int k = 0; k < S.ncols(); ++k) {
        if (T.height(k) > S.height(k)) return std::nullopt;
        for (int r = 0; r < S.height(k); ++r) {
            if (r < T.height(k)) {
                if (T.at(k, r) != S.at(k, r)) return std::nullopt;
            } else {
                D.set(-k, r, S.at(k, r));
            }
        }
    }
    return D;
}

enum class RouteRelation { strictly_below, weakly_below, strictly_above, incomparable };

inline const char* to_string(RouteRelation r) {
    switch (r) {
    case RouteRelation::strictly_below: return "strictly_below";
    case RouteRelation::weakly_below: return "weakly_below";
    case RouteRelation::strictly_above: return "strictly_above";
    case RouteRelation::incomparable: return "incomparable";
    }
    return "?";
}

// Position of r2 relative to r1. "Below" tests every column of r1;
// "above" tests every column of r2.
inline RouteRelation route_compare(const BumpingRecord& r1, const BumpingRecord& r2) {
    auto rowIn = [](const BumpingRecord& r, int col) -> std::optional<int> {
        for (auto& c : r.route)
            if (c.col == col) return c.row;
        return std::nullopt;
    };
    bool strict = true, weak = true;
    for (auto& c : r1.route) {
        auto h = rowIn(r2, c.col);
        if (!h) { strict = weak = false; break; }
        if (*h >= c.row) strict = false;
        if (*h > c.row) weak = false;
    }
    if (strict) return RouteRelation::strictly_below;
    if (weak) return RouteRelation::weakly_below;
    bool above = true;
    for (auto& c : r2.route) {
        auto h = rowIn(r1, c.col);
        if (!h || c.row <= *h) { above = false; break; }
    }
    return above ? RouteRelation::strictly_above : RouteRelation::incomparable;
}

// Every anti-normal hook semistandard tableau with exactly `boxes` cells.
inline std::vector<Tableau> all_tableaux(int boxes, const Alphabet& A) {
    std::vector<Tableau> out;
    for (auto& delta : partitions_of(boxes)) {
        if (!hook_check(delta, A)) continue;
        auto colLens = conjugate(delta);
        // fill cells one at a time in the order: column 0 bottom-up, then column 1, ...
        std::vector<Cell> order;
        for (int k = 0; k < static_cast<int>(colLens.size()); ++k)
            for (int r = 0; r < colLens[k]; ++r) order.push_back({k, r});
        Tableau T;
        for (int len : colLens) T.cols.push_back(std::vector<int>(len, 0));
        auto rec = [&](auto& self, size_t idx) -> void {
            if (idx == order.size()) { out.push_back(T); return; }
            auto [k, r] = order[idx];
            for (int a = 1; a <= A.size(); ++a) {
                // cell below (r-1) must be > a, or equal when a is odd
                if (r > 0) {
                    int below = T.at(k, r - 1);
                    if (a > below || (a == below && A.even(a))) continue;
                }
                if (k > 0) {
                    int right = T.at(k - 1, r);
                    if (!row_pair_ok(a, right, A)) continue;
                }
                T.at(k, r) = a;
                self(self, idx + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

}  // namespace sc
