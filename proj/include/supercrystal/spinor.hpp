#pragma once
// Spinor-model tuples (T_l, ..., T_1) of two-column tableaux placed
// against a horizontal line L, the separation into body and tail, and the
// embedding into M^g x SST(lambda).

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "correspondence.hpp"

namespace sc {

// A column of consecutive cells; rows grow upward, row 0 is the first row above L.
struct Piece {
    int bottom = 0;
    std::vector<int> e;  // top to bottom
    int top() const { return bottom + static_cast<int>(e.size()) - 1; }
    bool empty() const { return e.empty(); }
    int at_row(int r) const { return e[top() - r]; }
    bool has_row(int r) const { return !e.empty() && r >= bottom && r <= top(); }
    bool operator==(const Piece&) const = default;
};

// Shape lambda(a,b,c) = (2^{b+c}, 1^a)/(1^b): the right column spans rows
// 0..b+c-1, the left column spans rows -a..c-1.
struct SpinorColumn {
    int a = 0, b = 0, c = 0;
    std::vector<int> left, right;  // top to bottom

    Piece left_piece() const { return {-a, left}; }
    Piece right_piece() const { return {0, right}; }
    bool operator==(const SpinorColumn&) const = default;
};

inline bool pieces_ok(const Piece& L, const Piece& R, const Alphabet& A) {
    if (!column_ok(L.e, A) || !column_ok(R.e, A)) return false;
    for (int a : L.e)
        if (!A.contains(a)) return false;
    for (int a : R.e)
        if (!A.contains(a)) return false;
    if (L.empty() || R.empty()) return true;
    for (int r = std::max(L.bottom, R.bottom); r <= std::min(L.top(), R.top()); ++r)
        if (!row_pair_ok(L.at_row(r), R.at_row(r), A)) return false;
    return true;
}

inline bool column_valid(const SpinorColumn& T, const Alphabet& A) {
    if (T.a < 0 || T.b < 0 || T.c < 0) return false;
    if (static_cast<int>(T.left.size()) != T.a + T.c || static_cast<int>(T.right.size()) != T.b + T.c) return false;
    return pieces_ok(T.left_piece(), T.right_piece(), A);
}

struct SpinorTuple {
    GType g;
    Alphabet A;
    Partition lambda;
    int ell = 0;
    std::vector<SpinorColumn> columns;  // T_l first, T_1 last
};

// Required a-parameters, listed for T_l first. Unsupported cases return a reason.
struct ShapeParams {
    std::vector<int> a;
    std::string reason;
    bool ok() const { return reason.empty(); }
};

inline ShapeParams expected_params(GType g, const Partition& lambda, int ell) {
    ShapeParams p;
    int l1 = part(lambda, 0), l2 = part(lambda, 1);
    auto conj = conjugate(lambda);
    std::vector<int> a;  // listed for T_l first
    switch (g.kind) {
    case Kind::c:
        if (ell - l1 < 0) return {{}, "(lambda, ell) is not in the admissible family for type c"};
        // T_{l+1-k} has a = lambda'_k
        for (int k = 1; k <= ell; ++k) a.push_back(part(conj, k - 1));
        p.a = a;
        return p;
    case Kind::b:
        if (ell - 2 * l1 < 0) return {{}, "(lambda, ell) is not in the admissible family for type b"};
        if (ell % 2) return {{}, "type b with odd level needs a spinor column, which is not modelled"};
        for (int k = 1; k <= ell / 2; ++k) a.push_back(part(conj, k - 1));
        p.a = a;
        return p;
    case Kind::d: {
        if (ell - l1 - l2 < 0) return {{}, "(lambda, ell) is not in the admissible family for type d"};
        if (ell - 2 * l1 < 0) return {{}, "type d with ell < 2 lambda_1 uses the second spinor family, which is not modelled"};
        int q = (ell - 2 * l1) / 2, r = (ell - 2 * l1) % 2;
        if (r) return {{}, "type d with odd ell - 2 lambda_1 needs a spinor column, which is not modelled"};
        // T_{M+1-k} has a = mu_k with mu = lambda', then q columns with a = 0
        for (int k = 1; k <= l1; ++k) a.push_back(part(conj, k - 1));
        for (int t = 0; t < q; ++t) a.push_back(0);
        p.a = a;
        return p;
    }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Two-column exchange

// Sub-multisets of `pool` of the given size that form a column.
inline void column_subsets(const std::vector<int>& counts, int size, const Alphabet& A,
                           const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> pick(counts.size(), 0);
    auto rec = [&](auto& self, size_t a, int left) -> void {
        if (a == counts.size()) {
            if (left == 0) f(pick);
            return;
        }
        int cap = std::min(counts[a], left);
        if (a > 0 && A.even(static_cast<int>(a))) cap = std::min(cap, 1);
        for (int k = cap; k >= 0; --k) {
            pick[a] = k;
            self(self, a + 1, left - k);
        }
        pick[a] = 0;
    };
    rec(rec, 1, size);
}

inline std::vector<int> column_from_counts(const std::vector<int>& counts) {
    std::vector<int> col;
    for (size_t a = 1; a < counts.size(); ++a)
        for (int t = 0; t < counts[a]; ++t) col.push_back(static_cast<int>(a));
    return col;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct ExchangeResult {
    Piece left, right;
    int solutions = 0;
};

// C at x, C' at x+1. The new left column D spans rows
// [bottom(C') .. min(top C, top C')], the new right column D' spans
// [bottom(C) .. max(top C, top C')]. The filling is the semistandard
// split with the same insertion tableau as the original pair.
// With check_rows false the two new columns need not be row-semistandard
// against each other.
inline std::optional<ExchangeResult> exchange(const Piece& C, const Piece& Cp, const Alphabet& A, bool check_rows = true) {
    int bD = Cp.bottom, tD = std::min(C.top(), Cp.top());
    int bE = C.bottom, tE = std::max(C.top(), Cp.top());
    int p = std::max(0, tD - bD + 1), q = std::max(0, tE - bE + 1);
    if (p + q != static_cast<int>(C.e.size() + Cp.e.size())) return std::nullopt;
    std::vector<int> counts(A.size() + 1, 0);
    for (int a : C.e) ++counts[a];
    for (int a : Cp.e) ++counts[a];
    auto target = insertion_tableau(concat(Cp.e, C.e), A);
    ExchangeResult res;
    column_subsets(counts, p, A, [&](const std::vector<int>& pick) {
        std::vector<int> rest(counts.size());
        for (size_t a = 0; a < counts.size(); ++a) rest[a] = counts[a] - pick[a];
        Piece D{bD, column_from_counts(pick)}, E{bE, column_from_counts(rest)};
        if (!column_ok(E.e, A)) return;
        if (!column_ok(D.e, A)) return;
        if (check_rows && !pieces_ok(D, E, A)) return;
        if (insertion_tableau(concat(E.e, D.e), A) != target) return;
        if (res.solutions == 0) {
            res.left = D;
            res.right = E;
        }
        ++res.solutions;
    });
    if (res.solutions == 0) return std::nullopt;
    return res;
}

// The equivalent filling of T with the left column shortened to rows 0..c-1.
// Rows of the two new columns are not compared (a row (4,4) with 4 odd
// occurs in the worked type c check). Only used for b = 0.
inline std::pair<Piece, Piece> tilde(const SpinorColumn& T, const Alphabet& A) {
    if (T.a == 0) return {T.left_piece(), T.right_piece()};
    auto r = exchange(T.left_piece(), T.right_piece(), A, false);
    if (!r || r->solutions != 1) throw std::logic_error("tilde: no unique exchanged filling");
    return {r->left, r->right};
}

using Admissibility = std::function<bool(const SpinorColumn& Tp, const SpinorColumn& T, const Alphabet& A)>;

// L next to R is a skew shape: R starts and ends weakly higher than L.
// An empty piece still has a position (its top is bottom - 1).
inline bool skew_pair_ok(const Piece& L, const Piece& R, const Alphabet& A) {
    if (!pieces_ok(L, R, A)) return false;
    return R.top() >= L.top() && R.bottom >= L.bottom;
}

// T' < T: the pairs (right of tilde T', left of T) and (right of T',
// left of tilde T) are skew semistandard tableaux. Columns with b > 0 are
// accepted on shape alone.
inline bool default_admissible(const SpinorColumn& Tp, const SpinorColumn& T, const Alphabet& A) {
    if (Tp.b > 0 || T.b > 0) return true;
    auto [tpL, tpR] = tilde(Tp, A);
    auto [tL, tR] = tilde(T, A);
    (void)tpL;
    (void)tR;
    return skew_pair_ok(tpR, T.left_piece(), A) && skew_pair_ok(Tp.right_piece(), tL, A);
}

struct CheckResult {
    bool ok = true;
    std::string reason;
};

inline CheckResult tuple_check_detail(const SpinorTuple& t, const Admissibility& adm = default_admissible) {
    if (!is_partition(t.lambda) && !t.lambda.empty()) return {false, "lambda is not a partition"};
    if (!hook_check(t.lambda, t.A)) return {false, "lambda is not an (m|n)-hook partition"};
    auto p = expected_params(t.g, t.lambda, t.ell);
    if (!p.ok()) return {false, p.reason};
    if (p.a.size() != t.columns.size()) return {false, "wrong number of columns"};
    for (size_t k = 0; k < t.columns.size(); ++k) {
        auto& T = t.columns[k];
        if (T.a != p.a[k]) return {false, "column " + std::to_string(k) + " has the wrong a-parameter"};
        if (t.g.kind == Kind::c && T.b != 0) return {false, "type c columns need b = 0"};
        if (!column_valid(T, t.A)) return {false, "column " + std::to_string(k) + " is not semistandard"};
    }
    for (size_t k = 0; k + 1 < t.columns.size(); ++k)
        if (!adm(t.columns[k], t.columns[k + 1], t.A)) return {false, "columns " + std::to_string(k) + " and " + std::to_string(k + 1) + " are not admissible"};
    return {};
}

inline bool tuple_check(const SpinorTuple& t, const Admissibility& adm = default_admissible) { return tuple_check_detail(t, adm).ok; }

// ---------------------------------------------------------------------------
// Layout and separation

inline std::vector<Piece> layout(const SpinorTuple& t) {
    std::vector<Piece> ps;
    for (auto& T : t.columns) {
        ps.push_back(T.left_piece());
        ps.push_back(T.right_piece());
    }
    return ps;
}

inline Grid to_grid(const std::vector<Piece>& ps) {
    Grid G;
    for (size_t x = 0; x < ps.size(); ++x)
        for (int r = ps[x].bottom; !ps[x].empty() && r <= ps[x].top(); ++r) G.set(static_cast<int>(x), r, ps[x].at_row(r));
    return G;
}

inline Word word(const SpinorTuple& t) { return word(to_grid(layout(t))); }

// Every normal tableau of the given shape with the given content.
inline void fill_normal(const Partition& shape, std::vector<int> content, const Alphabet& A,
                        const std::function<bool(const NormalTableau&)>& f) {
    NormalTableau N;
    for (int r : shape) N.push_back(std::vector<int>(r, 0));
    std::vector<std::pair<int, int>> cells;
    for (size_t i = 0; i < N.size(); ++i)
        for (size_t j = 0; j < N[i].size(); ++j) cells.push_back({static_cast<int>(i), static_cast<int>(j)});
    bool stop = false;
    auto rec = [&](auto& self, size_t idx) -> void {
        if (stop) return;
        if (idx == cells.size()) {
            if (!f(N)) stop = true;
            return;
        }
        auto [i, j] = cells[idx];
        for (int a = 1; a <= A.size(); ++a) {
            if (!content[a]) continue;
            if (j > 0 && !row_pair_ok(N[i][j - 1], a, A)) continue;
            if (i > 0) {
                int up = N[i - 1][j];
                if (up > a || (up == a && A.even(a))) continue;
            }
            N[i][j] = a;
            --content[a];
            self(self, idx + 1);
            ++content[a];
            if (stop) return;
        }
    };
    rec(rec, 0);
}

struct BodyTail {
    Tableau body;
    NormalTableau tail;
    Grid separated;          // configuration after the column exchanges
    bool tail_by_search = false;  // true when the tail was fixed by the equivalence condition
};

inline std::vector<Piece> exchange_phase(std::vector<Piece> ps, const Alphabet& A) {
    auto compact = [](std::vector<Piece>& v) {
        v.erase(std::remove_if(v.begin(), v.end(), [](const Piece& p) { return p.empty(); }), v.end());
    };
    compact(ps);
    size_t guard = 0, limit = 1;
    for (auto& p : ps) limit += p.e.size();
    limit *= ps.size() + 1;
    while (true) {
        bool moved = false;
        for (size_t x = 0; x + 1 < ps.size() && !moved; ++x) {
            const Piece &C = ps[x], &Cp = ps[x + 1];
            if (!(Cp.bottom < C.bottom && Cp.bottom < 0)) continue;
            if (C.bottom > Cp.top()) continue;  // the two columns do not touch
            auto r = exchange(C, Cp, A);
            if (!r) continue;
            if (r->solutions != 1) throw std::logic_error("separate: exchange is not unique");
            ps[x] = r->left;
            ps[x + 1] = r->right;
            compact(ps);
            moved = true;
        }
        if (!moved) break;
        if (++guard > limit) throw std::logic_error("separate: exchange phase does not terminate");
    }
    return ps;
}

inline BodyTail separate(const SpinorTuple& t) {
    const Alphabet& A = t.A;
    auto ps = exchange_phase(layout(t), A);
    BodyTail bt;
    bt.separated = to_grid(ps);
    Word full = word(t);
    auto target = insertion_tableau(full, A);

    Grid above, below;
    for (auto& [p, a] : bt.separated.cells) (p.second >= 0 ? above : below).set(p.first, p.second, a);
    bt.body = insertion_tableau(word(above), A);

    // tail read off directly when the part below L is already a normal tableau
    NormalTableau direct;
    {
        std::vector<std::vector<int>> cols;
        if (!below.empty())
            for (int x = below.min_x(); x <= below.max_x(); ++x) {
                auto c = below.column(x);
                if (!c.empty()) cols.push_back(c);
            }
        bool ok = true;
        for (size_t k = 0; k < cols.size() && ok; ++k)
            if (k && cols[k].size() > cols[k - 1].size()) ok = false;
        for (int x = below.empty() ? 0 : below.min_x(); !below.empty() && x <= below.max_x() && ok; ++x) {
            auto c = below.column(x);
            for (int r = 0; r < static_cast<int>(c.size()); ++r)
                if (!below.has(x, -1 - r)) ok = false;
        }
        if (ok && !cols.empty()) {
            direct.assign(cols.front().size(), {});
            for (auto& c : cols)
                for (size_t r = 0; r < c.size(); ++r) direct[r].push_back(c[r]);
        }
        Partition sh;
        for (auto& r : direct) sh.push_back(static_cast<int>(r.size()));
        bool good = ok && is_semistandard(to_grid(direct), A) && sh == t.lambda;
        Word bw = concat(word(bt.body), word(direct));
        if (good && insertion_tableau(bw, A) == target && parity_family_check(shape(bt.body), t.g)) {
            bt.tail = direct;
            return bt;
        }
    }

    // otherwise the tail is the unique normal tableau of shape lambda
    // completing the body to an equivalent word
    std::vector<int> content(A.size() + 1, 0);
    for (int a : full) ++content[a];
    for (int a : word(bt.body)) --content[a];
    for (int v : content)
        if (v < 0) throw std::logic_error("separate: body content exceeds the tuple");
    int found = 0;
    Word bodyWord = word(bt.body);
    fill_normal(t.lambda, content, A, [&](const NormalTableau& N) {
        if (insertion_tableau(concat(bodyWord, word(N)), A) == target) {
            if (!found) bt.tail = N;
            ++found;
        }
        return found < 2;
    });
    if (found != 1) throw std::logic_error("separate: tail is not determined uniquely (" + std::to_string(found) + " candidates)");
    if (!parity_family_check(shape(bt.body), t.g)) throw std::logic_error("separate: body shape is outside the parity family");
    bt.tail_by_search = true;
    return bt;
}

struct Embedding {
    MatrixElement matrix;
    NormalTableau tail;
    Weight weight;  // weight of the tuple shifted by -ell Lambda_0
};

inline Weight tuple_weight(const SpinorTuple& t) { return letters_weight(word(t), t.A); }

inline Embedding embed(const SpinorTuple& t) {
    auto bt = separate(t);
    Embedding e{inverse_kappa(bt.body, t.g, t.A), bt.tail, tuple_weight(t)};
    e.weight.level -= t.ell;
    return e;
}

}  // namespace sc
