#pragma once
// kappa: RSK on symmetric matrices (types b, c) and super Burge
// insertion (type d), their inverses, and P/Q recording pairs.

#include <functional>
#include <optional>
#include <stdexcept>

#include "matrix.hpp"

namespace sc {

inline Tableau kappa_bc(const MatrixElement& x) {
    if (x.g.kind == Kind::d) throw std::invalid_argument("kappa_bc needs type b or c");
    return insertion_tableau(matrix_word(symmetrize(x), x.A), x.A);
}

inline Tableau kappa_d(const MatrixElement& x) {
    if (x.g.kind != Kind::d) throw std::invalid_argument("kappa_d needs type d");
    auto bw = to_biword(x);
    Tableau T;
    for (int k = static_cast<int>(bw.top.size()) - 1; k >= 0; --k) T = burge_insert(T, bw.top[k], bw.bottom[k], x.A);
    return T;
}

inline Tableau kappa(const MatrixElement& x) { return x.g.kind == Kind::d ? kappa_d(x) : kappa_bc(x); }

inline MatrixElement inverse_kappa_d(Tableau T, const Alphabet& A) {
    if (!T.empty() && !is_semistandard(T, A)) throw std::invalid_argument("inverse_kappa_d: input is not semistandard");
    Biword bw;
    while (!T.empty()) {
        int i = 1 << 30;
        for (auto& c : T.cols)
            for (int a : c) i = std::min(i, a);
        int k = -1;
        if (A.even(i)) {
            for (int t = 0; t < T.ncols(); ++t)
                if (T.cols[t].front() == i) k = t;
        } else {
            int best = -1;
            for (int t = 0; t < T.ncols(); ++t)
                if (T.cols[t].front() == i && T.height(t) - 1 > best) {
                    best = T.height(t) - 1;
                    k = t;
                }
        }
        if (k < 0) throw std::invalid_argument("inverse_kappa_d: smallest entry is not at a column top");
        T.cols[k].erase(T.cols[k].begin());
        if (T.cols[k].empty()) throw std::invalid_argument("inverse_kappa_d: no entry below the removed letter");
        auto [U, j] = reverse_bump_from(T, k, A);
        T = U;
        bw.top.push_back(i);
        bw.bottom.push_back(j);
    }
    return from_biword(bw, GType(Kind::d), A);
}

// Reverse RSK. Boxes are removed by recording label, smallest first; the
// recording tableau equals T since the matrix is symmetric.
inline MatrixElement inverse_kappa_bc(const Tableau& T, GType g, const Alphabet& A) {
    if (g.kind == Kind::d) throw std::invalid_argument("inverse_kappa_bc needs type b or c");
    if (!T.empty() && !is_semistandard(T, A)) throw std::invalid_argument("inverse_kappa_bc: input is not semistandard");
    int N = A.size();
    Square m(N + 1, std::vector<int>(N + 1, 0));
    std::optional<MatrixElement> found;
    // label of a cell is the entry of T there
    auto rec = [&](auto& self, const Tableau& U, int label, int last) -> bool {
        if (U.empty()) {
            try {
                auto x = desymmetrize(m, g, A);
                if (kappa_bc(x) == T) {
                    found = x;
                    return true;
                }
            } catch (const std::logic_error&) {
            }
            return false;
        }
        // smallest label still present
        int lab = 1 << 30;
        for (int k = 0; k < U.ncols(); ++k)
            for (int r = 0; r < U.height(k); ++r) lab = std::min(lab, T.at(k, r));
        if (lab != label) last = -1;
        for (int k = 0; k < U.ncols(); ++k) {
            int r = U.height(k) - 1;
            if (T.at(k, r) != lab) continue;
            if (k + 1 < U.ncols() && U.height(k + 1) >= U.height(k)) continue;
            auto [V, a] = reverse_bump_from(U, k, A);
            if (last >= 0) {
                bool ok = A.even(lab) ? a <= last : a >= last;
                if (!ok) continue;
            }
            ++m[a][lab];
            if (self(self, V, lab, a)) return true;
            --m[a][lab];
        }
        return false;
    };
    if (!rec(rec, T, 0, -1)) throw std::invalid_argument("inverse_kappa_bc: tableau is not in the image");
    return *found;
}

inline MatrixElement inverse_kappa(const Tableau& T, GType g, const Alphabet& A) {
    return g.kind == Kind::d ? inverse_kappa_d(T, A) : inverse_kappa_bc(T, g, A);
}

// P(T, c) = ((T <- b_s) ... ) <- b_1 over the biword of c; Q records the top letters.
struct PQPair {
    Tableau P;
    Grid Q;  // cell (-col, row) -> recorded letter
};

inline PQPair pq_pair(const Tableau& T, const MatrixElement& part) {
    auto bw = to_biword(part);
    PQPair pq{T, {}};
    for (int k = static_cast<int>(bw.top.size()) - 1; k >= 0; --k) {
        auto [U, rec] = column_insert(pq.P, bw.bottom[k], part.A);
        pq.P = U;
        pq.Q.set(-rec.terminal.col, rec.terminal.row, bw.top[k]);
    }
    return pq;
}

// ---------------------------------------------------------------------------
// Global operators on M^g. Index 0 is f0/e0; types b and c use the
// symmetric rule; type d transports the tableau operators through kappa.

inline std::optional<MatrixElement> transported_op(const MatrixElement& x, int i, bool raise) {
    auto T = kappa_d(x);
    auto U = tableau_op(T, i, x.A, raise);
    if (!U) return std::nullopt;
    return inverse_kappa_d(*U, x.A);
}

inline std::optional<MatrixElement> transported_f_i(const MatrixElement& x, int i) { return transported_op(x, i, false); }
inline std::optional<MatrixElement> transported_e_i(const MatrixElement& x, int i) { return transported_op(x, i, true); }

inline std::optional<MatrixElement> matrix_op(const MatrixElement& x, int i, bool raise) {
    if (i == 0) return raise ? e0(x) : f0(x);
    if (x.g.kind == Kind::d) return transported_op(x, i, raise);
    return bc_op(x, i, raise);
}

}  // namespace sc
