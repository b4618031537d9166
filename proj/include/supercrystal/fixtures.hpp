#pragma once
// Worked examples used as exact regression data.

#include <string>
#include <vector>

#include "array.hpp"
#include "spinor.hpp"

namespace sc::fixtures {

inline MatrixElement biword_d(int m, int n, std::vector<int> top, std::vector<int> bottom) {
    return from_biword({std::move(top), std::move(bottom)}, GType(Kind::d), Alphabet(m, n));
}

// d_{4|4}
inline MatrixElement ex53() { return biword_d(4, 4, {2, 3, 3, 3, 4, 5}, {8, 4, 4, 4, 6, 7}); }
inline Tableau ex53_tab() { return from_rows_top_first({{3}, {4}, {2, 3, 3, 4, 6}, {4, 4, 5, 7, 8}}); }
inline MatrixElement ex56() { return biword_d(4, 4, {1, 2, 3, 3, 3, 4, 5}, {2, 8, 4, 4, 4, 6, 7}); }
inline Tableau ex56_tab() { return from_rows_top_first({{1}, {2}, {3}, {4}, {2, 3, 3, 4, 6}, {4, 4, 5, 7, 8}}); }

// c_{2|5}
inline MatrixElement ex54() {
    MatrixElement x(GType(Kind::c), Alphabet(2, 5));
    x.set(1, 2, 2);
    for (auto [i, j] : std::vector<CellIJ>{{2, 3}, {2, 4}, {2, 7}, {3, 4}, {3, 6}, {4, 5}}) x.set(i, j, 1);
    return x;
}
inline Tableau ex54_tab() { return from_rows_top_first({{2, 2}, {1, 1, 3, 4}, {2, 2, 3, 4}, {2, 3, 4, 5, 6, 7}}); }
inline Tableau ex54_f0_tab() { return from_rows_top_first({{2, 2}, {1, 1, 3, 4}, {1, 1, 2, 2, 3, 4}, {2, 3, 4, 5, 6, 7}}); }

// d_{2|4}, i = 1
inline MatrixElement ex61() {
    return biword_d(2, 4, {1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 5}, {6, 5, 4, 2, 2, 6, 4, 3, 4, 5, 6, 6, 4, 6, 5});
}
inline std::vector<Tableau> ex61_chain() {
    return {
        from_rows_top_first({{1, 1, 2}, {2, 2, 4}}),
        from_rows_top_first({{2}, {4}, {1, 1, 1, 1, 3, 4}, {2, 2, 2, 3, 4, 6}}),
        from_rows_top_first({{2}, {4}, {1, 3, 4}, {3, 4, 6}, {1, 1, 1, 3, 5, 6}, {2, 2, 2, 4, 5, 6}}),
        from_rows_top_first({{2}, {4}, {1, 3, 4}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}, {1, 1, 1, 1, 3, 4, 5, 6}, {2, 2, 2, 2, 3, 4, 5, 6}}),
    };
}
inline Tableau d24_1() { return from_rows_top_first({{3}, {4}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}}); }

// d_{2|4}, i = 3
inline MatrixElement ex62() { return biword_d(2, 4, {3, 3, 3, 3, 4, 4, 5}, {4, 5, 6, 6, 4, 6, 5}); }
inline TwoRowedArray array_of(std::vector<std::tuple<int, int, int>> cols) {
    TwoRowedArray X;
    for (auto [k, x, y] : cols) {
        X.setX(k, x);
        X.setY(k, y);
    }
    return X;
}
inline TwoRowedArray ex62_T() { return array_of({{3, 0, 0}, {2, 1, 1}, {1, 2, 0}, {0, 1, 3}, {-1, 0, 0}}); }
inline TwoRowedArray ex62_F() { return array_of({{4, 0, 0}, {3, 3, 1}, {2, 0, 2}, {1, 1, 1}, {0, 0, 0}, {-1, 0, 0}}); }
inline Tableau ex62_P() { return from_rows_top_first({{5}, {6}, {5, 6}, {5, 6}}); }
inline Grid ex62_Q() {
    Grid Q;
    Q.set(0, 3, 3);
    Q.set(0, 2, 3);
    Q.set(-1, 1, 3);
    Q.set(-1, 0, 4);
    return Q;
}

// d_{4|3}, i = 4
inline MatrixElement ex65a() { return biword_d(4, 3, {4, 4, 5, 5, 5, 6}, {7, 6, 5, 7, 7, 6}); }
inline Tableau ex65a_tab() { return from_rows_top_first({{4, 4, 5}, {5, 6, 7}, {5, 6, 7}, {5, 6, 7}}); }
inline MatrixElement ex65b() { return biword_d(4, 3, {4, 4, 5, 5, 5, 6}, {7, 6, 6, 7, 7, 6}); }
inline Tableau ex65b_tab() { return from_rows_top_first({{4, 4, 6}, {5, 6, 7}, {5, 6, 7}, {5, 6, 7}}); }
inline MatrixElement ex65b_f() { return biword_d(4, 3, {4, 5, 5, 5, 5, 6}, {7, 6, 6, 7, 7, 6}); }
inline Tableau ex65b_f_tab() { return from_rows_top_first({{4, 5, 6}, {5, 6, 7}, {5, 6, 7}, {5, 6, 7}}); }

// arrays of the signature example
inline TwoRowedArray ex642_1() { return array_of({{1, 3, 2}, {0, 2, 1}}); }
inline TwoRowedArray ex642_1_F() { return array_of({{2, 4, 2}, {1, 0, 1}, {0, 1, 0}}); }
inline TwoRowedArray ex642_1_f() { return array_of({{1, 2, 3}, {0, 2, 1}}); }
inline TwoRowedArray ex642_1_fF() { return array_of({{2, 3, 3}, {1, 0, 1}, {0, 1, 0}}); }
inline TwoRowedArray ex642_2() { return array_of({{1, 1, 0}, {0, 1, 1}, {-1, 0, 1}}); }
inline TwoRowedArray ex642_2_F() { return array_of({{2, 2, 0}, {1, 0, 1}, {-1, 0, 1}}); }

inline SpinorColumn col(int a, int b, int c, std::vector<int> left, std::vector<int> right) {
    return {a, b, c, std::move(left), std::move(right)};
}

// c_{2|5}, lambda = (3,2,1,1), ell = 3
inline SpinorTuple spin_c() {
    return {GType(Kind::c), Alphabet(2, 5), {3, 2, 1, 1}, 3,
            {col(4, 0, 1, {2, 3, 3, 5, 6}, {3}), col(2, 0, 3, {1, 2, 4, 4, 4}, {1, 2, 5}), col(1, 0, 4, {2, 3, 3, 5, 6}, {2, 4, 4, 7})}};
}
inline NormalTableau sep_c_tail() { return {{3, 4, 5}, {3, 4}, {5}, {6}}; }

// d_{4|4}, lambda = (4,4,2), ell = 8. The left column of T_2 is [3,6].
inline SpinorTuple spin_d() {
    return {GType(Kind::d), Alphabet(4, 4), {4, 4, 2}, 8,
            {col(3, 2, 0, {3, 4, 7}, {2, 4}), col(3, 2, 0, {4, 5, 8}, {3, 4}), col(2, 2, 0, {3, 6}, {3, 6}),
             col(2, 2, 2, {4, 5, 7, 7}, {3, 4, 6, 8})}};
}
inline NormalTableau sep_d_tail() { return {{3, 3, 5, 6}, {4, 4, 6, 7}, {7, 8}}; }

}  // namespace sc::fixtures
