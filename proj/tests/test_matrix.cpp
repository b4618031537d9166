#include <doctest.h>

#include <algorithm>

#include "supercrystal/matrix.hpp"

using namespace sc;

namespace {

double choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

// elements with total <= B: even cells unbounded, odd cells 0/1
size_t closed_count(GType g, const Alphabet& A, int B) {
    int ev = 0, od = 0;
    for (auto [i, j] : matrix_cells(g, A)) (A.parity(i) != A.parity(j) ? od : ev) += 1;
    double total = 0;
    for (int k = 0; k <= std::min(od, B); ++k) total += choose(od, k) * choose(B - k + ev, ev);
    return static_cast<size_t>(total + 0.5);
}

}  // namespace

TEST_CASE("cell sets") {
    Alphabet A(2, 2);
    CHECK(matrix_cells(GType(Kind::b), A).size() == 10);
    CHECK(matrix_cells(GType(Kind::c), A).size() == 8);
    CHECK(matrix_cells(GType(Kind::d), A).size() == 8);
    CHECK(is_cell(GType(Kind::c), A, 1, 1));
    CHECK_FALSE(is_cell(GType(Kind::d), A, 1, 1));
    CHECK(is_cell(GType(Kind::d), A, 3, 3));
}

TEST_CASE("enumeration matches the closed count") {
    for (auto k : {Kind::b, Kind::c, Kind::d})
        for (auto A : {Alphabet(2, 1), Alphabet(1, 2), Alphabet(2, 2)})
            for (int B = 0; B <= 3; ++B) {
                auto all = enumerate_matrices(GType(k), A, B);
                CHECK(all.size() == closed_count(GType(k), A, B));
                for (auto& x : all) CHECK(valid(x));
            }
}

TEST_CASE("biword round trip") {
    for (auto k : {Kind::b, Kind::c, Kind::d})
        for (auto& x : enumerate_matrices(GType(k), Alphabet(2, 1), 3)) {
            auto bw = to_biword(x);
            CHECK(bw.top.size() == static_cast<size_t>(x.total()));
            CHECK(from_biword(bw, x.g, x.A) == x);
        }
}

TEST_CASE("weight by hand") {
    MatrixElement x(GType(Kind::c), Alphabet(2, 1));
    x.set(1, 1, 1);
    x.set(1, 3, 1);
    // (1,1) gives -2 delta_1, (1,3) gives -delta_1 - delta_3
    CHECK(weight(x).delta == std::vector<int>{-3, 0, -1});
    MatrixElement y(GType(Kind::b), Alphabet(2, 1));
    y.set(2, 2, 2);
    CHECK(weight(y).delta == std::vector<int>{0, -2, 0});
}

TEST_CASE("f0 and e0") {
    MatrixElement x(GType(Kind::d), Alphabet(2, 1));
    auto y = f0(x);
    REQUIRE(y);
    CHECK(y->get(1, 2) == 1);
    CHECK(e0(*y) == x);
    CHECK_FALSE(e0(x));
    MatrixElement z(GType(Kind::d), Alphabet(1, 2));
    // (1,2) joins an even and an odd letter when m = 1, so it holds at most one
    REQUIRE(f0(z));
    CHECK_FALSE(f0(*f0(z)));
}

TEST_CASE("odd-odd off-diagonal cells are capped") {
    MatrixElement x(GType(Kind::d), Alphabet(1, 2));
    x.set(1, 2, 2);
    CHECK_FALSE(valid(x));
}

TEST_CASE("budget zero and monotonicity") {
    Alphabet A(2, 2);
    auto zero = enumerate_matrices(GType(Kind::d), A, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].c.empty());
    auto one = enumerate_matrices(GType(Kind::d), A, 1);
    CHECK(one.size() == 1 + matrix_cells(GType(Kind::d), A).size());
    auto two = enumerate_matrices(GType(Kind::d), A, 2);
    for (auto& x : one) CHECK(std::find(two.begin(), two.end(), x) != two.end());
}
