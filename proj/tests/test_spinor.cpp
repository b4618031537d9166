#include <doctest.h>

#include "supercrystal/fixtures.hpp"

using namespace sc;
using namespace sc::fixtures;

TEST_CASE("column shapes") {
    Alphabet A(2, 5);
    CHECK(column_valid(col(1, 0, 1, {1, 2}, {3}), A));
    CHECK_FALSE(column_valid(col(1, 0, 1, {1}, {3}), A));
    CHECK_FALSE(column_valid(col(0, 0, 1, {2}, {1}), A));  // rows must weakly increase for even letters
}

TEST_CASE("shape parameters") {
    auto c = expected_params(GType(Kind::c), {3, 2, 1, 1}, 3);
    REQUIRE(c.ok());
    CHECK(c.a == std::vector<int>{4, 2, 1});
    auto d = expected_params(GType(Kind::d), {4, 4, 2}, 8);
    REQUIRE(d.ok());
    CHECK(d.a == std::vector<int>{3, 3, 2, 2});
    CHECK_FALSE(expected_params(GType(Kind::b), {1}, 3).ok());
    CHECK_FALSE(expected_params(GType(Kind::d), {2, 1}, 3).ok());
    CHECK_FALSE(expected_params(GType(Kind::c), {4}, 3).ok());
}

TEST_CASE("exchange of two pieces") {
    Alphabet A(2, 5);
    Piece C{0, {3}}, Cp{-1, {2, 5}};
    auto r = exchange(C, Cp, A);
    REQUIRE(r);
    auto before = concat(C.e, Cp.e), after = concat(r->left.e, r->right.e);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    CHECK(before == after);
    // columns are read right to left
    CHECK(insertion_tableau(concat(Cp.e, C.e), A) == insertion_tableau(concat(r->right.e, r->left.e), A));
}

TEST_CASE("separation of the worked tuples") {
    auto bc = separate(spin_c());
    CHECK(bc.body == ex54_tab());
    CHECK(bc.tail == sep_c_tail());
    auto bd = separate(spin_d());
    CHECK(bd.body == ex53_tab());
    CHECK(bd.tail == sep_d_tail());
}

TEST_CASE("body and tail keep the insertion tableau") {
    for (auto t : {spin_c(), spin_d()}) {
        auto bt = separate(t);
        CHECK(insertion_tableau(concat(word(bt.body), word(bt.tail)), t.A) == insertion_tableau(word(t), t.A));
    }
}

TEST_CASE("admissibility rejects a broken tuple") {
    auto t = spin_c();
    std::swap(t.columns[0], t.columns[2]);
    CHECK_FALSE(tuple_check(t));
    auto u = spin_c();
    u.ell = 2;
    CHECK_FALSE(tuple_check(u));
}

TEST_CASE("embedding weight") {
    auto e = embed(spin_c());
    auto w = weight(e.matrix);
    w += letters_weight(word(e.tail), spin_c().A);
    w.level -= 3;
    CHECK(w == e.weight);
}
