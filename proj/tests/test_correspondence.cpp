#include <doctest.h>

#include "supercrystal/fixtures.hpp"

using namespace sc;
using namespace sc::fixtures;

TEST_CASE("worked examples") {
    CHECK(kappa(ex53()) == ex53_tab());
    CHECK(kappa(ex56()) == ex56_tab());
    CHECK(kappa(ex54()) == ex54_tab());
    CHECK(kappa(ex65a()) == ex65a_tab());
    CHECK(kappa(ex65b()) == ex65b_tab());
    CHECK(kappa(ex62()) == d24_1());
}

TEST_CASE("inverse on small elements") {
    for (auto k : {Kind::b, Kind::c, Kind::d})
        for (auto& x : enumerate_matrices(GType(k), Alphabet(2, 1), 3)) {
            auto T = kappa(x);
            CHECK(is_semistandard(T, x.A));
            CHECK(parity_family_check(shape(T), x.g));
            CHECK(inverse_kappa(T, x.g, x.A) == x);
        }
}

TEST_CASE("weight is carried by the tableau letters") {
    for (auto k : {Kind::c, Kind::d})
        for (auto& x : enumerate_matrices(GType(k), Alphabet(2, 2), 2))
            CHECK(letters_weight(word(kappa(x)), x.A) == weight(x));
}

TEST_CASE("non-parity shape is rejected") {
    auto T = from_rows_top_first({{1, 2, 3}});
    CHECK_THROWS(inverse_kappa(T, GType(Kind::d), Alphabet(2, 1)));
}

TEST_CASE("global operators") {
    auto x = ex65b();
    CHECK(matrix_op(x, 4, false) == ex65b_f());
    CHECK(matrix_op(ex65b_f(), 4, true) == x);
    CHECK(matrix_op(ex53(), 0, false) == ex56());
}
