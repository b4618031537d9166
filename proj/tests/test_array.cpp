#include <doctest.h>

#include "supercrystal/fixtures.hpp"

using namespace sc;
using namespace sc::fixtures;

TEST_CASE("storage") {
    TwoRowedArray X;
    CHECK(X.empty());
    CHECK(X.max_k() == -1);
    X.setX(3, 2);
    CHECK(X.max_k() == 3);
    X.setX(3, 0);
    CHECK(X.empty());
    CHECK(X == TwoRowedArray{});
    CHECK_THROWS(X.setY(-2, 1));
    CHECK_THROWS(X.setY(0, -1));
    CHECK(block(1, 3).X(2) == 3);
    CHECK(block(1, 3).Y(1) == 3);
    CHECK((block(0, 1) + block(0, 2)) == block(0, 3));
}

TEST_CASE("F on blocks of even height shifts by two") {
    for (int k = -1; k <= 4; ++k)
        for (int a = 0; a <= 3; ++a) CHECK(F_map(block(k, 2 * a)) == block(k + 2, 2 * a));
}

TEST_CASE("signature operators") {
    auto X = ex642_1();
    CHECK(to_string(sigma(X)) == "--+++-++");
    CHECK(apply_f_array(X) == ex642_1_f());
    CHECK(apply_e_array(*apply_f_array(X)) == X);
    CHECK_FALSE(apply_f_array(TwoRowedArray{}));
}

TEST_CASE("reduced decomposition") {
    auto X = array_of({{2, 5, 0}, {1, 0, 4}, {0, 1, 1}});
    CHECK_FALSE(is_reduced(X));
    auto d = reduced_decompose(X);
    CHECK(is_reduced(d.reduced));
    TwoRowedArray back = d.reduced;
    for (auto [k, a] : d.a) back = back + block(k, 2 * a);
    CHECK(back == X);
}

TEST_CASE("gluing rebuilds kappa") {
    CHECK(glue(ex61(), 1) == kappa(ex61()));
    CHECK(glue(ex62(), 3) == kappa(ex62()));
    CHECK(F_map(build_T_array(ex62(), 3)) == ex62_F());
}

TEST_CASE("gluing for i < m at d(3|1)") {
    Alphabet A(3, 1);
    size_t seen = 0;
    for (auto& x : enumerate_matrices(GType(Kind::d), A, 3)) {
        if (!supported_in_upper(x, 1)) continue;
        ++seen;
        CHECK(glue(x, 1) == kappa(x));
    }
    CHECK(seen > 0);
}

TEST_CASE("zero arrays") {
    MatrixElement z(GType(Kind::d), Alphabet(2, 3));
    CHECK(build_T_array(z, 3).empty());
    CHECK(F_map(TwoRowedArray{}).empty());
}
