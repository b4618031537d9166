#include <doctest.h>

#include "supercrystal/fixtures.hpp"
#include "supercrystal/io.hpp"
#include "supercrystal/registry.hpp"

using namespace sc;
using namespace sc::io;

TEST_CASE("matrix json") {
    auto x = fixtures::ex54();
    CHECK(matrix_from_json(to_json(x)) == x);
    CHECK(matrix_from_json(biword_json(x)) == x);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"g":"c","m":2})")), InputError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"g":"q","m":2,"n":1,"entries":[]})")), InputError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"g":"d","m":2,"n":1,"entries":[{"i":1,"j":1,"c":1}]})")), InputError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"g":"d","m":2,"n":1,"entries":[{"i":1,"j":2,"c":-1}]})")), InputError);
}

TEST_CASE("tableau json") {
    Alphabet A(4, 4);
    auto T = fixtures::ex53_tab();
    CHECK(tableau_from_json(to_json(T, A), A) == T);
    CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"rows":[[2,1]]})"), A), InputError);
    CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"rows":[[9]]})"), A), InputError);
    CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"rows":"x"})"), A), InputError);
}

TEST_CASE("array json") {
    auto X = fixtures::ex62_F();
    CHECK(array_from_json(to_json(X)) == X);
    CHECK_THROWS_AS(array_from_json(json::parse(R"({"cols":[{"k":-2,"x":1,"y":0}]})")), InputError);
}

TEST_CASE("tuple json") {
    auto t = fixtures::spin_d();
    auto back = tuple_from_json(to_json(t));
    CHECK(back.columns == t.columns);
    CHECK(back.lambda == t.lambda);
    auto j = to_json(t);
    j["columns"][0]["anchor"] = 7;
    CHECK_THROWS_AS(tuple_from_json(j), InputError);
    j = to_json(t);
    j["lambda"] = json::array({1, 2});
    CHECK_THROWS_AS(tuple_from_json(j), InputError);
}

TEST_CASE("dump is canonical") {
    auto a = to_json(fixtures::ex53()).dump();
    auto b = matrix_from_json(json::parse(a));
    CHECK(to_json(b).dump() == a);
}

TEST_CASE("every registered fixture reproduces") {
    auto& all = fixtures::registry();
    CHECK(all.size() == 12);
    for (auto& f : all) {
        INFO(f.name);
        CHECK(f.expected().dump() == f.derived().dump());
    }
}
