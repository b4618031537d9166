#include <doctest.h>

#include "supercrystal/alphabet.hpp"

using namespace sc;

TEST_CASE("alphabet grading") {
    Alphabet A(2, 3);
    CHECK(A.size() == 5);
    CHECK(A.even(2));
    CHECK(A.odd(3));
    CHECK(A.parity(1) == 0);
    CHECK(A.parity(5) == 1);
    CHECK_FALSE(A.contains(0));
    CHECK_FALSE(A.contains(6));
    CHECK_THROWS_AS(Alphabet(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet(1, -1), std::invalid_argument);
}

TEST_CASE("type names") {
    CHECK(GType::parse("b").r() == 2);
    CHECK(GType::parse("c").r() == 1);
    CHECK(GType::parse("d").name() == 'd');
    CHECK_THROWS(GType::parse("a"));
}

TEST_CASE("partition counts") {
    // p(0..9)
    std::vector<size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int s = 0; s < 10; ++s) {
        auto all = partitions_of(s);
        CHECK(all.size() == p[s]);
        for (auto& q : all) {
            CHECK(is_partition(q));
            CHECK(size(q) == s);
        }
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(conjugate({}).empty());
    for (auto& q : partitions_of(7)) CHECK(conjugate(conjugate(q)) == q);
}

TEST_CASE("parity families") {
    CHECK(parity_family_check({6, 4, 4, 2}, GType(Kind::c)));
    CHECK_FALSE(parity_family_check({3, 1}, GType(Kind::c)));
    CHECK(parity_family_check({5, 5, 1, 1}, GType(Kind::d)));
    CHECK_FALSE(parity_family_check({2, 1}, GType(Kind::d)));
    CHECK(parity_family_check({3, 1}, GType(Kind::b)));
}

TEST_CASE("hook weight") {
    Alphabet A(2, 2);
    CHECK(hook_check({4, 3, 2, 1}, A));
    CHECK_FALSE(hook_check({3, 3, 3}, A));
    // rows 1,2 give delta_1, delta_2; the rest (2,1) conjugated is (2,1)
    auto w = hook_weight({4, 3, 2, 1}, A);
    CHECK(w.delta == std::vector<int>{4, 3, 2, 1});
    CHECK_THROWS(hook_weight({3, 3, 3}, A));
}

TEST_CASE("letter weights") {
    Alphabet A(1, 2);
    auto w = letters_weight({1, 3, 3}, A);
    CHECK(w.delta == std::vector<int>{-1, 0, -2});
    Weight z(3);
    z += w;
    CHECK((z - w).delta == std::vector<int>{0, 0, 0});
}
