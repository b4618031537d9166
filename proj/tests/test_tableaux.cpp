#include <doctest.h>

#include <algorithm>

#include "supercrystal/tableau.hpp"

using namespace sc;

TEST_CASE("row conversions") {
    auto T = from_rows_top_first({{2}, {1, 3}});
    CHECK(T.ncols() == 2);
    CHECK(shape(T) == Partition{2, 1});
    CHECK(from_rows_bottom_first(rows_bottom_first(T)) == T);
    CHECK(T.boxes() == 3);
}

TEST_CASE("column insertion by hand") {
    Alphabet A(2, 1);
    // even letter replaces the bottommost y <= x
    auto [T, rec] = column_insert(from_rows_top_first({{1}, {2}}), 2, A);
    CHECK(T == from_rows_top_first({{1}, {2, 2}}));
    CHECK(rec.route.size() == 2);
    // odd letter needs y < x, so 3 stacks on top of 3
    auto U = column_insert(from_rows_top_first({{3}}), 3, A).first;
    CHECK(U == from_rows_top_first({{3}, {3}}));
    auto V = column_insert(from_rows_top_first({{1}}), 1, A).first;
    CHECK(V == from_rows_top_first({{1, 1}}));
}

TEST_CASE("insertion fixes every semistandard tableau") {
    for (auto A : {Alphabet(2, 1), Alphabet(1, 2)})
        for (int boxes = 0; boxes <= 5; ++boxes)
            for (auto& T : all_tableaux(boxes, A)) {
                REQUIRE(is_semistandard(T, A));
                CHECK(insertion_tableau(word(T), A) == T);
            }
}

TEST_CASE("insertion keeps content and semistandardness") {
    Alphabet A(2, 2);
    Word w = {4, 1, 3, 3, 2, 4, 1, 2, 3};
    auto T = insertion_tableau(w, A);
    CHECK(is_semistandard(T, A));
    auto a = word(T), b = w;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("tableau counts match a brute-force filling count") {
    // count semistandard fillings of every anti-normal shape directly
    Alphabet A(1, 1);
    auto brute = [&](int boxes) {
        size_t total = 0;
        for (auto& sh : partitions_of(boxes)) {
            std::vector<int> letters(boxes, 1);
            auto cur = letters;
            while (true) {
                std::vector<std::vector<int>> rows;
                size_t at = 0;
                for (auto it = sh.rbegin(); it != sh.rend(); ++it) {
                    rows.push_back({cur.begin() + at, cur.begin() + at + *it});
                    at += *it;
                }
                if (is_semistandard(from_rows_top_first(rows), A)) ++total;
                int k = boxes - 1;
                while (k >= 0 && cur[k] == 2) cur[k--] = 1;
                if (k < 0) break;
                cur[k] = 2;
            }
        }
        return total;
    };
    for (int boxes = 0; boxes <= 6; ++boxes) CHECK(all_tableaux(boxes, A).size() == brute(boxes));
}

TEST_CASE("grids and rectification") {
    Alphabet A(2, 2);
    NormalTableau N = {{1, 2, 3}, {2, 4}};
    auto G = to_grid(N);
    CHECK(normal_from_grid(G) == N);
    CHECK(is_normal_shape(N));
    CHECK(normal_from_grid(rectify(G, 0, 0, A)) == N);
}

TEST_CASE("subtableau difference") {
    auto S = from_rows_top_first({{1}, {2}, {3, 4}});
    auto T = from_rows_top_first({{3, 4}});
    auto D = subtableau_diff(S, T);
    REQUIRE(D);
    CHECK(D->size() == 2);
    CHECK_FALSE(subtableau_diff(T, S));
}
