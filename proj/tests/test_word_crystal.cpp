#include <doctest.h>

#include "supercrystal/word_crystal.hpp"

using namespace sc;

namespace {

std::vector<Word> words_upto(int len, const Alphabet& A) {
    std::vector<Word> out{{}};
    std::vector<Word> layer{{}};
    for (int l = 1; l <= len; ++l) {
        std::vector<Word> next;
        for (auto& w : layer)
            for (int a = 1; a <= A.size(); ++a) {
                auto v = w;
                v.push_back(a);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = next;
    }
    return out;
}

Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("signature rule by hand") {
    Alphabet A(2, 2);
    CHECK(word_f({1, 2, 1}, 1, A) == Word{1, 2, 2});
    CHECK(word_e({1, 2, 1}, 1, A) == std::nullopt);
    CHECK(word_e({2, 1, 2}, 1, A) == Word{1, 1, 2});
    // i = m acts on the first letter among m, m+1
    CHECK(word_f({1, 2, 3}, 2, A) == Word{1, 3, 3});
    CHECK(word_f({3, 2}, 2, A) == std::nullopt);
    CHECK(word_e({3, 2}, 2, A) == Word{2, 2});
    // odd part: 3 is +, 4 is -, cancelled as (-,+)
    CHECK(word_f({4, 3}, 3, A) == std::nullopt);
    CHECK(word_f({3, 4}, 3, A) == Word{4, 4});
    CHECK_THROWS(word_f({1}, 4, A));
}

TEST_CASE("signature rule agrees with the tensor rule at every split") {
    for (auto A : {Alphabet(2, 1), Alphabet(1, 2), Alphabet(2, 2)})
        for (auto& w : words_upto(4, A))
            for (int i = 1; i < A.size(); ++i)
                for (size_t cut = 0; cut <= w.size(); ++cut) {
                    Word u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
                    int e1 = word_eps(u, i, A), p1 = word_phi(u, i, A), e2 = word_eps(v, i, A), p2 = word_phi(v, i, A);
                    std::optional<Word> ef, ee;
                    switch (tensor_f_side(i, A, e1, p1, e2, p2)) {
                    case Side::left: ef = cat(*word_f(u, i, A), v); break;
                    case Side::right: ef = cat(u, *word_f(v, i, A)); break;
                    case Side::none: break;
                    }
                    switch (tensor_e_side(i, A, e1, p1, e2, p2)) {
                    case Side::left: ee = cat(*word_e(u, i, A), v); break;
                    case Side::right: ee = cat(u, *word_e(v, i, A)); break;
                    case Side::none: break;
                    }
                    CHECK(word_f(w, i, A) == ef);
                    CHECK(word_e(w, i, A) == ee);
                }
}

TEST_CASE("tableau operators stay semistandard") {
    Alphabet A(2, 1);
    for (int b = 1; b <= 4; ++b)
        for (auto& T : all_tableaux(b, A))
            for (int i = 1; i < A.size(); ++i)
                if (auto U = tableau_f(T, i, A)) {
                    CHECK(is_semistandard(*U, A));
                    CHECK(shape(*U) == shape(T));
                    CHECK(tableau_e(*U, i, A) == T);
                }
}

TEST_CASE("crystal graph of single letters is a path") {
    Alphabet A(2, 2);
    std::vector<Word> seeds{{1}};
    auto G = crystal_graph(seeds, {1, 2, 3},
                           [&](const Word& w, int i, bool raise) { return raise ? word_e(w, i, A) : word_f(w, i, A); },
                           [&](const Word& w) { return letters_weight(w, A); });
    CHECK(G.vertices.size() == 4);
    CHECK(G.edges.size() == 3);
    CHECK_THROWS_AS(crystal_graph(seeds, {1, 2, 3},
                                  [&](const Word& w, int i, bool raise) { return raise ? word_e(w, i, A) : word_f(w, i, A); },
                                  [&](const Word& w) { return letters_weight(w, A); }, 2),
                    BudgetExceeded);
}
