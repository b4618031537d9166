#pragma once
// Named fixtures with their expected payloads and a recomputation of each.
// `examples` compares the two dumps byte for byte.

#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "io.hpp"

namespace sc::fixtures {

struct Fixture {
    std::string name;
    std::string provenance;
    std::function<io::json()> expected;
    std::function<io::json()> derived;
};

namespace detail {

using io::json;
using io::to_json;

inline json opt(const std::optional<MatrixElement>& x) { return x ? to_json(*x) : json(nullptr); }
inline json opt(const std::optional<Tableau>& T, const Alphabet& A) { return T ? to_json(*T, A) : json(nullptr); }
inline json opt(const std::optional<TwoRowedArray>& X) { return X ? to_json(*X) : json(nullptr); }

inline json chain_json(const std::vector<Tableau>& ch, const Alphabet& A) {
    json out = json::array();
    for (auto& T : ch) out.push_back(to_json(T, A));
    return out;
}

inline json sep_json(const Tableau& body, const NormalTableau& tail, const Alphabet& A) {
    return {{"body", to_json(body, A)}, {"tail", to_json(tail, A)}, {"body_shape", shape(body)}};
}

}  // namespace detail

inline const std::vector<Fixture>& registry() {
    using namespace detail;
    static const std::vector<Fixture> all = {
        {"EX53", "type d insertion of six biletters, d(4|4)",
         [] { return json{{"matrix", to_json(ex53())}, {"tableau", to_json(ex53_tab(), ex53().A)}}; },
         [] {
             auto x = inverse_kappa_d(ex53_tab(), Alphabet(4, 4));
             return json{{"matrix", to_json(x)}, {"tableau", to_json(kappa(ex53()), x.A)}};
         }},
        {"EX54", "type c symmetric matrix and f0, c(2|5)",
         [] {
             auto A = ex54().A;
             return json{{"matrix", to_json(ex54())}, {"tableau", to_json(ex54_tab(), A)}, {"f0_tableau", to_json(ex54_f0_tab(), A)}};
         },
         [] {
             auto A = ex54().A;
             return json{{"matrix", to_json(inverse_kappa(ex54_tab(), ex54().g, A))},
                         {"tableau", to_json(kappa(ex54()), A)},
                         {"f0_tableau", opt(f0(ex54()) ? std::optional<Tableau>(kappa(*f0(ex54()))) : std::nullopt, A)}};
         }},
        {"EX56", "f0 adds a leading biletter (1,2), d(4|4)",
         [] {
             Grid D;
             D.set(0, 5, 1);
             D.set(0, 4, 2);
             return json{{"matrix", to_json(ex56())}, {"tableau", to_json(ex56_tab(), ex56().A)}, {"domino", to_json(D)}};
         },
         [] {
             auto x = *f0(ex53());
             auto T = kappa(x);
             auto D = subtableau_diff(T, kappa(ex53()));
             return json{{"matrix", to_json(x)}, {"tableau", to_json(T, x.A)}, {"domino", D ? to_json(*D) : json(nullptr)}};
         }},
        {"EX61", "gluing chain for i = 1 < m, d(2|4)",
         [] { return json{{"chain", chain_json(ex61_chain(), ex61().A)}, {"glued", to_json(kappa_d(ex61()), ex61().A)}}; },
         [] {
             std::vector<Tableau> ch;
             auto G = glue(ex61(), 1, &ch);
             return json{{"chain", chain_json(ch, ex61().A)}, {"glued", to_json(G, ex61().A)}};
         }},
        {"EX62", "arrays T(c) and F(T(c)) for i = 3 > m, d(2|4)",
         [] {
             auto A = ex62().A;
             return json{{"T", to_json(ex62_T())}, {"F", to_json(ex62_F())}, {"P", to_json(ex62_P(), A)},
                         {"Q", to_json(ex62_Q())}, {"glued", to_json(d24_1(), A)}};
         },
         [] {
             auto A = ex62().A;
             auto s = region_split(ex62(), 3);
             auto pq = pq_pair(kappa_d(s.upper), s.lozenge);
             auto T = build_T_array(ex62(), 3);
             return json{{"T", to_json(T)}, {"F", to_json(F_map(T))}, {"P", to_json(pq.P, A)},
                         {"Q", to_json(pq.Q)}, {"glued", to_json(glue(ex62(), 3), A)}};
         }},
        {"EX65a", "i = m, the case where f vanishes, d(4|3)",
         [] { return json{{"tableau", to_json(ex65a_tab(), ex65a().A)}, {"f4", nullptr}}; },
         [] { return json{{"tableau", to_json(kappa(ex65a()), ex65a().A)}, {"f4", opt(d_f_m(ex65a()))}}; }},
        {"EX65b", "i = m, the entry flip, d(4|3)",
         [] {
             auto A = ex65b().A;
             return json{{"tableau", to_json(ex65b_tab(), A)}, {"f4", to_json(ex65b_f())}, {"f4_tableau", to_json(ex65b_f_tab(), A)}};
         },
         [] {
             auto A = ex65b().A;
             return json{{"tableau", to_json(kappa(ex65b()), A)}, {"f4", opt(d_f_m(ex65b()))},
                         {"f4_tableau", opt(tableau_f(ex65b_tab(), 4, A), A)}};
         }},
        {"EX642", "signature tables of two arrays",
         [] {
             return json{{"first", {{"X", to_json(ex642_1())}, {"F", to_json(ex642_1_F())}, {"sigma", "--+++-++"},
                                    {"reduced", "--++++"}, {"f", to_json(ex642_1_f())}, {"fF", to_json(ex642_1_fF())}}},
                         {"second", {{"X", to_json(ex642_2())}, {"F", to_json(ex642_2_F())}, {"sigma", "+-+-"},
                                     {"sigma_F", "++--"}, {"reduced", ""}}}};
         },
         [] {
             auto X = ex642_1(), Y = ex642_2();
             return json{{"first", {{"X", to_json(X)}, {"F", to_json(F_map(X))}, {"sigma", to_string(sigma(X))},
                                    {"reduced", to_string(reduce_sigma(sigma(X)))}, {"f", opt(apply_f_array(X))},
                                    {"fF", opt(apply_f_array(F_map(X)))}}},
                         {"second", {{"X", to_json(Y)}, {"F", to_json(F_map(Y))}, {"sigma", to_string(sigma(Y))},
                                     {"sigma_F", to_string(sigma(F_map(Y)))}, {"reduced", to_string(reduce_sigma(sigma(Y)))}}}};
         }},
        {"SPIN_C", "type c tuple, lambda = (3,2,1,1), level 3, embeds to EX54",
         [] { return json{{"tuple", to_json(spin_c())}, {"admissible", true}, {"matrix", to_json(ex54())}, {"tail", to_json(sep_c_tail(), Alphabet(2, 5))}}; },
         [] {
             auto e = embed(spin_c());
             return json{{"tuple", to_json(spin_c())}, {"admissible", tuple_check(spin_c())}, {"matrix", to_json(e.matrix)},
                         {"tail", to_json(e.tail, spin_c().A)}};
         }},
        {"SPIN_D", "type d tuple, lambda = (4,4,2), level 8, embeds to EX53",
         [] { return json{{"tuple", to_json(spin_d())}, {"admissible", true}, {"matrix", to_json(ex53())}, {"tail", to_json(sep_d_tail(), Alphabet(4, 4))}}; },
         [] {
             auto e = embed(spin_d());
             return json{{"tuple", to_json(spin_d())}, {"admissible", tuple_check(spin_d())}, {"matrix", to_json(e.matrix)},
                         {"tail", to_json(e.tail, spin_d().A)}};
         }},
        {"SEP_C", "separation of SPIN_C",
         [] { return sep_json(ex54_tab(), sep_c_tail(), Alphabet(2, 5)); },
         [] {
             auto bt = separate(spin_c());
             return sep_json(bt.body, bt.tail, spin_c().A);
         }},
        {"SEP_D", "separation of SPIN_D",
         [] { return sep_json(ex53_tab(), sep_d_tail(), Alphabet(4, 4)); },
         [] {
             auto bt = separate(spin_d());
             return sep_json(bt.body, bt.tail, spin_d().A);
         }},
    };
    return all;
}

}  // namespace sc::fixtures
