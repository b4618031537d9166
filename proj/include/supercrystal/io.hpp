#pragma once
// JSON encodings. Keys are sorted (nlohmann's default object is a std::map),
// so dump() is canonical.

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "spinor.hpp"

namespace sc::io {

using json = nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline int need_int(const json& j, const char* key) {
    auto& v = need(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

inline std::vector<int> int_list(const json& v, const char* what) {
    if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (auto& e : v) {
        if (!e.is_number_integer()) throw InputError(std::string(what) + " must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

inline Alphabet alphabet_of(const json& j) {
    try {
        return Alphabet(need_int(j, "m"), need_int(j, "n"));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline GType gtype_of(const json& j) {
    auto& v = need(j, "g");
    if (!v.is_string()) throw InputError("field 'g' must be one of b, c, d");
    try {
        return GType::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline void check_letters(const std::vector<int>& w, const Alphabet& A) {
    for (int a : w)
        if (!A.contains(a)) throw InputError("letter " + std::to_string(a) + " is outside the alphabet");
}

// ---------------------------------------------------------------------------

inline json to_json(const Weight& w) { return {{"delta", w.delta}, {"level", w.level}}; }

inline json to_json(const MatrixElement& x) {
    json entries = json::array();
    for (auto& [p, v] : x.c) entries.push_back({{"i", p.first}, {"j", p.second}, {"c", v}});
    return {{"g", std::string(1, x.g.name())}, {"m", x.A.m}, {"n", x.A.n}, {"entries", entries}};
}

inline MatrixElement matrix_from_json(const json& j) {
    MatrixElement x(gtype_of(j), alphabet_of(j));
    if (j.contains("top") || j.contains("bottom")) {
        Biword bw{int_list(need(j, "top"), "top"), int_list(need(j, "bottom"), "bottom")};
        try {
            return from_biword(bw, x.g, x.A);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    auto& es = need(j, "entries");
    if (!es.is_array()) throw InputError("entries must be an array");
    for (auto& e : es) {
        int i = need_int(e, "i"), jj = need_int(e, "j"), c = need_int(e, "c");
        if (c < 0) throw InputError("negative multiplicity");
        if (!is_cell(x.g, x.A, i, jj)) throw InputError("(" + std::to_string(i) + "," + std::to_string(jj) + ") is not a cell");
        x.add(i, jj, c);
    }
    if (!valid(x)) throw InputError("matrix element violates the type constraints");
    return x;
}

inline json biword_json(const MatrixElement& x) {
    auto bw = to_biword(x);
    return {{"g", std::string(1, x.g.name())}, {"m", x.A.m}, {"n", x.A.n}, {"top", bw.top}, {"bottom", bw.bottom}};
}

inline json shape_json(const Partition& outer, const Partition& inner, bool rotated) {
    return {{"outer", outer}, {"inner", inner}, {"rotated", rotated}};
}

// rows listed bottom row first, each row left to right
inline json to_json(const Tableau& T, const Alphabet& A) {
    return {{"m", A.m}, {"n", A.n}, {"shape", shape_json(shape(T), {}, true)}, {"rows", rows_bottom_first(T)}};
}

inline Tableau tableau_from_json(const json& j, const Alphabet& A) {
    auto& rows = need(j, "rows");
    if (!rows.is_array()) throw InputError("rows must be an array");
    std::vector<std::vector<int>> rs;
    for (auto& r : rows) {
        rs.push_back(int_list(r, "row"));
        check_letters(rs.back(), A);
    }
    Tableau T;
    try {
        T = from_rows_bottom_first(rs);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    if (!T.empty() && !is_semistandard(T, A)) throw InputError("tableau is not semistandard");
    return T;
}

inline json to_json(const NormalTableau& N, const Alphabet& A) {
    Partition sh;
    for (auto& r : N) sh.push_back(static_cast<int>(r.size()));
    std::vector<std::vector<int>> bottomFirst(N.rbegin(), N.rend());
    return {{"m", A.m}, {"n", A.n}, {"shape", shape_json(sh, {}, false)}, {"rows", bottomFirst}};
}

inline json to_json(const Grid& G) {
    json cells = json::array();
    for (auto& [p, a] : G.cells) cells.push_back({{"x", p.first}, {"y", p.second}, {"a", a}});
    return {{"cells", cells}};
}

inline json to_json(const TwoRowedArray& X) {
    json cols = json::array();
    for (int k = X.max_k(); k >= -1; --k)
        if (X.X(k) || X.Y(k)) cols.push_back({{"k", k}, {"x", X.X(k)}, {"y", X.Y(k)}});
    return {{"cols", cols}};
}

inline TwoRowedArray array_from_json(const json& j) {
    auto& cols = need(j, "cols");
    if (!cols.is_array()) throw InputError("cols must be an array");
    TwoRowedArray X;
    for (auto& c : cols) {
        int k = need_int(c, "k"), x = need_int(c, "x"), y = need_int(c, "y");
        try {
            X.setX(k, X.X(k) + x);
            X.setY(k, X.Y(k) + y);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    return X;
}

inline json to_json(const SpinorTuple& t) {
    json cols = json::array();
    for (auto& T : t.columns)
        cols.push_back({{"a", T.a}, {"b", T.b}, {"c", T.c}, {"left", T.left}, {"right", T.right}, {"anchor", -T.a}});
    return {{"g", std::string(1, t.g.name())}, {"m", t.A.m}, {"n", t.A.n}, {"lambda", t.lambda}, {"ell", t.ell}, {"columns", cols}};
}

// Columns are listed T_l first. Each column gives its left and right
// columns top to bottom; "anchor", when present, must equal -a.
inline SpinorTuple tuple_from_json(const json& j) {
    SpinorTuple t{gtype_of(j), alphabet_of(j), int_list(need(j, "lambda"), "lambda"), need_int(j, "ell"), {}};
    if (!is_partition(t.lambda)) throw InputError("lambda is not a partition");
    auto& cols = need(j, "columns");
    if (!cols.is_array()) throw InputError("columns must be an array");
    for (auto& c : cols) {
        SpinorColumn T{need_int(c, "a"), need_int(c, "b"), need_int(c, "c"), int_list(need(c, "left"), "left"),
                       int_list(need(c, "right"), "right")};
        if (c.contains("anchor") && need_int(c, "anchor") != -T.a) throw InputError("anchor must equal -a");
        check_letters(T.left, t.A);
        check_letters(T.right, t.A);
        if (!column_valid(T, t.A)) throw InputError("a column is not a semistandard filling of its shape");
        t.columns.push_back(T);
    }
    return t;
}

}  // namespace sc::io
