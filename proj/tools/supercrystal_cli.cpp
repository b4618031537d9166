// supercrystal: command line front end. Reports are JSON on stdout.
// Exit codes: 0 ok, 1 verification failure, 2 malformed input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "supercrystal.hpp"

using namespace sc;
using io::json;

namespace {

struct Opts {
    std::string g, input = "-", format = "json", op = "f", suite = "all";
    int m = -1, n = -1, budget = -1, index = 1;
    std::uint64_t seed = 20240611;
    std::vector<int> indices;
};

json read_input(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw io::InputError("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw io::InputError(std::string("not valid JSON: ") + e.what());
    }
}

// command line values fill in fields the document leaves out
json with_defaults(json j, const Opts& o) {
    if (!j.is_object()) throw io::InputError("input must be a JSON object");
    if (!o.g.empty() && !j.contains("g")) j["g"] = o.g;
    if (o.m >= 0 && !j.contains("m")) j["m"] = o.m;
    if (o.n >= 0 && !j.contains("n")) j["n"] = o.n;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_kappa(const Opts& o) {
    auto x = io::matrix_from_json(with_defaults(read_input(o.input), o));
    emit(io::to_json(kappa(x), x.A));
    return 0;
}

int cmd_unkappa(const Opts& o) {
    auto j = with_defaults(read_input(o.input), o);
    auto A = io::alphabet_of(j);
    auto g = io::gtype_of(j);
    auto T = io::tableau_from_json(j, A);
    if (!parity_family_check(shape(T), g) || !hook_check(shape(T), A))
        throw io::InputError("tableau shape is outside the image of kappa for this type");
    emit(io::to_json(inverse_kappa(T, g, A)));
    return 0;
}

int cmd_apply(const Opts& o) {
    auto j = with_defaults(read_input(o.input), o);
    if (o.op != "f" && o.op != "e") throw io::InputError("--op must be f or e");
    bool raise = o.op == "e";
    int i = o.index;
    json out;
    if (j.contains("cols")) {
        auto X = io::array_from_json(j);
        auto Y = raise ? apply_e_array(X) : apply_f_array(X);
        out = Y ? io::to_json(*Y) : json(nullptr);
    } else if (j.contains("rows")) {
        auto A = io::alphabet_of(j);
        if (i < 1 || i >= A.size()) throw io::InputError("index out of range");
        auto U = tableau_op(io::tableau_from_json(j, A), i, A, raise);
        out = U ? io::to_json(*U, A) : json(nullptr);
    } else if (j.contains("word")) {
        auto A = io::alphabet_of(j);
        auto w = io::int_list(j["word"], "word");
        io::check_letters(w, A);
        if (i < 1 || i >= A.size()) throw io::InputError("index out of range");
        auto v = raise ? word_e(w, i, A) : word_f(w, i, A);
        out = v ? json{{"m", A.m}, {"n", A.n}, {"word", *v}} : json(nullptr);
    } else {
        auto x = io::matrix_from_json(j);
        if (i < 0 || i >= x.A.size()) throw io::InputError("index out of range");
        auto y = matrix_op(x, i, raise);
        out = y ? io::to_json(*y) : json(nullptr);
    }
    emit({{"op", o.op}, {"i", i}, {"result", out}});
    return 0;
}

int cmd_fmap(const Opts& o) {
    emit(io::to_json(F_map(io::array_from_json(read_input(o.input)))));
    return 0;
}

int cmd_separate(const Opts& o) {
    auto t = io::tuple_from_json(with_defaults(read_input(o.input), o));
    auto chk = tuple_check_detail(t);
    if (!chk.ok) throw io::InputError("tuple is not admissible: " + chk.reason);
    BodyTail bt;
    try {
        bt = separate(t);
    } catch (const std::logic_error& e) {
        emit({{"error", e.what()}});
        return 1;
    }
    emit({{"body", io::to_json(bt.body, t.A)},
          {"tail", io::to_json(bt.tail, t.A)},
          {"separated", io::to_json(bt.separated)},
          {"tail_by_search", bt.tail_by_search},
          {"matrix", io::to_json(inverse_kappa(bt.body, t.g, t.A))}});
    return 0;
}

template <class T>
json graph_json(const CrystalGraph<T>& G, const std::function<json(const T&)>& enc) {
    json vs = json::array(), es = json::array();
    for (size_t k = 0; k < G.vertices.size(); ++k) vs.push_back({{"id", k}, {"value", enc(G.vertices[k])}, {"weight", io::to_json(G.weights[k])}});
    for (auto& e : G.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"i", e.i}});
    return {{"vertices", vs}, {"edges", es}};
}

template <class T>
std::string graph_dot(const CrystalGraph<T>& G, const std::function<std::string(const T&)>& label) {
    std::ostringstream s;
    s << "digraph crystal {\n";
    for (size_t k = 0; k < G.vertices.size(); ++k) {
        std::string l = label(G.vertices[k]);
        for (auto& ch : l)
            if (ch == '"') ch = '\'';
        s << "  v" << k << " [label=\"" << l << "\"];\n";
    }
    for (auto& e : G.edges) s << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.i << "\"];\n";
    s << "}\n";
    return s.str();
}

std::string flat(std::string s) {
    for (auto& ch : s)
        if (ch == '\n') ch = ';';
    return s;
}

int cmd_graph(const Opts& o) {
    if (o.format != "json" && o.format != "dot") throw io::InputError("--format must be json or dot");
    auto j = with_defaults(read_input(o.input), o);
    size_t budget = o.budget > 0 ? static_cast<size_t>(o.budget) : 5000;
    auto pick = [&](int lo, int N) {
        std::vector<int> idx = o.indices;
        if (idx.empty())
            for (int i = std::max(1, lo); i < N; ++i) idx.push_back(i);
        for (int i : idx)
            if (i < lo || i >= N) throw io::InputError("index " + std::to_string(i) + " out of range");
        return idx;
    };
    try {
        if (j.contains("rows")) {
            auto A = io::alphabet_of(j);
            auto T = io::tableau_from_json(j, A);
            auto G = crystal_graph(std::vector<Tableau>{T}, pick(1, A.size()),
                                   [&](const Tableau& t, int i, bool r) { return tableau_op(t, i, A, r); },
                                   [&](const Tableau& t) { return letters_weight(word(t), A); }, budget);
            if (o.format == "dot") std::cout << graph_dot<Tableau>(G, [](const Tableau& t) { return flat(to_string(t)); });
            else emit(graph_json<Tableau>(G, [&](const Tableau& t) { return io::to_json(t, A); }));
        } else {
            auto x = io::matrix_from_json(j);
            auto G = crystal_graph(std::vector<MatrixElement>{x}, pick(0, x.A.size()),
                                   [](const MatrixElement& y, int i, bool r) { return matrix_op(y, i, r); },
                                   [](const MatrixElement& y) { return weight(y); }, budget);
            if (o.format == "dot") std::cout << graph_dot<MatrixElement>(G, [](const MatrixElement& y) { return to_string(y); });
            else emit(graph_json<MatrixElement>(G, [](const MatrixElement& y) { return io::to_json(y); }));
        }
    } catch (const BudgetExceeded& e) {
        emit({{"error", e.what()}, {"budget", budget}});
        return 1;
    }
    return 0;
}

int cmd_verify(const Opts& o) {
    verify::Params p;
    if (o.m >= 0) p.m = o.m;
    if (o.n >= 0) p.n = o.n;
    if (o.budget >= 0) p.budget = o.budget;
    if (!o.g.empty()) {
        try {
            p.g = GType::parse(o.g);
        } catch (const std::invalid_argument& e) {
            throw io::InputError(e.what());
        }
    }
    p.seed = o.seed;
    try {
        if (p.m) Alphabet(*p.m, p.n.value_or(1));
        if (p.n) Alphabet(p.m.value_or(1), *p.n);
    } catch (const std::invalid_argument& e) {
        throw io::InputError(e.what());
    }
    std::vector<const verify::Suite*> run;
    if (o.suite == "all") {
        for (auto& s : verify::suites()) run.push_back(&s);
    } else if (auto s = verify::find_suite(o.suite)) {
        run.push_back(s);
    } else {
        throw io::InputError("unknown suite '" + o.suite + "'");
    }
    json rep = json::array();
    bool all = true;
    for (auto* s : run) {
        auto r = s->run(p);
        all = all && r.passed;
        rep.push_back({{"suite", r.name},
                       {"passed", r.passed},
                       {"checked", r.outcome.checked},
                       {"failures", r.outcome.failures},
                       {"samples", r.outcome.samples},
                       {"notes", r.notes},
                       {"ms", static_cast<long long>(r.seconds * 1000)}});
    }
    emit({{"passed", all}, {"suites", rep}});
    return all ? 0 : 1;
}

int cmd_examples(const Opts&) {
    json rep = json::array();
    bool all = true;
    for (auto& f : fixtures::registry()) {
        json entry{{"name", f.name}, {"provenance", f.provenance}};
        try {
            auto e = f.expected().dump(), d = f.derived().dump();
            entry["match"] = e == d;
            if (e != d) {
                entry["expected"] = json::parse(e);
                entry["derived"] = json::parse(d);
            }
        } catch (const std::exception& ex) {
            entry["match"] = false;
            entry["error"] = ex.what();
        }
        all = all && entry["match"].get<bool>();
        rep.push_back(entry);
    }
    emit({{"passed", all}, {"fixtures", rep}});
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystal bases of super matrix models: correspondences, arrays, separation"};
    app.require_subcommand(1);
    Opts o;
    app.add_option("--g", o.g, "type b, c or d")->check(CLI::IsMember({"b", "c", "d"}));
    app.add_option("--m", o.m, "even letters");
    app.add_option("--n", o.n, "odd letters");
    app.add_option("--budget", o.budget, "entry budget for suites, vertex budget for graph");
    app.add_option("--seed", o.seed, "seed for randomized suites");
    app.add_option("--format", o.format, "graph output")->check(CLI::IsMember({"json", "dot"}));
    app.fallthrough();

    auto input = [&](CLI::App* c) { c->add_option("input", o.input, "JSON file, - for stdin"); };
    auto* kap = app.add_subcommand("kappa", "matrix element to tableau");
    input(kap);
    auto* unk = app.add_subcommand("unkappa", "tableau to matrix element");
    input(unk);
    auto* ap = app.add_subcommand("apply", "crystal operator on a matrix, tableau, word or array");
    input(ap);
    ap->add_option("--i", o.index, "operator index (0 for f0/e0 on matrices)");
    ap->add_option("--op", o.op, "f or e")->check(CLI::IsMember({"f", "e"}));
    auto* fm = app.add_subcommand("fmap", "the map F on a two-rowed array");
    input(fm);
    auto* sep = app.add_subcommand("separate", "body and tail of a spinor tuple");
    input(sep);
    auto* gr = app.add_subcommand("graph", "connected crystal component");
    input(gr);
    gr->add_option("--indices", o.indices, "operator indices, default 1..m+n-1");
    auto* ver = app.add_subcommand("verify", "run a property suite or all of them");
    ver->add_option("suite", o.suite, "suite name or all");
    auto* ex = app.add_subcommand("examples", "recompute every fixture and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*kap) return cmd_kappa(o);
        if (*unk) return cmd_unkappa(o);
        if (*ap) return cmd_apply(o);
        if (*fm) return cmd_fmap(o);
        if (*sep) return cmd_separate(o);
        if (*gr) return cmd_graph(o);
        if (*ver) return cmd_verify(o);
        if (*ex) return cmd_examples(o);
    } catch (const io::InputError& e) {
        emit({{"error", e.what()}});
        return 2;
    } catch (const std::invalid_argument& e) {
        emit({{"error", e.what()}});
        return 2;
    }
    return 2;
}
