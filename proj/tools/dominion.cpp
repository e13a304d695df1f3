#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dominion/approx.hpp"
#include "dominion/audit.hpp"
#include "dominion/errors.hpp"
#include "dominion/io.hpp"
#include "dominion/transforms.hpp"

using namespace dominion;

namespace {

struct Options {
    std::string param, graph, entry, witness_arg, family, out, in, kind, format = "json";
    int size = 0, max_size = 5, corpus = 0, max_n = 8;
    std::uint64_t budget = kDefaultBudget, seed = 0;
    bool witness = false, all = false, unbounded = false, table = false, extract = false, hasse = false,
         list = false;
};

Param parse_param(const std::string& name) {
    auto p = param_from_name(name);
    if (!p) throw Error(ErrorCode::UnknownName, "unknown parameter " + name);
    return *p;
}

Family parse_family(const std::string& name) {
    auto f = family_from_name(name);
    if (!f) throw Error(ErrorCode::UnknownName, "unknown family " + name);
    return *f;
}

std::string csv_cell(const json& v) {
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
}

// Table-emitting commands print an array of flat rows as JSON or CSV.
void emit_table(const Options& o, const json& rows, const json& meta = json::object()) {
    if (o.format == "csv") {
        if (rows.empty()) return;
        bool first = true;
        for (const auto& [key, _] : rows.front().items()) {
            std::cout << (first ? "" : ",") << key;
            first = false;
        }
        std::cout << '\n';
        for (const auto& row : rows) {
            first = true;
            for (const auto& [_, v] : row.items()) {
                std::cout << (first ? "" : ",") << csv_cell(v);
                first = false;
            }
            std::cout << '\n';
        }
        return;
    }
    json out = meta;
    out["rows"] = rows;
    std::cout << out.dump() << '\n';
}

json pair_name(Param row, Param col) {
    return std::to_string(index_of(row) + 1) + "," + std::to_string(index_of(col) + 1);
}

json violation_json(const Violation& v) {
    return json{{"entry", pair_name(v.row, v.col)}, {"row", info(v.row).name},   {"col", info(v.col).name},
                {"rule", v.rule},                   {"row_value", value_json(v.row_value)},
                {"col_value", value_json(v.col_value)}, {"limit", rational_json(v.limit)}};
}

int cmd_compute(const Options& o) {
    Param p = parse_param(o.param);
    Graph g = read_graph_file(o.graph);
    Solution s = solve(p, g, o.budget);
    json out{{"value", value_json(s.value)}};
    if (o.witness) out["witness"] = s.witness ? witness_json(p, *s.witness) : json(nullptr);
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_approx(const Options& o) {
    Param p = parse_param(o.param);
    Graph g = read_graph_file(o.graph);
    ApproxResult r = approximate(p, g);
    std::cout << json{{"witness", witness_json(p, r.witness)}, {"weight", r.weight}, {"ratio_bound", r.ratio_bound}}
                     .dump()
              << '\n';
    return 0;
}

int cmd_transform(const Options& o) {
    if (o.list) {
        json rows = json::array();
        for (const auto& t : transforms())
            rows.push_back({{"id", t.id},
                            {"target", info(t.target).name},
                            {"source", info(t.source).name},
                            {"a", rational_json(t.a)},
                            {"b", rational_json(t.b)},
                            {"side", side_condition_name(t.side)}});
        emit_table(o, rows);
        return 0;
    }
    if (o.entry.empty() || o.graph.empty() || o.witness_arg.empty())
        throw CLI::RequiredError("--entry, --graph and --witness");
    const Transform& t = find_transform(o.entry);
    Graph g = read_graph_file(o.graph);
    ParsedWitness src = witness_from_json(json_argument(o.witness_arg));
    if (src.param != t.source)
        throw Error(ErrorCode::WitnessShapeMismatch,
                    std::string("transform expects a ") + info(t.source).name + " witness");
    TransformResult r = run(t, g, src.witness);
    GuaranteeReport rep = verify_guarantee(t, g, src.witness);
    json out{{"entry", t.id},
             {"witness", witness_json(t.target, r.witness)},
             {"report",
              {{"source_weight", rep.source_weight},
               {"target_weight", rep.target_weight},
               {"bound", rational_json(rep.bound)},
               {"feasible", rep.feasible},
               {"pass", rep.pass},
               {"steps", r.steps}}}};
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_generate(const Options& o) {
    Family f = parse_family(o.family);
    Graph g = generate(f, o.size);
    if (o.out.empty()) {
        write_graph(std::cout, g);
        return 0;
    }
    std::ofstream file(o.out);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + o.out);
    write_graph(file, g);
    std::cout << json{{"family", family_name(f)}, {"size", o.size}, {"n", g.n()}, {"m", g.m()}}.dump() << '\n';
    return 0;
}

int cmd_audit(const Options& o) {
    if (o.table) {
        json rows = json::array();
        for (const auto& bd : bound_table()) {
            const char* kind = bd.kind == BoundKind::Equal ? "equal" : bd.kind == BoundKind::Linear ? "linear" : "none";
            rows.push_back({{"entry", pair_name(bd.row, bd.col)},
                            {"row", info(bd.row).name},
                            {"col", info(bd.col).name},
                            {"kind", kind},
                            {"a", rational_json(bd.a)},
                            {"b", rational_json(bd.b)},
                            {"condition", condition_name(bd.condition)}});
        }
        std::ostringstream hex;
        hex << std::hex << fnv1a(bound_table_text());
        emit_table(o, rows, {{"checksum", hex.str()}});
        return 0;
    }
    json rows = json::array();
    json meta;
    if (!o.graph.empty()) {
        Graph g = read_graph_file(o.graph);
        for (const auto& v : audit_graph(g, o.budget)) rows.push_back(violation_json(v));
        meta = {{"n", g.n()}, {"m", g.m()}};
    } else if (o.corpus > 0) {
        auto corpus = seeded_corpus(o.seed, o.corpus, o.max_n);
        for (std::size_t i = 0; i < corpus.size(); ++i)
            for (const auto& v : audit_graph(corpus[i], o.budget)) {
                json row{{"graph", i}};
                row.update(violation_json(v));
                rows.push_back(row);
            }
        meta = {{"graphs", o.corpus}, {"seed", o.seed}, {"max_n", o.max_n}};
    } else {
        throw CLI::RequiredError("--graph, --corpus or --table");
    }
    meta["violations"] = rows.size();
    emit_table(o, rows, meta);
    return 0;
}

std::vector<int> sizes_up_to(Family f, int max_size) {
    std::vector<int> out;
    for (int k = min_size(f); k <= max_size; ++k) out.push_back(k);
    return out;
}

int cmd_sharpness(const Options& o) {
    std::vector<std::pair<Param, Param>> cells;
    if (!o.entry.empty()) {
        auto comma = o.entry.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--entry", "expected r,c");
        int r = std::stoi(o.entry.substr(0, comma)), c = std::stoi(o.entry.substr(comma + 1));
        if (r < 1 || r > kMainCount || c < 1 || c > kMainCount)
            throw Error(ErrorCode::IndexOutOfRange, "entry outside the table");
        cells.emplace_back(main_param(r - 1), main_param(c - 1));
    } else if (!o.all) {
        throw CLI::RequiredError("--all or --entry");
    }
    json rows = json::array();
    int failures = 0;
    auto wanted = [&](Param r, Param c) {
        if (o.all) return true;
        return cells.front() == std::pair{r, c};
    };
    if (!o.unbounded) {
        for (const auto& s : sharpness_assignments()) {
            if (!wanted(s.row, s.col)) continue;
            for (int k : sizes_up_to(s.family, o.max_size)) {
                json row{{"entry", pair_name(s.row, s.col)},
                         {"family", family_name(s.family)},
                         {"bracketed", s.bracketed},
                         {"size", k}};
                try {
                    auto r = sharpness_check(s, k, o.budget);
                    failures += !r.pass;
                    row.update({{"row_value", value_json(r.row_value)},
                                {"col_value", value_json(r.col_value)},
                                {"bound", rational_json(r.bound)},
                                {"status", r.pass ? "pass" : "fail"}});
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::GraphTooLarge) throw;
                    row.update({{"row_value", nullptr}, {"col_value", nullptr}, {"bound", nullptr},
                                {"status", "too_large"}});
                }
                rows.push_back(row);
            }
        }
    } else {
        for (const auto& bd : bound_table()) {
            if (bd.kind != BoundKind::NoBound || !wanted(bd.row, bd.col)) continue;
            std::vector<int> sizes;
            for (int k = 3; k <= std::max(o.max_size, 3); ++k) sizes.push_back(k);
            auto r = unbounded_check(bd.row, bd.col, sizes, o.budget);
            failures += !r.pass;
            json rv = json::array(), cv = json::array();
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                rv.push_back(value_json(r.row_values[i]));
                cv.push_back(value_json(r.col_values[i]));
            }
            std::string rs, cs;
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                rs += (i ? " " : "") + r.row_values[i].str();
                cs += (i ? " " : "") + r.col_values[i].str();
            }
            rows.push_back({{"entry", pair_name(bd.row, bd.col)},
                            {"family", family_name(r.family)},
                            {"row_values", o.format == "csv" ? json(rs) : rv},
                            {"col_values", o.format == "csv" ? json(cs) : cv},
                            {"status", r.pass ? "pass" : "fail"}});
        }
    }
    emit_table(o, rows, {{"checked", rows.size()}, {"failures", failures}});
    return 0;
}

int cmd_reduce(const Options& o) {
    json input = read_json_file(o.in);
    json out{{"kind", o.kind}};
    Graph g;
    if (o.kind == "setcover") {
        SetCoverInstance j = set_cover_from_json(input);
        SetCoverGadget gadget = set_cover_to_split(j);
        g = gadget.graph;
        out["clique"] = gadget.partition.clique;
        out["independent"] = gadget.partition.independent;
        if (o.extract) {
            Solution s = solve(Param::RGamma2, g, o.budget);
            out["rgamma_2"] = value_json(s.value);
            out["cover"] = split_witness_to_cover(j, *s.witness);
        }
    } else {
        Hypergraph h = hypergraph_from_json(input);
        HypergraphGadget gadget = hypergraph_to_split(h);
        g = gadget.graph;
        out["clique"] = gadget.partition.clique;
        out["independent"] = gadget.partition.independent;
        if (o.extract) {
            Solution s = solve(Param::RGammaTX2, g, o.budget);
            out["rgamma_tx2"] = value_json(s.value);
            out["coloring"] = s.witness ? json(coloring_extraction(h, *s.witness)) : json(nullptr);
        }
    }
    out["n"] = g.n();
    out["m"] = g.m();
    if (!o.out.empty()) {
        std::ofstream file(o.out);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write " + o.out);
        write_graph(file, g);
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_covers(const Options& o) {
    if (o.hasse) {
        Structure s = hasse_and_classes();
        json rows = json::array();
        for (const auto& [lo, hi] : s.covers) rows.push_back({{"lower", info(lo).name}, {"upper", info(hi).name}});
        json classes = json::array();
        for (const auto& c : s.classes) {
            json names = json::array();
            for (Param p : c) names.push_back(info(p).name);
            classes.push_back(names);
        }
        emit_table(o, rows, {{"classes", classes}, {"linear", s.linear}});
        return 0;
    }
    if (o.graph.empty()) throw CLI::RequiredError("--graph or --hasse");
    Graph g = read_graph_file(o.graph);
    json rows = json::array();
    for (Param p : {Param::Rho, Param::Rho2, Param::Tau2}) {
        Solution s = solve_cover(p, g, o.budget);
        json row{{"parameter", info(p).name}, {"value", value_json(s.value)}};
        if (o.witness) row["witness"] = s.witness ? witness_json(p, *s.witness) : json(nullptr);
        rows.push_back(row);
    }
    emit_table(o, rows, {{"n", g.n()}, {"m", g.m()}});
    return 0;
}

int cmd_identities(const Options& o) {
    Graph g = read_graph_file(o.graph);
    json rows = json::array();
    auto value = [&](Param p) { return solve(p, g, o.budget).value; };
    auto check = [&](const std::string& name, const Value& lhs, const Value& rhs, bool applies) {
        rows.push_back({{"identity", name},
                        {"lhs", value_json(lhs)},
                        {"rhs", value_json(rhs)},
                        {"status", !applies ? "skip" : lhs == rhs ? "pass" : "fail"}});
    };
    auto twice = [](const Value& v) { return v.finite() ? Value::finite_value(2 * v.get()) : v; };
    bool no_isolated = g.n() > 0 && g.min_degree() >= 1;
    check("rgamma_x2 = gammagamma", value(Param::RGammaX2), solve_disjoint(Param::GammaGamma, g).value, true);
    check("rgamma_tx2 = gammat_gammat", value(Param::RGammaTX2), solve_disjoint(Param::GammaTGammaT, g).value,
          true);
    check("rgamma_set2 = 2 gamma", value(Param::RGammaSet2), twice(value(Param::Gamma)), true);
    check("rgamma_tset2 = 2 gamma_t", value(Param::RGammaTSet2), twice(value(Param::GammaT)), true);
    Value r2 = value(Param::Rho2), t2 = value(Param::Tau2);
    Value sum = r2.finite() && t2.finite() ? Value::finite_value(r2.get() + t2.get()) : Value::infinite();
    check("rho_2 + tau_2 = 2n", sum, Value::finite_value(2LL * g.n()), no_isolated);
    emit_table(o, rows, {{"n", g.n()}, {"m", g.m()}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domination parameters: exact values, transforms, approximation and audits"};
    app.require_subcommand(1);
    Options o;
    auto budget = [&](CLI::App* c) { c->add_option("--budget", o.budget, "Branch node budget"); };
    auto format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* compute = app.add_subcommand("compute", "Exact value of a parameter");
    compute->add_option("--param", o.param)->required();
    compute->add_option("--graph", o.graph)->required();
    compute->add_flag("--witness", o.witness, "Include an optimal witness");
    budget(compute);

    auto* approx = app.add_subcommand("approx", "Greedy approximation with its ratio bound");
    approx->add_option("--param", o.param)->required();
    approx->add_option("--graph", o.graph)->required();

    auto* transform = app.add_subcommand("transform", "Run a constructive bound on a witness");
    transform->add_option("--entry", o.entry, "Table cell r,c or target<source");
    transform->add_option("--graph", o.graph);
    transform->add_option("--witness", o.witness_arg, "Witness JSON, inline or a file");
    transform->add_flag("--list", o.list, "List available transforms");
    format(transform);

    auto* gen = app.add_subcommand("generate", "Write a family member as a graph file");
    gen->add_option("--family", o.family)->required();
    gen->add_option("--size", o.size)->required();
    gen->add_option("--out", o.out);

    auto* audit = app.add_subcommand("audit", "Check the bound table against exact values");
    audit->add_option("--graph", o.graph);
    audit->add_option("--corpus", o.corpus, "Number of seeded random graphs");
    audit->add_option("--seed", o.seed);
    audit->add_option("--max-n", o.max_n);
    audit->add_flag("--table", o.table, "Print the encoded bound table");
    budget(audit);
    format(audit);

    auto* sharp = app.add_subcommand("sharpness", "Check the sharpness families");
    sharp->add_flag("--all", o.all);
    sharp->add_option("--entry", o.entry, "Table cell r,c");
    sharp->add_option("--max-size", o.max_size);
    sharp->add_flag("--unbounded", o.unbounded, "Growth evidence for the cells without a bound");
    budget(sharp);
    format(sharp);

    auto* reduce = app.add_subcommand("reduce", "Build a hardness gadget");
    reduce->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"setcover", "hyp2col"}));
    reduce->add_option("--in", o.in)->required();
    reduce->add_option("--out", o.out);
    reduce->add_flag("--extract", o.extract, "Solve the gadget and map the solution back");
    budget(reduce);

    auto* covers = app.add_subcommand("covers", "Edge and vertex covers, or the order diagram");
    covers->add_option("--graph", o.graph);
    covers->add_flag("--witness", o.witness);
    covers->add_flag("--hasse", o.hasse, "Covering pairs and the classes of the preorder");
    budget(covers);
    format(covers);

    auto* ident = app.add_subcommand("identities", "Cross-check the rainbow and cover identities");
    ident->add_option("--graph", o.graph)->required();
    budget(ident);
    format(ident);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) return cmd_compute(o);
        if (*approx) return cmd_approx(o);
        if (*transform) return cmd_transform(o);
        if (*gen) return cmd_generate(o);
        if (*audit) return cmd_audit(o);
        if (*sharp) return cmd_sharpness(o);
        if (*reduce) return cmd_reduce(o);
        if (*covers) return cmd_covers(o);
        if (*ident) return cmd_identities(o);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const BudgetExhausted& e) {
        json out{{"error", error_name(e.code())}, {"message", e.what()}};
        if (e.incumbent) out["incumbent"] = e.incumbent->values;
        std::cout << out.dump() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cout << json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }
    return 2;
}
