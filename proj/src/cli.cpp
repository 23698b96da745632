#include "zrk/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <variant>

#include "zrk/builtins.hpp"
#include "zrk/certificates.hpp"
#include "zrk/errors.hpp"
#include "zrk/io.hpp"
#include "zrk/search.hpp"

namespace zrk {

namespace {

struct Options {
    std::string input;
    bool json = false;
    bool literal = false;
    bool occupancy = false;
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0;
    bool no_symmetry = false;
    unsigned threads = 1;
    bool allow_degenerate = false;
    std::size_t max_witnesses = 8;
    std::string statistic;
    int m = 0;
    int n = 0;
};

struct Input {
    std::optional<BuiltinId> builtin;
    std::variant<AugmentedGraph, SosDecomposition> value;
};

Input load(const std::string& spec) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.starts_with(prefix)) {
        auto id = parse_builtin(std::string_view(spec).substr(prefix.size()));
        if (!id) throw ParseError("unknown builtin \"" + spec.substr(prefix.size()) + "\" (g53, g55, g64, q55)");
        return Input{id, builtin_graph(*id)};
    }
    Json j = parse_json(read_file(spec));
    if (is_decomposition_json(j)) return Input{std::nullopt, decomposition_from_json(j)};
    return Input{std::nullopt, graph_from_json(j)};
}

const AugmentedGraph& graph_of(const Input& in, const char* command) {
    if (auto g = std::get_if<AugmentedGraph>(&in.value)) return *g;
    throw ParseError(std::string(command) + " needs a graph, not a decomposition");
}

ConditionOptions condition_options(const Options& o) {
    ConditionOptions c;
    c.reading = o.occupancy ? Condition2Reading::Occupancy : Condition2Reading::Literal;
    return c;
}

std::string reading_name(const Options& o) { return o.occupancy ? "occupancy" : "literal"; }

void print_labels(std::ostream& out, const Input& in) {
    if (!in.builtin || *in.builtin != BuiltinId::G64) return;
    auto labels = row_labels(*in.builtin);
    out << "rows:";
    for (std::size_t i = 0; i < labels.size(); ++i) out << " " << i + 1 << "=" << labels[i];
    out << "\n";
}

Json labels_json(const Input& in) {
    if (!in.builtin) return nullptr;
    return row_labels(*in.builtin);
}

std::string subject_text(const ConditionReport& r) {
    if (r.subject.size() == 2) return " " + to_string(Edge2(r.subject[0], r.subject[1]));
    if (r.subject.size() == 3) return " " + to_string(Edge3(r.subject[0], r.subject[1], r.subject[2]));
    return "";
}

void print_reports(std::ostream& out, const std::vector<ConditionReport>& reports) {
    for (const auto& r : reports) {
        out << (r.passed ? "PASS " : "FAIL ") << to_string(r.condition) << subject_text(r);
        if (r.vacuous) out << " (vacuous)";
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
    }
}

void emit(std::ostream& out, ReportKind kind, Json payload, std::vector<std::string> hypotheses) {
    out << to_json(Report{kind, std::move(payload), std::move(hypotheses)}).dump(2) << "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
    Input in = load(o.input);
    const auto& g = graph_of(in, "verify");
    auto reports = is_generalized_cycle_free(g, condition_options(o));
    bool ok = all_passed(reports);
    if (o.json) {
        Json p;
        p["input"] = o.input;
        p["graph"] = graph_to_json(g);
        p["row_labels"] = labels_json(in);
        p["condition2_reading"] = reading_name(o);
        p["passed"] = ok;
        p["conditions"] = Json::array();
        for (const auto& r : reports) p["conditions"].push_back(to_json(r));
        emit(out, ReportKind::Verify, std::move(p), {"generalized-cycle-free"});
    } else {
        out << o.input << ": " << g.rows() << "x" << g.cols() << ", |E1|=" << g.one_edges().size()
            << " |E2|=" << g.two_edges().size() << " |E3|=" << g.three_edges().size() << "\n";
        print_labels(out, in);
        print_reports(out, reports);
        out << (ok ? "generalized cycle-free" : "NOT generalized cycle-free") << " (" << reading_name(o)
            << " 2-edge reading)\n";
    }
    return ok ? kExitOk : kExitFailure;
}

int certify_q55(const Options& o, std::ostream& out) {
    auto r = verify_q55();
    if (o.json) {
        Json p = to_json(r);
        p["input"] = o.input;
        emit(out, ReportKind::Certify, std::move(p), {"rank-15-form", "base-dimension-14"});
    } else {
        auto mark = [](bool b) { return b ? "[ok]   " : "[FAIL] "; };
        out << "Q = P_G + (x2 y2 + x4 y4 + x5 y3)^2 on 5x5\n";
        out << mark(r.base_certified) << "base graph certified, rank " << r.base_certified_rank << "\n";
        out << mark(r.expansion_equal) << "the 15 listed squares expand to Q\n";
        out << mark(r.independent_rank == 15) << "independent rank of the 15 forms: " << r.independent_rank << "\n";
        out << mark(r.base_dimension == 14) << "dimension of the base vector span: " << r.base_dimension << "\n";
        out << mark(r.forced_equalities && r.triple_unit) << "w22 = w44 = w53 = u, |u| = 1\n";
        out << mark(r.orthogonal_to_base) << "u orthogonal to every base vector\n";
        out << mark(r.outside_base) << "u outside the base span\n";
        out << (r.passed() ? "conclusion: Q is a sum of 15 independent squares\n" : "conclusion: checks failed\n");
    }
    return r.passed() ? kExitOk : kExitFailure;
}

int cmd_certify(const Options& o, std::ostream& out) {
    Input in = load(o.input);
    if (in.builtin == BuiltinId::Q55) return certify_q55(o, out);
    const auto& g = graph_of(in, "certify");
    auto cert = certify_sos_rank(g, condition_options(o));
    if (o.json) {
        Json p = to_json(cert);
        p["input"] = o.input;
        p["row_labels"] = labels_json(in);
        if (in.builtin == BuiltinId::G64) {
            auto replay = replay_three_edge_orthogonality(g, canonical_decomposition(g));
            p["orthogonality_replay"] = to_json(replay);
        }
        emit(out, ReportKind::Certify, std::move(p), {"generalized-cycle-free", "rank-equals-edge-count"});
        return cert.valid ? kExitOk : kExitFailure;
    }

    auto mark = [](bool b) { return b ? "[ok]   " : "[FAIL] "; };
    out << o.input << ": " << g.rows() << "x" << g.cols() << ", |E1|=" << g.one_edges().size()
        << " |E2|=" << g.two_edges().size() << " |E3|=" << g.three_edges().size() << "\n";
    print_labels(out, in);
    out << "hypotheses (" << reading_name(o) << " 2-edge reading):\n";
    for (const auto& r : cert.reports) {
        out << "  " << mark(r.passed) << to_string(r.condition) << subject_text(r);
        if (!r.passed && !r.detail.empty()) out << ": " << r.detail;
        out << "\n";
    }
    out << "exact checks:\n";
    out << "  " << mark(cert.expansion_verified) << "canonical decomposition expands to P_G\n";
    out << "  " << mark(cert.strict_gram_pattern) << "vector assignment has the strict Gram pattern\n";
    out << "  " << mark(cert.decomposition_rank == cert.edge_count) << cert.edge_count << " forms, rank "
        << cert.decomposition_rank << "\n";
    for (const auto& note : cert.notes) out << "note: " << note << "\n";
    out << "hash: " << cert.hash << "\n";
    if (cert.valid)
        out << "conclusion: sos(P_G) = |E1| + |E2| + |E3| = " << *cert.claimed_rank << "\n";
    else
        out << "conclusion: hypotheses not met, no rank claim\n";
    return cert.valid ? kExitOk : kExitFailure;
}

int cmd_expand(const Options& o, std::ostream& out) {
    Input in = load(o.input);
    BiquadraticForm f(1, 1);
    std::size_t squares = 0;
    if (in.builtin == BuiltinId::Q55) {
        auto data = q55_data();
        if (expand(data.decomposition) != data.q) throw Error("builtin q55 is inconsistent");
        f = data.q;
        squares = data.decomposition.size();
    } else if (auto g = std::get_if<AugmentedGraph>(&in.value)) {
        f = build_form(*g);
        squares = g->edge_count();
    } else {
        const auto& d = std::get<SosDecomposition>(in.value);
        f = expand(d);
        squares = d.size();
    }
    if (o.json) {
        Json p;
        p["input"] = o.input;
        p["m"] = f.rows();
        p["n"] = f.cols();
        p["squares"] = squares;
        p["text"] = to_text(f);
        p["terms"] = form_to_json(f);
        emit(out, ReportKind::Expand, std::move(p), {});
    } else {
        out << to_text(f) << "\n";
    }
    return kExitOk;
}

int cmd_compute(const Options& o, std::ostream& out) {
    auto stat = parse_statistic(o.statistic);
    if (!stat) throw ParseError("unknown statistic \"" + o.statistic + "\" (z, zl, z3l, z3a)");
    SearchConfig cfg;
    cfg.reading = o.occupancy ? Condition2Reading::Occupancy : Condition2Reading::Literal;
    cfg.symmetry = !o.no_symmetry;
    cfg.allow_degenerate_two_edges = o.allow_degenerate;
    cfg.budget_nodes = o.budget_nodes;
    cfg.budget_seconds = o.budget_seconds;
    cfg.threads = o.threads;
    cfg.max_witnesses = o.max_witnesses;
    cfg.seed = o.seed;
    auto r = compute(*stat, o.m, o.n, cfg);
    if (o.json) {
        emit(out, ReportKind::Search, to_json(r), {to_string(*stat)});
    } else {
        out << to_string(r.statistic) << "(" << r.m << "," << r.n << ") = " << r.value
            << (r.exhaustive ? " (exhaustive)" : " (best found, budget exhausted)") << "\n";
        out << "nodes: " << r.nodes_explored << ", seconds: " << r.seconds
            << ", threads: " << effective_threads(cfg) << "\n";
        if (r.published_value)
            out << "published: " << (r.published_is_lower_bound ? ">= " : "") << *r.published_value << "\n";
        for (const auto& flag : r.flags) out << "flag: " << flag << "\n";
        for (const auto& w : r.witnesses) out << "witness: " << serialize_graph(w) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Augmented Zarankiewicz numbers and SOS rank certificates"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "Emit a JSON report");
        sub->add_flag("--literal-def32", o.literal, "2-edge restriction counts E1 and 2-edge halves (default)");
        sub->add_flag("--occupancy-cond2", o.occupancy, "2-edge restriction counts every occupied cell");
        sub->add_option("--seed", o.seed, "Seed recorded in reports");
    };

    auto* verify = app.add_subcommand("verify", "Check the cycle conditions of a graph");
    verify->add_option("input", o.input, "builtin:NAME or a graph JSON file")->required();
    common(verify);

    auto* certify = app.add_subcommand("certify", "Emit an SOS rank certificate");
    certify->add_option("input", o.input, "builtin:NAME or a graph JSON file")->required();
    common(certify);

    auto* expand_cmd = app.add_subcommand("expand", "Print the biquadratic form");
    expand_cmd->add_option("input", o.input, "builtin:NAME, a graph or a decomposition JSON file")->required();
    common(expand_cmd);

    auto* compute_cmd = app.add_subcommand("compute", "Exhaustive search for z, zl, z3l or z3a");
    compute_cmd->add_option("statistic", o.statistic, "z, zl, z3l or z3a")->required();
    compute_cmd->add_option("m", o.m, "rows")->required();
    compute_cmd->add_option("n", o.n, "columns")->required();
    common(compute_cmd);
    compute_cmd->add_option("--budget-nodes", o.budget_nodes, "Node budget (0: unlimited)");
    compute_cmd->add_option("--budget-seconds", o.budget_seconds, "Time budget (0: unlimited)");
    compute_cmd->add_flag("--no-symmetry", o.no_symmetry, "Disable row-order symmetry pruning");
    compute_cmd->add_option("--threads", o.threads, "Worker threads (capped by ZRK_THREADS; 1 under a node budget)")
        ->check(CLI::Range(1u, 256u));
    compute_cmd->add_flag("--allow-degenerate-2edges", o.allow_degenerate, "Let the search place degenerate 2-edges");
    compute_cmd->add_option("--max-witnesses", o.max_witnesses, "Witnesses kept")->check(CLI::Range(1, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (o.literal && o.occupancy) {
        err << "error: --literal-def32 and --occupancy-cond2 are exclusive\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(o, out);
        if (certify->parsed()) return cmd_certify(o, out);
        if (expand_cmd->parsed()) return cmd_expand(o, out);
        return cmd_compute(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        // Malformed input graphs: out-of-range cells, degenerate 3-edges, repeated cells in an edge.
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace zrk
