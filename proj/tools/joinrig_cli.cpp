// joinrig command-line tool.
//
// Exit codes: 0 success, 1 expectation failed, 2 invalid input,
// 3 internal disagreement between trials or engines.

#include "joinrig/joinrig.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace joinrig;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_expectation = 1;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

struct RunConfig {
    std::size_t dim = 0;
    std::uint64_t seed = 1;
    std::size_t trials = 2;
    std::string field = "prime";
    std::string format = "json";
    std::string output;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw InputError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("JOINRIG_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable JOINRIG_SEED=" << env << '\n';
        }
    }
    return 1;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw InputError(path + ": " + ex.what());
    }
}

void add_run_options(CLI::App* cmd, RunConfig& cfg, bool need_dim) {
    auto* dim = cmd->add_option("--dim,-d", cfg.dim, "Ambient dimension d")->check(CLI::PositiveNumber);
    if (need_dim)
        dim->required();
    cmd->add_option("--seed", cfg.seed, "RNG seed (default: $JOINRIG_SEED or 1)");
    cmd->add_option("--trials", cfg.trials, "Independent random configurations")->check(CLI::PositiveNumber);
    cmd->add_option("--field", cfg.field, "Exact field")->check(CLI::IsMember({"prime", "rational"}));
    cmd->add_option("--output,-o", cfg.output, "Write to this file instead of stdout");
}

template <class Fn>
int with_field(const std::string& field, Fn&& fn) {
    if (field == "rational")
        return fn.template operator()<Rational>();
    return fn.template operator()<Fp>();
}

// ------------------------------------------------------------------ gen

struct GenArgs {
    std::string family;
    std::string preset;
    bool list = false;
    FamilySpec spec;
    std::size_t n = 0;
    std::string host = "";
    std::vector<std::size_t> chain;
};

int cmd_gen(const GenArgs& args, const RunConfig& cfg) {
    Output out(cfg.output);
    if (args.list) {
        for (const auto& p : presets())
            out.stream() << p.name << "\t" << json(family_spec_to_json(p.spec)).dump() << "\t" << p.description
                         << '\n';
        return exit_ok;
    }
    FamilySpec s = args.spec;
    s.d = cfg.dim;
    if (!args.host.empty())
        s.host_size = parse_complete_host(args.host);
    Graph g;
    std::optional<JoinStructure> js;
    const auto& f = args.family;
    if (f == "preset") {
        auto p = find_preset(args.preset);
        if (!p)
            throw InputError("unknown preset \"" + args.preset + "\" (see gen --list)");
        g = build_family(p->spec);
        js = recognize_balanced_join(g, p->spec.d);
    } else if (f == "complete") {
        g = complete(args.n);
    } else if (f == "empty") {
        g = empty_graph(args.n);
    } else if (f == "bipartite") {
        g = complete_bipartite(s.a, s.b);
        js = recognize_join(g);
    } else if (f == "connelly") {
        g = connelly_graph(s.a, s.b, s.d);
        js = recognize_join(g);
    } else if (f == "partial-coning") {
        auto j = partial_coning_graph(s.a, s.b, s.d);
        g = j.graph;
        js = j.structure;
    } else if (f == "h-graph") {
        auto j = h_graph(s.d);
        g = j.graph;
        js = j.structure;
    } else if (f == "chain") {
        s.kind = FamilyKind::chain_attachment;
        g = build_family(s);
        js = recognize_balanced_join(g, s.d);
    } else if (f == "chain-general") {
        s.kind = FamilyKind::chain_attachment_general;
        g = build_family(s);
    } else if (f == "chain-custom") {
        if (args.chain.size() != 4)
            throw InputError("--chain needs four layer sizes");
        s.kind = FamilyKind::chain_custom;
        std::copy(args.chain.begin(), args.chain.end(), s.chain.begin());
        g = build_family(s);
    } else {
        throw InputError("unknown family \"" + f + "\"");
    }
    if (cfg.format == "dot")
        out.stream() << to_dot(g, js);
    else
        out.stream() << graph_to_json(g).dump() << '\n';
    return exit_ok;
}

// ------------------------------------------------------------------ check

struct CheckArgs {
    std::string graph_path;
    std::string expect;
    std::string engine = "both";
    bool witnesses = false;
};

template <ExactField F>
int run_check(const CheckArgs& args, const RunConfig& cfg) {
    const Graph g = graph_from_json(read_json_file(args.graph_path));
    ReportOptions opts{.seed = cfg.seed, .trials = cfg.trials, .witnesses = args.witnesses};
    auto rep = hendrickson_report<F>(g, cfg.dim, opts);
    if (args.engine != "rm") {
        bool applied = attach_qrm_summary<F>(rep, g, cfg.dim, opts);
        if (!applied)
            std::cerr << "notice: not a balanced join in dimension " << cfg.dim
                      << "; using the rigidity-matrix engine only\n";
        if (applied && *rep.qrm_glr != rep.glr) {
            std::cerr << "error: QRM and rigidity-matrix engines disagree on GLR\n";
            return exit_internal;
        }
    }
    Output out(cfg.output);
    if (cfg.format == "text")
        out.stream() << report_to_text(rep);
    else
        out.stream() << report_to_json(rep).dump(2) << '\n';

    if (args.expect.empty())
        return exit_ok;
    bool met = false;
    const bool engine_glr = args.engine == "qrm" && rep.qrm_glr ? *rep.qrm_glr : rep.glr;
    if (args.expect == "glr")
        met = engine_glr;
    else if (args.expect == "grr")
        met = rep.grr;
    else if (args.expect == "hendrickson")
        met = rep.hendrickson_pass;
    else if (args.expect == "not-ggr")
        met = rep.ggr.verdict == GgrVerdict::not_ggr_probable;
    if (!met)
        std::cerr << "expectation \"" << args.expect << "\" failed\n";
    return met ? exit_ok : exit_expectation;
}

// ------------------------------------------------------------------ recognize

int cmd_recognize(const std::string& path, const RunConfig& cfg) {
    const Graph g = graph_from_json(read_json_file(path));
    auto js = recognize_balanced_join(g, cfg.dim);
    Output out(cfg.output);
    if (!js) {
        out.stream() << "not a balanced join\n";
        return exit_ok;
    }
    if (cfg.format == "dot")
        out.stream() << to_dot(g, js);
    else if (cfg.format == "text")
        out.stream() << "left " << js->left.size() << ", right " << js->right.size() << ", extraneous "
                     << js->extraneous.size() << '\n';
    else
        out.stream() << join_to_json(*js).dump() << '\n';
    return exit_ok;
}

// ------------------------------------------------------------------ qrm

struct QrmArgs {
    std::string graph_path;
    std::string coords_path;
    std::string join_path;
    bool print = false;
    bool rank_only = false;
    bool flexes = false;
};

template <ExactField F>
int run_qrm(const QrmArgs& args, const RunConfig& cfg) {
    const Graph g = graph_from_json(read_json_file(args.graph_path));
    JoinStructure js;
    if (!args.join_path.empty()) {
        js = join_from_json(read_json_file(args.join_path));
        if (auto why = join_structure_violation(g, js))
            throw InputError("join structure: " + *why);
    } else {
        js = require_balanced_join(g, cfg.dim);
    }
    Configuration<F> p;
    if (!args.coords_path.empty()) {
        p = configuration_from_json<F>(read_json_file(args.coords_path));
        if (p.size() != g.vertex_count() || p.dim() != cfg.dim)
            throw InputError("coordinates do not match the graph size or --dim");
    } else {
        Rng rng(cfg.seed);
        p = random_configuration<F>(g.vertex_count(), cfg.dim, rng);
    }
    Output out(cfg.output);
    if (args.rank_only) {
        if (args.coords_path.empty()) {
            Rng rng(cfg.seed);
            out.stream() << qrm_rank<F>(js, cfg.dim, rng, cfg.trials) << '\n';
        } else {
            out.stream() << rank(qrm(js, p)) << '\n';
        }
        return exit_ok;
    }
    if (args.flexes) {
        std::vector<FlexVector<F>> flexes;
        for (const auto& qc : quadric_basis(js, p))
            flexes.push_back(quadric_flex(qc, js, p));
        if (cfg.format == "text")
            out.stream() << flexes.size() << " quadric flexes\n";
        out.stream() << flexes_to_json(flexes).dump() << '\n';
        return exit_ok;
    }
    const auto m = qrm(js, p);
    const auto cols = qrm_column_names(cfg.dim);
    if (cfg.format == "text") {
        std::vector<std::string> labels;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            labels.push_back("v" + std::to_string(v + 1));
        auto ext = js.extraneous;
        std::sort(ext.begin(), ext.end());
        for (const auto& e : ext)
            labels.push_back("v" + std::to_string(e.u + 1) + "v" + std::to_string(e.v + 1));
        out.stream() << matrix_to_text(m, cols, labels);
    } else {
        out.stream() << matrix_to_json(m, cols).dump() << '\n';
    }
    return exit_ok;
}

// ------------------------------------------------------------------ report

template <ExactField F>
int run_report(const std::string& target, const RunConfig& cfg) {
    FamilySpec spec;
    if (auto p = find_preset(target))
        spec = p->spec;
    else
        spec = family_spec_from_json(read_json_file(target));
    ReportOptions opts{.seed = cfg.seed, .trials = cfg.trials};
    auto v = verify_family<F>(spec, opts);
    Output out(cfg.output);
    if (cfg.format == "text")
        out.stream() << report_to_text(v.report);
    else
        out.stream() << verification_to_json(v).dump(2) << '\n';
    for (const auto& c : v.claims) {
        out.stream() << (c.hypothesis ? (c.pass ? "HOLDS " : "UNMET ") : (c.pass ? "PASS " : "FAIL ")) << c.name;
        if (!c.detail.empty())
            out.stream() << " (" << c.detail << ")";
        out.stream() << '\n';
    }
    return v.all_pass() ? exit_ok : exit_expectation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"joinrig: generic rigidity of graphs and joined graphs"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.seed = default_seed();

    auto* gen = app.add_subcommand("gen", "Generate a family graph as JSON or DOT");
    GenArgs gen_args;
    gen->add_option("family", gen_args.family,
                    "connelly | partial-coning | h-graph | chain | chain-general | chain-custom | complete | "
                    "empty | bipartite | preset");
    gen->add_option("name", gen_args.preset, "Preset name (with family = preset)");
    gen->add_flag("--list", gen_args.list, "List presets");
    gen->add_option("--a", gen_args.spec.a);
    gen->add_option("--b", gen_args.spec.b);
    gen->add_option("--i", gen_args.spec.i);
    gen->add_option("--x", gen_args.spec.x);
    gen->add_option("--n", gen_args.n);
    gen->add_option("--host", gen_args.host, "Complete host graph, e.g. K6");
    gen->add_option("--chain", gen_args.chain, "Four layer sizes for chain-custom")->expected(4);
    gen->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));
    add_run_options(gen, cfg, false);

    auto* check = app.add_subcommand("check", "Rigidity report for a graph file");
    CheckArgs check_args;
    check->add_option("graph", check_args.graph_path, "Graph JSON file")->required();
    check->add_option("--expect", check_args.expect)->check(CLI::IsMember({"glr", "grr", "hendrickson", "not-ggr"}));
    check->add_option("--engine", check_args.engine)->check(CLI::IsMember({"qrm", "rm", "both"}));
    check->add_flag("--witnesses", check_args.witnesses, "Include exact stress and flex vectors");
    check->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
    add_run_options(check, cfg, true);

    auto* recog = app.add_subcommand("recognize", "Find a balanced join decomposition");
    std::string recog_path;
    recog->add_option("graph", recog_path, "Graph JSON file")->required();
    recog->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text", "dot"}));
    add_run_options(recog, cfg, true);

    auto* qrm_cmd = app.add_subcommand("qrm", "Quadric rigidity matrix: print, rank or flexes");
    QrmArgs qrm_args;
    qrm_cmd->add_option("graph", qrm_args.graph_path, "Graph JSON file")->required();
    qrm_cmd->add_option("--coords", qrm_args.coords_path, "Exact coordinates JSON (otherwise random)");
    qrm_cmd->add_option("--join", qrm_args.join_path, "Explicit join structure JSON (otherwise recognized)");
    auto* print_flag = qrm_cmd->add_flag("--print", qrm_args.print, "Print the matrix (default)");
    auto* rank_flag = qrm_cmd->add_flag("--rank", qrm_args.rank_only, "Print the rank");
    auto* flex_flag = qrm_cmd->add_flag("--flexes", qrm_args.flexes, "Dump the quadric flexes");
    print_flag->excludes(rank_flag)->excludes(flex_flag);
    rank_flag->excludes(flex_flag);
    qrm_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
    add_run_options(qrm_cmd, cfg, true);

    auto* report = app.add_subcommand("report", "Verify a family preset or FamilySpec JSON file");
    std::string report_target;
    report->add_option("target", report_target, "Preset name or FamilySpec JSON file")->required();
    report->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
    add_run_options(report, cfg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (gen->parsed()) {
            if (!gen_args.list && gen_args.family.empty())
                throw InputError("gen needs a family name or --list");
            return cmd_gen(gen_args, cfg);
        }
        if (check->parsed())
            return with_field(cfg.field, [&]<class F>() { return run_check<F>(check_args, cfg); });
        if (recog->parsed())
            return cmd_recognize(recog_path, cfg);
        if (qrm_cmd->parsed())
            return with_field(cfg.field, [&]<class F>() { return run_qrm<F>(qrm_args, cfg); });
        if (report->parsed()) {
            if (cfg.dim != 0)
                std::cerr << "notice: --dim is taken from the family spec\n";
            return with_field(cfg.field, [&]<class F>() { return run_report<F>(report_target, cfg); });
        }
    } catch (const TrialDisagreement& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_internal;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_input;
    } catch (const std::out_of_range& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_input;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}
