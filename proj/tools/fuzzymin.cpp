// fuzzymin: minimize fuzzy interpretations and inspect fuzzy graphs.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fuzzymin/bisimulation.hpp"
#include "fuzzymin/errors.hpp"
#include "fuzzymin/io.hpp"
#include "fuzzymin/minimize.hpp"
#include "fuzzymin/refine.hpp"
#include "fuzzymin/semantics.hpp"
#include "fuzzymin/syntax.hpp"
#include "fuzzymin/verify.hpp"

namespace {

using namespace fuzzymin;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct Config {
    std::string input;
    std::string other;
    std::string relation;
    std::string features = "baaz,comp,union,star,test,universal";
    std::string algebra = "godel";
    std::string output;
    std::string expr;
    std::string at;
    bool prune = false;
    bool trace = false;
    std::uint64_t seed = 42;
    std::size_t cases = 200;
    std::size_t max_vertices = 25;
};

bool is_interpretation(const io::Json &j) { return j.is_object() && j.contains("domain"); }

void emit(const Config &cfg, const io::Json &j) {
    if (cfg.output.empty())
        std::cout << j.dump(2) << '\n';
    else
        io::write_json(cfg.output, j);
}

std::string block_text(std::span<const Vertex> block, const std::vector<std::string> &names) {
    std::string out = "{";
    for (std::size_t k = 0; k < block.size(); ++k) out += (k ? "," : "") + names[block[k]];
    return out + "}";
}

int cmd_minimize(const Config &cfg) {
    const FeatureSet phi = FeatureSet::parse_list(cfg.features);
    const Algebra alg = io::algebra_from_selector(cfg.algebra);
    Interpretation i = io::interpretation_from_json(io::read_json(cfg.input), alg);
    if (cfg.prune) {
        if (phi.has(Feature::Universal)) throw UsageError("--prune needs a feature set without \"universal\"");
        i = prune_unreachable(i, phi);
    }
    const auto start = std::chrono::steady_clock::now();
    const Minimization m = minimize_detailed(i, phi);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    emit(cfg, io::interpretation_to_json(m.result));
    char summary[160];
    std::snprintf(summary, sizeof summary, "n=%zu m=%zu l=%zu blocks=%zu elapsed_ms=%.3f", m.stats.n, m.stats.m,
                  m.stats.l, m.partition.size(), elapsed.count());
    std::cerr << summary << '\n';
    return kOk;
}

int cmd_partition(const Config &cfg) {
    const Algebra alg = io::algebra_from_selector(cfg.algebra);
    const io::Json doc = io::read_json(cfg.input);
    const FuzzyGraph g = is_interpretation(doc)
                             ? interpretation_to_graph(io::interpretation_from_json(doc, alg), FeatureSet::parse_list(cfg.features))
                             : io::graph_from_json(doc, alg);
    RefinementOptions opts;
    opts.record_trace = cfg.trace;
    const RefinementResult result = compute_coarsest_bisimulation(g, opts);
    if (cfg.trace) {
        std::cout << "initial: P = " << initial_partition(g).to_string(g.vertex_names()) << '\n';
        for (std::size_t k = 0; k < result.trace.size(); ++k) {
            const auto &step = result.trace[k];
            std::cout << "iteration " << k + 1 << ": <" << block_text(step.splitter, g.vertex_names()) << ", "
                      << block_text(step.compound, g.vertex_names()) << ", " << g.edge_label_names()[step.label]
                      << ">: " << (step.changed ? "P = " + step.after.to_string(g.vertex_names()) : "P unchanged")
                      << '\n';
        }
    }
    std::cout << result.partition.to_string(g.vertex_names()) << '\n';
    if (!cfg.output.empty()) io::write_json(cfg.output, io::partition_to_json(result.partition, g.vertex_names()));
    return kOk;
}

int cmd_eval(const Config &cfg) {
    const FeatureSet phi = FeatureSet::parse_list(cfg.features);
    const Algebra alg = io::algebra_from_selector(cfg.algebra);
    const Interpretation i = io::interpretation_from_json(io::read_json(cfg.input), alg);
    const ConceptPtr c = parse_concept(cfg.expr, phi);
    const auto values = eval_concept(i, *c, phi);
    if (cfg.at.empty()) {
        for (Element x = 0; x < i.size(); ++x) std::cout << i.element_name(x) << ' ' << values[x].to_decimal_string() << '\n';
        return kOk;
    }
    const auto x = i.find_element(cfg.at);
    const Element at = x ? *x : i.individual(cfg.at);
    std::cout << values[at].to_decimal_string() << '\n';
    return kOk;
}

int cmd_check(const Config &cfg) {
    const FeatureSet phi = FeatureSet::parse_list(cfg.features);
    const Algebra alg = io::algebra_from_selector(cfg.algebra);
    const Interpretation left = io::interpretation_from_json(io::read_json(cfg.input), alg);
    const Interpretation right =
        cfg.other.empty() ? left : io::interpretation_from_json(io::read_json(cfg.other), alg);
    const Relation z = io::relation_from_json(io::read_json(cfg.relation), left, right);
    const BisimulationReport report = is_bisimulation(left, right, z, phi);
    if (report.holds) {
        std::cout << "pass\n";
        return kOk;
    }
    std::cout << "fail: " << condition_name(*report.violated) << " violated at ("
              << (report.left ? left.element_name(*report.left) : "-") << ", "
              << (report.right ? right.element_name(*report.right) : "-") << "): " << report.detail << '\n';
    return kVerifyFailed;
}

int cmd_verify(const Config &cfg) {
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.cases = cfg.cases;
    opts.max_vertices = cfg.max_vertices;
    const VerifyReport report = run_verification(opts);
    for (const auto &line : report.failures) std::cout << "FAIL " << line << '\n';
    std::cout << "cases=" << report.cases << " passed=" << report.passed << " failed=" << report.failed << '\n';
    return report.ok() ? kOk : kVerifyFailed;
}

int cmd_stats(const Config &cfg) {
    const Algebra alg = io::algebra_from_selector(cfg.algebra);
    const io::Json doc = io::read_json(cfg.input);
    const FuzzyGraph g = is_interpretation(doc)
                             ? interpretation_to_graph(io::interpretation_from_json(doc, alg), FeatureSet::parse_list(cfg.features))
                             : io::graph_from_json(doc, alg);
    const GraphStats s = stats(g);
    std::cout << "n=" << s.n << " m=" << s.m << " l=" << s.l << '\n';
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Minimize finite fuzzy interpretations by crisp bisimulation"};
    app.require_subcommand(1);
    Config cfg;

    auto input = [&](CLI::App *sub, bool required) {
        auto *opt = sub->add_option("-i,--input", cfg.input, "Input JSON file");
        if (required) opt->required();
    };
    auto features = [&](CLI::App *sub) {
        sub->add_option("-f,--features", cfg.features, "Comma-separated features; must include baaz")
            ->capture_default_str();
    };
    auto algebra = [&](CLI::App *sub) {
        sub->add_option("-a,--algebra", cfg.algebra, "godel, product, lukasiewicz or lattice:PATH")->capture_default_str();
    };

    auto *minimize = app.add_subcommand("minimize", "Quotient an interpretation by its largest bisimulation");
    input(minimize, true);
    features(minimize);
    algebra(minimize);
    minimize->add_option("-o,--output", cfg.output, "Write the result here instead of stdout");
    minimize->add_flag("--prune", cfg.prune, "Drop elements unreachable from named individuals first");

    auto *partition = app.add_subcommand("partition", "Coarsest stable partition of a graph or interpretation");
    input(partition, true);
    features(partition);
    algebra(partition);
    partition->add_option("-o,--output", cfg.output, "Also write the partition as JSON");
    partition->add_flag("--trace", cfg.trace, "Print every refinement step");

    auto *eval = app.add_subcommand("eval", "Evaluate a concept expression");
    input(eval, true);
    features(eval);
    algebra(eval);
    eval->add_option("-e,--expr", cfg.expr, "Concept expression")->required();
    eval->add_option("--at", cfg.at, "Element or individual name; all elements if omitted");

    auto *check = app.add_subcommand("check", "Check a relation against the bisimulation conditions");
    input(check, true);
    features(check);
    algebra(check);
    check->add_option("--other", cfg.other, "Second interpretation (defaults to the first)");
    check->add_option("-r,--relation", cfg.relation, "JSON array of [x, x'] pairs")->required();

    auto *verify = app.add_subcommand("verify", "Run randomized differential and property checks");
    verify->add_option("-s,--seed", cfg.seed, "Random seed")->capture_default_str();
    verify->add_option("-c,--cases", cfg.cases, "Number of cases")->capture_default_str();
    verify->add_option("--max-vertices", cfg.max_vertices, "Largest random instance")->capture_default_str();

    auto *stats = app.add_subcommand("stats", "Print n, m and l of a graph or interpretation encoding");
    input(stats, true);
    features(stats);
    algebra(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*minimize) return cmd_minimize(cfg);
        if (*partition) return cmd_partition(cfg);
        if (*eval) return cmd_eval(cfg);
        if (*check) return cmd_check(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*stats) return cmd_stats(cfg);
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
