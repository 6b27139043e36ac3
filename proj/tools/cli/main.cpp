// graphcvx: generate graphs and lattices, run convexity and subharmonicity
// checks, verify claims and search for counterexamples.
//
// Exit status: 0 all checks pass, 1 some check fails (or a claim is refuted
// or never fired, or a search found a witness), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "instance.hpp"
#include "render.hpp"

using namespace graphcvx;
using namespace graphcvx::cli;

namespace {

struct Common {
    std::string format = "text";
    double tolerance = Tolerance{}.eps;

    Format output() const { return format == "json" ? Format::json : Format::text; }
    Tolerance tol() const { return Tolerance{tolerance}; }
};

struct InstanceFlags {
    std::string graph;
    LatticeFlags lattice;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--tolerance", common.tolerance, "Relative tolerance for equalities")
        ->check(CLI::PositiveNumber);
}

void add_instance(CLI::App* cmd, InstanceFlags& flags) {
    cmd->add_option("--graph", flags.graph, "Graph file");
    cmd->add_option("--lattice", flags.lattice.norm, "Lattice norm: l1, l2 or linf");
    cmd->add_option("--dim", flags.lattice.dimension, "Lattice dimension");
    cmd->add_option("--radius", flags.lattice.radius, "Adjacency radius")->check(CLI::PositiveNumber);
    cmd->add_option("--window", flags.lattice.window, "a:b,c:d,... per axis, or N points per axis around 0");
}

Json vertex_list(const Graph& graph, const VertexSet& set) {
    Json out = Json::array();
    for (VertexId v : set.members()) out.push_back(graph.name(v));
    return out;
}

// --- gen ---

struct GenFlags {
    std::string family;
    std::vector<std::size_t> sizes;
    LatticeFlags lattice;
    std::string interior_out;
};

int run_gen(const GenFlags& flags) {
    auto size = [&](std::size_t i) -> std::size_t {
        if (flags.sizes.size() <= i) throw UsageError("gen " + flags.family + " needs more sizes");
        if (flags.sizes[i] == 0) throw UsageError("sizes must be positive");
        return flags.sizes[i];
    };
    auto expect_sizes = [&](std::size_t n) {
        if (flags.sizes.size() != n) {
            throw UsageError("gen " + flags.family + " takes " + std::to_string(n) + " size argument(s)");
        }
    };
    std::optional<GraphWindow> window;
    Graph graph;
    if (flags.family == "cycle") {
        expect_sizes(1);
        if (size(0) < 3) throw UsageError("a cycle needs at least 3 vertices");
        graph = cycle_graph(size(0));
    } else if (flags.family == "path") {
        expect_sizes(1);
        graph = path_graph(size(0));
    } else if (flags.family == "complete") {
        expect_sizes(1);
        graph = complete_graph(size(0));
    } else if (flags.family == "grid" || flags.family == "king" || flags.family == "tri-tiling") {
        expect_sizes(2);
        const auto make = flags.family == "grid" ? grid_graph : flags.family == "king" ? king_graph : triangular_tiling;
        window = make(size(0), size(1));
    } else if (flags.family == "lattice") {
        expect_sizes(0);
        if (flags.lattice.norm.empty()) throw UsageError("gen lattice needs --norm");
        const GroupLattice lattice(lattice_spec(flags.lattice, flags.lattice.norm));
        for (const auto& w : lattice.warnings()) std::cerr << "warning: " << w << '\n';
        window = GraphWindow{lattice.graph(), lattice.interior_vertices()};
    } else {
        throw UsageError("unknown family '" + flags.family + "'");
    }
    if (window) graph = window->graph;
    if (!flags.interior_out.empty()) {
        if (!window) throw UsageError("--interior-out applies to grid, king, tri-tiling and lattice");
        std::ofstream out(flags.interior_out);
        if (!out) throw UsageError("cannot write '" + flags.interior_out + "'");
        write_vertex_set(out, graph, window->interior);
    }
    write_graph(std::cout, graph);
    return 0;
}

// --- hull ---

int run_hull(const Common& common, const InstanceFlags& flags, const std::string& set_path) {
    const auto instance = load_instance(flags.graph, flags.lattice, common.tol());
    const auto set = load_set(set_path, instance.graph());
    const auto hull = convex_hull(instance.metric(), set);
    Json report;
    report["command"] = "hull";
    report["instance"] = instance.description();
    report["input"] = vertex_list(instance.graph(), set);
    report["input_convex"] = hull == set;
    report["hull_size"] = hull.size();
    report["hull"] = vertex_list(instance.graph(), hull);
    print(std::cout, report, common.output());
    return 0;
}

// --- check ---

struct CheckFlags {
    std::string kind;
    std::string set_path;
    std::string fn_path;
    bool unit = false;
};

int run_check(const Common& common, const InstanceFlags& inst, const CheckFlags& flags) {
    const auto instance = load_instance(inst.graph, inst.lattice, common.tol());
    const Graph& graph = instance.graph();
    const GroupLattice* lattice = instance.lattice();
    Json report;
    report["check"] = flags.kind;
    report["instance"] = instance.description();

    auto need = [&](const std::string& path, const char* flag) {
        if (path.empty()) throw UsageError("check " + flags.kind + " needs " + flag);
        return path;
    };

    if (flags.kind == "set-convex" || flags.kind == "nn-property") {
        const auto set = load_set(need(flags.set_path, "--set"), graph);
        report["set"] = vertex_list(graph, set);
        bool passed = true;
        if (flags.kind == "set-convex") {
            const auto escape = find_escape(instance.metric(), set);
            passed = !escape;
            report["passed"] = passed;
            if (escape) {
                report["witness"] = {{"x", graph.name(escape->x)},
                                     {"z", graph.name(escape->z)},
                                     {"y", graph.name(escape->y)}};
            }
        } else {
            const auto verdict = has_nearest_neighbor_property(instance.require_lattice("nn-property"), set);
            passed = verdict.holds;
            report["passed"] = passed;
            if (verdict.witness) {
                report["witness"] = {{"y1", graph.name(verdict.witness->y1)},
                                     {"y2", graph.name(verdict.witness->y2)},
                                     {"z", graph.name(verdict.witness->z)}};
            }
        }
        print(std::cout, report, common.output());
        return passed ? 0 : 1;
    }

    const auto f = load_function(need(flags.fn_path, "--fn"), graph);
    if (flags.kind == "midpoint") instance.require_lattice("midpoint");
    const Weighting weighting = flags.unit ? Weighting::unit : Weighting::edge;
    Json vertices = Json::array();
    std::size_t failures = 0;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        Json entry;
        entry["vertex"] = graph.name(v);
        if (lattice) entry["interior"] = lattice->is_interior(v);
        entry["holds"] = true;
        bool holds = true;
        if (flags.kind == "fn-convex") {
            const auto verdict = is_convex_fn_at(instance.metric(), f, v);
            holds = verdict.holds;
            if (verdict.witness) {
                entry["witness"] = {{"x", graph.name(verdict.witness->x)},
                                    {"y", graph.name(verdict.witness->y)},
                                    {"lhs", value_json(verdict.witness->lhs)},
                                    {"rhs", value_json(verdict.witness->rhs)}};
            }
        } else if (flags.kind == "subharmonic" || flags.kind == "harmonic") {
            const auto mean = compare_with_neighbors(graph, f, v, weighting, common.tol());
            holds = flags.kind == "harmonic" ? mean.harmonic() : mean.subharmonic();
            entry["f_value"] = value_json(mean.f_value);
            entry["neighborhood_mean"] = value_json(mean.neighborhood_mean);
            entry["total_weight"] = mean.total_weight;
            entry["mean_verdict"] = mean.verdict == MeanVerdict::harmonic      ? "harmonic"
                                    : mean.verdict == MeanVerdict::subharmonic ? "subharmonic"
                                                                               : "neither";
        } else if (flags.kind == "midpoint") {
            const auto verdict = is_midpoint_convex_at(*lattice, f, v);
            holds = verdict.holds;
            if (verdict.witness) {
                entry["witness"] = {{"offset", format_point(verdict.witness->offset)},
                                    {"lhs", value_json(verdict.witness->lhs)},
                                    {"rhs", value_json(verdict.witness->rhs)}};
            }
        } else {
            throw UsageError("unknown check '" + flags.kind + "'");
        }
        entry["holds"] = holds;
        failures += !holds;
        vertices.push_back(std::move(entry));
    }
    report["passed"] = failures == 0;
    report["failures"] = failures;
    report["vertices"] = std::move(vertices);
    print(std::cout, report, common.output());
    return failures == 0 ? 0 : 1;
}

// --- verify ---

struct VerifyFlags {
    std::string claim;
    std::string fn_path;
    std::string set_path;
    std::string anchor;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    int value_min = 0;
    int value_max = 2;
    std::size_t max_vertices = 5;
};

ClaimReport run_claim(Claim claim, const Common& common, const InstanceFlags& inst, const VerifyFlags& flags) {
    const bool has_instance = !inst.graph.empty() || !inst.lattice.norm.empty();
    switch (claim) {
        case Claim::thm1:
        case Claim::thm2: {
            const auto hypothesis = claim == Claim::thm1 ? GraphHypothesis::triangle_free : GraphHypothesis::pairing;
            if (!has_instance) {
                if (flags.max_vertices == 0 || flags.max_vertices > kMaxExhaustiveVertices) {
                    throw UsageError("--max-vertices must lie in 1.." + std::to_string(kMaxExhaustiveVertices));
                }
                return exhaustive_graph_suite(hypothesis, flags.max_vertices, flags.value_min, flags.value_max);
            }
            const auto instance = load_instance(inst.graph, inst.lattice, common.tol());
            if (!instance.graph().has_unit_weights()) throw UsageError(std::string(claim_id(claim)) + " needs unit weights");
            if (flags.fn_path.empty()) return sampled_graph_suite(instance.graph(), hypothesis, flags.samples, flags.seed);
            const auto f = load_function(flags.fn_path, instance.graph());
            auto report = verify_pointwise_implication(instance.graph_metric(), f, hypothesis);
            report.instance = instance.description();
            return report;
        }
        case Claim::thm3: {
            const auto instance = load_instance(inst.graph, inst.lattice, common.tol());
            const auto& metric = instance.graph_metric();
            if (flags.set_path.empty()) {
                if (instance.graph().vertex_count() > kMaxSweepVertices) {
                    throw UsageError("subset sweep limited to " + std::to_string(kMaxSweepVertices) +
                                     " vertices; pass --set");
                }
                return dist_convex_subset_sweep(metric, &instance.graph());
            }
            const auto set = load_set(flags.set_path, instance.graph());
            if (set.empty()) throw UsageError("the set must be nonempty");
            return verify_dist_convex_implies_set_convex(metric, set, &instance.graph());
        }
        case Claim::lem_deg2: {
            const auto instance = load_instance(inst.graph, inst.lattice, common.tol());
            if (flags.fn_path.empty()) {
                if (instance.graph().vertex_count() > 12) throw UsageError("exhaustive functions need <= 12 vertices; pass --fn");
                return degree_two_suite(instance.graph(), flags.value_min, flags.value_max);
            }
            return verify_degree_two_equivalence(instance.graph_metric(), load_function(flags.fn_path, instance.graph()));
        }
        case Claim::thm4_cvx_sub:
        case Claim::lem_dist_pt:
        case Claim::prop_dist_cvx:
        case Claim::prop_nn: break;
    }

    const auto instance = load_instance(inst.graph, inst.lattice, common.tol());
    const auto& lattice = instance.require_lattice(std::string(claim_id(claim)));
    const Graph& graph = lattice.graph();
    switch (claim) {
        case Claim::thm4_cvx_sub:
            if (flags.fn_path.empty()) return midpoint_subharmonic_suite(lattice, flags.samples, flags.seed);
            return verify_pointwise_implication(lattice, load_function(flags.fn_path, graph));
        case Claim::lem_dist_pt: {
            if (flags.anchor.empty()) return distance_to_point_suite(lattice, flags.samples, flags.seed);
            const auto anchor = graph.find(flags.anchor);
            if (!anchor) throw UsageError("unknown vertex '" + flags.anchor + "'");
            return verify_distance_to_point_midpoint_convex(lattice, *anchor);
        }
        case Claim::prop_dist_cvx:
        case Claim::prop_nn: {
            if (flags.set_path.empty()) {
                if (graph.vertex_count() > kMaxSweepVertices) {
                    throw UsageError("subset sweep limited to " + std::to_string(kMaxSweepVertices) +
                                     " vertices; pass --set");
                }
                return claim == Claim::prop_nn ? nearest_neighbor_subset_sweep(lattice)
                                               : dist_midpoint_subset_sweep(lattice);
            }
            const auto set = load_set(flags.set_path, graph);
            if (set.empty()) throw UsageError("the set must be nonempty");
            return claim == Claim::prop_nn ? verify_nn_implies_dist_midpoint_convex(lattice, set)
                                           : verify_dist_midpoint_convex_implies_set_convex(lattice, set);
        }
        default: break;
    }
    throw UsageError("unhandled claim");
}

int run_verify(const Common& common, const InstanceFlags& inst, const VerifyFlags& flags) {
    const auto claim = parse_claim(flags.claim);
    if (!claim) throw UsageError("unknown claim '" + flags.claim + "'");
    if (flags.value_min > flags.value_max) throw UsageError("--min exceeds --max");
    const auto report = run_claim(*claim, common, inst, flags);
    print(std::cout, claim_json(report), common.output());
    return report.verdict() == ClaimVerdict::verified ? 0 : 1;
}

// --- search ---

struct SearchFlags {
    std::string family = "random";
    std::string sampler = "uniform";
    std::string filter = "none";
    SearchSpec spec;
    std::size_t budget = 10000;
};

int run_search(const Common& common, SearchFlags flags) {
    const auto family = parse_family(flags.family);
    const auto sampler = parse_sampler(flags.sampler);
    const auto filter = parse_filter(flags.filter);
    if (!family) throw UsageError("unknown family '" + flags.family + "'");
    if (!sampler) throw UsageError("unknown sampler '" + flags.sampler + "'");
    if (!filter) throw UsageError("unknown filter '" + flags.filter + "'");
    if (flags.spec.value_min > flags.spec.value_max) throw UsageError("--min exceeds --max");
    flags.spec.family = *family;
    flags.spec.sampler = *sampler;
    flags.spec.filter = *filter;
    const auto result = search_counterexample(flags.spec, flags.budget);

    Json report;
    report["command"] = "search";
    report["family"] = flags.family;
    report["sampler"] = flags.sampler;
    report["filter"] = flags.filter;
    report["instances"] = result.instances;
    report["found"] = result.witness.has_value();
    if (result.witness) {
        const auto& w = *result.witness;
        std::ostringstream graph_text;
        write_graph(graph_text, w.graph);
        Json function = Json::object();
        for (VertexId v = 0; v < w.graph.vertex_count(); ++v) function[w.graph.name(v)] = value_json(w.function(v));
        report["witness"] = {{"vertex", w.graph.name(w.vertex)},
                             {"f_value", value_json(w.mean.f_value)},
                             {"neighborhood_mean", value_json(w.mean.neighborhood_mean)},
                             {"graph", graph_text.str()},
                             {"function", function}};
    }
    print(std::cout, report, common.output());
    return result.witness ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete convexity and subharmonicity on graphs and lattices"};
    app.require_subcommand(1);
    Common common;

    GenFlags gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a graph in the text format to standard output");
    gen_cmd->add_option("family", gen.family, "cycle, path, complete, grid, king, tri-tiling or lattice")->required();
    gen_cmd->add_option("sizes", gen.sizes, "n, or width height");
    gen_cmd->add_option("--norm", gen.lattice.norm, "Lattice norm: l1, l2 or linf");
    gen_cmd->add_option("--dim", gen.lattice.dimension, "Lattice dimension");
    gen_cmd->add_option("--radius", gen.lattice.radius, "Adjacency radius")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--window", gen.lattice.window, "a:b,c:d,... per axis, or N points per axis around 0");
    gen_cmd->add_option("--interior-out", gen.interior_out, "Also write the interior vertices to this set file");

    InstanceFlags hull_instance;
    std::string hull_set;
    auto* hull_cmd = app.add_subcommand("hull", "Convex hull of a vertex set");
    add_instance(hull_cmd, hull_instance);
    hull_cmd->add_option("--set", hull_set, "Set file")->required();
    add_common(hull_cmd, common);

    InstanceFlags check_instance;
    CheckFlags check;
    auto* check_cmd = app.add_subcommand("check", "Per-vertex checks of a set or function");
    check_cmd->add_option("kind", check.kind, "set-convex, fn-convex, subharmonic, harmonic, midpoint, nn-property")
        ->required()
        ->check(CLI::IsMember({"set-convex", "fn-convex", "subharmonic", "harmonic", "midpoint", "nn-property"}));
    add_instance(check_cmd, check_instance);
    check_cmd->add_option("--set", check.set_path, "Set file");
    check_cmd->add_option("--fn", check.fn_path, "Function file");
    check_cmd->add_flag("--unit", check.unit, "Count every edge as 1 in neighbourhood means");
    add_common(check_cmd, common);

    InstanceFlags verify_instance;
    VerifyFlags verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a claim over an instance or a generated suite");
    verify_cmd->add_option("claim", verify.claim,
                           "thm1, thm2, thm3, thm4-cvx-sub, lem-deg2, lem-dist-pt, prop-dist-cvx, prop-nn")
        ->required();
    add_instance(verify_cmd, verify_instance);
    verify_cmd->add_option("--fn", verify.fn_path, "Function file (default: sampled or exhaustive)");
    verify_cmd->add_option("--set", verify.set_path, "Set F (default: every nonempty subset)");
    verify_cmd->add_option("--anchor", verify.anchor, "Anchor vertex for lem-dist-pt");
    verify_cmd->add_option("--samples", verify.samples, "Sampled functions or anchors");
    verify_cmd->add_option("--seed", verify.seed, "Random seed");
    verify_cmd->add_option("--min", verify.value_min, "Smallest value for exhaustive functions");
    verify_cmd->add_option("--max", verify.value_max, "Largest value for exhaustive functions");
    verify_cmd->add_option("--max-vertices", verify.max_vertices, "Graph size bound without --graph");
    add_common(verify_cmd, common);

    SearchFlags search;
    auto* search_cmd = app.add_subcommand("search", "Look for f convex but not subharmonic at a vertex");
    search_cmd->add_option("--family", search.family,
                           "cycle, path, complete, grid, tri-tiling, random, triangle-free, connected");
    search_cmd->add_option("--size", search.spec.size, "Vertices (or side length for grid families)");
    search_cmd->add_option("--p", search.spec.edge_probability, "Edge probability for random graphs");
    search_cmd->add_option("--sampler", search.sampler, "uniform, distance, indicator, constant, exhaustive");
    search_cmd->add_option("--min", search.spec.value_min, "Smallest function value");
    search_cmd->add_option("--max", search.spec.value_max, "Largest function value");
    search_cmd->add_option("--samples", search.spec.samples_per_graph, "Random functions per graph");
    search_cmd->add_option("--filter", search.filter, "none, triangle-free, pairing, either");
    search_cmd->add_option("--seed", search.spec.seed, "Random seed");
    search_cmd->add_option("--budget", search.budget, "Maximum (graph, function) instances");
    add_common(search_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*hull_cmd) return run_hull(common, hull_instance, hull_set);
        if (*check_cmd) return run_check(common, check_instance, check);
        if (*verify_cmd) return run_verify(common, verify_instance, verify);
        if (*search_cmd) return run_search(common, search);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        // Graph and domain errors from the library: bad input, not a failed check.
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
