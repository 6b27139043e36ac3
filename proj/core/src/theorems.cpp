#include "graphcvx/theorems.hpp"

#include <array>
#include <random>
#include <sstream>
#include <stdexcept>

#include "graphcvx/convexity.hpp"
#include "graphcvx/families.hpp"
#include "graphcvx/graph_io.hpp"
#include "graphcvx/sampling.hpp"
#include "graphcvx/subharmonic.hpp"

namespace graphcvx {

namespace {

constexpr std::array kClaims{Claim::thm1,    Claim::thm2,        Claim::thm3,          Claim::thm4_cvx_sub,
                             Claim::lem_deg2, Claim::lem_dist_pt, Claim::prop_dist_cvx, Claim::prop_nn};

std::string describe(const Graph& graph) {
    return "graph with " + std::to_string(graph.vertex_count()) + " vertices and " +
           std::to_string(graph.edge_count()) + " edges";
}

std::string describe(const GroupLattice& lattice) {
    const auto& spec = lattice.spec();
    std::ostringstream out;
    out << "Z^" << spec.dimension << " window ";
    for (std::size_t i = 0; i < spec.window.size(); ++i) {
        if (i) out << 'x';
        out << '[' << spec.window[i].min << ',' << spec.window[i].max << ']';
    }
    out << ", " << to_string(spec.norm) << ", r=" << format_value(spec.radius);
    return out.str();
}

std::string edge_list(const Graph& graph) {
    std::string out;
    for (const auto& e : graph.edges()) {
        if (!out.empty()) out += ' ';
        out += graph.name(e.u) + '-' + graph.name(e.v);
    }
    return out;
}

std::string function_text(const Graph& graph, const VertexFunction& f) {
    std::string out;
    for (VertexId v = 0; v < f.size(); ++v) {
        if (!out.empty()) out += ' ';
        out += graph.name(v) + '=' + format_value(f(v));
    }
    return out;
}

std::string set_text(const Graph& graph, const VertexSet& set) {
    std::string out = "{";
    for (VertexId v : set.members()) {
        if (out.size() > 1) out += ',';
        out += graph.name(v);
    }
    return out + '}';
}

void attach_instance(ClaimReport& report, const Graph& graph, const VertexFunction& f) {
    if (!report.witness) return;
    report.witness->emplace_back("graph", edge_list(graph));
    report.witness->emplace_back("function", function_text(graph, f));
}

bool match_neighbors(const Graph& graph, const std::vector<VertexId>& nbrs, std::vector<char>& used, Pairing& out) {
    std::size_t first = 0;
    while (first < nbrs.size() && used[first]) ++first;
    if (first == nbrs.size()) return true;
    used[first] = 1;
    for (std::size_t j = first + 1; j < nbrs.size(); ++j) {
        if (used[j] || graph.adjacent(nbrs[first], nbrs[j])) continue;
        used[j] = 1;
        out.emplace_back(nbrs[first], nbrs[j]);
        if (match_neighbors(graph, nbrs, used, out)) return true;
        out.pop_back();
        used[j] = 0;
    }
    used[first] = 0;
    return false;
}

bool degree_two_hypothesis(const Graph& graph) {
    if (graph.vertex_count() < 4 || !graph.is_connected()) return false;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (graph.degree(v) != 2 || graph.in_triangle(v)) return false;
    }
    return true;
}

template <typename Check>
ClaimReport subset_sweep(std::size_t n, Check&& check) {
    if (n > kMaxSweepVertices) {
        throw std::invalid_argument("subset sweep limited to " + std::to_string(kMaxSweepVertices) + " vertices");
    }
    ClaimReport total;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        total.merge(check(VertexSet::from_mask(n, mask)));
    }
    return total;
}

}  // namespace

std::string_view claim_id(Claim claim) {
    switch (claim) {
        case Claim::thm1: return "thm1";
        case Claim::thm2: return "thm2";
        case Claim::thm3: return "thm3";
        case Claim::thm4_cvx_sub: return "thm4-cvx-sub";
        case Claim::lem_deg2: return "lem-deg2";
        case Claim::lem_dist_pt: return "lem-dist-pt";
        case Claim::prop_dist_cvx: return "prop-dist-cvx";
        case Claim::prop_nn: return "prop-nn";
    }
    return "?";
}

std::optional<Claim> parse_claim(std::string_view id) {
    for (Claim c : kClaims) {
        if (claim_id(c) == id) return c;
    }
    return std::nullopt;
}

std::span<const Claim> all_claims() { return kClaims; }

std::string_view to_string(ClaimVerdict verdict) {
    switch (verdict) {
        case ClaimVerdict::verified: return "verified";
        case ClaimVerdict::vacuous: return "vacuous";
        case ClaimVerdict::refuted: return "refuted";
    }
    return "?";
}

ClaimVerdict ClaimReport::verdict() const {
    if (witness) return ClaimVerdict::refuted;
    if (fired == 0) return ClaimVerdict::vacuous;
    return ClaimVerdict::verified;
}

void ClaimReport::merge(const ClaimReport& other) {
    checked += other.checked;
    fired += other.fired;
    if (!witness && other.witness) witness = other.witness;
    if (claim.empty()) claim = other.claim;
}

bool triangle_free_hypothesis(const Graph& graph, VertexId z) {
    return graph.degree(z) > 1 && !graph.in_triangle(z);
}

std::optional<Pairing> pairing_hypothesis(const Graph& graph, VertexId z) {
    const auto nbrs = graph.neighbors(z);
    if (nbrs.empty() || nbrs.size() % 2 != 0) return std::nullopt;
    std::vector<VertexId> ids;
    for (const auto& n : nbrs) ids.push_back(n.vertex);
    std::vector<char> used(ids.size(), 0);
    Pairing pairs;
    if (!match_neighbors(graph, ids, used, pairs)) return std::nullopt;
    return pairs;
}

ClaimReport verify_pointwise_implication(const ShortestPathMetric& metric, const VertexFunction& f,
                                         GraphHypothesis hypothesis) {
    const Graph& graph = metric.graph();
    if (!graph.has_unit_weights()) throw std::invalid_argument("graph-metric claims need unit edge weights");
    ClaimReport report;
    report.claim = claim_id(hypothesis == GraphHypothesis::triangle_free ? Claim::thm1 : Claim::thm2);
    report.instance = describe(graph);
    for (VertexId z = 0; z < graph.vertex_count(); ++z) {
        ++report.checked;
        const bool holds = hypothesis == GraphHypothesis::triangle_free ? triangle_free_hypothesis(graph, z)
                                                                        : pairing_hypothesis(graph, z).has_value();
        if (!holds || !is_convex_fn_at(metric, f, z)) continue;
        ++report.fired;
        const auto mean = compare_with_neighbors(graph, f, z, Weighting::unit, metric.tolerance());
        if (!mean.subharmonic() && !report.witness) {
            report.witness = ClaimWitness{{"vertex", graph.name(z)},
                                          {"f_value", mean.f_value},
                                          {"neighborhood_mean", mean.neighborhood_mean}};
        }
    }
    return report;
}

ClaimReport verify_pointwise_implication(const GroupLattice& lattice, const VertexFunction& f) {
    ClaimReport report;
    report.claim = claim_id(Claim::thm4_cvx_sub);
    report.instance = describe(lattice);
    const Graph& graph = lattice.graph();
    for (VertexId x = 0; x < lattice.vertex_count(); ++x) {
        if (!lattice.is_interior(x)) continue;
        ++report.checked;
        if (!is_midpoint_convex_at(lattice, f, x)) continue;
        ++report.fired;
        const auto mean = compare_with_neighbors(graph, f, x, Weighting::edge, lattice.tolerance());
        if (!mean.subharmonic() && !report.witness) {
            report.witness = ClaimWitness{{"vertex", graph.name(x)},
                                          {"f_value", mean.f_value},
                                          {"neighborhood_mean", mean.neighborhood_mean},
                                          {"total_weight", mean.total_weight}};
        }
    }
    return report;
}

ClaimReport verify_dist_convex_implies_set_convex(const Metric& metric, const VertexSet& set, const Graph* names) {
    if (set.empty()) throw std::invalid_argument("the set must be nonempty");
    auto label = [&](VertexId v) -> WitnessValue {
        if (names) return names->name(v);
        return static_cast<double>(v);
    };
    ClaimReport report;
    report.claim = claim_id(Claim::thm3);
    report.instance = "metric on " + std::to_string(metric.vertex_count()) + " vertices, ";
    report.instance += names ? "F=" + set_text(*names, set) : "|F|=" + std::to_string(set.size());
    report.checked = 1;
    if (!is_convex_fn(metric, distance_function(metric, set))) return report;
    ++report.fired;
    if (auto escape = find_escape(metric, set)) {
        report.witness = ClaimWitness{{"x", label(escape->x)}, {"z", label(escape->z)}, {"y", label(escape->y)}};
    }
    return report;
}

ClaimReport verify_dist_midpoint_convex_implies_set_convex(const GroupLattice& lattice, const VertexSet& set) {
    if (set.empty()) throw std::invalid_argument("the set must be nonempty");
    const NormMetric metric(lattice);
    const Graph& graph = lattice.graph();
    ClaimReport report;
    report.claim = claim_id(Claim::prop_dist_cvx);
    report.instance = describe(lattice) + ", F=" + set_text(graph, set);
    report.checked = 1;
    if (!is_midpoint_convex(lattice, distance_function(metric, set))) return report;
    ++report.fired;
    if (auto escape = find_escape(metric, set)) {
        report.witness = ClaimWitness{{"F", set_text(graph, set)},
                                      {"x", graph.name(escape->x)},
                                      {"z", graph.name(escape->z)},
                                      {"y", graph.name(escape->y)}};
    }
    return report;
}

ClaimReport verify_nn_implies_dist_midpoint_convex(const GroupLattice& lattice, const VertexSet& set) {
    if (set.empty()) throw std::invalid_argument("the set must be nonempty");
    const NormMetric metric(lattice);
    const Graph& graph = lattice.graph();
    ClaimReport report;
    report.claim = claim_id(Claim::prop_nn);
    report.instance = describe(lattice) + ", F=" + set_text(graph, set);
    if (!is_convex_set(metric, set) || !has_nearest_neighbor_property(lattice, set)) {
        report.checked = 1;
        return report;
    }
    const auto f = distance_function(metric, set);
    for (VertexId x = 0; x < lattice.vertex_count(); ++x) {
        if (!lattice.is_interior(x)) continue;
        ++report.checked;
        ++report.fired;
        if (report.witness) continue;
        if (auto verdict = is_midpoint_convex_at(lattice, f, x); !verdict) {
            report.witness = ClaimWitness{{"F", set_text(graph, set)},
                                          {"vertex", graph.name(x)},
                                          {"offset", format_point(verdict.witness->offset)},
                                          {"lhs", verdict.witness->lhs},
                                          {"rhs", verdict.witness->rhs}};
            continue;
        }
        const auto mean = compare_with_neighbors(graph, f, x, Weighting::edge, lattice.tolerance());
        if (!mean.subharmonic()) {
            report.witness = ClaimWitness{{"F", set_text(graph, set)},
                                          {"vertex", graph.name(x)},
                                          {"f_value", mean.f_value},
                                          {"neighborhood_mean", mean.neighborhood_mean}};
        }
    }
    return report;
}

ClaimReport verify_distance_to_point_midpoint_convex(const GroupLattice& lattice, VertexId anchor) {
    const Graph& graph = lattice.graph();
    VertexFunction f(lattice.vertex_count());
    for (VertexId v = 0; v < lattice.vertex_count(); ++v) f.set(v, lattice.distance(v, anchor));
    ClaimReport report;
    report.claim = claim_id(Claim::lem_dist_pt);
    report.instance = describe(lattice) + ", a=" + graph.name(anchor);
    for (VertexId x = 0; x < lattice.vertex_count(); ++x) {
        ++report.checked;
        ++report.fired;
        if (report.witness) continue;
        if (auto verdict = is_midpoint_convex_at(lattice, f, x); !verdict) {
            report.witness = ClaimWitness{{"anchor", graph.name(anchor)},
                                          {"vertex", graph.name(x)},
                                          {"offset", format_point(verdict.witness->offset)},
                                          {"lhs", verdict.witness->lhs},
                                          {"rhs", verdict.witness->rhs}};
        }
    }
    return report;
}

ClaimReport verify_degree_two_equivalence(const ShortestPathMetric& metric, const VertexFunction& f) {
    const Graph& graph = metric.graph();
    ClaimReport report;
    report.claim = claim_id(Claim::lem_deg2);
    report.instance = describe(graph);
    report.checked = 1;
    if (!graph.has_unit_weights() || !degree_two_hypothesis(graph)) return report;
    ++report.fired;
    bool convex = true, subharmonic = true;
    for (VertexId z = 0; z < graph.vertex_count(); ++z) {
        convex = convex && static_cast<bool>(is_convex_fn_at(metric, f, z));
        subharmonic = subharmonic && compare_with_neighbors(graph, f, z, Weighting::unit, metric.tolerance()).subharmonic();
    }
    if (convex != subharmonic) {
        report.witness = ClaimWitness{{"convex", convex ? "true" : "false"},
                                      {"subharmonic", subharmonic ? "true" : "false"}};
    }
    return report;
}

ClaimReport exhaustive_graph_suite(GraphHypothesis hypothesis, std::size_t max_vertices, int lo, int hi) {
    ClaimReport total;
    total.claim = claim_id(hypothesis == GraphHypothesis::triangle_free ? Claim::thm1 : Claim::thm2);
    total.instance = "all connected graphs on <= " + std::to_string(max_vertices) + " vertices, values " +
                     std::to_string(lo) + ".." + std::to_string(hi);
    for (auto& graph : connected_graphs_up_to(max_vertices)) {
        const ShortestPathMetric metric(std::move(graph));
        for_each_function(metric.vertex_count(), lo, hi, [&](const VertexFunction& f) {
            auto report = verify_pointwise_implication(metric, f, hypothesis);
            attach_instance(report, metric.graph(), f);
            total.merge(report);
        });
    }
    return total;
}

ClaimReport sampled_graph_suite(const Graph& graph, GraphHypothesis hypothesis, std::size_t samples,
                                std::uint64_t seed) {
    const ShortestPathMetric metric(graph);
    std::mt19937_64 rng(seed);
    ClaimReport total;
    total.claim = claim_id(hypothesis == GraphHypothesis::triangle_free ? Claim::thm1 : Claim::thm2);
    total.instance = describe(graph) + ", sampled functions";
    auto run = [&](const VertexFunction& f) {
        auto report = verify_pointwise_implication(metric, f, hypothesis);
        attach_instance(report, graph, f);
        total.merge(report);
    };
    for (std::size_t i = 0; i < samples; ++i) run(uniform_function(graph.vertex_count(), -3, 3, rng));
    for (VertexId a = 0; a < graph.vertex_count(); ++a) {
        run(distance_function(metric, VertexSet(graph.vertex_count(), {a})));
    }
    for (std::size_t i = 0; i < samples; ++i) run(indicator(random_vertex_set(graph.vertex_count(), rng)));
    return total;
}

ClaimReport midpoint_subharmonic_suite(const GroupLattice& lattice, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ClaimReport total;
    total.claim = claim_id(Claim::thm4_cvx_sub);
    total.instance = describe(lattice) + ", " + std::to_string(samples) + " max-affine functions";
    for (std::size_t i = 0; i < samples; ++i) {
        const auto f = max_affine_function(lattice, rng);
        auto report = verify_pointwise_implication(lattice, f);
        attach_instance(report, lattice.graph(), f);
        total.merge(report);
    }
    return total;
}

ClaimReport distance_to_point_suite(const GroupLattice& lattice, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(0, lattice.vertex_count() - 1);
    ClaimReport total;
    total.claim = claim_id(Claim::lem_dist_pt);
    total.instance = describe(lattice) + ", " + std::to_string(samples) + " random anchors";
    for (std::size_t i = 0; i < samples; ++i) total.merge(verify_distance_to_point_midpoint_convex(lattice, pick(rng)));
    return total;
}

ClaimReport degree_two_suite(const Graph& graph, int lo, int hi) {
    const ShortestPathMetric metric(graph);
    ClaimReport total;
    total.claim = claim_id(Claim::lem_deg2);
    total.instance = describe(graph) + ", all functions into " + std::to_string(lo) + ".." + std::to_string(hi);
    for_each_function(graph.vertex_count(), lo, hi, [&](const VertexFunction& f) {
        auto report = verify_degree_two_equivalence(metric, f);
        attach_instance(report, graph, f);
        total.merge(report);
    });
    return total;
}

ClaimReport dist_convex_subset_sweep(const Metric& metric, const Graph* names) {
    auto total = subset_sweep(metric.vertex_count(), [&](const VertexSet& set) {
        return verify_dist_convex_implies_set_convex(metric, set, names);
    });
    total.claim = claim_id(Claim::thm3);
    total.instance = "all nonempty subsets of " + std::to_string(metric.vertex_count()) + " vertices";
    return total;
}

ClaimReport dist_midpoint_subset_sweep(const GroupLattice& lattice) {
    auto total = subset_sweep(lattice.vertex_count(), [&](const VertexSet& set) {
        return verify_dist_midpoint_convex_implies_set_convex(lattice, set);
    });
    total.claim = claim_id(Claim::prop_dist_cvx);
    total.instance = describe(lattice) + ", all nonempty subsets";
    return total;
}

ClaimReport nearest_neighbor_subset_sweep(const GroupLattice& lattice) {
    auto total = subset_sweep(lattice.vertex_count(), [&](const VertexSet& set) {
        return verify_nn_implies_dist_midpoint_convex(lattice, set);
    });
    total.claim = claim_id(Claim::prop_nn);
    total.instance = describe(lattice) + ", all nonempty subsets";
    return total;
}

}  // namespace graphcvx
