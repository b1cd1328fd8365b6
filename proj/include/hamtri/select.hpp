#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamtri/analysis.hpp"
#include "hamtri/rotation.hpp"

namespace hamtri {

// Pairwise non-adjacent vertices, every member of degree <= max_degree.
struct CandidateSet {
    std::vector<Vertex> vertices; // sorted
    int max_degree = 6;
    bool contains(Vertex v) const;
    size_t size() const { return vertices.size(); }
};

// Inclusion-maximal independent set among degree <= max_degree vertices
// avoiding `exclude`; exact maximum for n <= 12, greedy above.
CandidateSet low_degree_independent_set(const RotationGraph& g, int max_degree,
                                        std::span<const Vertex> exclude = {});

enum class SaturationTarget { four_cycle, five_cycle, diamond6 };

struct SaturationWitness {
    SaturationTarget target;
    std::vector<Vertex> object;  // the cycle, or the diamond image
    std::vector<Vertex> members; // the set members realizing the saturation
};

// A witness cycle (two members on a common 4- or 5-cycle) or diamond (three
// crucial vertices in the set), if any.
std::optional<SaturationWitness> saturates(const RotationGraph& g, const CandidateSet& s,
                                           SaturationTarget target,
                                           const DiamondPatterns& patterns);

struct RefineResult {
    bool branch_a = false;
    Vertex v = -1, x = -1; // branch A pair
    int common = 0;        // |N(v) ∩ N(x) ∩ I|
    CandidateSet saturation_free; // greedy pipeline output S ⊆ I
    int i_size = 0;
    double ratio = 0.0; // |S| / |I|, observed only
};

// Either a vertex pair whose common neighbourhood meets I in >= t vertices
// (preferred when it exists), or a subset S of I saturating no 4-cycle,
// 5-cycle or diamond-6-cycle. The greedy pipeline drops members on saturated
// 4-cycles first, then 5-cycles, then diamonds, keeping the smallest member.
RefineResult refine_saturation_free(const RotationGraph& g, const CandidateSet& I, int t,
                                    const DiamondPatterns& patterns);

enum class LinkRule { neighborhood_edges, deletion_safe };

// The link A_u: for degree-4 u the edges among N(u); for degree 5 or 6 the
// incident edges whose deletion keeps the graph 4-connected.
struct LinkSet {
    Vertex vertex = -1;
    std::vector<Edge> edges; // sorted
    LinkRule rule = LinkRule::neighborhood_edges;
    LinkSet excluding(Vertex y) const; // drop edges incident with y
};

LinkSet link(const RotationGraph& g, Vertex u);

struct EdgeSelection {
    std::vector<Edge> edges;                                   // F, sorted
    std::vector<std::pair<Vertex, std::optional<Edge>>> per_link; //u -> F ∩ A_u
};

// Checks the edge-removal hypotheses for (g, s); returns the violated
// hypothesis name and witness, or nullopt if all hold. Hypotheses: members
// independent with degree <= 6, nonempty links, no saturated 4-cycle,
// 5-cycle or diamond-6-cycle, and no degree-4 member adjacent to a degree-4
// vertex.
struct HypothesisFailure {
    std::string hypothesis;
    std::vector<Vertex> witness;
};
std::optional<HypothesisFailure> edge_removal_preconditions(const RotationGraph& g,
                                                            const CandidateSet& s,
                                                            const DiamondPatterns& patterns);

// All selections F ⊆ ∪A_u with |F ∩ A_u| <= 1 (each link also contributes
// the empty pick). Exhaustive when the product count is within `cap`,
// otherwise `cap` distinct seeded samples. Preconditions are enforced
// (precondition_error).
std::vector<EdgeSelection> admissible_selections(const RotationGraph& g, const CandidateSet& s,
                                                 const DiamondPatterns& patterns,
                                                 uint64_t seed = 0,
                                                 std::optional<int64_t> cap = std::nullopt);

struct ConnectivityCertificate {
    bool ok = false;
    std::vector<Vertex> cut; // violating cut when !ok
};

// κ(G - F) >= 4, with the violating cut as certificate on failure.
ConnectivityCertificate preserves_4_connectivity(const RotationGraph& g, const EdgeSelection& f);

} // namespace hamtri
