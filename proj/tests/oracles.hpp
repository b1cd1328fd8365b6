#pragma once

// Test-side oracles, independent of the library's implementation paths.

#include <cstdint>
#include <vector>

#include "hamtri/analysis.hpp"
#include "hamtri/rotation.hpp"

namespace oracles {

// Vertex connectivity via Menger: minimum over nonadjacent pairs of the
// maximum number of internally disjoint paths (unit-capacity flow on the
// split graph); n-1 for complete graphs.
int menger_connectivity(const hamtri::RotationGraph& g);

// Hamiltonian cycle count of the octahedron as K6 minus a perfect matching,
// by inclusion-exclusion over the three missing edges.
int64_t k6_minus_matching_hc_count();

// Number of spanning a-b paths of the graph restricted to `active`,
// by bitmask dynamic programming.
int64_t count_spanning_paths_dp(const hamtri::RotationGraph& g, const std::vector<char>& active,
                                int a, int b);

// All injective edge-preserving maps of the pattern into g, by brute force
// over ordered vertex tuples, reduced modulo pattern automorphisms.
int64_t brute_subgraph_match_count(const hamtri::RotationGraph& g, const hamtri::DiamondPattern& p);

// Maximum independent set size among vertices of degree <= max_degree.
int brute_max_low_degree_independent_set(const hamtri::RotationGraph& g, int max_degree);

struct EmbedderCounts {
    int64_t all = 0;
    int64_t four_connected = 0;
};

// Counts isomorphism classes of planar triangulations on n vertices by brute
// force over all edge subsets of K_n with 3n-6 edges, with planarity decided
// by boost::boyer_myrvold_planarity_test and isomorph rejection by a
// degree-partition-restricted canonical adjacency string. Practical for
// n <= 7.
EmbedderCounts brute_force_triangulation_classes(int n);

} // namespace oracles
