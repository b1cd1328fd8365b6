#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamtri/rotation.hpp"

namespace hamtri {

// Exact vertex connectivity by exhaustive small-cut search (n <= 16 is the
// whole operating range). Complete graphs give n-1.
int vertex_connectivity(const RotationGraph& g);

// No cut of size < k exists and n > k.
bool is_k_connected(const RotationGraph& g, int k);

// All simple cycles of the given length, as canonical vertex sequences
// (smallest vertex first, second < last), sorted.
std::vector<std::vector<Vertex>> simple_cycles(const RotationGraph& g, int len);

bool has_separating_triangle(const RotationGraph& g);

// Which of the two stored sides of a SeparatingCycle.
enum class RegionSide { a, b };

// A cycle whose deletion disconnects the graph, with the two embedding sides.
// side_a is the side not containing the smallest vertex id outside the
// cycle's closed neighbourhood (falling back to the smallest id off the
// cycle); region_a is the closed region for side_a.
struct SeparatingCycle {
    std::vector<Vertex> cycle;
    std::vector<Vertex> side_a, side_b;
    Side side_a_geom = Side::left;
    RegionResult region_a;

    const std::vector<Vertex>& side(RegionSide s) const { return s == RegionSide::a ? side_a : side_b; }
    Side geom(RegionSide s) const { return s == RegionSide::a ? side_a_geom : opposite(side_a_geom); }
};

// All separating cycles of length 3, 4 or 5 (input must be a triangulation,
// so separation is equivalent to both embedding sides being nonempty).
std::vector<SeparatingCycle> separating_cycles(const RotationGraph& g, int len);

struct ContractionResult {
    RotationGraph graph;
    Vertex new_vertex = -1;
    std::vector<int> vmap; // old id -> new id; contracted vertices map to new_vertex
};

// Contract the interior on one side of a cycle to a single new vertex.
// errc::empty_interior if that side has no vertices.
ContractionResult contract_region(const RotationGraph& g, std::span<const Vertex> cycle, Side side);

// Same via a SeparatingCycle; when the cycle has length 4 and g is
// 4-connected, 4-connectivity of the result is verified.
ContractionResult contract_interior(const RotationGraph& g, const SeparatingCycle& sc, RegionSide side);

// Contract a plane-contractible edge (endpoints with exactly two common
// neighbours). errc::not_an_edge for non-edges; errc::precondition_failed for
// edges on a separating triangle.
ContractionResult contract_edge(const RotationGraph& g, Edge e);

// Fixed pattern graph with designated crucial vertices, loaded from the
// fixture file (format: see data/diamond_patterns.txt).
struct DiamondPattern {
    std::string name;
    int n = 0;
    std::vector<Edge> edges;
    std::vector<Vertex> crucial;
    std::vector<std::vector<Vertex>> adj;
    int degree(Vertex v) const { return int(adj[v].size()); }
};

struct DiamondPatterns {
    DiamondPattern d4, d6;
};

DiamondPatterns load_diamond_patterns(const std::string& path);
// Loads from HAMTRI_DATA env var or the built-in data directory.
const DiamondPatterns& default_diamond_patterns();

// One subgraph embedding of a pattern (not necessarily induced), up to the
// pattern's automorphisms.
struct DiamondMatch {
    std::vector<Vertex> image;         // image[i] = host vertex for pattern vertex i
    std::vector<Vertex> crucial_image; // sorted
};

std::vector<DiamondMatch> find_diamonds(const RotationGraph& g, const DiamondPattern& p);

// Minimum pairwise distance among degree-4 vertices; nullopt when fewer than
// two such vertices exist.
std::optional<int> degree4_min_distance(const RotationGraph& g);

// Longest chain of separating 4-cycles with strictly nested closed regions.
struct NestedChain {
    int length = 0;
    std::vector<std::vector<Vertex>> cycles; // outermost first
};
NestedChain longest_nested_chain(const RotationGraph& g);

} // namespace hamtri
