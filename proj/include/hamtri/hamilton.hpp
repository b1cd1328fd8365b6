#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamtri/rotation.hpp"

namespace hamtri {

// Undirected unrooted cycle; identity is the canonical rotation
// (lexicographically minimal over rotations and both directions).
struct CycleWitness {
    std::vector<Vertex> vertices;
    std::vector<Edge> edge_set() const;
    bool contains_edge(const Edge& e) const;
    bool contains_vertex(Vertex v) const;
    static std::vector<Vertex> canonical_rotation(std::vector<Vertex> seq);
};

struct PathWitness {
    std::vector<Vertex> vertices; // from a to b
    std::vector<Edge> edge_set() const;
    bool contains_edge(const Edge& e) const;
};

// One H-bridge: a chord of H, or a component of G-H together with its edges
// to H; attachments are its vertices on H.
struct BridgeReport {
    std::vector<Vertex> attachments; // sorted
    std::vector<Vertex> interior;    // empty for a chord
    std::vector<Edge> edges;
    bool is_chord() const { return interior.empty(); }
};

// All distinct undirected Hamiltonian cycles containing every required edge
// and no forbidden edge, in canonical order. Stops after `limit` if set.
std::vector<CycleWitness> enumerate_hamiltonian_cycles(const RotationGraph& g,
                                                       std::span<const Edge> required = {},
                                                       std::span<const Edge> forbidden = {},
                                                       std::optional<int64_t> limit = std::nullopt);

int64_t count_hamiltonian_cycles(const RotationGraph& g);

// Independent counting route (bitmask dynamic programming over subsets);
// used by the census self-audit and as a test oracle.
int64_t count_hamiltonian_cycles_dp(const RotationGraph& g);

// All Hamiltonian paths of H - del between a and b. a and b must be distinct
// outer-cycle vertices and del a subset of the remaining outer vertices.
std::vector<PathWitness> hamiltonian_paths_between(const NearTriangulation& h, Vertex a, Vertex b,
                                                   std::span<const Vertex> del,
                                                   std::optional<int64_t> limit = std::nullopt);

// Complete bridge decomposition of G with respect to a subgraph H.
std::vector<BridgeReport> bridges(const RotationGraph& g, std::span<const Vertex> h_vertices,
                                  std::span<const Edge> h_edges);

struct TutteReport {
    bool ok = false;
    std::optional<BridgeReport> violation;
};

// Tutte condition: every bridge has at most 3 attachments; when c_edges is
// given, bridges containing an edge of that subgraph get at most 2.
TutteReport is_tutte(const RotationGraph& g, std::span<const Vertex> p_vertices,
                     std::span<const Edge> p_edges, std::span<const Edge> c_edges = {});

// Checks the circuit-graph property for (g, c): g is 2-connected, c bounds a
// face, and every 2-cut leaves a c-vertex in each component.
void require_circuit_graph(const RotationGraph& g, std::span<const Vertex> c);

// A cycle through e and all of `through` satisfying the Tutte condition
// refined by c. Hamiltonian candidates are searched first; in a 4-connected
// input the result is necessarily Hamiltonian. errc::search_exhausted when no
// cycle qualifies.
CycleWitness find_tutte_cycle(const RotationGraph& g, std::span<const Vertex> c, Edge e,
                              std::span<const Vertex> through = {});

} // namespace hamtri
