#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamtri/error.hpp"

namespace hamtri {

using Vertex = int;

// Undirected edge, stored with a <= b.
struct Edge {
    Vertex a = -1, b = -1;
    Edge() = default;
    Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
    bool incident(Vertex v) const { return v == a || v == b; }
    Vertex other(Vertex v) const { return v == a ? b : a; }
};

struct EdgeHash {
    size_t operator()(const Edge& e) const { return size_t(e.a) * 131071u + size_t(e.b); }
};

struct Face {
    int id = -1;
    std::vector<Vertex> boundary; // closed walk; directed edges boundary[i] -> boundary[i+1]
    int length() const { return int(boundary.size()); }
};

// A plane (sphere-embedded) graph given as a rotation system: for each vertex
// the cyclic order of its neighbours. Faces are derived by next-edge
// traversal; construction validates simplicity, mutual consistency and the
// Euler relation V - E + F = 2. Immutable after construction.
class RotationGraph {
public:
    RotationGraph() = default;

    static RotationGraph from_rotation_system(std::vector<std::vector<Vertex>> rot);

    int n() const { return int(rot_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(Vertex v) const { return int(rot_[v].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return rot_[v]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rot_; }
    bool has_edge(Vertex u, Vertex v) const { return adj_[size_t(u) * n() + v] != 0; }
    bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }
    std::vector<Edge> edges() const;

    const std::vector<Face>& faces() const { return faces_; }
    int face_count() const { return int(faces_.size()); }
    // Face traced from the directed edge u->v.
    int face_at(Vertex u, Vertex v) const { return face_of_[size_t(u) * n() + v]; }

    // Index of neighbour w in rot[v]; -1 if not adjacent.
    int rot_index(Vertex v, Vertex w) const { return pos_[size_t(v) * n() + w]; }
    Vertex rot_succ(Vertex v, Vertex w) const;
    Vertex rot_pred(Vertex v, Vertex w) const;

    std::optional<int> outer_face() const { return outer_; }
    RotationGraph with_outer_face(int face_id) const;

    bool operator==(const RotationGraph& o) const { return rot_ == o.rot_ && outer_ == o.outer_; }

private:
    std::vector<std::vector<Vertex>> rot_;
    std::vector<Face> faces_;
    std::vector<int16_t> face_of_; // n*n, indexed tail*n+head
    std::vector<int16_t> pos_;     // n*n, pos_[v*n+w] = index of w in rot_[v]
    std::vector<uint8_t> adj_;     // n*n
    int edge_count_ = 0;
    std::optional<int> outer_;

    void build();
};

// True iff every face boundary has length 3.
bool validate_triangulation(const RotationGraph& g);

// A plane graph whose faces are all triangles except possibly the designated
// outer face; carries the outer-cycle vertex sequence.
struct NearTriangulation {
    RotationGraph graph; // outer_face set
    std::vector<Vertex> outer;
};

bool validate_near_triangulation(const NearTriangulation& nt);

// The two sides of a cycle in the embedding. "left"/"right" are fixed by the
// cycle's traversal direction and the rotation convention; they are labels,
// not geometry. The face traced from a forward cycle edge cycle[i]->cycle[i+1]
// lies on the right side.
enum class Side { left, right };
inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

struct CycleSides {
    std::vector<Vertex> cycle;
    std::vector<Vertex> left, right;                // interior vertex sets, sorted
    std::vector<std::pair<Edge, Side>> chords;      // chords of the cycle, classified
    std::vector<int8_t> membership;                 // per vertex: 0 on-cycle, 1 left, 2 right
    bool on_cycle(Vertex v) const { return membership[v] == 0; }
    Side side_of(Vertex v) const;
    const std::vector<Vertex>& interior(Side s) const { return s == Side::left ? left : right; }
    std::optional<Side> chord_side(const Edge& e) const;
};

// Validates that `cycle` is a simple cycle of g (errc::not_a_cycle otherwise)
// and partitions everything off the cycle into the two embedding sides.
CycleSides sides_of_cycle(const RotationGraph& g, std::span<const Vertex> cycle);

// Which side of the cycle a face lies on.
Side side_of_face(const RotationGraph& g, const CycleSides& sides, int face_id);

struct RegionResult {
    NearTriangulation region;
    std::vector<Vertex> to_old; // new id -> old id
    std::vector<int> to_new;    // old id -> new id, -1 if dropped
};

// The closed region bounded by `cycle` on the chosen side: cycle vertices
// plus that side's interior, with chords of the other side removed. If no
// side is given, the side away from g's outer face is taken
// (errc::ambiguous_side when the graph has no designated outer face).
RegionResult closed_region(const RotationGraph& g, std::span<const Vertex> cycle,
                           std::optional<Side> side = std::nullopt);

// Plane subgraph after deleting a vertex set (rotations restricted). Throws
// errc::not_sphere if the remainder is disconnected.
struct SubgraphResult {
    RotationGraph graph;
    std::vector<Vertex> to_old;
    std::vector<int> to_new;
};
SubgraphResult plane_delete_vertices(const RotationGraph& g, std::span<const Vertex> del);

std::string to_string(const Edge& e);
std::string cycle_to_string(std::span<const Vertex> cycle);

} // namespace hamtri
