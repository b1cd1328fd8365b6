#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamtri/rotation.hpp"

namespace hamtri {

// Total-order key for plane-isomorphism classes of sphere embeddings,
// reflection included. The byte layout doubles as a planar_code record:
// [n][per vertex in canonical order: 1-based neighbour labels..., 0].
struct CanonicalForm {
    std::vector<uint8_t> bytes;
    auto operator<=>(const CanonicalForm&) const = default;
    std::string hex() const;
};

// Breadth-first canonical labelling from every directed root edge in both
// orientations; lexicographic minimum encoding wins.
CanonicalForm canonical_form(const RotationGraph& g);

// Canonical form of (graph, designated face): root edges restricted to the
// face boundary, so two keys are equal iff the embeddings are isomorphic by a
// map carrying one designated face to the other (reflection included).
CanonicalForm canonical_form_rooted(const RotationGraph& g, int face_id);

// Rebuild the graph with the canonical labelling applied.
RotationGraph canonical_relabel(const RotationGraph& g);

// Parse one planar_code record (the CanonicalForm byte layout) into rotation
// lists. `at` is advanced past the record.
std::vector<std::vector<Vertex>> decode_planar_record(const std::vector<uint8_t>& bytes, size_t& at);

RotationGraph decode_canonical(const CanonicalForm& cf);

} // namespace hamtri
