#pragma once

#include <functional>
#include <vector>

#include "hamtri/canonical.hpp"
#include "hamtri/rotation.hpp"

namespace hamtri {

// Cycle of length k plus two apexes joined to every cycle vertex (apexes
// non-adjacent). n = k+2, E = 3k. errc::too_small for k < 4.
RotationGraph double_wheel(int k);

// `layers` concentric rings of length `ring`, consecutive rings joined as an
// antiprism, plus an apex inside the first ring and one outside the last.
// apex_ring_tower(k, 1) is the double wheel; apex_ring_tower(5, 2) the
// icosahedron.
RotationGraph apex_ring_tower(int ring, int layers);

RotationGraph icosahedron();

RotationGraph complete4();

// New degree-3 vertex inside face f joined to its three corners.
RotationGraph stack_vertex(const RotationGraph& g, int face_id);

// Inverse edge contraction: split vertex w along the axis through its
// neighbours at rotation positions pos_p and pos_q. The new vertex (id n)
// takes the rotation arc from pos_p to pos_q; w keeps the other arc.
RotationGraph split_vertex(const RotationGraph& g, Vertex w, int pos_p, int pos_q);

struct ClassFilter {
    int min_degree = 0;
    int min_connectivity = 0;
    bool no_separating_triangle = false;
    bool deg4_min_distance3 = false;
    bool pass(const RotationGraph& g) const;
    bool trivial() const {
        return min_degree == 0 && min_connectivity == 0 && !no_separating_triangle && !deg4_min_distance3;
    }
};

struct GenerationBudget {
    int n_max = 12;
    ClassFilter filter;
};

// Exactly one representative per isomorphism class of planar triangulations
// on each n <= n_max passing the filter, emitted by n then canonical form.
// Graphs are generated by vertex splitting from K4 with canonical-form
// rejection; emitted representatives carry the canonical labelling.
void generate_all(const GenerationBudget& budget,
                  const std::function<void(const RotationGraph&)>& emit, unsigned jobs = 1);

// Convenience: collected corpus.
std::vector<RotationGraph> generate_corpus(const GenerationBudget& budget, unsigned jobs = 1);

} // namespace hamtri
