#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamtri/rotation.hpp"

namespace hamtri {

struct SuiteParams {
    int n_max = 10;
    uint64_t seed = 0;
    unsigned jobs = 1;
    int64_t samples = 1000; // per-instance selection cap where sampling applies
};

struct SuiteViolation {
    int n = 0;
    std::string canon;
    std::string detail;
};

struct SuiteOutcome {
    std::string name;
    int64_t graphs = 0;    // corpus items examined
    int64_t instances = 0; // individual checks performed
    std::vector<SuiteViolation> violations;
    std::vector<std::string> notes;
    bool ok() const { return violations.empty(); }
};

// Suite catalogue (see README for what each verifies):
//   conjecture          quadratic lower-bound sweep over 4-connected corpus
//   edge-removal        link selections keep 4-connectivity
//   dichotomies         Hamiltonian-path dichotomies in outer-4-cycle near
//                       triangulations without separating triangles
//   cofacial            a Hamiltonian cycle through any two cofacial edges
//   cycle-intersections 4-cycles around saturation-free pairs intersect in
//                       at most a shared edge
//   nested-dichotomy    path dichotomy for contracted nested 4-cycle pairs
//   nested-counts       nested separating 4-cycle chains force 2^floor(sqrt t)
//                       Hamiltonian cycles on constructed families
//   refinement          saturation-free refinement branches are consistent
//   links               link sizes and closed-neighbourhood disjointness
std::vector<std::string> suite_names();
SuiteOutcome run_suite(const std::string& name, const SuiteParams& params);

// All near triangulations with an outer 4-cycle on at most n_max vertices,
// built from degree-4 deletions and closed regions of separating 4-cycles
// over the triangulation corpus, deduplicated by outer-face-rooted canonical
// form.
std::vector<NearTriangulation> outer4_near_triangulations(int n_max, unsigned jobs = 1);

} // namespace hamtri
