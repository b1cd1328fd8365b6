#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "hamtri/canonical.hpp"
#include "hamtri/generate.hpp"

using namespace hamtri;

namespace {

RotationGraph relabel(const RotationGraph& g, const std::vector<Vertex>& perm) {
    std::vector<std::vector<Vertex>> rot(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v)) rot[perm[v]].push_back(perm[w]);
    return RotationGraph::from_rotation_system(rot);
}

RotationGraph mirror(const RotationGraph& g) {
    std::vector<std::vector<Vertex>> rot = g.rotations();
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    return RotationGraph::from_rotation_system(rot);
}

} // namespace

TEST_CASE("two labelings of K4 share the canonical form, and its exact bytes") {
    RotationGraph a = complete4();
    RotationGraph b = relabel(a, {2, 0, 3, 1});
    CHECK(canonical_form(a) == canonical_form(b));
    const std::vector<uint8_t> expected{4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0};
    CHECK(canonical_form(a).bytes == expected);
    CHECK(expected.size() == 17);
}

TEST_CASE("mirror image shares the canonical form") {
    for (const RotationGraph& g : {double_wheel(5), apex_ring_tower(4, 2), icosahedron()})
        CHECK(canonical_form(g) == canonical_form(mirror(g)));
}

TEST_CASE("octahedron and the twice-stacked K4 differ") {
    RotationGraph oct = double_wheel(4);
    RotationGraph stacked = stack_vertex(stack_vertex(complete4(), 0), 0);
    REQUIRE(stacked.n() == 6);
    // degree sequences already separate these two classes
    std::vector<int> d1, d2;
    for (Vertex v = 0; v < 6; ++v) {
        d1.push_back(oct.degree(v));
        d2.push_back(stacked.degree(v));
    }
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    CHECK(d1 != d2);
    CHECK(canonical_form(oct) != canonical_form(stacked));
}

TEST_CASE("canonical form is invariant under relabeling composed with reflection") {
    std::mt19937 rng(20240817);
    GenerationBudget b;
    b.n_max = 7;
    for (const RotationGraph& g : generate_corpus(b)) {
        CanonicalForm base = canonical_form(g);
        std::vector<Vertex> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            RotationGraph h = relabel(g, perm);
            if (trial % 2) h = mirror(h);
            CHECK(canonical_form(h) == base);
        }
        // idempotence: relabelled graph re-encodes to the same bytes
        CHECK(canonical_form(canonical_relabel(g)) == base);
        CHECK(canonical_relabel(g).rotations() == decode_canonical(base).rotations());
    }
}

TEST_CASE("rooted canonical form distinguishes outer faces up to symmetry") {
    // the twice-stacked K4 has faces whose rooted forms differ
    RotationGraph g = stack_vertex(stack_vertex(complete4(), 0), 0);
    std::set<std::vector<uint8_t>> keys;
    for (const Face& f : g.faces()) keys.insert(canonical_form_rooted(g, f.id).bytes);
    CHECK(keys.size() > 1);
    // on the face-transitive octahedron all rootings agree
    RotationGraph oct = double_wheel(4);
    std::set<std::vector<uint8_t>> okeys;
    for (const Face& f : oct.faces()) okeys.insert(canonical_form_rooted(oct, f.id).bytes);
    CHECK(okeys.size() == 1);
}
