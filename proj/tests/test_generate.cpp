#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "hamtri/analysis.hpp"
#include "hamtri/canonical.hpp"
#include "hamtri/generate.hpp"
#include "oracles.hpp"

using namespace hamtri;

TEST_CASE("double wheel sizes and degrees") {
    RotationGraph g4 = double_wheel(4);
    CHECK(g4.n() == 6);
    CHECK(g4.edge_count() == 12);
    RotationGraph g5 = double_wheel(5);
    CHECK(g5.n() == 7);
    CHECK(g5.edge_count() == 15);
    CHECK(validate_triangulation(g5));
    CHECK(is_k_connected(g5, 4));
    CHECK(oracles::menger_connectivity(g5) == 4);
    try {
        double_wheel(3);
        FAIL("expected TooSmall");
    } catch (const error& e) {
        CHECK(e.code() == errc::too_small);
    }
}

TEST_CASE("apex ring towers") {
    RotationGraph ico = icosahedron();
    CHECK(ico.n() == 12);
    CHECK(ico.edge_count() == 30);
    CHECK(validate_triangulation(ico));
    for (Vertex v = 0; v < ico.n(); ++v) CHECK(ico.degree(v) == 5);
    CHECK(canonical_form(apex_ring_tower(4, 1)) == canonical_form(double_wheel(4)));
    RotationGraph tower = apex_ring_tower(4, 3);
    CHECK(tower.n() == 14);
    CHECK(validate_triangulation(tower));
    CHECK(is_k_connected(tower, 4));
}

TEST_CASE("stacking adds a separating triangle") {
    RotationGraph k4 = complete4();
    RotationGraph s5 = stack_vertex(k4, 0);
    CHECK(s5.n() == 5);
    CHECK(validate_triangulation(s5));
    CHECK(separating_cycles(s5, 3).size() == 1);
    RotationGraph oct = double_wheel(4);
    RotationGraph s7 = stack_vertex(oct, 3);
    CHECK(s7.n() == 7);
    CHECK(validate_triangulation(s7));
    CHECK_FALSE(is_k_connected(s7, 4));
    try {
        stack_vertex(oct, 99);
        FAIL("expected BadFace");
    } catch (const error& e) {
        CHECK(e.code() == errc::bad_face);
    }
}

TEST_CASE("vertex splits always yield triangulations") {
    RotationGraph g = double_wheel(5);
    int count = 0;
    for (Vertex w = 0; w < g.n(); ++w) {
        const int d = g.degree(w);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                RotationGraph child = split_vertex(g, w, i, j);
                CHECK(child.n() == g.n() + 1);
                CHECK(validate_triangulation(child));
                ++count;
            }
    }
    CHECK(count > 0);
}

TEST_CASE("generation counts match the small known values") {
    GenerationBudget b;
    b.n_max = 8;
    std::map<int, int> counts;
    std::set<std::vector<uint8_t>> forms;
    generate_all(b, [&](const RotationGraph& g) {
        CHECK(validate_triangulation(g));
        ++counts[g.n()];
        CHECK(forms.insert(canonical_form(g).bytes).second); // no duplicates
    });
    CHECK(counts == std::map<int, int>{{4, 1}, {5, 1}, {6, 2}, {7, 5}, {8, 14}});
}

TEST_CASE("n_max=4 gives exactly K4") {
    GenerationBudget b;
    b.n_max = 4;
    auto corpus = generate_corpus(b);
    REQUIRE(corpus.size() == 1);
    CHECK(canonical_form(corpus[0]) == canonical_form(complete4()));
}

TEST_CASE("the 4-connected filter keeps exactly the octahedron at n=6") {
    GenerationBudget b;
    b.n_max = 6;
    b.filter.min_connectivity = 4;
    auto corpus = generate_corpus(b);
    REQUIRE(corpus.size() == 1);
    CHECK(canonical_form(corpus[0]) == canonical_form(double_wheel(4)));
}

TEST_CASE("emission order and content are independent of the thread count") {
    GenerationBudget b;
    b.n_max = 9;
    std::vector<std::vector<uint8_t>> one, four;
    generate_all(b, [&](const RotationGraph& g) { one.push_back(canonical_form(g).bytes); }, 1);
    generate_all(b, [&](const RotationGraph& g) { four.push_back(canonical_form(g).bytes); }, 4);
    CHECK(one == four);
    CHECK(std::is_sorted(one.begin(), one.end(), [](const auto& a, const auto& b) {
        return std::tie(a[0], a) < std::tie(b[0], b);
    }));
}

TEST_CASE("brute-force embedder agrees at n=6") {
    auto counts = oracles::brute_force_triangulation_classes(6);
    CHECK(counts.all == 2);
    CHECK(counts.four_connected == 1);
}
