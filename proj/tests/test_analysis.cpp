#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>

#include "hamtri/analysis.hpp"
#include "hamtri/canonical.hpp"
#include "hamtri/generate.hpp"
#include "oracles.hpp"

using namespace hamtri;

TEST_CASE("vertex connectivity on the named graphs") {
    CHECK(vertex_connectivity(complete4()) == 3);
    CHECK(vertex_connectivity(stack_vertex(complete4(), 0)) == 3);
    CHECK(vertex_connectivity(double_wheel(4)) == 4);
    CHECK(vertex_connectivity(icosahedron()) == 5);
}

TEST_CASE("connectivity matches the disjoint-paths oracle over the corpus") {
    GenerationBudget b;
    b.n_max = 8;
    for (const RotationGraph& g : generate_corpus(b))
        CHECK(vertex_connectivity(g) == oracles::menger_connectivity(g));
}

TEST_CASE("separating cycles on the named graphs") {
    CHECK(separating_cycles(double_wheel(4), 3).empty());
    CHECK(simple_cycles(double_wheel(4), 3).size() == 8); // all triangles are faces

    auto s5 = separating_cycles(stack_vertex(complete4(), 0), 3);
    REQUIRE(s5.size() == 1);
    CHECK(s5[0].side_a.size() + s5[0].side_b.size() == 2); // one vertex each side

    RotationGraph dw5 = double_wheel(5); // ring 0..4, apexes 5 and 6
    auto s4 = separating_cycles(dw5, 4);
    REQUIRE(s4.size() == 5);
    for (const SeparatingCycle& sc : s4) {
        // each is apex, ring, apex, ring
        std::set<Vertex> apexes{5, 6};
        int apex_count = 0;
        for (Vertex v : sc.cycle)
            if (apexes.count(v)) ++apex_count;
        CHECK(apex_count == 2);
        CHECK_FALSE(sc.side_a.empty());
        CHECK_FALSE(sc.side_b.empty());
        // sides match the components of the deletion exactly
        std::vector<char> removed(dw5.n(), 0);
        for (Vertex v : sc.cycle) removed[v] = 1;
        std::set<Vertex> all(sc.side_a.begin(), sc.side_a.end());
        all.insert(sc.side_b.begin(), sc.side_b.end());
        CHECK(all.size() == size_t(dw5.n()) - 4);
        for (Vertex v : sc.side_a)
            for (Vertex w : sc.side_b) CHECK_FALSE(dw5.has_edge(v, w));
    }
}

TEST_CASE("side_a avoids the smallest id outside the closed neighbourhood") {
    RotationGraph dw8 = double_wheel(8);
    for (const SeparatingCycle& sc : separating_cycles(dw8, 4)) {
        std::vector<char> near(dw8.n(), 0);
        for (Vertex c : sc.cycle) {
            near[c] = 1;
            for (Vertex w : dw8.neighbors(c)) near[w] = 1;
        }
        Vertex probe = -1;
        for (Vertex v = 0; v < dw8.n() && probe < 0; ++v)
            if (!near[v]) probe = v;
        if (probe >= 0)
            CHECK(std::find(sc.side_a.begin(), sc.side_a.end(), probe) == sc.side_a.end());
    }
}

TEST_CASE("contracting a double-wheel 4-cycle side") {
    RotationGraph dw5 = double_wheel(5); // ring 0..4, apexes 5, 6
    auto s4 = separating_cycles(dw5, 4);
    // pick the cycle 5-1-6-3 (sides {2} and {0,4})
    const SeparatingCycle* sc = nullptr;
    for (const auto& s : s4) {
        std::set<Vertex> vs(s.cycle.begin(), s.cycle.end());
        if (vs == std::set<Vertex>{5, 1, 6, 3}) sc = &s;
    }
    REQUIRE(sc != nullptr);
    RegionSide big = sc->side_a.size() == 2 ? RegionSide::a : RegionSide::b;

    // contracting the two-vertex side gives the octahedron
    ContractionResult to_oct = contract_interior(dw5, *sc, big);
    CHECK(to_oct.graph.n() == 6);
    CHECK(validate_triangulation(to_oct.graph));
    CHECK(canonical_form(to_oct.graph) == canonical_form(double_wheel(4)));
    CHECK(to_oct.graph.degree(to_oct.new_vertex) == 4);

    // contracting the singleton side reproduces the double wheel itself
    ContractionResult same = contract_interior(dw5, *sc, big == RegionSide::a ? RegionSide::b : RegionSide::a);
    CHECK(same.graph.n() == 7);
    CHECK(canonical_form(same.graph) == canonical_form(dw5));

    // vmap bookkeeping
    for (Vertex v : sc->side(big)) CHECK(to_oct.vmap[v] == to_oct.new_vertex);
    CHECK(to_oct.graph.n() == dw5.n() - int(sc->side(big).size()) + 1);
}

TEST_CASE("contracting a face interior is rejected") {
    RotationGraph oct = double_wheel(4);
    const Face& f = oct.faces()[0];
    CycleSides sides = sides_of_cycle(oct, f.boundary);
    Side empty_side = sides.left.empty() ? Side::left : Side::right;
    try {
        contract_region(oct, f.boundary, empty_side);
        FAIL("expected EmptyInterior");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_interior);
    }
}

TEST_CASE("contracting an inner nested cycle keeps the outer one separating") {
    RotationGraph dw8 = double_wheel(8); // n = 10
    NestedChain chain = longest_nested_chain(dw8);
    REQUIRE(chain.length >= 2);
    // innermost cycle is last; contract its smaller side
    auto seps = separating_cycles(dw8, 4);
    const SeparatingCycle* inner = nullptr;
    const SeparatingCycle* outer = nullptr;
    for (const auto& s : seps) {
        if (s.cycle == chain.cycles.back()) inner = &s;
        if (s.cycle == chain.cycles.front()) outer = &s;
    }
    REQUIRE(inner);
    REQUIRE(outer);
    RegionSide small = inner->side_a.size() <= inner->side_b.size() ? RegionSide::a : RegionSide::b;
    ContractionResult res = contract_interior(dw8, *inner, small);
    CHECK(validate_triangulation(res.graph));
    std::vector<Vertex> outer_mapped;
    for (Vertex v : outer->cycle) outer_mapped.push_back(res.vmap[v]);
    bool intact = false;
    for (const SeparatingCycle& s : separating_cycles(res.graph, 4)) {
        std::set<Vertex> a(s.cycle.begin(), s.cycle.end()), bset(outer_mapped.begin(), outer_mapped.end());
        if (a == bset) intact = true;
    }
    CHECK(intact);
}

TEST_CASE("edge contraction: octahedron to the stacked triangulation, K4 to the triangle") {
    RotationGraph oct = double_wheel(4);
    ContractionResult r = contract_edge(oct, Edge(0, 1));
    CHECK(r.graph.n() == 5);
    CHECK(validate_triangulation(r.graph));
    CHECK(canonical_form(r.graph) == canonical_form(stack_vertex(complete4(), 0)));
    CHECK(r.vmap[1] == r.vmap[0]);

    ContractionResult k3 = contract_edge(complete4(), Edge(0, 1));
    CHECK(k3.graph.n() == 3);
    CHECK(k3.graph.edge_count() == 3);
    CHECK(validate_triangulation(k3.graph));

    try {
        contract_edge(oct, Edge(0, 2)); // ring vertices 0 and 2 are not adjacent
        FAIL("expected NotAnEdge");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_an_edge);
    }
}

TEST_CASE("contractions of corpus triangulations stay triangulations") {
    GenerationBudget b;
    b.n_max = 7;
    for (const RotationGraph& g : generate_corpus(b)) {
        for (const SeparatingCycle& sc : separating_cycles(g, 4)) {
            for (RegionSide rs : {RegionSide::a, RegionSide::b}) {
                // a side whose interior is split by a chord has no plane
                // contraction; that only occurs next to separating triangles
                const auto& interior = sc.side(rs);
                std::vector<char> in(g.n(), 0);
                for (Vertex v : interior) in[v] = 1;
                std::vector<Vertex> stack{interior[0]};
                std::vector<char> seen(g.n(), 0);
                seen[interior[0]] = 1;
                size_t found = 1;
                while (!stack.empty()) {
                    Vertex v = stack.back();
                    stack.pop_back();
                    for (Vertex w : g.neighbors(v))
                        if (in[w] && !seen[w]) {
                            seen[w] = 1;
                            ++found;
                            stack.push_back(w);
                        }
                }
                if (found == interior.size()) {
                    CHECK(validate_triangulation(contract_interior(g, sc, rs).graph));
                } else {
                    CHECK(has_separating_triangle(g));
                    CHECK_THROWS_AS((void)contract_interior(g, sc, rs), precondition_error);
                }
            }
        }
    }
}

TEST_CASE("diamond fixtures load and match their own pattern once") {
    const DiamondPatterns& p = default_diamond_patterns();
    CHECK(p.d4.n == 5);
    CHECK(p.d6.n == 9);
    CHECK(p.d4.crucial.size() == 2);
    CHECK(p.d6.crucial.size() == 6);

    // the d4 pattern embedded in itself: exactly one match modulo automorphism
    // (plane embedding of d4 by hand: diamond 0-1 with tips 2,3, plus 4)
    RotationGraph host = RotationGraph::from_rotation_system({{2, 1, 3}, {2, 3, 0}, {0, 4, 1}, {0, 1, 4}, {2, 3}});
    auto matches = find_diamonds(host, p.d4);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].crucial_image == std::vector<Vertex>{0, 1});

    CHECK(find_diamonds(complete4(), p.d6).empty());
}

TEST_CASE("diamond matcher agrees with the brute-force oracle at n=9") {
    GenerationBudget b;
    b.n_max = 9;
    b.filter.min_connectivity = 4;
    auto corpus = generate_corpus(b);
    const DiamondPatterns& p = default_diamond_patterns();
    for (const RotationGraph& g : corpus) {
        if (g.n() != 9) continue;
        CHECK(int64_t(find_diamonds(g, p.d4).size()) == oracles::brute_subgraph_match_count(g, p.d4));
        CHECK(int64_t(find_diamonds(g, p.d6).size()) == oracles::brute_subgraph_match_count(g, p.d6));
    }
}

TEST_CASE("missing or malformed fixtures are rejected") {
    try {
        load_diamond_patterns("/nonexistent/diamond_patterns.txt");
        FAIL("expected FixtureMissing");
    } catch (const error& e) {
        CHECK(e.code() == errc::fixture_missing);
    }
    // a fixture violating the crucial-vertex degree constraint
    std::string bad = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/bad_patterns.txt";
    {
        std::ofstream out(bad);
        out << "pattern d4 5\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 4\ne 3 4\ncrucial 0 4\nend\n";
        out << "pattern d6 9\ne 3 4\ncrucial 3\nend\n";
    }
    try {
        load_diamond_patterns(bad);
        FAIL("expected FixtureMissing");
    } catch (const error& e) {
        CHECK(e.code() == errc::fixture_missing);
    }
}

TEST_CASE("degree-4 distances") {
    CHECK(degree4_min_distance(double_wheel(4)) == 1);
    CHECK_FALSE(degree4_min_distance(icosahedron()).has_value());
    CHECK(degree4_min_distance(double_wheel(6)) == 1);
}

TEST_CASE("degree bound in triangulations without separating triangles") {
    GenerationBudget b;
    b.n_max = 9;
    for (const RotationGraph& g : generate_corpus(b)) {
        if (g.n() < 5 || has_separating_triangle(g)) continue;
        for (Vertex v = 0; v < g.n(); ++v) CHECK(g.degree(v) >= 4);
    }
}
