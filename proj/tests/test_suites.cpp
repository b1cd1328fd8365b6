#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hamtri/analysis.hpp"
#include "hamtri/generate.hpp"
#include "hamtri/hamilton.hpp"
#include "hamtri/select.hpp"
#include "hamtri/suites.hpp"

using namespace hamtri;

TEST_CASE("refinement suite is clean at n<=9") {
    SuiteOutcome so = run_suite("refinement", SuiteParams{9, 0, 4});
    CHECK(so.violations.empty());
    CHECK(so.instances > 0);
}

TEST_CASE("links suite is clean at n<=10") {
    SuiteOutcome so = run_suite("links", SuiteParams{10, 0, 4});
    CHECK(so.violations.empty());
    CHECK(so.instances > 0);
}

TEST_CASE("nested dichotomy suite finds instances at n<=12 and is clean") {
    SuiteOutcome so = run_suite("nested-dichotomy", SuiteParams{12, 0, 4});
    CHECK(so.violations.empty());
    CHECK(so.instances >= 2);
}

// Derived surface for the edge-link step: a 4-connected triangulation has a
// Hamiltonian cycle through a given edge e and an edge of the link of any
// qualifying vertex u; deleting a vertex y cofacial with e (not incident)
// leaves a Hamiltonian cycle through e and a link edge missing y.
TEST_CASE("edge-link Hamiltonian cycles, with and without a cofacial deletion") {
    GenerationBudget b;
    b.n_max = 9;
    b.filter.min_connectivity = 4;
    int64_t checked = 0;
    for (const RotationGraph& g : generate_corpus(b, 4)) {
        for (Vertex u = 0; u < g.n(); ++u) {
            const int d = g.degree(u);
            if (d > 6) continue;
            LinkSet au = link(g, u);
            if (au.edges.empty()) continue;
            // hypotheses: off-link neighbours independent (degree 5/6), or
            // two nonadjacent neighbours of degree >= 5 (degree 4)
            if (d == 4) {
                auto nb = g.neighbors(u);
                bool ok = false;
                for (size_t i = 0; i < nb.size(); ++i)
                    for (size_t j = i + 1; j < nb.size(); ++j)
                        if (!g.has_edge(nb[i], nb[j]) && g.degree(nb[i]) >= 5 && g.degree(nb[j]) >= 5)
                            ok = true;
                if (!ok) continue;
            } else {
                std::vector<Vertex> off;
                for (Vertex v : g.neighbors(u)) {
                    bool in_link = false;
                    for (const Edge& e : au.edges)
                        if (e == Edge(u, v)) in_link = true;
                    if (!in_link) off.push_back(v);
                }
                bool indep = true;
                for (size_t i = 0; i < off.size(); ++i)
                    for (size_t j = i + 1; j < off.size(); ++j)
                        if (g.has_edge(off[i], off[j])) indep = false;
                if (!indep) continue;
            }
            // closed-neighbourhood edges are off limits for e
            std::set<Edge> closed;
            {
                std::vector<Vertex> cl{u};
                for (Vertex w : g.neighbors(u)) cl.push_back(w);
                for (size_t i = 0; i < cl.size(); ++i)
                    for (size_t j = i + 1; j < cl.size(); ++j)
                        if (g.has_edge(cl[i], cl[j])) closed.insert(Edge(cl[i], cl[j]));
            }
            for (const Edge& e : g.edges()) {
                if (closed.count(e)) continue;
                ++checked;
                // (i) a Hamiltonian cycle through e and some link edge
                std::vector<Edge> req{e};
                bool found = false;
                for (const CycleWitness& w : enumerate_hamiltonian_cycles(g, req)) {
                    for (const Edge& f : au.edges)
                        if (w.contains_edge(f)) found = true;
                    if (found) break;
                }
                CHECK(found);
                // (ii) same after deleting one vertex cofacial with e
                Vertex y = -1;
                for (const Face& fc : {g.faces()[g.face_at(e.a, e.b)], g.faces()[g.face_at(e.b, e.a)]})
                    for (Vertex v : fc.boundary)
                        if (v != e.a && v != e.b && v != u) y = v;
                if (y < 0) continue;
                SubgraphResult sub = plane_delete_vertices(g, std::vector<Vertex>{y});
                Edge e2(sub.to_new[e.a], sub.to_new[e.b]);
                LinkSet filtered = au.excluding(y);
                if (filtered.edges.empty()) continue;
                std::vector<Edge> req2{e2};
                bool found2 = false;
                for (const CycleWitness& w : enumerate_hamiltonian_cycles(sub.graph, req2)) {
                    for (const Edge& f : filtered.edges)
                        if (w.contains_edge(Edge(sub.to_new[f.a], sub.to_new[f.b]))) found2 = true;
                    if (found2) break;
                }
                CHECK(found2);
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("near-triangulation corpus is deduplicated and well formed") {
    auto corpus = outer4_near_triangulations(8);
    CHECK(!corpus.empty());
    for (const NearTriangulation& nt : corpus) {
        CHECK(validate_near_triangulation(nt));
        CHECK(nt.outer.size() == 4);
        CHECK(nt.graph.n() <= 8);
    }
}
