#include "hamtri/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "hamtri/analysis.hpp"
#include "hamtri/canonical.hpp"
#include "hamtri/census.hpp"
#include "hamtri/generate.hpp"
#include "hamtri/hamilton.hpp"
#include "hamtri/select.hpp"

namespace hamtri {

namespace {

std::vector<RotationGraph> four_connected_corpus(int n_max, unsigned jobs) {
    GenerationBudget b;
    b.n_max = n_max;
    b.filter.min_connectivity = 4;
    return generate_corpus(b, jobs);
}

std::vector<RotationGraph> full_corpus(int n_max, unsigned jobs) {
    GenerationBudget b;
    b.n_max = n_max;
    return generate_corpus(b, jobs);
}

void add_violation(SuiteOutcome& out, const RotationGraph& g, const std::string& detail) {
    out.violations.push_back(SuiteViolation{g.n(), canonical_form(g).hex(), detail});
}

// ---------------------------------------------------------------- conjecture

SuiteOutcome suite_conjecture(const SuiteParams& p) {
    SuiteOutcome out;
    out.name = "conjecture";
    std::map<int, std::string> dw;
    for (int n = 6; n <= p.n_max; ++n) dw[n] = canonical_form(double_wheel(n - 2)).hex();
    for (const RotationGraph& g : four_connected_corpus(p.n_max, p.jobs)) {
        ++out.graphs;
        ++out.instances;
        const int64_t hc = count_hamiltonian_cycles(g);
        const int64_t bound = conjecture_bound(g.n());
        const bool is_dw = canonical_form(g).hex() == dw[g.n()];
        if (hc < bound)
            add_violation(out, g, "hc_count " + std::to_string(hc) + " below bound " + std::to_string(bound));
        else if (hc == bound && !is_dw)
            add_violation(out, g, "equality at bound " + std::to_string(bound) + " off the double wheel");
        else if (is_dw && hc != bound)
            add_violation(out, g, "double wheel with hc_count " + std::to_string(hc) + " != bound");
    }
    return out;
}

// -------------------------------------------------------------- edge-removal

SuiteOutcome suite_edge_removal(const SuiteParams& p) {
    SuiteOutcome out;
    out.name = "edge-removal";
    const DiamondPatterns& patterns = default_diamond_patterns();
    for (const RotationGraph& g : four_connected_corpus(p.n_max, p.jobs)) {
        ++out.graphs;
        std::vector<Vertex> low;
        for (Vertex v = 0; v < g.n(); ++v)
            if (g.degree(v) <= 6) low.push_back(v);
        // all independent subsets of size <= 3
        std::vector<std::vector<Vertex>> subsets{{}};
        for (size_t i = 0; i < low.size(); ++i) subsets.push_back({low[i]});
        for (size_t i = 0; i < low.size(); ++i)
            for (size_t j = i + 1; j < low.size(); ++j) {
                if (g.has_edge(low[i], low[j])) continue;
                subsets.push_back({low[i], low[j]});
                for (size_t k = j + 1; k < low.size(); ++k)
                    if (!g.has_edge(low[i], low[k]) && !g.has_edge(low[j], low[k]))
                        subsets.push_back({low[i], low[j], low[k]});
            }
        for (const auto& sv : subsets) {
            CandidateSet s;
            s.vertices = sv;
            if (edge_removal_preconditions(g, s, patterns)) continue;
            for (const EdgeSelection& f : admissible_selections(g, s, patterns, p.seed, p.samples)) {
                ++out.instances;
                auto cert = preserves_4_connectivity(g, f);
                if (!cert.ok) {
                    std::ostringstream os;
                    os << "selection {";
                    for (const Edge& e : f.edges) os << to_string(e);
                    os << "} for members " << cycle_to_string(sv) << " breaks 4-connectivity at cut "
                       << cycle_to_string(cert.cut);
                    add_violation(out, g, os.str());
                }
            }
        }
    }
    return out;
}

// --------------------------------------------------------------- dichotomies

bool masked_is_path(const RotationGraph& g, const std::vector<char>& removed, Vertex a, Vertex b) {
    int alive = 0;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!removed[v]) ++alive;
    std::vector<int> deg(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (removed[v]) continue;
        for (Vertex w : g.neighbors(v))
            if (!removed[w]) ++deg[v];
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        if (removed[v]) continue;
        int want = (v == a || v == b) ? 1 : 2;
        if (alive == 1) want = 0;
        if (deg[v] != want) return false;
    }
    // connected spanning check by walking from a
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> stack{a};
    seen[a] = 1;
    int found = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++found;
                stack.push_back(w);
            }
    }
    return found == alive;
}

// some face touches every vertex and every other face is a triangle
bool deleted_subgraph_is_outerplanar_nt(const RotationGraph& g, std::span<const Vertex> del) {
    const int remaining = g.n() - int(del.size());
    if (remaining < 3) return true;
    SubgraphResult sub;
    try {
        sub = plane_delete_vertices(g, del);
    } catch (const error&) {
        return false; // disconnected remainder
    }
    for (const Face& f : sub.graph.faces()) {
        std::set<Vertex> on(f.boundary.begin(), f.boundary.end());
        if (int(on.size()) != sub.graph.n()) continue;
        bool rest_triangles = true;
        for (const Face& o : sub.graph.faces())
            if (o.id != f.id && o.length() != 3) rest_triangles = false;
        if (rest_triangles) return true;
    }
    return false;
}

SuiteOutcome suite_dichotomies(const SuiteParams& p) {
    SuiteOutcome out;
    out.name = "dichotomies";
    for (const NearTriangulation& nt : outer4_near_triangulations(p.n_max, p.jobs)) {
        if (has_separating_triangle(nt.graph)) continue;
        ++out.graphs;
        const auto& C = nt.outer;
        const RotationGraph& g = nt.graph;

        // opposite deletions: at least two spanning paths or the remainder is a path
        for (int shift = 0; shift < 2; ++shift) {
            Vertex u = C[shift], v = C[shift + 1], w = C[(shift + 2) % 4], x = C[(shift + 3) % 4];
            if (g.n() == 4 && g.edge_count() == 5 && g.has_edge(v, x)) continue; // the cycle plus the vx chord
            ++out.instances;
            std::vector<Vertex> del{v, x};
            auto paths = hamiltonian_paths_between(nt, u, w, del, 2);
            if (paths.size() >= 2) continue;
            std::vector<char> removed(g.n(), 0);
            removed[v] = removed[x] = 1;
            if (!masked_is_path(g, removed, u, w))
                add_violation(out, g,
                              "opposite pair " + cycle_to_string(del) + ": " + std::to_string(paths.size()) +
                                  " spanning paths and the remainder is not a path");
        }
        // adjacent deletions: two spanning paths or outerplanar near triangulation
        for (int shift = 0; shift < 4; ++shift) {
            Vertex u = C[shift], v = C[(shift + 1) % 4], w = C[(shift + 2) % 4], x = C[(shift + 3) % 4];
            ++out.instances;
            std::vector<Vertex> del{w, x};
            auto paths = hamiltonian_paths_between(nt, u, v, del, 2);
            if (paths.size() >= 2) continue;
            if (!deleted_subgraph_is_outerplanar_nt(g, del))
                add_violation(out, g,
                              "adjacent pair " + cycle_to_string(del) + ": " + std::to_string(paths.size()) +
                                  " spanning paths and the remainder is not an outerplanar near triangulation");
        }
        // a starved endpoint pair forces two adjacent interior degree-4 vertices
        if (g.n() >= 6) {
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    Vertex a = C[i], b = C[j];
                    std::vector<Vertex> del;
                    for (Vertex c : C)
                        if (c != a && c != b) del.push_back(c);
                    ++out.instances;
                    auto paths = hamiltonian_paths_between(nt, a, b, del, 2);
                    if (paths.size() >= 2) continue;
                    bool found_pair = false;
                    std::vector<char> on_outer(g.n(), 0);
                    for (Vertex c : C) on_outer[c] = 1;
                    for (Vertex s = 0; s < g.n() && !found_pair; ++s) {
                        if (on_outer[s] || g.degree(s) != 4) continue;
                        for (Vertex t : g.neighbors(s))
                            if (!on_outer[t] && g.degree(t) == 4) found_pair = true;
                    }
                    if (!found_pair)
                        add_violation(out, g,
                                      "pair (" + std::to_string(a) + "," + std::to_string(b) + ") has " +
                                          std::to_string(paths.size()) +
                                          " spanning paths but no adjacent interior degree-4 pair exists");
                }
        }
    }
    return out;
}

// ------------------------------------------------------------------ cofacial

SuiteOutcome suite_cofacial(const SuiteParams& p) {
    SuiteOutcome out;
    out.name = "cofacial";
    for (const RotationGraph& g : four_connected_corpus(p.n_max, p.jobs)) {
        ++out.graphs;
        std::set<std::pair<Edge, Edge>> pairs;
        for (const Face& f : g.faces()) {
            std::vector<Edge> fe;
            for (int i = 0; i < f.length(); ++i)
                fe.emplace_back(f.boundary[i], f.boundary[(i + 1) % f.length()]);
            std::sort(fe.begin(), fe.end());
            for (size_t i = 0; i < fe.size(); ++i)
                for (size_t j = i + 1; j < fe.size(); ++j) pairs.emplace(fe[i], fe[j]);
        }
        for (const auto& [e1, e2] : pairs) {
            ++out.instances;
            std::vector<Edge> req{e1, e2};
            if (enumerate_hamiltonian_cycles(g, req, {}, 1).empty())
                add_violation(out, g,
                              "no Hamiltonian cycle through cofacial edges " + to_string(e1) + " and " +
                                  to_string(e2));
        }
    }
    return out;
}

// ------------------------------------------------------- cycle-intersections

SuiteOutcome suite_cycle_intersections(const SuiteParams& p) {
    SuiteOutcome out;
    out.name = "cycle-intersections";
    for (const RotationGraph& g : four_connected_corpus(p.n_max, p.jobs)) {
        ++out.graphs;
        auto c4 = simple_cycles(g, 4);
        auto c5 = simple_cycles(g, 5);
        std::vector<std::vector<int>> at4(g.n()), at5(g.n());
        for (int i = 0; i < int(c4.size()); ++i)
            for (Vertex v : c4[i]) at4[v].push_back(i);
        for (int i = 0; i < int(c5.size()); ++i)
            for (Vertex v : c5[i]) at5[v].push_back(i);
        auto share = [](const std::vector<int>& a, const std::vector<int>& b) {
            size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) return true;
                (a[i] < b[j]) ? ++i : ++j;
            }
            return false;
        };
        auto edge_of_cycle = [](const std::vector<Vertex>& cyc, Vertex a, Vertex b) {
            const int k = int(cyc.size());
            for (int i = 0; i < k; ++i)
                if (Edge(cyc[i], cyc[(i + 1) % k]) == Edge(a, b)) return true;
            return false;
        };
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex u2 = u + 1; u2 < g.n(); ++u2) {
                if (g.has_edge(u, u2)) continue;
                if (share(at4[u], at4[u2]) || share(at5[u], at5[u2])) continue;
                for (int i : at4[u])
                    for (int j : at4[u2]) {
                        ++out.instances;
                        std::vector<Vertex> inter;
                        for (Vertex a : c4[i])
                            if (std::find(c4[j].begin(), c4[j].end(), a) != c4[j].end())
                                inter.push_back(a);
                        std::string who = "pair (" + std::to_string(u) + "," + std::to_string(u2) +
                                          ") cycles " + cycle_to_string(c4[i]) + cycle_to_string(c4[j]);
                        if (inter.size() > 2) {
                            add_violation(out, g, who + ": intersection larger than 2");
                            continue;
                        }
                        for (Vertex a : inter)
                            if (a == u || a == u2)
                                add_violation(out, g, who + ": intersection touches the pair");
                        if (inter.size() == 2 &&
                            !(edge_of_cycle(c4[i], inter[0], inter[1]) && edge_of_cycle(c4[j], inter[0], inter[1])))
                            add_violation(out, g, who + ": 2-vertex intersection is not a shared edge");
                    }
            }
    }
    return out;
}

// ------------------------------------------------------------- nested-counts

SuiteOutcome suite_nested_counts(const SuiteParams&) {
    SuiteOutcome out;
    out.name = "nested-counts";
    struct Construction {
        std::string label;
        RotationGraph g;
        int want_chain;
    };
    std::vector<Construction> cs;
    cs.push_back({"double_wheel(6)", double_wheel(6), 3});
    cs.push_back({"double_wheel(7)", double_wheel(7), 4});
    cs.push_back({"double_wheel(8)", double_wheel(8), 5});
    cs.push_back({"apex_ring_tower(4,3)", apex_ring_tower(4, 3), 3});
    for (const auto& c : cs) {
        ++out.graphs;
        ++out.instances;
        NestedChain chain = longest_nested_chain(c.g);
        if (chain.length < c.want_chain) {
            add_violation(out, c.g,
                          c.label + ": nested chain length " + std::to_string(chain.length) + " below " +
                              std::to_string(c.want_chain));
            continue;
        }
        const int t = chain.length - 1;
        const int64_t need = int64_t(1) << int(std::floor(std::sqrt(double(t))));
        const int64_t hc = count_hamiltonian_cycles(c.g);
        std::ostringstream note;
        note << c.label << ": chain " << chain.length << ", hc_count " << hc << ", bound 2^floor(sqrt(" << t
             << ")) = " << need;
        out.notes.push_back(note.str());
        if (hc < need)
            add_violation(out, c.g, c.label + ": hc_count " + std::to_string(hc) + " below " + std::to_string(need));
    }
    return out;
}

// --------------------------------------------------------------- refinement

SuiteOutcome suite_refinement(const SuiteParams& p) {
    SuiteOutcome out;
    out.name = "refinement";
    const DiamondPatterns& patterns = default_diamond_patterns();
    for (const RotationGraph& g : four_connected_corpus(p.n_max, p.jobs)) {
        ++out.graphs;
        CandidateSet I = low_degree_independent_set(g, 6);
        for (int t : {7, 10}) {
            ++out.instances;
            RefineResult r = refine_saturation_free(g, I, t, patterns);
            // exhaustive pair check must agree with the chosen branch
            int best = 0;
            for (Vertex v = 0; v < g.n(); ++v)
                for (Vertex x = v + 1; x < g.n(); ++x) {
                    int c = 0;
                    for (Vertex w : g.neighbors(v))
                        if (g.has_edge(x, w) && I.contains(w)) ++c;
                    best = std::max(best, c);
                }
            if (r.branch_a != (best >= t)) {
                add_violation(out, g, "branch disagrees with the exhaustive pair scan at t=" + std::to_string(t));
                continue;
            }
            if (r.branch_a && r.common < t)
                add_violation(out, g, "branch A pair below threshold t=" + std::to_string(t));
            const CandidateSet& s = r.saturation_free;
            for (Vertex v : s.vertices)
                if (!I.contains(v)) add_violation(out, g, "refined set leaves I");
            for (SaturationTarget target :
                 {SaturationTarget::four_cycle, SaturationTarget::five_cycle, SaturationTarget::diamond6})
                if (saturates(g, s, target, patterns))
                    add_violation(out, g, "refined set still saturates a target");
        }
    }
    return out;
}

// --------------------------------------------------------------------- links

SuiteOutcome suite_links(const SuiteParams& p) {
    SuiteOutcome out;
    out.name = "links";
    for (const RotationGraph& g : four_connected_corpus(p.n_max, p.jobs)) {
        ++out.graphs;
        for (Vertex u = 0; u < g.n(); ++u) {
            const int d = g.degree(u);
            if (d == 4) {
                // the induced graph on the neighbourhood is a 4-cycle
                ++out.instances;
                auto nb = g.neighbors(u);
                int inner = 0;
                for (size_t i = 0; i < nb.size(); ++i)
                    for (size_t j = i + 1; j < nb.size(); ++j)
                        if (g.has_edge(nb[i], nb[j])) ++inner;
                bool each_two = true;
                for (Vertex v : nb) {
                    int c = 0;
                    for (Vertex w : nb)
                        if (w != v && g.has_edge(v, w)) ++c;
                    if (c != 2) each_two = false;
                }
                if (inner != 4 || !each_two)
                    add_violation(out, g, "neighbourhood of degree-4 vertex " + std::to_string(u) +
                                              " is not a 4-cycle");
            } else if (d == 5 || d == 6) {
                bool adjacent_deg4 = false;
                auto nb = g.neighbors(u);
                for (size_t i = 0; i < nb.size(); ++i)
                    for (size_t j = i + 1; j < nb.size(); ++j)
                        if (g.degree(nb[i]) == 4 && g.degree(nb[j]) == 4 && g.has_edge(nb[i], nb[j]))
                            adjacent_deg4 = true;
                if (adjacent_deg4) continue;
                ++out.instances;
                LinkSet a = link(g, u);
                if (int(a.edges.size()) < (d + 1) / 2)
                    add_violation(out, g, "link of " + std::to_string(u) + " has " +
                                              std::to_string(a.edges.size()) + " edges, below ceil(d/2)");
                std::vector<Vertex> off;
                for (Vertex v : nb) {
                    bool in_link = false;
                    for (const Edge& e : a.edges)
                        if (e == Edge(u, v)) in_link = true;
                    if (!in_link) off.push_back(v);
                }
                for (size_t i = 0; i < off.size(); ++i)
                    for (size_t j = i + 1; j < off.size(); ++j)
                        if (g.has_edge(off[i], off[j]))
                            add_violation(out, g, "off-link neighbours of " + std::to_string(u) +
                                                      " are not independent");
            }
        }
        // closed-neighbourhood edge sets of a saturation-free pair are disjoint
        auto c4 = simple_cycles(g, 4);
        std::vector<std::vector<int>> at4(g.n());
        for (int i = 0; i < int(c4.size()); ++i)
            for (Vertex v : c4[i]) at4[v].push_back(i);
        for (Vertex u = 0; u < g.n(); ++u) {
            if (g.degree(u) > 6) continue;
            for (Vertex u2 = u + 1; u2 < g.n(); ++u2) {
                if (g.degree(u2) > 6 || g.has_edge(u, u2)) continue;
                bool common4 = false;
                for (int i : at4[u])
                    for (int j : at4[u2])
                        if (i == j) common4 = true;
                if (common4) continue;
                ++out.instances;
                auto closed_edges = [&](Vertex c) {
                    std::set<Edge> es;
                    std::vector<Vertex> cl{c};
                    for (Vertex w : g.neighbors(c)) cl.push_back(w);
                    for (size_t i = 0; i < cl.size(); ++i)
                        for (size_t j = i + 1; j < cl.size(); ++j)
                            if (g.has_edge(cl[i], cl[j])) es.insert(Edge(cl[i], cl[j]));
                    return es;
                };
                auto e1 = closed_edges(u), e2 = closed_edges(u2);
                for (const Edge& e : e1)
                    if (e2.count(e))
                        add_violation(out, g, "closed neighbourhoods of " + std::to_string(u) + " and " +
                                                  std::to_string(u2) + " share edge " + to_string(e));
            }
        }
    }
    return out;
}

// --------------------------------------------------------- nested-dichotomy

SuiteOutcome suite_nested_dichotomy(const SuiteParams& p) {
    SuiteOutcome out;
    out.name = "nested-dichotomy";
    for (const RotationGraph& g : four_connected_corpus(p.n_max, p.jobs)) {
        auto d4d = degree4_min_distance(g);
        if (d4d && *d4d < 3) continue;
        ++out.graphs;
        auto seps = separating_cycles(g, 4);
        if (seps.size() < 2) continue;
        auto c4 = simple_cycles(g, 4);
        auto c5 = simple_cycles(g, 5);
        auto pair_free = [&](Vertex a, Vertex b) {
            for (const auto& cyc : c4) {
                bool ha = false, hb = false;
                for (Vertex v : cyc) {
                    ha |= v == a;
                    hb |= v == b;
                }
                if (ha && hb) return false;
            }
            for (const auto& cyc : c5) {
                bool ha = false, hb = false;
                for (Vertex v : cyc) {
                    ha |= v == a;
                    hb |= v == b;
                }
                if (ha && hb) return false;
            }
            return true;
        };
        struct Region {
            int sep;
            RegionSide rs;
            std::vector<Vertex> closed;   // sorted
            std::vector<Vertex> interior; // sorted
        };
        std::vector<Region> regions;
        for (int i = 0; i < int(seps.size()); ++i)
            for (RegionSide rs : {RegionSide::a, RegionSide::b}) {
                Region r;
                r.sep = i;
                r.rs = rs;
                r.interior = seps[i].side(rs);
                r.closed = r.interior;
                r.closed.insert(r.closed.end(), seps[i].cycle.begin(), seps[i].cycle.end());
                std::sort(r.closed.begin(), r.closed.end());
                regions.push_back(std::move(r));
            }
        auto contains = [](const std::vector<Vertex>& big, const std::vector<Vertex>& small) {
            return std::includes(big.begin(), big.end(), small.begin(), small.end());
        };
        for (const Region& outer : regions)
            for (const Region& inner : regions) {
                if (seps[outer.sep].cycle == seps[inner.sep].cycle) continue;
                if (inner.closed.size() >= outer.closed.size()) continue;
                if (!contains(outer.closed, inner.closed)) continue;
                for (Vertex u : seps[outer.sep].cycle) {
                    if (std::binary_search(inner.interior.begin(), inner.interior.end(), u)) continue;
                    for (Vertex u2 : seps[inner.sep].cycle) {
                        if (u == u2 || g.has_edge(u, u2) || !pair_free(u, u2)) continue;
                        // the inner separating cycle must be maximal for u2
                        bool maximal = true;
                        for (const Region& r : regions) {
                            if (seps[r.sep].cycle == seps[inner.sep].cycle) continue;
                            bool on = std::find(seps[r.sep].cycle.begin(), seps[r.sep].cycle.end(), u2) !=
                                      seps[r.sep].cycle.end();
                            if (!on) continue;
                            if (r.closed.size() > inner.closed.size() && contains(r.closed, inner.closed))
                                maximal = false;
                        }
                        if (!maximal) continue;
                        ++out.instances;

                        // carve the outer region, contract the inner interior
                        RegionResult rr = closed_region(g, seps[outer.sep].cycle, seps[outer.sep].geom(outer.rs));
                        std::vector<Vertex> inner_cycle;
                        for (Vertex v : seps[inner.sep].cycle) inner_cycle.push_back(rr.to_new[v]);
                        CycleSides cs = sides_of_cycle(rr.region.graph, inner_cycle);
                        Side inner_side = cs.side_of(rr.to_new[inner.interior.front()]);
                        ContractionResult cr = contract_region(rr.region.graph, inner_cycle, inner_side);
                        std::vector<Vertex> outer_cycle;
                        for (Vertex v : seps[outer.sep].cycle) outer_cycle.push_back(cr.vmap[rr.to_new[v]]);
                        int outer_fid = -1;
                        std::vector<Vertex> want = outer_cycle;
                        std::sort(want.begin(), want.end());
                        for (const Face& f : cr.graph.faces()) {
                            if (f.length() != 4) continue;
                            std::vector<Vertex> b = f.boundary;
                            std::sort(b.begin(), b.end());
                            if (b == want) outer_fid = f.id;
                        }
                        if (outer_fid < 0) {
                            add_violation(out, g, "contracted region lost its outer 4-cycle face");
                            continue;
                        }
                        NearTriangulation h{cr.graph.with_outer_face(outer_fid), outer_cycle};
                        const Vertex z = cr.new_vertex;

                        // spanning-path counts for all outer pairs
                        std::map<std::pair<Vertex, Vertex>, std::vector<PathWitness>> paths;
                        std::vector<std::pair<Vertex, Vertex>> starved;
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) {
                                Vertex a = outer_cycle[i], b = outer_cycle[j];
                                std::vector<Vertex> del;
                                for (Vertex c : outer_cycle)
                                    if (c != a && c != b) del.push_back(c);
                                paths[{a, b}] = hamiltonian_paths_between(h, a, b, del);
                                if (paths[{a, b}].size() < 2) starved.push_back({a, b});
                            }
                        if (starved.empty()) continue; // case (i)
                        if (starved.size() != 1 || paths[starved[0]].size() != 1) {
                            add_violation(out, g, "contracted instance has " + std::to_string(starved.size()) +
                                                      " starved outer pairs");
                            continue;
                        }
                        const PathWitness& unique_path = paths[starved[0]][0];
                        // the two path edges at the contraction vertex
                        std::vector<Edge> z_edges;
                        for (size_t i = 0; i + 1 < unique_path.vertices.size(); ++i)
                            if (unique_path.vertices[i] == z || unique_path.vertices[i + 1] == z)
                                z_edges.emplace_back(unique_path.vertices[i], unique_path.vertices[i + 1]);
                        for (auto& [pair, plist] : paths) {
                            if (pair == starved[0]) continue;
                            int good = 0;
                            for (const PathWitness& q : plist) {
                                bool uses_both = true;
                                for (const Edge& e : z_edges)
                                    if (!q.contains_edge(e)) uses_both = false;
                                if (!uses_both) ++good;
                            }
                            if (good < 2)
                                add_violation(out, g,
                                              "pair (" + std::to_string(pair.first) + "," +
                                                  std::to_string(pair.second) +
                                                  ") lacks two paths avoiding a unique-path edge at the "
                                                  "contraction vertex");
                        }
                    }
                }
            }
    }
    if (out.instances == 0)
        out.notes.push_back("no qualifying nested instances at this size; checks were vacuous");
    return out;
}

} // namespace

std::vector<NearTriangulation> outer4_near_triangulations(int n_max, unsigned jobs) {
    std::vector<NearTriangulation> out;
    std::set<std::vector<uint8_t>> seen;
    auto add = [&](NearTriangulation nt) {
        if (nt.graph.n() > n_max) return;
        auto key = canonical_form_rooted(nt.graph, *nt.graph.outer_face()).bytes;
        if (seen.insert(key).second) out.push_back(std::move(nt));
    };
    for (const RotationGraph& t : full_corpus(n_max + 1, jobs)) {
        for (Vertex v = 0; v < t.n(); ++v) {
            if (t.degree(v) != 4) continue;
            SubgraphResult sub = plane_delete_vertices(t, std::vector<Vertex>{v});
            int quad = -1;
            for (const Face& f : sub.graph.faces())
                if (f.length() == 4) quad = f.id;
            if (quad < 0) throw error(errc::internal, "degree-4 deletion left no quadrilateral face");
            NearTriangulation nt{sub.graph.with_outer_face(quad), sub.graph.faces()[quad].boundary};
            add(std::move(nt));
        }
        for (const SeparatingCycle& sc : separating_cycles(t, 4)) {
            for (RegionSide rs : {RegionSide::a, RegionSide::b}) {
                RegionResult rr = closed_region(t, sc.cycle, sc.geom(rs));
                add(std::move(rr.region));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const NearTriangulation& a, const NearTriangulation& b) {
        if (a.graph.n() != b.graph.n()) return a.graph.n() < b.graph.n();
        return canonical_form_rooted(a.graph, *a.graph.outer_face()).bytes <
               canonical_form_rooted(b.graph, *b.graph.outer_face()).bytes;
    });
    return out;
}

std::vector<std::string> suite_names() {
    return {"conjecture",     "edge-removal",       "dichotomies",
            "cofacial",       "cycle-intersections", "nested-counts",
            "refinement",     "links",              "nested-dichotomy"};
}

SuiteOutcome run_suite(const std::string& name, const SuiteParams& params) {
    if (name == "conjecture") return suite_conjecture(params);
    if (name == "edge-removal") return suite_edge_removal(params);
    if (name == "dichotomies") return suite_dichotomies(params);
    if (name == "cofacial") return suite_cofacial(params);
    if (name == "cycle-intersections") return suite_cycle_intersections(params);
    if (name == "nested-counts") return suite_nested_counts(params);
    if (name == "refinement") return suite_refinement(params);
    if (name == "links") return suite_links(params);
    if (name == "nested-dichotomy") return suite_nested_dichotomy(params);
    throw error(errc::internal, "unknown suite " + name);
}

} // namespace hamtri
