#include "hamtri/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "hamtri/analysis.hpp"

namespace hamtri {

namespace {

using Mask = uint64_t;

constexpr int kMaxEnumVertices = 64;

void require_enumerable(const RotationGraph& g) {
    if (g.n() > kMaxEnumVertices)
        throw error(errc::too_large, "enumeration supports up to 64 vertices");
}

std::vector<Mask> adjacency_masks(const RotationGraph& g) {
    std::vector<Mask> adj(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= Mask(1) << w;
    return adj;
}

// every vertex of `targets` reachable from `start` within `allowed`
bool reachable_all(const std::vector<Mask>& adj, Mask allowed, Vertex start, Mask targets) {
    Mask seen = Mask(1) << start;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        Mask f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v] & allowed;
        }
        next &= ~seen;
        if (!next) break;
        seen |= next;
        frontier = next;
    }
    return (targets & ~seen) == 0;
}

} // namespace

std::vector<Vertex> CycleWitness::canonical_rotation(std::vector<Vertex> seq) {
    const int k = int(seq.size());
    std::vector<Vertex> best = seq;
    std::vector<Vertex> cand(k);
    for (int dir = 0; dir < 2; ++dir)
        for (int s = 0; s < k; ++s) {
            for (int i = 0; i < k; ++i)
                cand[i] = dir == 0 ? seq[(s + i) % k] : seq[(s - i + 2 * k) % k];
            if (cand < best) best = cand;
        }
    return best;
}

std::vector<Edge> CycleWitness::edge_set() const {
    std::vector<Edge> out;
    const int k = int(vertices.size());
    for (int i = 0; i < k; ++i) out.emplace_back(vertices[i], vertices[(i + 1) % k]);
    std::sort(out.begin(), out.end());
    return out;
}

bool CycleWitness::contains_edge(const Edge& e) const {
    const int k = int(vertices.size());
    for (int i = 0; i < k; ++i)
        if (Edge(vertices[i], vertices[(i + 1) % k]) == e) return true;
    return false;
}

bool CycleWitness::contains_vertex(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<Edge> PathWitness::edge_set() const {
    std::vector<Edge> out;
    for (size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

bool PathWitness::contains_edge(const Edge& e) const {
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        if (Edge(vertices[i], vertices[i + 1]) == e) return true;
    return false;
}

std::vector<CycleWitness> enumerate_hamiltonian_cycles(const RotationGraph& g,
                                                       std::span<const Edge> required,
                                                       std::span<const Edge> forbidden,
                                                       std::optional<int64_t> limit) {
    require_enumerable(g);
    const int n = g.n();
    for (const Edge& e : required) {
        if (!g.has_edge(e)) throw error(errc::contradictory_constraints, "required edge " + to_string(e) + " not in graph");
        for (const Edge& f : forbidden)
            if (e == f)
                throw error(errc::contradictory_constraints, "edge " + to_string(e) + " both required and forbidden");
    }
    std::vector<Mask> avail = adjacency_masks(g);
    for (const Edge& f : forbidden) {
        if (f.a < 0 || f.b >= n) continue;
        avail[f.a] &= ~(Mask(1) << f.b);
        avail[f.b] &= ~(Mask(1) << f.a);
    }
    std::vector<Mask> req(n, 0);
    for (const Edge& e : required) {
        req[e.a] |= Mask(1) << e.b;
        req[e.b] |= Mask(1) << e.a;
    }
    for (Vertex v = 0; v < n; ++v)
        if (std::popcount(req[v]) > 2) return {};

    const Mask full = (n == 64) ? ~Mask(0) : ((Mask(1) << n) - 1);
    std::vector<CycleWitness> out;
    std::vector<Vertex> path{0};
    Mask visited = 1;
    bool done = false;

    auto emit = [&](Vertex last) {
        if (path[1] >= last) return;
        if (req[0] & ~((Mask(1) << path[1]) | (Mask(1) << last))) return;
        out.push_back(CycleWitness{path});
        if (limit && int64_t(out.size()) >= *limit) done = true;
    };

    std::function<void()> rec = [&]() {
        if (done) return;
        const Vertex c = path.back();
        const Vertex prev = path.size() > 1 ? path[path.size() - 2] : -1;
        Mask req_t = req[c];
        if (prev >= 0) req_t &= ~(Mask(1) << prev);
        // at the root both cycle edges are still open; elsewhere one slot remains
        if (std::popcount(req_t) > (path.size() == 1 ? 2 : 1)) return;

        if (int(path.size()) == n) {
            if ((avail[c] >> 0) & 1) {
                if (!req_t || req_t == 1) emit(c);
            }
            return;
        }
        // pruning: unvisited vertices need two usable links; remainder must
        // stay reachable from the current end
        Mask unvisited = full & ~visited;
        Mask ring = unvisited | (Mask(1) << c) | 1;
        Mask scan = unvisited;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (std::popcount(avail[v] & ring & ~(Mask(1) << v)) < 2) return;
        }
        if (!reachable_all(avail, unvisited | (Mask(1) << c), c, unvisited)) return;

        Mask cand;
        if (path.size() == 1) {
            // a single required root edge may serve as the closing edge, so
            // it does not force the first step
            cand = std::popcount(req_t) == 2 ? req_t : avail[c];
        } else if (req_t) {
            if (!(req_t & unvisited)) return; // forced edge cannot be taken yet
            cand = req_t;
        } else {
            cand = avail[c];
        }
        cand &= unvisited & avail[c];
        while (cand) {
            int y = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(y);
            visited |= Mask(1) << y;
            rec();
            visited &= ~(Mask(1) << y);
            path.pop_back();
            if (done) return;
        }
    };
    rec();
    std::sort(out.begin(), out.end(),
              [](const CycleWitness& x, const CycleWitness& y) { return x.vertices < y.vertices; });
    return out;
}

int64_t count_hamiltonian_cycles(const RotationGraph& g) {
    return int64_t(enumerate_hamiltonian_cycles(g).size());
}

int64_t count_hamiltonian_cycles_dp(const RotationGraph& g) {
    const int n = g.n();
    if (n > 24) throw error(errc::too_large, "dp counter supports up to 24 vertices");
    std::vector<Mask> adj = adjacency_masks(g);
    const uint32_t full = (uint32_t(1) << n) - 1;
    std::vector<int64_t> dp(size_t(full + 1) * n, 0);
    dp[size_t(1) * n + 0] = 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        if (!(mask & 1)) continue;
        for (int v = 0; v < n; ++v) {
            int64_t cur = dp[size_t(mask) * n + v];
            if (!cur || !(mask & (uint32_t(1) << v))) continue;
            uint32_t next = uint32_t(adj[v]) & ~mask & full;
            while (next) {
                int w = std::countr_zero(next);
                next &= next - 1;
                dp[size_t(mask | (uint32_t(1) << w)) * n + w] += cur;
            }
        }
    }
    int64_t closed = 0;
    for (int v = 1; v < n; ++v)
        if (adj[v] & 1) closed += dp[size_t(full) * n + v];
    return closed / 2;
}

std::vector<PathWitness> hamiltonian_paths_between(const NearTriangulation& h, Vertex a, Vertex b,
                                                   std::span<const Vertex> del,
                                                   std::optional<int64_t> limit) {
    const RotationGraph& g = h.graph;
    require_enumerable(g);
    auto on_outer = [&](Vertex v) {
        return std::find(h.outer.begin(), h.outer.end(), v) != h.outer.end();
    };
    if (a == b || a < 0 || b < 0 || a >= g.n() || b >= g.n() || !on_outer(a) || !on_outer(b))
        throw error(errc::bad_endpoints, "endpoints must be distinct outer-cycle vertices");
    for (Vertex v : del)
        if (v == a || v == b || !on_outer(v))
            throw error(errc::bad_endpoints, "deleted vertices must be outer-cycle vertices other than the endpoints");

    const int n = g.n();
    std::vector<Mask> adj = adjacency_masks(g);
    Mask active = (n == 64) ? ~Mask(0) : ((Mask(1) << n) - 1);
    for (Vertex v : del) active &= ~(Mask(1) << v);
    for (Vertex v = 0; v < n; ++v) adj[v] &= active;
    const int total = std::popcount(active);

    std::vector<PathWitness> out;
    std::vector<Vertex> path{a};
    Mask visited = Mask(1) << a;
    bool done = false;
    std::function<void()> rec = [&]() {
        if (done) return;
        const Vertex c = path.back();
        if (c == b) {
            if (int(path.size()) == total) {
                out.push_back(PathWitness{path});
                if (limit && int64_t(out.size()) >= *limit) done = true;
            }
            return;
        }
        Mask unvisited = active & ~visited;
        Mask scan = unvisited & ~(Mask(1) << b);
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (std::popcount(adj[v] & (unvisited | (Mask(1) << c)) & ~(Mask(1) << v)) < 2) return;
        }
        if (!reachable_all(adj, unvisited | (Mask(1) << c), c, unvisited)) return;
        Mask cand = adj[c] & unvisited;
        while (cand) {
            int y = std::countr_zero(cand);
            cand &= cand - 1;
            if (y == b && int(path.size()) + 1 != total) continue;
            path.push_back(y);
            visited |= Mask(1) << y;
            rec();
            visited &= ~(Mask(1) << y);
            path.pop_back();
            if (done) return;
        }
    };
    rec();
    std::sort(out.begin(), out.end(),
              [](const PathWitness& x, const PathWitness& y) { return x.vertices < y.vertices; });
    return out;
}

std::vector<BridgeReport> bridges(const RotationGraph& g, std::span<const Vertex> h_vertices,
                                  std::span<const Edge> h_edges) {
    const int n = g.n();
    std::vector<char> in_h(n, 0);
    for (Vertex v : h_vertices) in_h[v] = 1;
    std::vector<Edge> he(h_edges.begin(), h_edges.end());
    std::sort(he.begin(), he.end());
    auto is_h_edge = [&](const Edge& e) { return std::binary_search(he.begin(), he.end(), e); };

    std::vector<BridgeReport> out;
    // chords
    for (const Edge& e : g.edges())
        if (in_h[e.a] && in_h[e.b] && !is_h_edge(e)) {
            BridgeReport br;
            br.attachments = {e.a, e.b};
            br.edges = {e};
            out.push_back(std::move(br));
        }
    // components of G - H
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (in_h[s] || seen[s]) continue;
        BridgeReport br;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            br.interior.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (in_h[w]) {
                    br.edges.emplace_back(v, w);
                    br.attachments.push_back(w);
                } else if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                } else if (v < w) {
                    br.edges.emplace_back(v, w);
                }
            }
        }
        std::sort(br.interior.begin(), br.interior.end());
        std::sort(br.attachments.begin(), br.attachments.end());
        br.attachments.erase(std::unique(br.attachments.begin(), br.attachments.end()), br.attachments.end());
        std::sort(br.edges.begin(), br.edges.end());
        br.edges.erase(std::unique(br.edges.begin(), br.edges.end()), br.edges.end());
        out.push_back(std::move(br));
    }
    std::sort(out.begin(), out.end(), [](const BridgeReport& x, const BridgeReport& y) {
        if (x.is_chord() != y.is_chord()) return x.is_chord();
        if (x.is_chord()) return x.edges < y.edges;
        return x.interior < y.interior;
    });
    return out;
}

TutteReport is_tutte(const RotationGraph& g, std::span<const Vertex> p_vertices,
                     std::span<const Edge> p_edges, std::span<const Edge> c_edges) {
    std::vector<Edge> ce(c_edges.begin(), c_edges.end());
    std::sort(ce.begin(), ce.end());
    for (const BridgeReport& br : bridges(g, p_vertices, p_edges)) {
        int allowed = 3;
        if (!ce.empty()) {
            for (const Edge& e : br.edges)
                if (std::binary_search(ce.begin(), ce.end(), e)) {
                    allowed = 2;
                    break;
                }
        }
        if (int(br.attachments.size()) > allowed) return TutteReport{false, br};
    }
    return TutteReport{true, std::nullopt};
}

void require_circuit_graph(const RotationGraph& g, std::span<const Vertex> c) {
    CycleSides sides = sides_of_cycle(g, c); // validates the cycle
    bool facial = false;
    std::vector<Vertex> want(c.begin(), c.end());
    std::sort(want.begin(), want.end());
    for (const Face& f : g.faces()) {
        if (f.length() != int(c.size())) continue;
        std::vector<Vertex> b = f.boundary;
        std::sort(b.begin(), b.end());
        if (b == want) {
            facial = true;
            break;
        }
    }
    if (!facial) throw error(errc::not_circuit_graph, "cycle " + cycle_to_string(c) + " is not facial");

    const int n = g.n();
    std::vector<char> on_c(n, 0);
    for (Vertex v : c) on_c[v] = 1;
    std::vector<char> removed(n, 0);
    // returns number of components; sets missing=true when some component has
    // no vertex of c
    auto scan = [&](bool& missing) {
        std::vector<char> seen(n, 0);
        int comps = 0;
        missing = false;
        for (Vertex s = 0; s < n; ++s) {
            if (removed[s] || seen[s]) continue;
            ++comps;
            bool has_c = false;
            std::vector<Vertex> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                if (on_c[v]) has_c = true;
                for (Vertex w : g.neighbors(v))
                    if (!removed[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            if (!has_c) missing = true;
        }
        return comps;
    };
    for (Vertex x = 0; x < n; ++x) {
        removed[x] = 1;
        bool missing = false;
        if (scan(missing) >= 2) throw error(errc::not_circuit_graph, "cut vertex " + std::to_string(x));
        for (Vertex y = x + 1; y < n; ++y) {
            removed[y] = 1;
            int comps = scan(missing);
            if (comps >= 2 && missing)
                throw error(errc::not_circuit_graph,
                            "2-cut {" + std::to_string(x) + "," + std::to_string(y) +
                                "} isolates a component from the facial cycle");
            removed[y] = 0;
        }
        removed[x] = 0;
    }
}

namespace {

// all simple cycles of exactly `len` vertices through edge e, canonicalized
std::vector<CycleWitness> cycles_through_edge(const RotationGraph& g, Edge e, int len) {
    std::vector<CycleWitness> out;
    const int n = g.n();
    std::vector<char> used(n, 0);
    std::vector<Vertex> path{e.a, e.b};
    used[e.a] = used[e.b] = 1;
    std::function<void()> rec = [&]() {
        Vertex c = path.back();
        if (int(path.size()) == len) {
            if (g.has_edge(c, e.a)) out.push_back(CycleWitness{CycleWitness::canonical_rotation(path)});
            return;
        }
        for (Vertex w : g.neighbors(c)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            rec();
            path.pop_back();
            used[w] = 0;
        }
    };
    rec();
    std::sort(out.begin(), out.end(),
              [](const CycleWitness& x, const CycleWitness& y) { return x.vertices < y.vertices; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CycleWitness& x, const CycleWitness& y) { return x.vertices == y.vertices; }),
              out.end());
    return out;
}

} // namespace

CycleWitness find_tutte_cycle(const RotationGraph& g, std::span<const Vertex> c, Edge e,
                              std::span<const Vertex> through) {
    const int k = int(c.size());
    bool e_on_c = false;
    for (int i = 0; i < k; ++i)
        if (Edge(c[i], c[(i + 1) % k]) == e) e_on_c = true;
    if (!e_on_c) throw error(errc::not_circuit_graph, "edge " + to_string(e) + " not on the facial cycle");
    if (through.size() > 2) throw error(errc::internal, "at most two through-vertices supported");
    require_circuit_graph(g, c);

    std::vector<Edge> c_edges;
    for (int i = 0; i < k; ++i) c_edges.emplace_back(c[i], c[(i + 1) % k]);

    // Hamiltonian candidates first
    std::vector<Edge> req{e};
    for (const CycleWitness& w : enumerate_hamiltonian_cycles(g, req)) {
        bool ok = true;
        for (Vertex t : through)
            if (!w.contains_vertex(t)) ok = false;
        if (ok) return w; // spanning cycles satisfy the Tutte condition outright
    }
    if (is_k_connected(g, 4))
        throw error(errc::search_exhausted,
                    "4-connected input has no Hamiltonian cycle through " + to_string(e) +
                        "; this contradicts the Tutte-cycle guarantee");
    for (int len = g.n() - 1; len >= 3; --len) {
        for (const CycleWitness& w : cycles_through_edge(g, e, len)) {
            bool ok = true;
            for (Vertex t : through)
                if (!w.contains_vertex(t)) ok = false;
            if (!ok) continue;
            auto rep = is_tutte(g, w.vertices, w.edge_set(), c_edges);
            if (rep.ok) return w;
        }
    }
    throw error(errc::search_exhausted,
                "no Tutte cycle through " + to_string(e) + "; this contradicts the Tutte-cycle guarantee");
}

} // namespace hamtri
