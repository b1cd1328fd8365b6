#include "hamtri/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace hamtri {

namespace {

// components of g minus a removed-vertex mask
int component_count(const RotationGraph& g, const std::vector<char>& removed) {
    const int n = g.n();
    std::vector<char> seen(n, 0);
    int comps = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (removed[s] || seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

bool some_cut_of_size(const RotationGraph& g, int s, std::vector<Vertex>* cut_out) {
    const int n = g.n();
    if (s >= n - 1) return false;
    std::vector<Vertex> cut(s);
    std::vector<char> removed(n, 0);
    std::function<bool(int, int)> rec = [&](int idx, int from) -> bool {
        if (idx == s) {
            if (component_count(g, removed) >= 2) {
                if (cut_out) *cut_out = cut;
                return true;
            }
            return false;
        }
        for (Vertex v = from; v < n; ++v) {
            cut[idx] = v;
            removed[v] = 1;
            if (rec(idx + 1, v + 1)) return true;
            removed[v] = 0;
        }
        return false;
    };
    return rec(0, 0);
}

bool is_complete(const RotationGraph& g) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) != g.n() - 1) return false;
    return true;
}

} // namespace

int vertex_connectivity(const RotationGraph& g) {
    if (is_complete(g)) return g.n() - 1;
    for (int s = 1; s < g.n(); ++s)
        if (some_cut_of_size(g, s, nullptr)) return s;
    throw error(errc::internal, "non-complete graph without a cut");
}

bool is_k_connected(const RotationGraph& g, int k) {
    if (g.n() <= k) return false;
    for (int s = 0; s < k; ++s)
        if (some_cut_of_size(g, s, nullptr)) return false;
    return true;
}

std::vector<std::vector<Vertex>> simple_cycles(const RotationGraph& g, int len) {
    std::vector<std::vector<Vertex>> out;
    const int n = g.n();
    std::vector<Vertex> path;
    std::vector<char> used(n, 0);
    std::function<void(Vertex)> extend = [&](Vertex v) {
        if (int(path.size()) == len) {
            if (g.has_edge(v, path[0]) && path[1] < path.back()) out.push_back(path);
            return;
        }
        for (Vertex w : g.neighbors(v)) {
            if (w <= path[0] || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            extend(w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (Vertex v0 = 0; v0 < n; ++v0) {
        path = {v0};
        std::fill(used.begin(), used.end(), 0);
        used[v0] = 1;
        extend(v0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_separating_triangle(const RotationGraph& g) {
    std::vector<char> removed(g.n(), 0);
    for (const auto& tri : simple_cycles(g, 3)) {
        for (Vertex v : tri) removed[v] = 1;
        bool sep = component_count(g, removed) >= 2;
        for (Vertex v : tri) removed[v] = 0;
        if (sep) return true;
    }
    return false;
}

std::vector<SeparatingCycle> separating_cycles(const RotationGraph& g, int len) {
    std::vector<SeparatingCycle> out;
    for (const auto& cyc : simple_cycles(g, len)) {
        CycleSides sides = sides_of_cycle(g, cyc);
        if (sides.left.empty() || sides.right.empty()) continue;
        SeparatingCycle sc;
        sc.cycle = cyc;
        // side_a avoids the smallest id outside the closed neighbourhood
        std::vector<char> near(g.n(), 0);
        for (Vertex c : cyc) {
            near[c] = 1;
            for (Vertex w : g.neighbors(c)) near[w] = 1;
        }
        Vertex probe = -1;
        for (Vertex v = 0; v < g.n() && probe < 0; ++v)
            if (!near[v]) probe = v;
        if (probe < 0)
            for (Vertex v = 0; v < g.n() && probe < 0; ++v)
                if (!sides.on_cycle(v)) probe = v;
        Side side_b_geom = sides.side_of(probe);
        sc.side_a_geom = opposite(side_b_geom);
        sc.side_a = sides.interior(sc.side_a_geom);
        sc.side_b = sides.interior(side_b_geom);
        sc.region_a = closed_region(g, cyc, sc.side_a_geom);
        out.push_back(std::move(sc));
    }
    return out;
}

ContractionResult contract_region(const RotationGraph& g, std::span<const Vertex> cycle, Side side) {
    CycleSides sides = sides_of_cycle(g, cycle);
    const std::vector<Vertex>& interior = sides.interior(side);
    if (interior.empty()) throw error(errc::empty_interior, "chosen side of " + cycle_to_string(cycle));
    const int n = g.n();
    const int8_t gone = (side == Side::left) ? 1 : 2;

    ContractionResult res;
    res.vmap.assign(n, -1);
    std::vector<Vertex> to_old;
    for (Vertex v = 0; v < n; ++v)
        if (sides.membership[v] != gone) {
            res.vmap[v] = int(to_old.size());
            to_old.push_back(v);
        }
    const Vertex z = Vertex(to_old.size());
    for (Vertex v = 0; v < n; ++v)
        if (sides.membership[v] == gone) res.vmap[v] = z;
    res.new_vertex = z;

    std::vector<std::vector<Vertex>> rot(to_old.size() + 1);
    std::vector<Vertex> z_attach; // cycle vertices adjacent to the interior, in cycle order
    for (size_t i = 0; i < to_old.size(); ++i) {
        Vertex v = to_old[i];
        if (!sides.on_cycle(v)) {
            for (Vertex w : g.neighbors(v)) rot[i].push_back(res.vmap[w]);
            continue;
        }
        // replace the (single) run of removed-side interior neighbours by z
        int runs = 0;
        bool in_run = false;
        const int d = g.degree(v);
        for (int s = 0; s < d; ++s) {
            Vertex w = g.neighbors(v)[s];
            bool removed_now = sides.membership[w] == gone;
            if (removed_now && !in_run) ++runs;
            in_run = removed_now;
        }
        if (in_run && sides.membership[g.neighbors(v)[0]] == gone && runs > 1) --runs; // wrapped run
        if (runs > 1)
            throw precondition_error("connected-interior", {v},
                                     "interior of " + cycle_to_string(cycle) +
                                         " is split by a chord at vertex " + std::to_string(v) +
                                         "; contraction has no plane result");
        bool emitted = false;
        for (int s = 0; s < d; ++s) {
            Vertex w = g.neighbors(v)[s];
            if (sides.membership[w] == gone) {
                if (!emitted) {
                    rot[i].push_back(z);
                    emitted = true;
                }
                continue;
            }
            rot[i].push_back(res.vmap[w]);
        }
        if (emitted) z_attach.push_back(v);
    }
    // order z's rotation along the cycle; left-side contraction keeps cycle
    // order, right-side reverses it
    std::vector<Vertex> attach_sorted;
    for (Vertex c : cycle)
        if (std::find(z_attach.begin(), z_attach.end(), c) != z_attach.end())
            attach_sorted.push_back(res.vmap[c]);
    if (side == Side::right) std::reverse(attach_sorted.begin(), attach_sorted.end());
    rot[z] = attach_sorted;

    res.graph = RotationGraph::from_rotation_system(std::move(rot));
    return res;
}

ContractionResult contract_interior(const RotationGraph& g, const SeparatingCycle& sc, RegionSide side) {
    ContractionResult res = contract_region(g, sc.cycle, sc.geom(side));
    if (sc.cycle.size() == 4 && is_k_connected(g, 4) && !is_k_connected(res.graph, 4))
        throw error(errc::internal,
                    "contracting a separating 4-cycle interior of a 4-connected triangulation "
                    "lost 4-connectivity; cycle " + cycle_to_string(sc.cycle));
    return res;
}

ContractionResult contract_edge(const RotationGraph& g, Edge e) {
    if (!g.has_edge(e)) throw error(errc::not_an_edge, to_string(e));
    const Vertex u = e.a, v = e.b;
    std::vector<Vertex> common;
    for (Vertex w : g.neighbors(u))
        if (w != v && g.has_edge(w, v)) common.push_back(w);
    if (common.size() != 2)
        throw precondition_error("contractible-edge", {u, v},
                                 "edge " + to_string(e) + " has " + std::to_string(common.size()) +
                                     " common neighbours; it lies on a separating triangle");

    // merged rotation: u's neighbours from after v, then v's from after u
    std::vector<Vertex> merged;
    {
        const int du = g.degree(u), dv = g.degree(v);
        int iv = g.rot_index(u, v);
        for (int s = 1; s < du; ++s) merged.push_back(g.neighbors(u)[(iv + s) % du]);
        int iu = g.rot_index(v, u);
        for (int s = 1; s < dv; ++s) merged.push_back(g.neighbors(v)[(iu + s) % dv]);
    }
    // drop the duplicate occurrences at the two seams
    std::vector<Vertex> dedup;
    for (Vertex w : merged)
        if (dedup.empty() || dedup.back() != w) dedup.push_back(w);
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();

    const int n = g.n();
    ContractionResult res;
    res.vmap.assign(n, -1);
    std::vector<Vertex> to_old;
    for (Vertex w = 0; w < n; ++w)
        if (w != v) {
            res.vmap[w] = int(to_old.size());
            to_old.push_back(w);
        }
    res.vmap[v] = res.vmap[u];
    res.new_vertex = res.vmap[u];

    std::vector<std::vector<Vertex>> rot(to_old.size());
    for (size_t i = 0; i < to_old.size(); ++i) {
        Vertex w = to_old[i];
        if (w == u) {
            for (Vertex x : dedup) rot[i].push_back(res.vmap[x]);
            continue;
        }
        bool is_common = std::find(common.begin(), common.end(), w) != common.end();
        for (Vertex x : g.neighbors(w)) {
            if (x == v) {
                if (is_common) continue; // u stays elsewhere in this rotation
                rot[i].push_back(res.vmap[u]);
            } else {
                rot[i].push_back(res.vmap[x]);
            }
        }
    }
    res.graph = RotationGraph::from_rotation_system(std::move(rot));
    return res;
}

// ---------------------------------------------------------------------------
// diamond patterns

namespace {

DiamondPattern finish_pattern(DiamondPattern p) {
    p.adj.assign(p.n, {});
    for (const Edge& e : p.edges) {
        p.adj[e.a].push_back(e.b);
        p.adj[e.b].push_back(e.a);
    }
    return p;
}

void validate_pattern(const DiamondPattern& p) {
    for (Vertex c : p.crucial)
        if (p.degree(c) != 3)
            throw error(errc::fixture_missing,
                        p.name + ": crucial vertex " + std::to_string(c) + " has degree " +
                            std::to_string(p.degree(c)) + ", expected 3");
    if (p.name == "d4") {
        std::vector<Vertex> deg2;
        for (Vertex v = 0; v < p.n; ++v)
            if (p.degree(v) == 2) deg2.push_back(v);
        if (deg2.size() != 1)
            throw error(errc::fixture_missing, "d4 must have exactly one degree-2 vertex");
        std::vector<Vertex> expect;
        for (Vertex v = 0; v < p.n; ++v) {
            if (p.degree(v) != 3) continue;
            bool adj2 = std::find(p.adj[v].begin(), p.adj[v].end(), deg2[0]) != p.adj[v].end();
            if (!adj2) expect.push_back(v);
        }
        std::vector<Vertex> got = p.crucial;
        std::sort(got.begin(), got.end());
        if (got != expect)
            throw error(errc::fixture_missing,
                        "d4 crucial vertices must be the degree-3 vertices not adjacent to the degree-2 vertex");
    } else if (p.name == "d6") {
        std::vector<Vertex> deg3;
        for (Vertex v = 0; v < p.n; ++v)
            if (p.degree(v) == 3) deg3.push_back(v);
        std::vector<Vertex> got = p.crucial;
        std::sort(got.begin(), got.end());
        if (got != deg3 || deg3.size() != 6)
            throw error(errc::fixture_missing, "d6 crucial vertices must be exactly the six degree-3 vertices");
    }
}

} // namespace

DiamondPatterns load_diamond_patterns(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::fixture_missing, "cannot open " + path);
    DiamondPatterns out;
    bool have4 = false, have6 = false;
    std::string line;
    DiamondPattern cur;
    bool in_pattern = false;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw error(errc::fixture_missing, path + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "pattern") {
            if (in_pattern) fail("nested pattern");
            cur = DiamondPattern();
            if (!(ls >> cur.name >> cur.n)) fail("expected: pattern <name> <n>");
            in_pattern = true;
        } else if (tok == "e") {
            int a, b;
            if (!in_pattern || !(ls >> a >> b)) fail("expected: e <u> <v>");
            if (a < 0 || b < 0 || a >= cur.n || b >= cur.n || a == b) fail("bad edge");
            cur.edges.emplace_back(a, b);
        } else if (tok == "crucial") {
            int v;
            while (ls >> v) cur.crucial.push_back(v);
        } else if (tok == "end") {
            if (!in_pattern) fail("end without pattern");
            DiamondPattern p = finish_pattern(cur);
            validate_pattern(p);
            if (p.name == "d4") {
                out.d4 = std::move(p);
                have4 = true;
            } else if (p.name == "d6") {
                out.d6 = std::move(p);
                have6 = true;
            } else {
                fail("unknown pattern name " + p.name);
            }
            in_pattern = false;
        } else {
            fail("unknown directive " + tok);
        }
    }
    if (!have4 || !have6) throw error(errc::fixture_missing, path + ": missing d4 or d6 pattern");
    return out;
}

const DiamondPatterns& default_diamond_patterns() {
    static DiamondPatterns patterns = [] {
        const char* env = std::getenv("HAMTRI_DATA");
        std::string dir = env ? env : HAMTRI_DATA_DIR;
        return load_diamond_patterns(dir + "/diamond_patterns.txt");
    }();
    return patterns;
}

namespace {

// all subgraph embeddings of p into host adjacency (not deduplicated)
void all_embeddings(const DiamondPattern& p, const std::vector<std::vector<char>>& host_adj,
                    const std::vector<int>& host_deg, std::vector<std::vector<Vertex>>& out) {
    const int hn = int(host_adj.size());
    const int pn = p.n;
    // order pattern vertices so each (after the first) touches an earlier one
    std::vector<int> order, placed_at(pn, -1);
    order.push_back(0);
    placed_at[0] = 0;
    while (int(order.size()) < pn) {
        for (Vertex v = 0; v < pn; ++v) {
            if (placed_at[v] >= 0) continue;
            bool touches = false;
            for (Vertex w : p.adj[v])
                if (placed_at[w] >= 0) touches = true;
            if (touches) {
                placed_at[v] = int(order.size());
                order.push_back(v);
                break;
            }
        }
    }
    std::vector<Vertex> image(pn, -1);
    std::vector<char> used(hn, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == pn) {
            out.push_back(image);
            return;
        }
        Vertex pv = order[k];
        for (Vertex hv = 0; hv < hn; ++hv) {
            if (used[hv] || host_deg[hv] < p.degree(pv)) continue;
            bool ok = true;
            for (Vertex pw : p.adj[pv]) {
                Vertex hw = image[pw];
                if (hw >= 0 && !host_adj[hv][hw]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[pv] = hv;
            used[hv] = 1;
            rec(k + 1);
            used[hv] = 0;
            image[pv] = -1;
        }
    };
    rec(0);
}

std::vector<std::vector<Vertex>> pattern_automorphisms(const DiamondPattern& p) {
    std::vector<std::vector<char>> adj(p.n, std::vector<char>(p.n, 0));
    std::vector<int> deg(p.n, 0);
    for (const Edge& e : p.edges) {
        adj[e.a][e.b] = adj[e.b][e.a] = 1;
        ++deg[e.a];
        ++deg[e.b];
    }
    std::vector<std::vector<Vertex>> maps;
    all_embeddings(p, adj, deg, maps);
    // an edge-preserving injective self-map with equal edge counts is an automorphism
    return maps;
}

} // namespace

std::vector<DiamondMatch> find_diamonds(const RotationGraph& g, const DiamondPattern& p) {
    if (p.n > g.n()) return {};
    std::vector<std::vector<char>> adj(g.n(), std::vector<char>(g.n(), 0));
    std::vector<int> deg(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        deg[v] = g.degree(v);
        for (Vertex w : g.neighbors(v)) adj[v][w] = 1;
    }
    std::vector<std::vector<Vertex>> raw;
    all_embeddings(p, adj, deg, raw);

    const auto auts = pattern_automorphisms(p);
    std::set<std::vector<Vertex>> reps;
    for (const auto& m : raw) {
        std::vector<Vertex> best;
        for (const auto& sigma : auts) {
            std::vector<Vertex> t(p.n);
            for (Vertex i = 0; i < p.n; ++i) t[i] = m[sigma[i]];
            if (best.empty() || t < best) best = std::move(t);
        }
        reps.insert(std::move(best));
    }
    std::vector<DiamondMatch> out;
    for (const auto& rep : reps) {
        DiamondMatch dm;
        dm.image = rep;
        for (Vertex c : p.crucial) dm.crucial_image.push_back(rep[c]);
        std::sort(dm.crucial_image.begin(), dm.crucial_image.end());
        out.push_back(std::move(dm));
    }
    return out;
}

std::optional<int> degree4_min_distance(const RotationGraph& g) {
    std::vector<Vertex> deg4;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) == 4) deg4.push_back(v);
    if (deg4.size() < 2) return std::nullopt;
    int best = -1;
    for (size_t i = 0; i < deg4.size(); ++i) {
        // BFS from deg4[i]
        std::vector<int> dist(g.n(), -1);
        std::vector<Vertex> queue{deg4[i]};
        dist[deg4[i]] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex v = queue[qi];
            for (Vertex w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        for (size_t j = i + 1; j < deg4.size(); ++j)
            if (best < 0 || dist[deg4[j]] < best) best = dist[deg4[j]];
    }
    return best;
}

NestedChain longest_nested_chain(const RotationGraph& g) {
    struct Node {
        std::vector<Vertex> cycle;
        std::vector<Vertex> closed; // sorted closed region vertex set
    };
    std::vector<Node> nodes;
    for (const SeparatingCycle& sc : separating_cycles(g, 4)) {
        for (RegionSide rs : {RegionSide::a, RegionSide::b}) {
            Node nd;
            nd.cycle = sc.cycle;
            nd.closed = sc.side(rs);
            nd.closed.insert(nd.closed.end(), sc.cycle.begin(), sc.cycle.end());
            std::sort(nd.closed.begin(), nd.closed.end());
            nodes.push_back(std::move(nd));
        }
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const Node& x, const Node& y) { return x.closed.size() < y.closed.size(); });
    const int m = int(nodes.size());
    std::vector<int> dp(m, 1), from(m, -1);
    auto contains = [](const std::vector<Vertex>& big, const std::vector<Vertex>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    int best = 0, best_i = -1;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < i; ++j) {
            if (nodes[j].cycle == nodes[i].cycle) continue;
            if (nodes[j].closed.size() >= nodes[i].closed.size()) continue;
            if (contains(nodes[i].closed, nodes[j].closed) && dp[j] + 1 > dp[i]) {
                dp[i] = dp[j] + 1;
                from[i] = j;
            }
        }
        if (dp[i] > best) {
            best = dp[i];
            best_i = i;
        }
    }
    NestedChain chain;
    chain.length = best;
    for (int i = best_i; i >= 0; i = from[i]) chain.cycles.push_back(nodes[i].cycle);
    return chain;
}

} // namespace hamtri
