#include "hamtri/select.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hamtri {

bool CandidateSet::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

CandidateSet low_degree_independent_set(const RotationGraph& g, int max_degree,
                                        std::span<const Vertex> exclude) {
    std::vector<char> banned(g.n(), 0);
    for (Vertex v : exclude) banned[v] = 1;
    std::vector<Vertex> eligible;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!banned[v] && g.degree(v) <= max_degree) eligible.push_back(v);

    CandidateSet out;
    out.max_degree = max_degree;
    if (g.n() <= 12) {
        // exact maximum, lexicographically smallest among maxima
        const int m = int(eligible.size());
        std::vector<Vertex> best, cur;
        std::function<void(int)> rec = [&](int i) {
            if (int(cur.size()) + (m - i) < int(best.size())) return;
            if (i == m) {
                if (cur.size() > best.size()) best = cur;
                return;
            }
            Vertex v = eligible[i];
            bool ok = true;
            for (Vertex u : cur)
                if (g.has_edge(u, v)) ok = false;
            if (ok) {
                cur.push_back(v);
                rec(i + 1);
                cur.pop_back();
            }
            rec(i + 1);
        };
        rec(0);
        out.vertices = best;
    } else {
        for (Vertex v : eligible) {
            bool ok = true;
            for (Vertex u : out.vertices)
                if (g.has_edge(u, v)) ok = false;
            if (ok) out.vertices.push_back(v);
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

std::optional<SaturationWitness> saturates(const RotationGraph& g, const CandidateSet& s,
                                           SaturationTarget target,
                                           const DiamondPatterns& patterns) {
    if (target == SaturationTarget::diamond6) {
        if (s.size() < 3) return std::nullopt;
        for (const DiamondMatch& m : find_diamonds(g, patterns.d6)) {
            std::vector<Vertex> members;
            for (Vertex c : m.crucial_image)
                if (s.contains(c)) members.push_back(c);
            if (members.size() >= 3)
                return SaturationWitness{target, m.image, members};
        }
        return std::nullopt;
    }
    if (s.size() < 2) return std::nullopt;
    const int len = target == SaturationTarget::four_cycle ? 4 : 5;
    for (const auto& cyc : simple_cycles(g, len)) {
        std::vector<Vertex> members;
        for (Vertex v : cyc)
            if (s.contains(v)) members.push_back(v);
        if (members.size() >= 2) {
            std::sort(members.begin(), members.end());
            return SaturationWitness{target, cyc, members};
        }
    }
    return std::nullopt;
}

RefineResult refine_saturation_free(const RotationGraph& g, const CandidateSet& I, int t,
                                    const DiamondPatterns& patterns) {
    RefineResult res;
    res.i_size = int(I.size());

    // branch A scan: best pair by common count, lexicographic tie-break
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex x = v + 1; x < g.n(); ++x) {
            int c = 0;
            for (Vertex w : g.neighbors(v))
                if (g.has_edge(x, w) && I.contains(w)) ++c;
            if (c > res.common) {
                res.common = c;
                res.v = v;
                res.x = x;
            }
        }
    res.branch_a = res.common >= t;

    // greedy saturation-free pipeline (always computed; the ratio is reported)
    CandidateSet s = I;
    auto drop_largest = [&](const std::vector<Vertex>& members) {
        Vertex smallest = *std::min_element(members.begin(), members.end());
        std::vector<Vertex> keep;
        for (Vertex v : s.vertices)
            if (v == smallest || std::find(members.begin(), members.end(), v) == members.end())
                keep.push_back(v);
        s.vertices = std::move(keep);
    };
    for (SaturationTarget target :
         {SaturationTarget::four_cycle, SaturationTarget::five_cycle, SaturationTarget::diamond6}) {
        while (auto w = saturates(g, s, target, patterns)) drop_largest(w->members);
    }
    res.saturation_free = std::move(s);
    res.ratio = res.i_size ? double(res.saturation_free.size()) / double(res.i_size) : 0.0;
    return res;
}

LinkSet LinkSet::excluding(Vertex y) const {
    LinkSet out;
    out.vertex = vertex;
    out.rule = rule;
    for (const Edge& e : edges)
        if (!e.incident(y)) out.edges.push_back(e);
    return out;
}

LinkSet link(const RotationGraph& g, Vertex u) {
    const int d = g.degree(u);
    if (d > 6) throw error(errc::degree_too_high, "degree " + std::to_string(d) + " at vertex " + std::to_string(u));
    LinkSet out;
    out.vertex = u;
    if (d == 4) {
        out.rule = LinkRule::neighborhood_edges;
        auto nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (g.has_edge(nb[i], nb[j])) out.edges.emplace_back(nb[i], nb[j]);
    } else if (d == 5 || d == 6) {
        out.rule = LinkRule::deletion_safe;
        for (Vertex w : g.neighbors(u)) {
            // delete the edge and test 4-connectivity exactly
            std::vector<std::vector<Vertex>> rot = g.rotations();
            std::erase(rot[u], w);
            std::erase(rot[w], u);
            RotationGraph del = RotationGraph::from_rotation_system(std::move(rot));
            if (is_k_connected(del, 4)) out.edges.emplace_back(u, w);
        }
    } else {
        throw precondition_error("degree-in-range", {u},
                                 "link is defined for degrees 4..6, vertex " + std::to_string(u) +
                                     " has degree " + std::to_string(d));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::optional<HypothesisFailure> edge_removal_preconditions(const RotationGraph& g,
                                                            const CandidateSet& s,
                                                            const DiamondPatterns& patterns) {
    for (size_t i = 0; i < s.vertices.size(); ++i) {
        Vertex u = s.vertices[i];
        if (g.degree(u) > s.max_degree || g.degree(u) > 6)
            return HypothesisFailure{"degree-at-most-6", {u}};
        for (size_t j = i + 1; j < s.vertices.size(); ++j)
            if (g.has_edge(u, s.vertices[j]))
                return HypothesisFailure{"independent", {u, s.vertices[j]}};
    }
    for (Vertex u : s.vertices)
        if (link(g, u).edges.empty()) return HypothesisFailure{"nonempty-links", {u}};
    if (auto w = saturates(g, s, SaturationTarget::four_cycle, patterns))
        return HypothesisFailure{"saturates-no-4-cycle", w->members};
    if (auto w = saturates(g, s, SaturationTarget::five_cycle, patterns))
        return HypothesisFailure{"saturates-no-5-cycle", w->members};
    if (auto w = saturates(g, s, SaturationTarget::diamond6, patterns))
        return HypothesisFailure{"saturates-no-diamond-6-cycle", w->members};
    for (Vertex u : s.vertices)
        if (g.degree(u) == 4)
            for (Vertex w : g.neighbors(u))
                if (g.degree(w) == 4)
                    return HypothesisFailure{"no-degree-4-member-with-degree-4-neighbour", {u, w}};
    return std::nullopt;
}

std::vector<EdgeSelection> admissible_selections(const RotationGraph& g, const CandidateSet& s,
                                                 const DiamondPatterns& patterns, uint64_t seed,
                                                 std::optional<int64_t> cap) {
    if (auto fail = edge_removal_preconditions(g, s, patterns))
        throw precondition_error(fail->hypothesis, fail->witness,
                                 "selection hypotheses violated (" + fail->hypothesis + ")");
    std::vector<LinkSet> links;
    for (Vertex u : s.vertices) links.push_back(link(g, u));

    // product count including the empty pick per link
    long double total = 1;
    for (const LinkSet& l : links) total *= (l.edges.size() + 1);

    auto build = [&](const std::vector<int>& choice) {
        EdgeSelection sel;
        for (size_t i = 0; i < links.size(); ++i) {
            std::optional<Edge> pick;
            if (choice[i] > 0) pick = links[i].edges[choice[i] - 1];
            sel.per_link.emplace_back(links[i].vertex, pick);
            if (pick) sel.edges.push_back(*pick);
        }
        std::sort(sel.edges.begin(), sel.edges.end());
        return sel;
    };

    std::vector<EdgeSelection> out;
    if (!cap || total <= (long double)(*cap)) {
        std::vector<int> choice(links.size(), 0);
        while (true) {
            out.push_back(build(choice));
            size_t i = 0;
            while (i < choice.size()) {
                if (++choice[i] <= int(links[i].edges.size())) break;
                choice[i++] = 0;
            }
            if (i == choice.size()) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        std::set<std::vector<int>> seen;
        const int64_t want = *cap;
        int64_t attempts = 0;
        while (int64_t(out.size()) < want && attempts < 20 * want) {
            ++attempts;
            std::vector<int> choice(links.size());
            for (size_t i = 0; i < links.size(); ++i)
                choice[i] = int(rng() % (links[i].edges.size() + 1));
            if (seen.insert(choice).second) out.push_back(build(choice));
        }
    }
    return out;
}

ConnectivityCertificate preserves_4_connectivity(const RotationGraph& g, const EdgeSelection& f) {
    const int n = g.n();
    std::vector<char> adj(size_t(n) * n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) adj[size_t(v) * n + w] = 1;
    for (const Edge& e : f.edges) {
        adj[size_t(e.a) * n + e.b] = 0;
        adj[size_t(e.b) * n + e.a] = 0;
    }
    auto disconnected = [&](const std::vector<char>& removed) {
        Vertex start = -1;
        int alive = 0;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v]) {
                ++alive;
                if (start < 0) start = v;
            }
        if (alive <= 1) return false;
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{start};
        seen[start] = 1;
        int found = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w = 0; w < n; ++w)
                if (adj[size_t(v) * n + w] && !removed[w] && !seen[w]) {
                    seen[w] = 1;
                    ++found;
                    stack.push_back(w);
                }
        }
        return found < alive;
    };
    if (n <= 4) return ConnectivityCertificate{false, {}};
    std::vector<char> removed(n, 0);
    std::vector<Vertex> cut;
    std::function<bool(int, int, int)> rec = [&](int size, int idx, int from) -> bool {
        if (idx == size) return disconnected(removed);
        for (Vertex v = from; v < n; ++v) {
            removed[v] = 1;
            cut.push_back(v);
            if (rec(size, idx + 1, v + 1)) return true;
            cut.pop_back();
            removed[v] = 0;
        }
        return false;
    };
    for (int size = 0; size <= 3; ++size) {
        cut.clear();
        std::fill(removed.begin(), removed.end(), 0);
        if (rec(size, 0, 0)) return ConnectivityCertificate{false, cut};
    }
    return ConnectivityCertificate{true, {}};
}

} // namespace hamtri
