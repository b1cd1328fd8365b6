#include "hamtri/rotation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hamtri {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_simple: return "NonSimple";
        case errc::not_sphere: return "NotSphere";
        case errc::inconsistent: return "Inconsistent";
        case errc::not_a_cycle: return "NotACycle";
        case errc::ambiguous_side: return "AmbiguousSide";
        case errc::too_small: return "TooSmall";
        case errc::bad_face: return "BadFace";
        case errc::empty_interior: return "EmptyInterior";
        case errc::not_an_edge: return "NotAnEdge";
        case errc::fixture_missing: return "FixtureMissing";
        case errc::degree_too_high: return "DegreeTooHigh";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::contradictory_constraints: return "ContradictoryConstraints";
        case errc::bad_endpoints: return "BadEndpoints";
        case errc::not_circuit_graph: return "NotCircuitGraph";
        case errc::search_exhausted: return "SearchExhausted";
        case errc::truncated: return "Truncated";
        case errc::bad_header: return "BadHeader";
        case errc::invalid_rotation: return "InvalidRotation";
        case errc::too_large: return "TooLarge";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

std::string to_string(const Edge& e) {
    return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

std::string cycle_to_string(std::span<const Vertex> cycle) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
    os << ")";
    return os.str();
}

RotationGraph RotationGraph::from_rotation_system(std::vector<std::vector<Vertex>> rot) {
    if (rot.size() < 3)
        throw error(errc::invalid_rotation, "need at least 3 vertices, got " + std::to_string(rot.size()));
    if (rot.size() > 255)
        throw error(errc::too_large, "vertex count " + std::to_string(rot.size()) + " exceeds 255");
    RotationGraph g;
    g.rot_ = std::move(rot);
    g.build();
    return g;
}

void RotationGraph::build() {
    const int n = int(rot_.size());
    adj_.assign(size_t(n) * n, 0);
    pos_.assign(size_t(n) * n, -1);
    int dir_edges = 0;
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < int(rot_[v].size()); ++i) {
            Vertex w = rot_[v][i];
            if (w < 0 || w >= n)
                throw error(errc::invalid_rotation,
                            "neighbour " + std::to_string(w) + " out of range at vertex " + std::to_string(v));
            if (w == v) throw error(errc::non_simple, "loop at vertex " + std::to_string(v));
            if (pos_[size_t(v) * n + w] != -1)
                throw error(errc::non_simple,
                            "edge " + to_string(Edge(v, w)) + " repeated in rotation of " + std::to_string(v));
            pos_[size_t(v) * n + w] = int16_t(i);
            adj_[size_t(v) * n + w] = 1;
            ++dir_edges;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : rot_[v])
            if (!adj_[size_t(w) * n + v])
                throw error(errc::inconsistent,
                            "edge " + to_string(Edge(v, w)) + " present only in rotation of " + std::to_string(v));
    edge_count_ = dir_edges / 2;

    // Face orbits: from (u,v), the next directed edge is (v, succ of u in rot[v]).
    face_of_.assign(size_t(n) * n, -1);
    faces_.clear();
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : rot_[v]) {
            if (face_of_[size_t(v) * n + w] != -1) continue;
            Face f;
            f.id = int(faces_.size());
            Vertex a = v, b = w;
            do {
                face_of_[size_t(a) * n + b] = int16_t(f.id);
                f.boundary.push_back(a);
                int j = pos_[size_t(b) * n + a];
                Vertex c = rot_[b][(j + 1) % rot_[b].size()];
                a = b;
                b = c;
            } while (!(a == v && b == w));
            faces_.push_back(std::move(f));
        }
    }
    const long euler = long(n) - edge_count_ + long(faces_.size());
    if (euler != 2)
        throw error(errc::not_sphere, "V-E+F = " + std::to_string(euler) + ", expected 2");
}

std::vector<Edge> RotationGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex v = 0; v < n(); ++v)
        for (Vertex w : rot_[v])
            if (v < w) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

Vertex RotationGraph::rot_succ(Vertex v, Vertex w) const {
    int i = rot_index(v, w);
    return rot_[v][(i + 1) % rot_[v].size()];
}

Vertex RotationGraph::rot_pred(Vertex v, Vertex w) const {
    int i = rot_index(v, w);
    return rot_[v][(i + int(rot_[v].size()) - 1) % rot_[v].size()];
}

RotationGraph RotationGraph::with_outer_face(int face_id) const {
    if (face_id < 0 || face_id >= face_count())
        throw error(errc::bad_face, "face id " + std::to_string(face_id));
    RotationGraph g = *this;
    g.outer_ = face_id;
    return g;
}

bool validate_triangulation(const RotationGraph& g) {
    for (const Face& f : g.faces())
        if (f.length() != 3) return false;
    return true;
}

bool validate_near_triangulation(const NearTriangulation& nt) {
    auto of = nt.graph.outer_face();
    if (!of) return false;
    const Face& f = nt.graph.faces()[*of];
    if (f.length() != int(nt.outer.size())) return false;
    std::vector<Vertex> a = f.boundary, b = nt.outer;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    for (const Face& other : nt.graph.faces())
        if (other.id != *of && other.length() != 3) return false;
    return true;
}

Side CycleSides::side_of(Vertex v) const {
    if (membership[v] == 1) return Side::left;
    if (membership[v] == 2) return Side::right;
    throw error(errc::internal, "vertex " + std::to_string(v) + " is on the cycle");
}

std::optional<Side> CycleSides::chord_side(const Edge& e) const {
    for (auto& [c, s] : chords)
        if (c == e) return s;
    return std::nullopt;
}

CycleSides sides_of_cycle(const RotationGraph& g, std::span<const Vertex> cycle) {
    const int n = g.n();
    const int k = int(cycle.size());
    if (k < 3) throw error(errc::not_a_cycle, "length " + std::to_string(k));
    std::vector<int> cyc_pos(n, -1);
    for (int i = 0; i < k; ++i) {
        Vertex v = cycle[i];
        if (v < 0 || v >= n) throw error(errc::not_a_cycle, "vertex out of range");
        if (cyc_pos[v] != -1) throw error(errc::not_a_cycle, "repeated vertex " + std::to_string(v));
        cyc_pos[v] = i;
    }
    for (int i = 0; i < k; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % k]))
            throw error(errc::not_a_cycle, "missing edge " + to_string(Edge(cycle[i], cycle[(i + 1) % k])));

    CycleSides out;
    out.cycle.assign(cycle.begin(), cycle.end());
    out.membership.assign(n, -1);
    for (Vertex v : cycle) out.membership[v] = 0;

    std::map<Edge, Side> chord_sides;
    std::vector<Vertex> seed_left, seed_right;
    auto classify = [&](Vertex c, Vertex from, Vertex to, Side s) {
        // entries strictly between `from` and `to` in rot[c]
        int i = g.rot_index(c, from);
        int d = g.degree(c);
        for (int step = 1; step < d; ++step) {
            Vertex x = g.neighbors(c)[(i + step) % d];
            if (x == to) break;
            if (out.membership[x] == 0) {
                Edge e(c, x);
                auto it = chord_sides.find(e);
                if (it == chord_sides.end())
                    chord_sides.emplace(e, s);
                else if (it->second != s)
                    throw error(errc::internal, "chord " + to_string(e) + " classified on both sides");
            } else {
                (s == Side::left ? seed_left : seed_right).push_back(x);
            }
        }
    };
    for (int i = 0; i < k; ++i) {
        Vertex c = cycle[i];
        Vertex prev = cycle[(i + k - 1) % k];
        Vertex next = cycle[(i + 1) % k];
        classify(c, next, prev, Side::left);
        classify(c, prev, next, Side::right);
    }

    auto grow = [&](const std::vector<Vertex>& seeds, int8_t tag) {
        std::vector<Vertex> stack;
        for (Vertex s : seeds) {
            if (out.membership[s] == tag) continue;
            if (out.membership[s] != -1)
                throw error(errc::internal, "vertex " + std::to_string(s) + " seeded on both sides");
            out.membership[s] = tag;
            stack.push_back(s);
        }
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (out.membership[w] == -1) {
                    out.membership[w] = tag;
                    stack.push_back(w);
                } else if (out.membership[w] != tag && out.membership[w] != 0) {
                    throw error(errc::internal, "sides of cycle touch");
                }
            }
        }
    };
    grow(seed_left, 1);
    grow(seed_right, 2);
    for (Vertex v = 0; v < n; ++v) {
        if (out.membership[v] == -1)
            throw error(errc::internal, "vertex " + std::to_string(v) + " unreachable from cycle");
        if (out.membership[v] == 1) out.left.push_back(v);
        if (out.membership[v] == 2) out.right.push_back(v);
    }
    out.chords.assign(chord_sides.begin(), chord_sides.end());
    return out;
}

Side side_of_face(const RotationGraph& g, const CycleSides& sides, int face_id) {
    const Face& f = g.faces()[face_id];
    for (Vertex v : f.boundary)
        if (!sides.on_cycle(v)) return sides.side_of(v);
    const int k = int(sides.cycle.size());
    std::vector<int> cyc_pos(g.n(), -1);
    for (int i = 0; i < k; ++i) cyc_pos[sides.cycle[i]] = i;
    for (size_t i = 0; i < f.boundary.size(); ++i) {
        Vertex u = f.boundary[i];
        Vertex v = f.boundary[(i + 1) % f.boundary.size()];
        if (auto cs = sides.chord_side(Edge(u, v))) return *cs;
        // cycle edge: faces traced from forward cycle edges lie on the right
        if (cyc_pos[v] == (cyc_pos[u] + 1) % k) return Side::right;
        return Side::left;
    }
    throw error(errc::internal, "empty face boundary");
}

RegionResult closed_region(const RotationGraph& g, std::span<const Vertex> cycle,
                           std::optional<Side> side) {
    CycleSides sides = sides_of_cycle(g, cycle);
    Side s;
    if (side) {
        s = *side;
    } else {
        auto of = g.outer_face();
        if (!of) throw error(errc::ambiguous_side, "no outer face set and no side flag");
        s = opposite(side_of_face(g, sides, *of));
    }
    const int n = g.n();
    const int8_t keep_tag = (s == Side::left) ? 1 : 2;

    std::vector<int> to_new(n, -1);
    std::vector<Vertex> to_old;
    for (Vertex v = 0; v < n; ++v)
        if (sides.membership[v] == 0 || sides.membership[v] == keep_tag) {
            to_new[v] = int(to_old.size());
            to_old.push_back(v);
        }

    std::vector<std::vector<Vertex>> rot(to_old.size());
    for (size_t i = 0; i < to_old.size(); ++i) {
        Vertex v = to_old[i];
        for (Vertex w : g.neighbors(v)) {
            if (to_new[w] < 0) continue;
            if (sides.on_cycle(v) && sides.on_cycle(w)) {
                auto cs = sides.chord_side(Edge(v, w));
                if (cs && *cs != s) continue; // chord drawn on the removed side
            }
            rot[i].push_back(to_new[w]);
        }
    }

    RegionResult res;
    res.to_old = std::move(to_old);
    res.to_new = std::move(to_new);
    RotationGraph sub = RotationGraph::from_rotation_system(std::move(rot));
    std::vector<Vertex> outer;
    outer.reserve(cycle.size());
    for (Vertex v : cycle) outer.push_back(res.to_new[v]);
    // locate the face bounded exactly by the cycle
    std::vector<Vertex> want = outer;
    std::sort(want.begin(), want.end());
    int outer_id = -1;
    for (const Face& f : sub.faces()) {
        if (f.length() != int(outer.size())) continue;
        std::vector<Vertex> b = f.boundary;
        std::sort(b.begin(), b.end());
        if (b == want) {
            outer_id = f.id;
            break;
        }
    }
    if (outer_id < 0) throw error(errc::internal, "region boundary face not found");
    res.region.graph = sub.with_outer_face(outer_id);
    res.region.outer = std::move(outer);
    return res;
}

SubgraphResult plane_delete_vertices(const RotationGraph& g, std::span<const Vertex> del) {
    const int n = g.n();
    std::vector<char> dead(n, 0);
    for (Vertex v : del) {
        if (v < 0 || v >= n) throw error(errc::internal, "delete vertex out of range");
        dead[v] = 1;
    }
    SubgraphResult res;
    res.to_new.assign(n, -1);
    for (Vertex v = 0; v < n; ++v)
        if (!dead[v]) {
            res.to_new[v] = int(res.to_old.size());
            res.to_old.push_back(v);
        }
    std::vector<std::vector<Vertex>> rot(res.to_old.size());
    for (size_t i = 0; i < res.to_old.size(); ++i)
        for (Vertex w : g.neighbors(res.to_old[i]))
            if (!dead[w]) rot[i].push_back(res.to_new[w]);
    res.graph = RotationGraph::from_rotation_system(std::move(rot));
    return res;
}

} // namespace hamtri
