#include "hamtri/generate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hamtri/analysis.hpp"

namespace hamtri {

RotationGraph double_wheel(int k) {
    if (k < 4) throw error(errc::too_small, "cycle length " + std::to_string(k) + " (k=3 would be K5)");
    if (k + 2 > 255) throw error(errc::too_large, "n exceeds 255");
    const Vertex in = k, out = k + 1;
    std::vector<std::vector<Vertex>> rot(k + 2);
    for (int i = 0; i < k; ++i) rot[i] = {out, (i + 1) % k, in, (i + k - 1) % k};
    for (int i = 0; i < k; ++i) rot[in].push_back(i);
    rot[out].push_back(0);
    for (int i = k - 1; i >= 1; --i) rot[out].push_back(i);
    return RotationGraph::from_rotation_system(std::move(rot));
}

RotationGraph apex_ring_tower(int ring, int layers) {
    if (ring < 4) throw error(errc::too_small, "ring length " + std::to_string(ring));
    if (layers < 1) throw error(errc::too_small, "need at least one layer");
    const int k = ring, L = layers;
    if (k * L + 2 > 255) throw error(errc::too_large, "n exceeds 255");
    auto id = [k](int l, int i) { return Vertex(l * k + ((i % k) + k) % k); };
    const Vertex in = k * L, out = k * L + 1;
    std::vector<std::vector<Vertex>> rot(k * L + 2);
    for (int i = 0; i < k; ++i) {
        if (L == 1) {
            rot[id(0, i)] = {out, id(0, i + 1), in, id(0, i - 1)};
        } else {
            rot[id(0, i)] = {id(1, i), id(0, i + 1), in, id(0, i - 1), id(1, i - 1)};
        }
    }
    for (int l = 1; l + 1 < L; ++l)
        for (int i = 0; i < k; ++i)
            rot[id(l, i)] = {id(l + 1, i), id(l, i + 1), id(l - 1, i + 1),
                             id(l - 1, i), id(l, i - 1), id(l + 1, i - 1)};
    if (L >= 2)
        for (int i = 0; i < k; ++i)
            rot[id(L - 1, i)] = {out, id(L - 1, i + 1), id(L - 2, i + 1), id(L - 2, i), id(L - 1, i - 1)};
    for (int i = 0; i < k; ++i) rot[in].push_back(id(0, i));
    rot[out].push_back(id(L - 1, 0));
    for (int i = k - 1; i >= 1; --i) rot[out].push_back(id(L - 1, i));
    return RotationGraph::from_rotation_system(std::move(rot));
}

RotationGraph icosahedron() { return apex_ring_tower(5, 2); }

RotationGraph complete4() {
    return RotationGraph::from_rotation_system({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

RotationGraph stack_vertex(const RotationGraph& g, int face_id) {
    if (face_id < 0 || face_id >= g.face_count())
        throw error(errc::bad_face, "face id " + std::to_string(face_id));
    const Face& f = g.faces()[face_id];
    if (f.length() != 3) throw error(errc::bad_face, "face " + std::to_string(face_id) + " is not a triangle");
    if (g.n() + 1 > 255) throw error(errc::too_large, "n exceeds 255");
    const Vertex a = f.boundary[0], b = f.boundary[1], c = f.boundary[2];
    const Vertex z = g.n();
    std::vector<std::vector<Vertex>> rot = g.rotations();
    auto insert_before = [&](Vertex at, Vertex before) {
        auto& r = rot[at];
        r.insert(std::find(r.begin(), r.end(), before), z);
    };
    // face orbit (a->b->c->a) means b follows c at a, c follows a at b, a follows b at c
    insert_before(a, b);
    insert_before(b, c);
    insert_before(c, a);
    rot.push_back({a, c, b});
    return RotationGraph::from_rotation_system(std::move(rot));
}

RotationGraph split_vertex(const RotationGraph& g, Vertex w, int pos_p, int pos_q) {
    const int d = g.degree(w);
    if (pos_p == pos_q || pos_p < 0 || pos_q < 0 || pos_p >= d || pos_q >= d)
        throw error(errc::internal, "bad split positions");
    if (g.n() + 1 > 255) throw error(errc::too_large, "n exceeds 255");
    auto rotw = g.neighbors(w);
    const Vertex p = rotw[pos_p], q = rotw[pos_q];
    std::vector<Vertex> arc1, arc2;
    for (int s = (pos_p + 1) % d; s != pos_q; s = (s + 1) % d) arc1.push_back(rotw[s]);
    for (int s = (pos_q + 1) % d; s != pos_p; s = (s + 1) % d) arc2.push_back(rotw[s]);

    const Vertex m = g.n();
    std::vector<std::vector<Vertex>> rot = g.rotations();
    rot[w].clear();
    rot[w].push_back(q);
    for (Vertex x : arc2) rot[w].push_back(x);
    rot[w].push_back(p);
    rot[w].push_back(m);
    std::vector<Vertex> rotm;
    rotm.push_back(p);
    for (Vertex x : arc1) rotm.push_back(x);
    rotm.push_back(q);
    rotm.push_back(w);
    for (Vertex x : arc1)
        for (Vertex& y : rot[x])
            if (y == w) y = m;
    // m sits next to w in the rotations of p and q, on the arc1 side
    auto wedge = [&](Vertex at, Vertex a_side) {
        auto& r = rot[at];
        auto it = std::find(r.begin(), r.end(), w);
        size_t i = size_t(it - r.begin());
        size_t succ = (i + 1) % r.size();
        size_t pred = (i + r.size() - 1) % r.size();
        if (r[succ] == a_side) {
            r.insert(r.begin() + i + 1, m);
        } else if (r[pred] == a_side) {
            r.insert(r.begin() + i, m);
        } else {
            throw error(errc::internal, "split: expected face partner not adjacent in rotation");
        }
    };
    wedge(p, arc1.empty() ? q : arc1.front());
    wedge(q, arc1.empty() ? p : arc1.back());
    rot.push_back(std::move(rotm));
    return RotationGraph::from_rotation_system(std::move(rot));
}

bool ClassFilter::pass(const RotationGraph& g) const {
    if (min_degree > 0)
        for (Vertex v = 0; v < g.n(); ++v)
            if (g.degree(v) < min_degree) return false;
    if (min_connectivity > 0 && !is_k_connected(g, min_connectivity)) return false;
    if (no_separating_triangle && has_separating_triangle(g)) return false;
    if (deg4_min_distance3) {
        auto d = degree4_min_distance(g);
        if (d && *d < 3) return false;
    }
    return true;
}

namespace {

void parallel_for(size_t count, unsigned jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    unsigned nthreads = std::min<size_t>(jobs, count);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace

void generate_all(const GenerationBudget& budget,
                  const std::function<void(const RotationGraph&)>& emit, unsigned jobs) {
    if (budget.n_max < 4 || budget.n_max > 255)
        throw error(errc::too_small, "n_max must be between 4 and 255");

    std::vector<std::vector<uint8_t>> level{canonical_form(complete4()).bytes};
    for (int n = 4; n <= budget.n_max; ++n) {
        // emit this level (already sorted, canonical labelling)
        std::vector<char> keep(level.size(), 1);
        std::vector<RotationGraph> decoded(level.size());
        parallel_for(level.size(), jobs, [&](size_t i) {
            size_t at = 0;
            decoded[i] = RotationGraph::from_rotation_system(decode_planar_record(level[i], at));
            keep[i] = budget.filter.pass(decoded[i]) ? 1 : 0;
        });
        for (size_t i = 0; i < level.size(); ++i)
            if (keep[i]) emit(decoded[i]);
        if (n == budget.n_max) break;

        // expand by vertex splitting
        std::vector<std::vector<std::vector<uint8_t>>> children(level.size());
        parallel_for(level.size(), jobs, [&](size_t i) {
            const RotationGraph& g = decoded[i];
            for (Vertex w = 0; w < g.n(); ++w) {
                const int d = g.degree(w);
                for (int pi = 0; pi < d; ++pi)
                    for (int pj = 0; pj < d; ++pj) {
                        if (pi == pj) continue;
                        RotationGraph child = split_vertex(g, w, pi, pj);
                        children[i].push_back(canonical_form(child).bytes);
                    }
            }
        });
        std::vector<std::vector<uint8_t>> next;
        for (auto& c : children) {
            next.insert(next.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
            c.clear();
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
}

std::vector<RotationGraph> generate_corpus(const GenerationBudget& budget, unsigned jobs) {
    std::vector<RotationGraph> out;
    generate_all(budget, [&](const RotationGraph& g) { out.push_back(g); }, jobs);
    return out;
}

} // namespace hamtri
