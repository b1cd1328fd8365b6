#include "hamtri/canonical.hpp"

#include <algorithm>

namespace hamtri {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

namespace {

std::vector<uint8_t> encode(const RotationGraph& g, Vertex ru, Vertex rv, bool mirror) {
    const int n = g.n();
    std::vector<int> label(n, -1);
    std::vector<Vertex> order;
    std::vector<Vertex> entry(n, -1);
    order.reserve(n);
    label[ru] = 0;
    order.push_back(ru);
    entry[ru] = rv;

    std::vector<uint8_t> out;
    out.reserve(size_t(1) + n + 2 * g.edge_count());
    out.push_back(uint8_t(n));
    for (size_t qi = 0; qi < order.size(); ++qi) {
        Vertex w = order[qi];
        auto rot = g.neighbors(w);
        const int d = int(rot.size());
        const int p0 = g.rot_index(w, entry[w]);
        for (int s = 0; s < d; ++s) {
            Vertex x = mirror ? rot[(p0 - s % d + d) % d] : rot[(p0 + s) % d];
            if (label[x] < 0) {
                label[x] = int(order.size());
                order.push_back(x);
                entry[x] = w;
            }
            out.push_back(uint8_t(label[x] + 1));
        }
        out.push_back(0);
    }
    if (int(order.size()) != n) throw error(errc::internal, "encoding reached only part of the graph");
    return out;
}

} // namespace

CanonicalForm canonical_form(const RotationGraph& g) {
    CanonicalForm best;
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v))
            for (bool mirror : {false, true}) {
                auto cand = encode(g, v, w, mirror);
                if (best.bytes.empty() || cand < best.bytes) best.bytes = std::move(cand);
            }
    return best;
}

CanonicalForm canonical_form_rooted(const RotationGraph& g, int face_id) {
    if (face_id < 0 || face_id >= g.face_count())
        throw error(errc::bad_face, "face id " + std::to_string(face_id));
    const Face& f = g.faces()[face_id];
    CanonicalForm best;
    const size_t len = f.boundary.size();
    for (size_t i = 0; i < len; ++i) {
        Vertex u = f.boundary[i];
        Vertex v = f.boundary[(i + 1) % len];
        auto cand = encode(g, u, v, false);
        if (best.bytes.empty() || cand < best.bytes) best.bytes = std::move(cand);
        cand = encode(g, v, u, true);
        if (cand < best.bytes) best.bytes = std::move(cand);
    }
    return best;
}

std::vector<std::vector<Vertex>> decode_planar_record(const std::vector<uint8_t>& bytes, size_t& at) {
    if (at >= bytes.size()) throw error(errc::truncated, "no vertex count byte");
    const int n = bytes[at++];
    if (n == 0) throw error(errc::invalid_rotation, "zero vertex count");
    std::vector<std::vector<Vertex>> rot(n);
    for (int v = 0; v < n; ++v) {
        while (true) {
            if (at >= bytes.size())
                throw error(errc::truncated, "record ends inside rotation of vertex " + std::to_string(v));
            uint8_t b = bytes[at++];
            if (b == 0) break;
            if (int(b) > n)
                throw error(errc::invalid_rotation,
                            "neighbour " + std::to_string(int(b)) + " exceeds n=" + std::to_string(n));
            rot[v].push_back(Vertex(b) - 1);
        }
    }
    return rot;
}

RotationGraph decode_canonical(const CanonicalForm& cf) {
    size_t at = 0;
    auto rot = decode_planar_record(cf.bytes, at);
    if (at != cf.bytes.size()) throw error(errc::internal, "trailing bytes in canonical form");
    return RotationGraph::from_rotation_system(std::move(rot));
}

RotationGraph canonical_relabel(const RotationGraph& g) {
    return decode_canonical(canonical_form(g));
}

} // namespace hamtri
