#include "hamtri/census.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hamtri/analysis.hpp"
#include "hamtri/canonical.hpp"
#include "hamtri/hamilton.hpp"
#include "hamtri/select.hpp"
#include "hamtri/suites.hpp"

namespace hamtri {

using ordered_json = nlohmann::ordered_json;

std::vector<RotationGraph> read_planar_code(const std::vector<uint8_t>& bytes) {
    size_t at = 0;
    if (bytes.size() >= 2 && bytes[0] == '>' && bytes[1] == '>') {
        const std::string header = kPlanarCodeHeader;
        if (bytes.size() < header.size() ||
            !std::equal(header.begin(), header.end(), bytes.begin(),
                        [](char c, uint8_t b) { return uint8_t(c) == b; }))
            throw error(errc::bad_header, "stream starts with '>>' but not with the planar_code header");
        at = header.size();
    }
    std::vector<RotationGraph> out;
    while (at < bytes.size()) {
        auto rot = decode_planar_record(bytes, at);
        out.push_back(RotationGraph::from_rotation_system(std::move(rot)));
    }
    return out;
}

std::vector<RotationGraph> read_planar_code(std::istream& in) {
    std::vector<uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return read_planar_code(bytes);
}

std::vector<uint8_t> write_planar_code(std::span<const RotationGraph> graphs) {
    std::vector<uint8_t> out;
    const std::string header = kPlanarCodeHeader;
    out.insert(out.end(), header.begin(), header.end());
    for (const RotationGraph& g : graphs) {
        if (g.n() > 255) throw error(errc::too_large, "n=" + std::to_string(g.n()) + " exceeds planar_code byte format");
        CanonicalForm cf = canonical_form(g);
        out.insert(out.end(), cf.bytes.begin(), cf.bytes.end());
    }
    return out;
}

void write_planar_code(std::ostream& out, std::span<const RotationGraph> graphs) {
    auto bytes = write_planar_code(graphs);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

BoundConstants BoundConstants::values() {
    const double base = 12.0 * 90.0 * 541.0 * 301.0;
    const double base1 = 12.0 * 63.0 * 541.0 * 301.0;
    return BoundConstants{1.0 / (base * base) / 2.0, 1.0 / base1, 1.0 / base};
}

std::string CensusRecord::to_jsonl() const {
    ordered_json j;
    j["schema"] = "hamtri.census/1";
    j["type"] = "graph";
    j["n"] = n;
    j["canon"] = canon;
    j["connectivity"] = connectivity;
    j["sep3"] = sep3;
    j["sep4"] = sep4;
    j["sep5"] = sep5;
    if (deg4_min_dist)
        j["deg4_min_dist"] = *deg4_min_dist;
    else
        j["deg4_min_dist"] = nullptr;
    j["hc_count"] = hc_count;
    j["bound"] = bound;
    j["is_double_wheel"] = is_double_wheel;
    if (conjecture_ok)
        j["conjecture_ok"] = *conjecture_ok;
    else
        j["conjecture_ok"] = nullptr;
    if (refine_t) {
        j["refine"] = ordered_json{{"t", *refine_t},
                                   {"branch", *refine_branch},
                                   {"i_size", *refine_i_size},
                                   {"s_size", *refine_s_size},
                                   {"ratio", *refine_i_size ? double(*refine_s_size) / double(*refine_i_size) : 0.0}};
    } else {
        j["refine"] = nullptr;
    }
    return j.dump();
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

std::string violation_line(const std::string& suite, int n, const std::string& canon,
                           const std::string& detail) {
    ordered_json j;
    j["schema"] = "hamtri.census/1";
    j["type"] = "violation";
    j["suite"] = suite;
    j["n"] = n;
    j["canon"] = canon;
    j["detail"] = detail;
    return j.dump();
}

} // namespace

CensusResult run_census(const CensusOptions& opt) {
    std::vector<RotationGraph> corpus = generate_corpus(opt.budget, opt.jobs);
    if (opt.limit && int64_t(corpus.size()) > *opt.limit) corpus.resize(size_t(*opt.limit));

    // canonical forms of double wheels per n, for the equality flag
    std::vector<std::string> dw_canon(opt.budget.n_max + 1);
    for (int n = 6; n <= opt.budget.n_max; ++n) dw_canon[n] = canonical_form(double_wheel(n - 2)).hex();

    const DiamondPatterns& patterns = default_diamond_patterns();
    CensusResult res;
    res.records.resize(corpus.size());
    parallel_for(corpus.size(), opt.jobs, [&](size_t i) {
        const RotationGraph& g = corpus[i];
        CensusRecord r;
        r.n = g.n();
        r.canon = canonical_form(g).hex();
        r.connectivity = vertex_connectivity(g);
        r.sep3 = int(separating_cycles(g, 3).size());
        r.sep4 = int(separating_cycles(g, 4).size());
        r.sep5 = int(separating_cycles(g, 5).size());
        r.deg4_min_dist = degree4_min_distance(g);
        r.hc_count = count_hamiltonian_cycles(g);
        r.bound = conjecture_bound(r.n);
        r.is_double_wheel = r.n >= 6 && r.canon == dw_canon[r.n];
        if (r.connectivity >= 4) {
            bool ok = r.hc_count >= r.bound && (r.hc_count != r.bound || r.is_double_wheel);
            r.conjecture_ok = ok;
            CandidateSet I = low_degree_independent_set(g, 6);
            RefineResult ref = refine_saturation_free(g, I, opt.refine_t, patterns);
            r.refine_t = opt.refine_t;
            r.refine_branch = ref.branch_a ? "A" : "B";
            r.refine_i_size = ref.i_size;
            r.refine_s_size = int(ref.saturation_free.size());
        }
        res.records[i] = std::move(r);
    });
    std::sort(res.records.begin(), res.records.end(), [](const CensusRecord& a, const CensusRecord& b) {
        return std::tie(a.n, a.canon) < std::tie(b.n, b.canon);
    });

    for (const CensusRecord& r : res.records)
        if (r.conjecture_ok && !*r.conjecture_ok) {
            ++res.violations;
            res.violation_lines.push_back(violation_line(
                "conjecture", r.n, r.canon,
                "hc_count " + std::to_string(r.hc_count) + " vs bound " + std::to_string(r.bound) +
                    (r.hc_count == r.bound ? " with equality off the double wheel" : "")));
        }

    // self-audit: recount a sample of records along the independent route
    if (opt.audit_rate > 0 && !res.records.empty()) {
        size_t sample = size_t(std::max<double>(1.0, opt.audit_rate * double(res.records.size())));
        std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
        std::vector<size_t> idx(res.records.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(std::min(sample, idx.size()));
        for (size_t i : idx) {
            const CensusRecord& r = res.records[i];
            CanonicalForm cf;
            for (size_t b = 0; b < r.canon.size(); b += 2)
                cf.bytes.push_back(uint8_t(std::stoi(r.canon.substr(b, 2), nullptr, 16)));
            RotationGraph g = decode_canonical(cf);
            int64_t recount = count_hamiltonian_cycles_dp(g);
            if (recount != r.hc_count) {
                ++res.violations;
                res.violation_lines.push_back(violation_line(
                    "self-audit", r.n, r.canon,
                    "ledger count " + std::to_string(r.hc_count) + " vs independent recount " +
                        std::to_string(recount)));
            }
        }
    }

    for (const std::string& name : opt.suites) {
        SuiteOutcome so = run_suite(name, SuiteParams{opt.budget.n_max, opt.seed, opt.jobs, opt.samples});
        for (const SuiteViolation& v : so.violations) {
            ++res.violations;
            res.violation_lines.push_back(violation_line(so.name, v.n, v.canon, v.detail));
        }
    }
    std::sort(res.violation_lines.begin(), res.violation_lines.end());
    return res;
}

void write_census(std::ostream& out, const CensusResult& res) {
    for (const CensusRecord& r : res.records) out << r.to_jsonl() << "\n";
    for (const std::string& line : res.violation_lines) out << line << "\n";
}

} // namespace hamtri
