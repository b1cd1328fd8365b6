// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hamtri/analysis.hpp"
#include "hamtri/canonical.hpp"
#include "hamtri/census.hpp"
#include "hamtri/generate.hpp"
#include "hamtri/hamilton.hpp"
#include "hamtri/suites.hpp"
#include "oracles.hpp"

using namespace hamtri;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

unsigned jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 8u);
}

void criterion1_double_wheel_equality() {
    // exact counts for the double wheels on 6..10 vertices, plus an
    // independent inclusion-exclusion check for the octahedron
    const std::map<int, int64_t> expected{{4, 16}, {5, 30}, {6, 48}, {7, 70}, {8, 96}};
    bool ok = true;
    std::ostringstream detail;
    for (auto [k, want] : expected) {
        RotationGraph g = double_wheel(k);
        int64_t got = count_hamiltonian_cycles(g);
        int64_t formula = conjecture_bound(g.n());
        detail << "k=" << k << ":" << got << " ";
        if (got != want || formula != want) ok = false;
    }
    int64_t ie = oracles::k6_minus_matching_hc_count();
    detail << "octahedron inclusion-exclusion:" << ie;
    if (ie != 16) ok = false;
    report(1, ok, "double-wheel counts equal 2(n-2)(n-4) = 16,30,48,70,96 exactly", detail.str());
}

void criterion2_conjecture_sweep() {
    SuiteOutcome so = run_suite("conjecture", SuiteParams{12, 0, jobs()});
    std::ostringstream detail;
    detail << so.graphs << " graphs checked";
    for (const SuiteViolation& v : so.violations)
        detail << "; CERTIFICATE n=" << v.n << " canon=" << v.canon << " " << v.detail;
    report(2, so.ok() && so.graphs >= 130, "every 4-connected triangulation with n<=12 meets the bound",
           detail.str());
}

void criterion3_generation_cross_check() {
    // generator counts per n
    std::map<int, std::pair<int64_t, int64_t>> got; // n -> (all, 4conn)
    GenerationBudget b;
    b.n_max = 10;
    for (const RotationGraph& g : generate_corpus(b, jobs())) {
        got[g.n()].first++;
        if (is_k_connected(g, 4)) got[g.n()].second++;
    }
    // independent brute-force embedder for n <= 7
    bool ok = true;
    std::ostringstream detail;
    for (int n = 4; n <= 7; ++n) {
        auto counts = oracles::brute_force_triangulation_classes(n);
        detail << "n=" << n << " embedder " << counts.all << "/" << counts.four_connected << " ";
        if (counts.all != got[n].first || counts.four_connected != got[n].second) ok = false;
    }
    // fixture rows (published generator tables) for 4 <= n <= 10
    std::ifstream fx(std::string(HAMTRI_DATA_DIR) + "/triangulation_counts.txt");
    if (!fx) {
        report(3, false, "generation counts", "fixture file missing");
        return;
    }
    std::string line;
    int rows = 0;
    while (std::getline(fx, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        int n = std::stoi(first);
        int64_t all, fourc;
        ls >> all >> fourc;
        ++rows;
        if (got[n].first != all || got[n].second != fourc) {
            ok = false;
            detail << "MISMATCH n=" << n << " got " << got[n].first << "/" << got[n].second
                   << " expected " << all << "/" << fourc << " ";
        }
    }
    if (rows < 7) ok = false;
    report(3, ok, "generation counts match the independent embedder (n<=7) and the fixture table (n<=10)",
           detail.str());
}

void criterion4_edge_removal() {
    SuiteOutcome so = run_suite("edge-removal", SuiteParams{10, 20250810, jobs()});
    std::ostringstream detail;
    detail << so.instances << " selections over " << so.graphs << " graphs";
    for (const SuiteViolation& v : so.violations) detail << "; " << v.detail;
    report(4, so.ok() && so.instances > 0, "every admissible selection keeps 4-connectivity", detail.str());
}

void criterion5_dichotomies() {
    SuiteOutcome so = run_suite("dichotomies", SuiteParams{10, 0, jobs()});
    std::ostringstream detail;
    detail << so.instances << " checks over " << so.graphs << " near triangulations";
    for (const SuiteViolation& v : so.violations) detail << "; n=" << v.n << " " << v.detail;
    report(5, so.ok() && so.graphs > 0, "spanning-path dichotomies hold on every qualifying instance",
           detail.str());
}

void criterion6_cofacial() {
    SuiteOutcome so = run_suite("cofacial", SuiteParams{10, 0, jobs()});
    std::ostringstream detail;
    detail << so.instances << " cofacial pairs over " << so.graphs << " graphs";
    for (const SuiteViolation& v : so.violations) detail << "; n=" << v.n << " " << v.detail;
    report(6, so.ok() && so.instances > 0, "a Hamiltonian cycle exists through every cofacial edge pair",
           detail.str());
}

void criterion7_cycle_intersections() {
    SuiteOutcome so = run_suite("cycle-intersections", SuiteParams{10, 0, jobs()});
    std::ostringstream detail;
    detail << so.instances << " cycle pairs over " << so.graphs << " graphs";
    for (const SuiteViolation& v : so.violations) detail << "; n=" << v.n << " " << v.detail;
    report(7, so.ok(), "4-cycles around saturation-free pairs overlap in at most a shared edge",
           detail.str());
}

void criterion8_nested_counts() {
    SuiteOutcome so = run_suite("nested-counts", SuiteParams{10, 0, jobs()});
    std::ostringstream detail;
    for (const std::string& n : so.notes) detail << n << "; ";
    for (const SuiteViolation& v : so.violations) detail << "FAIL " << v.detail << "; ";
    report(8, so.ok(), "nested 4-cycle chains of length 3,4,5 force the 2^floor(sqrt(t)) count",
           detail.str());
}

void criterion9_roundtrip() {
    GenerationBudget b;
    b.n_max = 10;
    auto corpus = generate_corpus(b, jobs());
    auto bytes = write_planar_code(corpus);
    auto back = read_planar_code(bytes);
    bool ok = back.size() == corpus.size();
    if (ok) ok = write_planar_code(back) == bytes;
    report(9, ok, "planar_code re-encoding is bit-identical over the full n<=10 corpus",
           std::to_string(corpus.size()) + " graphs, " + std::to_string(bytes.size()) + " bytes");
}

void criterion10_constants_report() {
    BoundConstants c = BoundConstants::values();
    std::ostringstream detail;
    detail.precision(3);
    detail << std::scientific << "c=" << c.c << " c1=" << c.c1 << " c2=" << c.c2
           << "; at n=14 the quadratic bound c*n^2=" << c.c * 196
           << " rounds to zero, so these are reported, never asserted";
    report(10, true, "asymptotic constants are report-only at desk scale", detail.str());
}

} // namespace

int main() {
    criterion1_double_wheel_equality();
    criterion2_conjecture_sweep();
    criterion3_generation_cross_check();
    criterion4_edge_removal();
    criterion5_dichotomies();
    criterion6_cofacial();
    criterion7_cycle_intersections();
    criterion8_nested_counts();
    criterion9_roundtrip();
    criterion10_constants_report();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
