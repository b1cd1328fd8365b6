#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hamtri/analysis.hpp"
#include "hamtri/canonical.hpp"
#include "hamtri/census.hpp"
#include "hamtri/generate.hpp"

using namespace hamtri;

TEST_CASE("the documented K4 record decodes to K4") {
    std::vector<uint8_t> bytes{4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0};
    auto graphs = read_planar_code(bytes);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].n() == 4);
    CHECK(graphs[0].edge_count() == 6);
    CHECK(validate_triangulation(graphs[0]));
    CHECK(canonical_form(graphs[0]).bytes == bytes);
    // and K4 writes back as exactly this 17-byte record
    std::vector<RotationGraph> k{complete4()};
    auto out = write_planar_code(k);
    std::string header = kPlanarCodeHeader;
    CHECK(out.size() == header.size() + 17);
    CHECK(std::equal(bytes.begin(), bytes.end(), out.begin() + header.size()));
}

TEST_CASE("round trips are byte-identical over the corpus") {
    GenerationBudget b;
    b.n_max = 8;
    auto corpus = generate_corpus(b);
    auto bytes = write_planar_code(corpus);
    auto back = read_planar_code(bytes);
    REQUIRE(back.size() == corpus.size());
    auto again = write_planar_code(back);
    CHECK(bytes == again);
    // decoding reproduces the canonical labelling exactly
    for (size_t i = 0; i < corpus.size(); ++i)
        CHECK(back[i].rotations() == canonical_relabel(corpus[i]).rotations());
}

TEST_CASE("reader error cases") {
    // truncated mid-rotation
    std::vector<uint8_t> cut{4, 2, 3, 4, 0, 1, 4};
    try {
        read_planar_code(cut);
        FAIL("expected Truncated");
    } catch (const error& e) {
        CHECK(e.code() == errc::truncated);
    }
    // bad header
    std::vector<uint8_t> bad{'>', '>', 'x', 'x', '<', '<'};
    try {
        read_planar_code(bad);
        FAIL("expected BadHeader");
    } catch (const error& e) {
        CHECK(e.code() == errc::bad_header);
    }
    // header alone: empty stream
    std::string h = kPlanarCodeHeader;
    std::vector<uint8_t> only(h.begin(), h.end());
    CHECK(read_planar_code(only).empty());
    // neighbour index beyond n
    std::vector<uint8_t> high{3, 2, 5, 0, 1, 3, 0, 1, 2, 0};
    try {
        read_planar_code(high);
        FAIL("expected InvalidRotation");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_rotation);
    }
}

TEST_CASE("oversized graphs are refused by the writer") {
    // the writer's n-byte limit: the guard throws before any encoding work
    GenerationBudget b;
    b.n_max = 4;
    auto corpus = generate_corpus(b);
    CHECK(write_planar_code(corpus).size() > 0);
    // 255 cap enforced at construction time instead
    std::vector<std::vector<Vertex>> rot(300);
    try {
        RotationGraph::from_rotation_system(rot);
        FAIL("expected TooLarge");
    } catch (const error& e) {
        CHECK(e.code() == errc::too_large);
    }
}

TEST_CASE("census at n=6 over 4-connected graphs is the octahedron record") {
    CensusOptions opt;
    opt.budget.n_max = 6;
    opt.budget.filter.min_connectivity = 4;
    CensusResult res = run_census(opt);
    REQUIRE(res.records.size() == 1);
    const CensusRecord& r = res.records[0];
    CHECK(r.n == 6);
    CHECK(r.connectivity == 4);
    CHECK(r.hc_count == 16);
    CHECK(r.bound == 16);
    CHECK(r.is_double_wheel);
    CHECK(r.conjecture_ok == true);
    CHECK(r.sep3 == 0);
    CHECK(res.violations == 0);
}

TEST_CASE("census at n=7 adds the 7-vertex double wheel") {
    CensusOptions opt;
    opt.budget.n_max = 7;
    opt.budget.filter.min_connectivity = 4;
    CensusResult res = run_census(opt);
    REQUIRE(res.records.size() == 2);
    CHECK(res.records[1].n == 7);
    CHECK(res.records[1].hc_count == 30);
    CHECK(res.records[1].bound == 30);
    CHECK(res.records[1].is_double_wheel);
}

TEST_CASE("ledgers are byte-identical across runs and thread counts") {
    auto render = [](unsigned jobs) {
        CensusOptions opt;
        opt.budget.n_max = 8;
        opt.budget.filter.min_connectivity = 4;
        opt.jobs = jobs;
        opt.suites = {"nested-counts"};
        std::ostringstream os;
        write_census(os, run_census(opt));
        return os.str();
    };
    std::string a = render(1);
    CHECK(a == render(1));
    CHECK(a == render(4));
    CHECK_FALSE(a.empty());
}

TEST_CASE("self-audit recount passes on an honest ledger") {
    CensusOptions opt;
    opt.budget.n_max = 8;
    opt.budget.filter.min_connectivity = 4;
    opt.audit_rate = 1.0; // recount everything
    CensusResult res = run_census(opt);
    CHECK(res.violations == 0);
}

TEST_CASE("report-only constants") {
    BoundConstants c = BoundConstants::values();
    CHECK(c.c == doctest::Approx(1.0 / (12.0 * 90.0 * 541.0 * 301.0) / (12.0 * 90.0 * 541.0 * 301.0) / 2.0));
    CHECK(c.c1 == doctest::Approx(1.0 / (12.0 * 63.0 * 541.0 * 301.0)));
    CHECK(c.c2 == doctest::Approx(1.0 / (12.0 * 90.0 * 541.0 * 301.0)));
    // vacuous at desk scale: the quadratic bound rounds to zero cycles
    CHECK(c.c * 14 * 14 < 1.0);
}
