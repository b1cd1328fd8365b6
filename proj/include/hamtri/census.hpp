#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamtri/generate.hpp"
#include "hamtri/rotation.hpp"

namespace hamtri {

inline constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

// planar_code: optional header, then per graph one byte n followed by each
// vertex's neighbours in rotation order as 1-based bytes, each list
// 0-terminated.
std::vector<RotationGraph> read_planar_code(std::istream& in);
std::vector<RotationGraph> read_planar_code(const std::vector<uint8_t>& bytes);

// Graphs are written with the canonical labelling and rotation rooting, so
// re-encoding a decoded stream is byte-identical.
std::vector<uint8_t> write_planar_code(std::span<const RotationGraph> graphs);
void write_planar_code(std::ostream& out, std::span<const RotationGraph> graphs);

// Report-only constants accompanying the asymptotic statements; never
// asserted (they are vacuous at desk scale).
struct BoundConstants {
    double c;
    double c1;
    double c2;
    static BoundConstants values();
};

inline int64_t conjecture_bound(int n) { return 2ll * (n - 2) * (n - 4); }

struct CensusRecord {
    int n = 0;
    std::string canon;
    int connectivity = 0;
    int sep3 = 0, sep4 = 0, sep5 = 0;
    std::optional<int> deg4_min_dist;
    int64_t hc_count = 0;
    int64_t bound = 0;
    bool is_double_wheel = false;
    std::optional<bool> conjecture_ok; // 4-connected records only
    // refinement observation (4-connected records only)
    std::optional<int> refine_t;
    std::optional<std::string> refine_branch;
    std::optional<int> refine_s_size;
    std::optional<int> refine_i_size;
    std::string to_jsonl() const;
};

struct CensusOptions {
    GenerationBudget budget;             // default n_max 12
    unsigned jobs = 1;
    uint64_t seed = 0;
    int64_t samples = 1000;              // selection cap for sampling suites
    int refine_t = 7;
    double audit_rate = 0.01;            // fraction of records recounted independently
    std::vector<std::string> suites;     // named suites appended as flagged records
    std::optional<int64_t> limit;        // cap on census records
};

struct CensusResult {
    std::vector<CensusRecord> records;
    std::vector<std::string> violation_lines; // flagged records, already JSONL
    int64_t violations = 0;
};

CensusResult run_census(const CensusOptions& opt);
void write_census(std::ostream& out, const CensusResult& res);

} // namespace hamtri
