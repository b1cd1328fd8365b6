#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamtri/analysis.hpp"
#include "hamtri/canonical.hpp"
#include "hamtri/census.hpp"
#include "hamtri/generate.hpp"
#include "hamtri/suites.hpp"

using namespace hamtri;

namespace {

ClassFilter parse_filter(const std::string& spec) {
    ClassFilter f;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok == "none") continue;
        if (tok == "4connected") {
            f.min_connectivity = 4;
        } else if (tok == "nosep3") {
            f.no_separating_triangle = true;
        } else if (tok == "deg4dist3") {
            f.deg4_min_distance3 = true;
        } else if (tok.rfind("mindeg=", 0) == 0) {
            f.min_degree = std::stoi(tok.substr(7));
        } else {
            throw CLI::ValidationError("--filter", "unknown filter " + tok);
        }
    }
    return f;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw error(errc::internal, "cannot open " + path);
    return file;
}

void warn_budget(int nmax) {
    if (nmax > 12)
        std::cerr << "note: n_max " << nmax << " above the default 12; generation and counting will be slow"
                  << (nmax > 14 ? " (well beyond the supported desk scale)" : "") << "\n";
}

int cmd_generate(int nmax, const std::string& filter, const std::string& out_path, unsigned jobs,
                 int64_t limit) {
    warn_budget(nmax);
    GenerationBudget budget{nmax, parse_filter(filter)};
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << kPlanarCodeHeader;
    int64_t emitted = 0;
    generate_all(
        budget,
        [&](const RotationGraph& g) {
            if (limit >= 0 && emitted >= limit) return;
            CanonicalForm cf = canonical_form(g);
            out.write(reinterpret_cast<const char*>(cf.bytes.data()), std::streamsize(cf.bytes.size()));
            ++emitted;
        },
        jobs);
    out.flush();
    std::cerr << "generated " << emitted << " graphs\n";
    return 0;
}

int cmd_census(int nmax, const std::string& filter, const std::string& out_path, unsigned jobs,
               uint64_t seed, int64_t samples, int64_t limit, const std::vector<std::string>& suites,
               int refine_t, double audit_rate) {
    warn_budget(nmax);
    CensusOptions opt;
    opt.budget = GenerationBudget{nmax, parse_filter(filter)};
    opt.jobs = jobs;
    opt.seed = seed;
    opt.samples = samples;
    opt.refine_t = refine_t;
    opt.audit_rate = audit_rate;
    opt.suites = suites;
    if (limit >= 0) opt.limit = limit;
    CensusResult res = run_census(opt);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    write_census(out, res);
    out.flush();
    std::cerr << res.records.size() << " records, " << res.violations << " violations\n";
    return res.violations ? 1 : 0;
}

int cmd_check_conjecture(int nmax, unsigned jobs) {
    warn_budget(nmax);
    SuiteOutcome so = run_suite("conjecture", SuiteParams{nmax, 0, jobs});
    std::cout << "checked " << so.graphs << " 4-connected triangulations up to n=" << nmax << "\n";
    for (const SuiteViolation& v : so.violations)
        std::cout << "VIOLATION n=" << v.n << " canon=" << v.canon << ": " << v.detail << "\n";
    if (so.violations.empty()) {
        std::cout << "no violations: every count meets 2(n-2)(n-4), equality only at double wheels\n";
        return 0;
    }
    return 1;
}

int cmd_lemma_suite(const std::string& name, int nmax, uint64_t seed, unsigned jobs, int64_t samples) {
    SuiteOutcome so = run_suite(name, SuiteParams{nmax, seed, jobs, samples});
    std::cout << "suite " << so.name << ": " << so.graphs << " graphs, " << so.instances
              << " checks, " << so.violations.size() << " violations\n";
    for (const std::string& n : so.notes) std::cout << "note: " << n << "\n";
    for (const SuiteViolation& v : so.violations)
        std::cout << "VIOLATION n=" << v.n << " canon=" << v.canon << ": " << v.detail << "\n";
    return so.violations.empty() ? 0 : 1;
}

int cmd_convert(const std::string& in_path, const std::string& out_path, const std::string& to) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw error(errc::internal, "cannot open " + in_path);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    if (to == "jsonl") {
        for (const RotationGraph& g : read_planar_code(in)) {
            nlohmann::ordered_json j;
            j["n"] = g.n();
            j["rot"] = g.rotations();
            j["canon"] = canonical_form(g).hex();
            out << j.dump() << "\n";
        }
    } else if (to == "code") {
        std::vector<RotationGraph> graphs;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            graphs.push_back(
                RotationGraph::from_rotation_system(j.at("rot").get<std::vector<std::vector<Vertex>>>()));
        }
        write_planar_code(out, graphs);
    } else {
        throw CLI::ValidationError("--to", "expected jsonl or code");
    }
    out.flush();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hamtri: Hamiltonian-cycle census toolkit for planar triangulations"};
    app.require_subcommand(1);

    int nmax = 12;
    std::string filter = "none";
    std::string out_path;
    std::string in_path;
    std::string to = "jsonl";
    unsigned jobs = 1;
    uint64_t seed = 0;
    int64_t samples = 1000;
    int64_t limit = -1;
    int refine_t = 7;
    double audit_rate = 0.01;
    std::vector<std::string> suites;
    std::string suite_name;

    auto* gen = app.add_subcommand("generate", "emit the triangulation corpus as planar_code");
    gen->add_option("--nmax", nmax, "largest vertex count")->capture_default_str();
    gen->add_option("--filter", filter, "comma list: 4connected,nosep3,deg4dist3,mindeg=K");
    gen->add_option("--out", out_path, "output file (default stdout)");
    gen->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    gen->add_option("--limit", limit, "stop after this many graphs");

    auto* cen = app.add_subcommand("census", "JSONL ledger of structural and counting data");
    cen->add_option("--nmax", nmax, "largest vertex count")->capture_default_str();
    std::string cen_filter = "4connected";
    cen->add_option("--filter", cen_filter, "comma list (default 4connected)");
    cen->add_option("--out", out_path, "output file (default stdout)");
    cen->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    cen->add_option("--seed", seed, "seed for sampling")->capture_default_str();
    cen->add_option("--samples", samples, "cap on sampled selections per instance")->capture_default_str();
    cen->add_option("--limit", limit, "cap census records");
    cen->add_option("--suites", suites, "suites appended as flagged records");
    cen->add_option("--refine-t", refine_t, "refinement threshold")->capture_default_str();
    cen->add_option("--audit-rate", audit_rate, "fraction of records recounted")->capture_default_str();

    auto* chk = app.add_subcommand("check-conjecture", "sweep the 4-connected corpus against 2(n-2)(n-4)");
    chk->add_option("--nmax", nmax, "largest vertex count")->capture_default_str();
    chk->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    auto* lem = app.add_subcommand("lemma-suite", "run one named property suite");
    lem->add_option("name", suite_name, "one of: " + [] {
                        std::string s;
                        for (const auto& n : suite_names()) s += n + " ";
                        return s;
                    }())
        ->required();
    int lem_nmax = 10;
    lem->add_option("--nmax", lem_nmax, "corpus bound")->capture_default_str();
    lem->add_option("--seed", seed, "seed for sampling")->capture_default_str();
    lem->add_option("--samples", samples, "cap on sampled selections per instance")->capture_default_str();
    lem->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    auto* conv = app.add_subcommand("convert", "convert between planar_code and JSONL rotations");
    conv->add_option("--in", in_path, "input file")->required();
    conv->add_option("--out", out_path, "output file (default stdout)");
    conv->add_option("--to", to, "target format: jsonl or code")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_generate(nmax, filter, out_path, jobs, limit);
        if (cen->parsed())
            return cmd_census(nmax, cen_filter, out_path, jobs, seed, samples, limit, suites, refine_t,
                              audit_rate);
        if (chk->parsed()) return cmd_check_conjecture(nmax, jobs);
        if (lem->parsed()) return cmd_lemma_suite(suite_name, lem_nmax, seed, jobs, samples);
        if (conv->parsed()) return cmd_convert(in_path, out_path, to);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
