#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dpb/cli_io.hpp"

namespace {

// Fallback check list when the spec file leaves [checks] empty.
std::vector<std::string> default_checks(const std::string& subcommand,
                                        const dpb::JobSpec& job) {
    if (subcommand == "check-bracket") {
        std::vector<std::string> names = {"jacobi"};
        if (!job.involution.empty())
            names.push_back("adapted");
        return names;
    }
    if (subcommand == "induce")
        return {"ring_jacobi", "multiplicative", "equivariance"};
    if (subcommand == "induce-twisted")
        return {"well_defined", "ring_jacobi", "equivariance"};
    if (subcommand == "check-jacobiator")
        return {"jacobiator"};
    if (subcommand == "centralizer")
        return {"centralizer"};
    return {"r_skew", "aybe"}; // aybe
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification jobs for double-bracket structures"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string json_path;
    std::uint64_t seed = 0;
    int threads = 1;
    bool timings = false;
    app.add_option("--spec", spec_path, "job spec file")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "override the spec seed");
    app.add_option("--threads", threads, "worker threads for sweeps");
    app.add_option("--json", json_path, "write the report here (default stdout)");
    app.add_flag("--timings", timings, "include per-check millis in the report");

    for (const char* name :
         {"check-bracket", "induce", "induce-twisted", "check-jacobiator",
          "centralizer", "aybe"})
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);
    std::string sub = app.get_subcommands().front()->get_name();

    try {
        std::ifstream in(spec_path);
        std::stringstream buf;
        buf << in.rdbuf();
        dpb::JobSpec job = dpb::parse_spec(buf.str());
        if (app.count("--seed") > 0)
            job.seed = seed;
        if (job.checks.empty())
            job.checks = default_checks(sub, job);

        bool export_structure =
            sub == "induce" || sub == "induce-twisted";
        dpb::Report report = dpb::run_job(job, threads, export_structure);
        std::string text = dpb::report_json(report, timings).dump(2) + "\n";
        if (json_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(json_path);
            out << text;
        }
        return report.all_passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
