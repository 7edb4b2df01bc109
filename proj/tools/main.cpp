#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "tripv/errors.hpp"

using namespace tripv;
using namespace tripv::cli;

int main(int argc, char** argv) {
    CLI::App app{"Prehomogeneity of cubic forms attached to triangle arrangements"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string mode = "randomized";
    app.add_option("--seed", cfg.pv.seed, "Master RNG seed")->capture_default_str();
    app.add_option("--samples", cfg.pv.samples, "Random points per rank test")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--coord-bound", cfg.pv.coord_bound, "Coordinates are drawn from [1, S]")->capture_default_str();
    app.add_option("--mode", mode, "randomized or symbolic")
        ->check(CLI::IsMember({"randomized", "symbolic"}))
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "Also write output to this file");
    bool no_dual = false;
    app.add_flag("--no-dual", no_dual, "Skip the dual prehomogeneity test");

    std::string file, file2, inv_file, zeros1, zeros2, family;
    std::size_t n = 0;
    Vertex v1 = 0, v2 = 0;

    auto* analyze = app.add_subcommand("analyze", "dim g[p], PV and dual PV verdicts for an arrangement file");
    analyze->add_option("file", file, "Arrangement JSON")->required()->check(CLI::ExistingFile);
    analyze->add_option("--invariants", inv_file, "Candidate invariants, one polynomial per line ('dual:' prefix for the dual action)")
        ->check(CLI::ExistingFile);

    auto* enumerate = app.add_subcommand("enumerate", "Classify all triangulations of the n-gon (one table row)");
    enumerate->add_option("n", n, "Polygon size")->required()->check(CLI::Range(6, 17));

    auto* fam = app.add_subcommand("family", "Verify one member of a prehomogeneous family");
    fam->add_option("kind", family, "daisy, chain, circular or edge_gluing")->required();
    fam->add_option("n", n, "Size parameter")->required();

    auto* att = app.add_subcommand("attach", "Attach two arrangements at a vertex and check the hypotheses");
    att->add_option("first", file, "First arrangement JSON")->required()->check(CLI::ExistingFile);
    att->add_option("second", file2, "Second arrangement JSON")->required()->check(CLI::ExistingFile);
    att->add_option("--v1", v1, "Vertex of the first arrangement")->required();
    att->add_option("--v2", v2, "Vertex of the second arrangement")->required();
    att->add_option("--zeros1", zeros1, "Entries forced to zero in h1, e.g. \"2,4;2,5\"");
    att->add_option("--zeros2", zeros2, "Entries forced to zero in h2");

    auto* red = app.add_subcommand("reduce", "Reduce an arrangement and report the shear");
    red->add_option("file", file, "Arrangement JSON")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);
    cfg.pv.mode = mode == "symbolic" ? RankMode::Symbolic : RankMode::Randomized;
    cfg.dual = !no_dual;

    try {
        if (*analyze)
            return cmd_analyze(file, cfg, std::cout, inv_file.empty() ? std::nullopt : std::optional<std::string>(inv_file));
        if (*enumerate) return cmd_enumerate(n, cfg, std::cout, std::cerr);
        if (*fam) return cmd_family({parse_family(family), n}, cfg, std::cout);
        if (*att)
            return cmd_attach(file, v1, parse_zero_list(zeros1), file2, v2, parse_zero_list(zeros2), cfg, std::cout);
        if (*red) return cmd_reduce(file, std::cout);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
