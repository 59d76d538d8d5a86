// chromsh: weighted chromatic symmetric homology from the command line.

#include <iostream>

#include <CLI11.hpp>

#include "chromsh/cli.hpp"

int main(int argc, char** argv) {
    using namespace chromsh;
    CLI::App app{"Weighted chromatic symmetric homology of vertex-weighted graphs"};
    app.require_subcommand(1);

    RunConfig config;
    bool json = false;
    std::string cache_dir;

    auto add_common = [&](CLI::App* sub, bool takes_graphs) {
        if (takes_graphs) sub->add_option("graphs", config.inputs, "Graph documents (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_flag("--json", json, "Structured output");
        sub->add_option("--max-weight", config.max_points, "Bound on w(G)")->capture_default_str();
        sub->add_option("--max-edges", config.max_edges, "Bound on the number of edges")->capture_default_str();
        sub->add_flag("--allow-large", config.allow_large, "Acknowledge raising the bounds above their defaults");
        sub->add_option("--threads", config.threads, "Worker threads")->capture_default_str();
        sub->add_option("--cache-dir", cache_dir, std::string("Result cache directory (default: $") + kCacheDirVariable + ")");
        sub->add_flag("--no-cache", config.no_cache, "Do not read or write the cache");
    };

    auto* csf = app.add_subcommand("csf", "Weighted chromatic symmetric function in the p and s bases");
    add_common(csf, true);
    csf->add_option("--oracle", config.oracle_colors, "Compare with brute-force colorings in up to k variables");

    auto* homology = app.add_subcommand("homology", "Bigraded homology table and Frobenius series");
    add_common(homology, true);

    auto* les = app.add_subcommand("les", "Deletion-contraction long exact sequence for one edge");
    add_common(les, true);
    les->add_option("--edge", config.edge, "Edge index in input order")->required();

    auto* verify = app.add_subcommand("verify", "Structure theorems, categorification and exact sequences");
    add_common(verify, true);

    auto* scan = app.add_subcommand("scan-c6", "Empirical scan of n - b <= span_0 over connected simple graphs");
    add_common(scan, false);
    scan->add_option("--max-vertices", config.scan_max_vertices, "Largest vertex count")->capture_default_str();

    auto* selftest = app.add_subcommand("selftest", "Golden examples");
    add_common(selftest, false);

    CLI11_PARSE(app, argc, argv);

    if (csf->parsed()) config.command = Command::Csf;
    if (homology->parsed()) config.command = Command::Homology;
    if (les->parsed()) config.command = Command::Les;
    if (verify->parsed()) config.command = Command::Verify;
    if (scan->parsed()) config.command = Command::ScanC6;
    if (selftest->parsed()) config.command = Command::Selftest;
    config.format = json ? OutputFormat::Json : OutputFormat::Text;
    if (!cache_dir.empty()) config.cache_dir = cache_dir;

    return run(config, std::cout, std::cerr);
}
