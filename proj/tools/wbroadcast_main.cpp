#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wbroadcast/wbroadcast.hpp"

namespace {

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f << content;
    if (!f) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

struct AnalyzeOpts {
    double alpha2 = 0.0;
    std::optional<double> beta2;
    std::string format = "text";
    std::string out;
};

struct SweepOpts {
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::string format = "csv";
    std::string out;
    std::string svg;
    unsigned jobs = 0;
};

int run_analyze(const AnalyzeOpts& o) {
    const wbroadcast::AnalysisRecord rec =
        o.beta2 ? wbroadcast::analyze(o.alpha2, *o.beta2) : wbroadcast::analyze(o.alpha2);
    std::string rendered;
    if (o.format == "json") {
        rendered = wbroadcast::render_json(rec) + "\n";
    } else if (o.format == "csv") {
        rendered = wbroadcast::csv_header() + wbroadcast::render_csv_row(rec);
    } else {
        rendered = wbroadcast::render_text(rec);
    }
    write_output(rendered, o.out);
    return 0;
}

int run_sweep(const SweepOpts& o) {
    const auto records = wbroadcast::sweep_records(o.from, o.to, o.steps, o.jobs);
    const std::string rendered = o.format == "json" ? wbroadcast::render_json(records)
                                                    : wbroadcast::render_csv(records);
    write_output(rendered, o.out);
    if (!o.svg.empty()) {
        write_output(wbroadcast::render_svg(records), o.svg);
    }
    return 0;
}

int run_thresholds(double tol, const std::string& format) {
    const wbroadcast::ThresholdReport rep = wbroadcast::locate_thresholds(tol);
    if (format == "json") {
        std::cout << wbroadcast::render_thresholds_json(rep);
    } else {
        std::cout << wbroadcast::render_thresholds(rep);
    }
    return 0;
}

int run_table2(const std::string& format) {
    const wbroadcast::Table2Report rep = wbroadcast::table2_report();
    if (format == "json") {
        std::cout << wbroadcast::render_table2_json(rep);
    } else {
        std::cout << wbroadcast::render_table2(rep);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wbroadcast - symmetric universal cloning of the first two qubits of a W-type state:\n"
        "separability (W3/W4 determinants, PPT), concurrence, entanglement of formation and\n"
        "linear entropy of the four bipartite outputs, over the input parameter alpha^2."};
    app.require_subcommand(1);

    AnalyzeOpts a;
    CLI::App* analyze = app.add_subcommand("analyze", "Analyze a single parameter point.");
    analyze->add_option("--alpha2", a.alpha2, "squared amplitude of |001>, in (0,1)")->required();
    analyze->add_option("--beta2", a.beta2,
                        "squared amplitude of |010>; defaults to the symmetric (1-alpha2)/2");
    analyze->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    analyze->add_option("--out", a.out, "output file (default: stdout)");

    SweepOpts s;
    CLI::App* sweep =
        app.add_subcommand("sweep", "Sweep alpha^2 over a grid with beta = gamma and emit one "
                                    "record per point.");
    sweep->add_option("--from", s.from, "first alpha^2 value, in (0,1)")->required();
    sweep->add_option("--to", s.to, "last alpha^2 value, in (0,1)")->required();
    sweep->add_option("--steps", s.steps, "number of grid points (>= 2)")->required();
    sweep->add_option("--format", s.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", s.out, "output file (default: stdout)");
    sweep->add_option("--svg", s.svg, "also write a line chart of C and S_L vs alpha^2");
    sweep->add_option("--jobs", s.jobs, "worker threads (0 = hardware concurrency)");

    double tol = 1e-10;
    std::string thresholds_format = "text";
    CLI::App* thresholds = app.add_subcommand(
        "thresholds", "Locate the separability boundaries in alpha^2 by bisection and print "
                      "them next to their exact algebraic values.");
    thresholds->add_option("--tol", tol, "bisection bracket width (default 1e-10)");
    thresholds->add_option("--format", thresholds_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string table2_format = "text";
    CLI::App* table2 = app.add_subcommand(
        "table2", "Reproduce and audit the published mixedness/concurrence comparison table "
                  "(its source labels the only table 'TABLE 2'; there is no table 1). Each "
                  "published range is flagged CONFIRMED or ERRATUM against the simulation.");
    table2->add_option("--format", table2_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
        if (*analyze) {
            return run_analyze(a);
        }
        if (*sweep) {
            return run_sweep(s);
        }
        if (*thresholds) {
            return run_thresholds(tol, thresholds_format);
        }
        return run_table2(table2_format);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
