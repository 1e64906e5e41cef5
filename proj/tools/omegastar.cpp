// omegastar.cpp
// CLI front end. Subcommands: moments, pairs, levels, density, class,
// repro. Exit codes: 0 ok, 1 usage, 2 budget/resource, 3 repro failure.

#include <CLI11.hpp>

#include <clocale>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "omegastar/run.hpp"

namespace {

using omegastar::u64;

// Bounds arrive as "1e6", "250000", "2.5e5"; all must be whole and >= 1.
u64 parse_bound(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == nullptr || *end != '\0' || !(v >= 1.0) || v > 1.1e18 ||
        v != std::floor(v))
        throw CLI::ValidationError("--x", "'" + s +
                                             "' is not a whole bound >= 1");
    return static_cast<u64>(v);
}

int emit(const omegastar::RunConfig& config) {
    std::string out;
    const int status = omegastar::run(config, out);
    if (config.output_path) {
        std::ofstream f(*config.output_path, std::ios::trunc);
        if (!f) {
            std::fprintf(stderr, "error: cannot open %s\n",
                         config.output_path->c_str());
            return 2;
        }
        f << out;
    } else {
        std::fputs(out.c_str(), stdout);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{
        "omegastar: shifted-prime divisor statistics "
        "(moments, pair sums, level sets, class densities)"};
    app.require_subcommand(1);

    omegastar::RunConfig config;
    std::vector<std::string> x_raw;
    std::string format = "csv";
    std::string scale = "small";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--x", x_raw,
                        "bound(s), repeatable; 1e6 notation accepted");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--threads", config.threads, "worker count");
        cmd->add_option("--segment-size", config.segment_size,
                        "sieve segment length");
        cmd->add_option("--out", config.output_path, "write output to a file");
        cmd->add_option("--digits", config.digits,
                        "significant digits (1..12)")
            ->check(CLI::Range(1, 12));
        return cmd;
    };

    auto* moments = add_common(app.add_subcommand(
        "moments", "M_k(x) = (1/x) sum omega*(n)^k via the sieve"));
    moments->add_option("--k", config.k, "moment order (1..4)");

    auto* pairs = add_common(app.add_subcommand(
        "pairs", "S_2 census, cal M_2, cal M'_2 and the tail"));
    pairs->add_option("--u", config.u, "also report M_2(x;u), the lcm sum "
                                       "restricted to u | lcm");

    auto* levels = add_common(app.add_subcommand(
        "levels", "level-set census, k_max, N(x,y)"));
    levels->add_option("--k", config.k, "tail cap (default 12)");
    levels->add_option("--y", config.y, "also report N(x,y)");

    auto* density = add_common(app.add_subcommand(
        "density", "exact T_n upper bound for a class density"));
    density->add_option("--u", config.u, "class representative (default 2)");
    density->add_option("--y", config.y,
                        "shifted-prime condition bound (required)");

    auto* cls = add_common(app.add_subcommand(
        "class", "divisor set, class minimum, empirical class density"));
    cls->add_option("--u", config.u, "class representative (default 2)");

    auto* repro = add_common(app.add_subcommand(
        "repro", "re-derive the published tables and verdict each anchor"));
    repro->add_option("--scale", scale, "small (seconds) or medium (minutes)")
        ->check(CLI::IsMember({"small", "medium"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (const auto& s : x_raw) config.x_list.push_back(parse_bound(s));
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    }
    config.format = format == "json" ? omegastar::OutputFormat::json
                                     : omegastar::OutputFormat::csv;
    config.scale = scale == "medium" ? omegastar::ReproScale::medium
                                     : omegastar::ReproScale::small;
    if (moments->parsed()) config.command = omegastar::Command::moments;
    if (pairs->parsed()) config.command = omegastar::Command::pairs;
    if (levels->parsed()) config.command = omegastar::Command::levels;
    if (density->parsed()) config.command = omegastar::Command::density;
    if (cls->parsed()) config.command = omegastar::Command::class_info;
    if (repro->parsed()) config.command = omegastar::Command::repro;

    return emit(config);
}
