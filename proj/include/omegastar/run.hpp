// run.hpp
// Command execution for the CLI: a parsed RunConfig in, an emitted table
// (CSV or JSON) plus an exit status out. Lives in the library so the whole
// surface is testable without spawning processes.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omegastar/report.hpp"
#include "omegastar/util.hpp"

namespace omegastar {

enum class Command { moments, pairs, levels, density, class_info, repro };
enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::moments;
    std::vector<u64> x_list;
    int k = 0;                  // moment order / level cap; 0 = command default
    u64 u = 0;                  // restriction modulus / class representative
    double y = 0;               // threshold (n_count, condition bound)
    OutputFormat format = OutputFormat::csv;
    int threads = 0;            // 0 = library default
    u64 segment_size = 0;       // 0 = default
    std::optional<std::string> output_path;
    int digits = 6;
    ReproScale scale = ReproScale::small;
};

// exit status: 0 ok, 1 bad arguments, 2 budget/resource, 3 repro failure.
// The emitted table (or repro report) is appended to `out`.
int run(const RunConfig& config, std::string& out);

}  // namespace omegastar
