#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowsum/context.hpp"

namespace shadowsum::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kInput = 3, kDivergence = 4 };

struct RunConfig {
    std::string subcommand;  // eval, shadow, table, check, limit
    std::string input;
    std::string t = "minus-one";  // "minus-one", "re,im" or "root:r"
    double epsilon = 1e-10;
    long precision_bits = kDefaultPrecisionBits;
    int max_shells = 4000;
    int workers = 0;
    std::string output;  // empty: standard output
    bool human = false;
    std::vector<std::string> suites;  // check: empty means all
    std::vector<int> r_list{11, 21, 31, 41, 51};
};

// Parses --t. Throws UsageError on malformed text.
ScalarContext parse_scalar(const std::string& text, long precision_bits);

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Runs one subcommand, writing one JSON record per line (or the human
// rendering) to `out`. Errors become a single error record.
int run(const RunConfig& config, std::ostream& out);

// Argument parsing plus run(). Error records go to `out` as well.
int main(int argc, const char* const* argv, std::ostream& out);

}  // namespace shadowsum::cli
