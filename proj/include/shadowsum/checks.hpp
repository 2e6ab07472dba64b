#pragma once

#include <string>
#include <vector>

#include "shadowsum/diagram.hpp"
#include "shadowsum/laurent.hpp"
#include "shadowsum/statesum.hpp"

namespace shadowsum {

// State sum of a diagram on a surface with boundary as an exact rational
// function of s. Face phases with an odd power of i are collected per coloring,
// so odd twice-gleams are fine as long as each term's total phase is real.
RatFunc bracket_state_sum(const Shadow& s);

// f at s = i; PreconditionViolated if the value is not real.
Rational value_at_i(const RatFunc& f);
// f at a given s.
Complex value_at(const RatFunc& f, const Complex& s);

// Identity suites behind the `check` subcommand.
struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    long cases = 0;
    double residual = 0;  // largest observed error, 0 for exact comparisons
    std::string detail;
};

// fusion, recoupling, tet_symmetry, fundamental, oracle, reidemeister
std::vector<std::string> check_suite_names();
std::vector<CheckResult> run_check_suite(const std::string& suite, const EvalOptions& opt = {});

}  // namespace shadowsum
