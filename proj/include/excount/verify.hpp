// Verification suites behind the `verify` subcommand.  Each suite re-derives
// a family of identities by exhaustive computation and reports exact
// expected/actual pairs; `all` chains every suite.  Worker count changes
// scheduling only, never results.
#pragma once

#include <string>
#include <vector>

#include "excount/report.hpp"

namespace excount {

struct VerifyOptions {
    int nmax = 5;   // largest A_n rank exercised
    int hmax = 12;  // largest cycle size for the brute-force identities
    int jobs = 1;
    bool timing = false;
};

// Orientation sets used throughout: every orientation for n <= 5, the linear
// and one mixed orientation at n = 6, linear only beyond.
std::vector<std::string> a_orientation_specs(int n);
std::vector<std::string> d4_orientation_specs();
// Same diagram with every arrow reversed.
std::string opposite_spec(const std::string& spec);

Report verify_cycle(const VerifyOptions& opt);
Report verify_excseq(const VerifyOptions& opt);
Report verify_prob(const VerifyOptions& opt);
Report verify_gfrec(const VerifyOptions& opt);
Report verify_forests(const VerifyOptions& opt);

// cycle, excseq, prob, gfrec, forests, in that order
std::vector<Report> verify_all(const VerifyOptions& opt);

}  // namespace excount
