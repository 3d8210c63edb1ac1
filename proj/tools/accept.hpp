#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pcf::accept {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string json;    // machine-readable summary, byte-stable across reruns
    std::string detail;  // human-readable one-liner
};

/// Runs acceptance criteria 1..8 in order. `quick` shrinks the sampled
/// corpora for smoke runs; the full run is the release gate.
std::vector<CriterionResult> run_all(bool quick, std::ostream* progress = nullptr);

/// Prints one pass/fail line per criterion; returns true iff all pass.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace pcf::accept
