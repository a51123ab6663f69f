#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cellform/io.hpp"

namespace cellform {

// Solves every manifest entry whose dataset file is present and prints a
// comparison table against the reported values, one row per record in
// manifest order. Missing datasets are SKIPPED. Per-problem wall times go
// on '#'-prefixed lines after the table so the body stays deterministic.
// Returns the number of problems solved.
int run_benchmark(const std::vector<ProblemRecord>& records, const std::string& base_dir,
                  const ImprovementParams& improvement, std::ostream& out);

}  // namespace cellform
