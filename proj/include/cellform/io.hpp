#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cellform/solver.hpp"

namespace cellform {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incidence file: '#' comment lines, then "m n", then m rows of n 0/1
// tokens. Invariant violations are reported with their line number.
IncidenceMatrix parse_incidence(std::istream& in);

// Canonical serialization; parse_incidence inverts it.
void write_incidence(const IncidenceMatrix& matrix, std::ostream& out);

struct ProblemRecord {
    std::string name;
    std::string size;    // e.g. "5x7"
    std::string source;  // citation label
    std::string path;    // dataset file, relative to the manifest
    std::optional<double> reported_best;    // tau percentage from literature
    std::optional<double> reported_hybrid;  // tau percentage of the hybrid method
};

// Manifest: one record per line, whitespace-separated
//   name size source path reported_best reported_hybrid
// with '-' for absent values; '#' starts a comment.
std::vector<ProblemRecord> load_manifest(std::istream& in);

enum class ReportFormat { text, json };

void write_report(const IncidenceMatrix& matrix, const SolveReport& report, ReportFormat format,
                  std::ostream& out);

// Plain (m-1) x 3 linkage table "left right level" for external plotting.
void write_dendrogram(const LinkageTree& tree, std::ostream& out);

}  // namespace cellform
