#pragma once

#include <string>
#include <vector>

#include "io.hpp"

namespace modpovm::cli {

struct TableOptions {
  int max_dim = 7;
  SearchBudget budget;
  // Print per-class progress to stderr.
  bool verbose = false;
};

struct ReferenceGroup {
  std::string name;  // display name
  size_t pp;
};

struct ReferenceRow {
  int dim;
  std::string dims;
  std::vector<ReferenceGroup> subgroups;
  size_t external_pp;     // pp of a non-modular construction, 0 if none
  std::string geometry;   // as printed in the reference
  std::vector<std::string> labels;  // recognizer labels that should appear
};

const std::vector<ReferenceRow>& reference_rows();

// Rows {d, dims, subgroups, pp, geometry} for d = 2..max_dim, each with the
// matching reference row and the list of discrepancies. Sets *truncated
// when any group enumeration hit the element cap.
Json build_table(const TableOptions& opt, bool* truncated);
std::string table_text(const Json& table);

}  // namespace modpovm::cli
