#pragma once

#include <string>
#include <vector>

#include "irfield/run.hpp"

namespace irfield {

// One pinned end-to-end output: a run configuration plus the csv file the
// repository stores for it. column_rel_tol has one entry per table column;
// a negative entry marks a text column compared byte-for-byte, a value >= 0
// is the relative tolerance for that numeric column.
struct GoldenCase {
  std::string name;
  RunConfig config;
  std::string file;
  std::vector<double> column_rel_tol;
};

std::vector<GoldenCase> golden_cases();

// Re-run each case whose name starts with `filter` (all when empty) and
// rewrite the stored file under `dir`. Returns the number of files written.
int regenerate_goldens(const std::string& dir, const std::string& filter = "");

}  // namespace irfield
