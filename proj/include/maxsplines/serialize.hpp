#pragma once

#include <string>
#include <vector>

#include "maxsplines/analysis.hpp"
#include "maxsplines/circulant.hpp"
#include "maxsplines/symbols.hpp"

namespace maxsplines {

// Shortest round-trip decimal representation (std::to_chars); deterministic
// and parses back to the identical double.
std::string format_double(double v);

// CSV with a mandatory header row, '.' decimal separator, ',' field
// separator.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

std::string reports_to_csv(const std::vector<BoundReport>& reports);
std::string reports_to_json(const std::vector<BoundReport>& reports);

// {"n": ..., "col": [...]}
std::string circulant_to_json(const Circulant& c);
// dense row-major CSV (row, col, value free form): header row,col,value
std::string dense_to_csv(const DenseMatrix& m);

// {p, n, h, convention, symbols: {mass, stiffness, rho_per_frequency}, q}
std::string symbols_to_json(const TwoGridReport& report);

// Write atomically: temp file in the same directory, then rename.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace maxsplines
