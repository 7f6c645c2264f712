#pragma once

#include <optional>
#include <string>
#include <vector>

// Numeric sweep tables with lossless CSV and JSON emission. Values are
// printed as the shortest decimal that round-trips binary64, so the two
// formats re-parse to bit-identical doubles.
namespace xxchain {

struct SweepTable {
  std::string command;
  std::optional<int> n;
  std::vector<int> sites;
  std::string observable;
  std::string notes;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // row size == columns size
};

std::string format_double(double v);

// Leading '#' meta comments, a header row, comma separators, LF endings.
std::string to_csv(const SweepTable& table);

// {"meta": {command, n, sites, observable, notes}, "rows": [[...], ...]}
std::string to_json(const SweepTable& table);

}  // namespace xxchain
