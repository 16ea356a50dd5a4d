#pragma once

#include <string>
#include <vector>

#include "seminest/dataset.hpp"
#include "seminest/placement.hpp"

namespace seminest {

struct RunReport {
  std::string dataset;
  double resolution = 0.0;
  std::vector<double> rotations;
  double length = 0.0;
  double wf_pct = 0.0;
  double ext_area = 0.0;
  double disc_ms = 0.0;   // mean over repetitions
  double place_ms = 0.0;  // mean over repetitions
  std::uint64_t checks = 0;
};

RunReport run_once(const Dataset& d, const SolverConfig& config);

// Every (R, rotation set) pair, each packed `repetitions` times with mean
// timings. Results other than timings are those of the first repetition.
std::vector<RunReport> bench(const Dataset& d, const std::vector<double>& resolutions,
                             const std::vector<std::vector<double>>& rotation_cases, int repetitions = 100,
                             const SolverConfig& base = {});

std::string csv_header();
std::string to_csv_row(const RunReport& r);
std::string to_csv(const std::vector<RunReport>& reports);
std::vector<RunReport> parse_csv(const std::string& text);

}  // namespace seminest
