#include "seminest/bench.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "seminest/metrics.hpp"

namespace seminest {

RunReport run_once(const Dataset& d, const SolverConfig& config) {
  const Layout layout = pack(d, config);
  RunReport r;
  r.dataset = d.name;
  r.resolution = config.resolution;
  r.rotations = config.rotations.empty() ? d.rotations : config.rotations;
  r.length = layout.length;
  r.wf_pct = wasted_fraction(layout, d);
  r.ext_area = layout_extension_area(layout, d, config.resolution);
  r.disc_ms = layout.disc_ms;
  r.place_ms = layout.place_ms;
  r.checks = layout.checks;
  return r;
}

std::vector<RunReport> bench(const Dataset& d, const std::vector<double>& resolutions,
                             const std::vector<std::vector<double>>& rotation_cases, int repetitions,
                             const SolverConfig& base) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");
  std::vector<RunReport> out;
  for (double res : resolutions) {
    for (const auto& rot : rotation_cases) {
      SolverConfig c = base;
      c.resolution = res;
      c.rotations = rot;
      RunReport first = run_once(d, c);
      double disc = first.disc_ms;
      double place = first.place_ms;
      for (int k = 1; k < repetitions; ++k) {
        const Layout l = pack(d, c);
        disc += l.disc_ms;
        place += l.place_ms;
      }
      first.disc_ms = disc / repetitions;
      first.place_ms = place / repetitions;
      out.push_back(std::move(first));
    }
  }
  return out;
}

std::string csv_header() { return "dataset,R,rotations,length,wf_pct,ext_area,disc_ms,place_ms,checks"; }

std::string to_csv_row(const RunReport& r) {
  std::string rot;
  char buf[64];
  for (std::size_t k = 0; k < r.rotations.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%s%.10g", k ? ";" : "", r.rotations[k]);
    rot += buf;
  }
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%.10g,%s,%.6f,%.4f,%.6f,%.3f,%.3f,%llu", r.resolution, rot.c_str(), r.length,
                r.wf_pct, r.ext_area, r.disc_ms, r.place_ms, static_cast<unsigned long long>(r.checks));
  os << r.dataset << ',' << line;
  return os.str();
}

std::string to_csv(const std::vector<RunReport>& reports) {
  std::string s = csv_header() + "\n";
  for (const auto& r : reports) s += to_csv_row(r) + "\n";
  return s;
}

std::vector<RunReport> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) throw std::runtime_error("unexpected CSV header");
  std::vector<RunReport> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw std::runtime_error("CSV row needs 9 fields: " + line);
    RunReport r;
    r.dataset = f[0];
    r.resolution = std::stod(f[1]);
    std::stringstream rs(f[2]);
    while (std::getline(rs, cell, ';')) r.rotations.push_back(std::stod(cell));
    r.length = std::stod(f[3]);
    r.wf_pct = std::stod(f[4]);
    r.ext_area = std::stod(f[5]);
    r.disc_ms = std::stod(f[6]);
    r.place_ms = std::stod(f[7]);
    r.checks = std::stoull(f[8]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace seminest
