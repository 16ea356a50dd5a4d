// Command line front end: pack, inspect and benchmark datasets.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "seminest/bench.hpp"
#include "seminest/kernels.hpp"
#include "seminest/metrics.hpp"
#include "seminest/oracle.hpp"
#include "seminest/render.hpp"
#include "seminest/search.hpp"

using namespace seminest;

namespace {

struct SolverArgs {
  std::string input;
  double resolution = 0.0;  // 0 means base resolution
  std::string rotations;
  double dtheta = 0.0;
  bool no_warm_start = false;
  std::string gap_closure = "all";
};

void add_solver_args(CLI::App* app, SolverArgs& a) {
  app->add_option("--input,-i", a.input, "dataset JSON")->required()->check(CLI::ExistingFile);
  app->add_option("--resolution,-r", a.resolution, "line spacing R (default: base resolution)");
  auto* rot = app->add_option("--rotations", a.rotations, "comma separated angles in degrees");
  app->add_option("--dtheta", a.dtheta, "rotation step in degrees")->excludes(rot);
  app->add_flag("--no-warm-start", a.no_warm_start, "start every copy at the strip origin");
  app->add_option("--gap-closure", a.gap_closure, "zero or all")->check(CLI::IsMember({"zero", "all"}));
}

std::vector<double> parse_angles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (!cell.empty()) out.push_back(std::stod(cell));
  }
  return out;
}

SolverConfig make_config(const Dataset& d, const SolverArgs& a) {
  SolverConfig c;
  if (!a.rotations.empty()) c.rotations = parse_angles(a.rotations);
  if (a.dtheta > 0.0) c.rotations = rotations_from_step(a.dtheta);
  c.warm_start = !a.no_warm_start;
  c.gap_closure = a.gap_closure == "zero" ? GapClosure::ZeroLengthOnly : GapClosure::AllInterior;
  const std::vector<double>& angles = c.rotations.empty() ? d.rotations : c.rotations;
  c.resolution = a.resolution > 0.0 ? a.resolution : base_resolution(d.pieces, angles);
  return c;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-discrete strip packing"};
  app.require_subcommand(1);
  std::string kernels;
  app.add_option("--kernels", kernels, "scalar, avx2 or neon")->check(CLI::IsMember({"scalar", "avx2", "neon"}));

  SolverArgs pack_args;
  std::string svg, report;
  auto* pack_cmd = app.add_subcommand("pack", "pack a dataset and print a report row");
  add_solver_args(pack_cmd, pack_args);
  pack_cmd->add_option("--svg", svg, "write the layout as SVG");
  pack_cmd->add_option("--report", report, "write the report CSV");

  SolverArgs disc_args;
  std::string piece_id;
  double angle = 0.0;
  auto* disc_cmd = app.add_subcommand("discretize", "print the columns of one piece");
  add_solver_args(disc_cmd, disc_args);
  disc_cmd->add_option("--piece", piece_id, "piece id (default: first)");
  disc_cmd->add_option("--angle", angle, "rotation in degrees");

  SolverArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "pack and audit the layout with exact geometry");
  add_solver_args(verify_cmd, verify_args);

  SolverArgs bench_args;
  std::string resolutions, cases = "none";
  int reps = 100;
  std::string bench_report;
  auto* bench_cmd = app.add_subcommand("bench", "timed repetitions over a resolution ladder");
  add_solver_args(bench_cmd, bench_args);
  bench_cmd->add_option("--resolutions", resolutions, "comma separated R values (default: base resolution)");
  bench_cmd->add_option("--cases", cases, "rotation cases separated by '/', e.g. none/0,180");
  bench_cmd->add_option("--reps", reps, "repetitions per case")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--report", bench_report, "write the report CSV");

  SolverArgs hc_args;
  SearchConfig search;
  std::string hc_svg;
  auto* hc_cmd = app.add_subcommand("hillclimb", "improve the order by hill climbing");
  add_solver_args(hc_cmd, hc_args);
  hc_cmd->add_option("--iterations", search.iterations)->check(CLI::NonNegativeNumber);
  hc_cmd->add_option("--seed", search.seed);
  hc_cmd->add_option("--svg", hc_svg, "write the best layout as SVG");

  SolverArgs render_args;
  std::string render_out;
  auto* render_cmd = app.add_subcommand("render", "pack and write SVG");
  add_solver_args(render_cmd, render_args);
  render_cmd->add_option("--output,-o", render_out, "SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!kernels.empty()) {
      const kernels::Isa isa = kernels == "avx2"   ? kernels::Isa::Avx2
                               : kernels == "neon" ? kernels::Isa::Neon
                                                   : kernels::Isa::Scalar;
      if (!kernels::select(isa)) {
        std::cerr << "kernel variant " << kernels << " is not available on this CPU\n";
        return 2;
      }
    }

    if (*pack_cmd) {
      const Dataset d = parse_dataset(pack_args.input);
      const SolverConfig c = make_config(d, pack_args);
      const RunReport r = run_once(d, c);
      std::cout << csv_header() << '\n' << to_csv_row(r) << '\n';
      if (!report.empty()) write_file(report, to_csv({r}));
      if (!svg.empty()) render_svg(pack(d, c), d, c.resolution, svg);
      return 0;
    }
    if (*disc_cmd) {
      const Dataset d = parse_dataset(disc_args.input);
      const SolverConfig c = make_config(d, disc_args);
      const Piece* p = &d.pieces.front();
      if (!piece_id.empty()) {
        p = nullptr;
        for (const auto& q : d.pieces) {
          if (q.id == piece_id) p = &q;
        }
        if (!p) {
          std::cerr << "no piece with id " << piece_id << '\n';
          return 2;
        }
      }
      std::cout << dump(semidiscretize(p->polygon, angle, c.resolution, c.gap_closure, p->id));
      return 0;
    }
    if (*verify_cmd) {
      const Dataset d = parse_dataset(verify_args.input);
      const SolverConfig c = make_config(d, verify_args);
      const Layout l = pack(d, c);
      const AuditReport a = verify_layout(l.placements, d, c.resolution, d.strip_width);
      std::cout << a.to_json(l.placements) << '\n';
      return a.ok() ? 0 : 1;
    }
    if (*bench_cmd) {
      const Dataset d = parse_dataset(bench_args.input);
      const SolverConfig c = make_config(d, bench_args);
      std::vector<double> rs = resolutions.empty() ? std::vector<double>{c.resolution} : parse_angles(resolutions);
      std::vector<std::vector<double>> rot_cases;
      std::stringstream ss(cases);
      std::string cell;
      while (std::getline(ss, cell, '/')) {
        rot_cases.push_back(cell == "none" ? std::vector<double>{0.0} : parse_angles(cell));
      }
      const auto reports = bench(d, rs, rot_cases, reps, c);
      const std::string csv = to_csv(reports);
      std::cout << csv;
      if (!bench_report.empty()) write_file(bench_report, csv);
      return 0;
    }
    if (*hc_cmd) {
      const Dataset d = parse_dataset(hc_args.input);
      const SolverConfig c = make_config(d, hc_args);
      std::cout << "iter,score,accepted\n";
      const SearchResult r = hill_climb(d, c, search, [](const SearchStep& s, const Layout&) {
        std::printf("%d,%.6f,%d\n", s.iter, s.score, s.accepted ? 1 : 0);
      });
      std::fprintf(stderr, "greedy %.6f best %.6f\n", r.initial_score, r.best.score);
      if (!hc_svg.empty()) render_svg(r.layout, d, c.resolution, hc_svg);
      return 0;
    }
    if (*render_cmd) {
      const Dataset d = parse_dataset(render_args.input);
      const SolverConfig c = make_config(d, render_args);
      render_svg(pack(d, c), d, c.resolution, render_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
