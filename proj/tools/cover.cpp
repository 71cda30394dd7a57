// Copyright 2026 The unitcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cover: command-line front end.
//
// Exit status: 0 ok, 2 illegal move in a match, 1 anything else.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cover/adversaries.hpp"
#include "cover/bounds.hpp"
#include "cover/error.hpp"
#include "cover/harness.hpp"
#include "cover/lattice.hpp"
#include "cover/offline_opt.hpp"
#include "cover/online.hpp"

namespace {

using cover::MatchReport;
using json = nlohmann::ordered_json;

void finish_match(const MatchReport& report, const std::string& report_path, const std::string& svg_path) {
  if (!report_path.empty()) cover::write_report(report, report_path);
  if (!svg_path.empty()) cover::emit_svg(report, svg_path);
  std::cout << report.to_json().dump(2) << "\n";
  for (const std::string& w : report.warnings) std::cerr << "warning: " << w << "\n";
}

json clusters_json(const cover::OptResult& r) {
  json out = json::array();
  for (std::size_t i = 0; i < r.clusters.size(); ++i) {
    json c;
    c["points"] = r.clusters[i];
    c["center"] = std::vector<double>(r.balls[i].center.coords().begin(), r.balls[i].center.coords().end());
    c["radius"] = r.balls[i].radius;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online unit covering simulator"};
  app.require_subcommand(1);

  // run
  std::string algo, input, report_path, svg_path;
  bool no_opt = false;
  std::uint64_t algo_seed = 0;
  auto* run = app.add_subcommand("run", "Play an algorithm on a point file");
  run->add_option("--algo", algo, "centered, grid, lattice-square, lattice-hex, random")->required();
  run->add_option("--input", input, "Point file")->required();
  run->add_option("--report", report_path, "Write the JSON report here");
  run->add_option("--svg", svg_path, "Write a picture of the match (d = 2)");
  run->add_flag("--no-opt", no_opt, "Skip the exact optimum (needed above 22 points)");
  run->add_option("--seed", algo_seed, "Seed for the random algorithm");

  // duel
  std::string adversary;
  std::size_t dim = 2;
  auto* duel = app.add_subcommand("duel", "Play an algorithm against an adversary");
  duel->add_option("--algo", algo, "Algorithm id")->required();
  duel->add_option("--adversary", adversary, "planar4, simplex, plus2, lat-square, lat-hex")->required();
  duel->add_option("--dim", dim, "Dimension")->check(CLI::PositiveNumber);
  duel->add_option("--report", report_path, "Write the JSON report here");
  duel->add_option("--svg", svg_path, "Write a picture of the match (d = 2)");
  duel->add_option("--seed", algo_seed, "Seed for the random algorithm");

  // opt
  double radius = 1.0;
  auto* opt = app.add_subcommand("opt", "Exact offline optimum of a point file");
  opt->add_option("--input", input, "Point file")->required();
  opt->add_option("--radius", radius, "Ball radius")->check(CLI::PositiveNumber);

  // bounds
  int bounds_dim = 2;
  auto* bounds = app.add_subcommand("bounds", "Numeric bounds for one dimension");
  bounds->add_option("--dim", bounds_dim, "Dimension")->required()->check(CLI::PositiveNumber);

  // verify-partition
  std::string lattice;
  double search_radius = 6.0;
  auto* verify = app.add_subcommand("verify-partition", "Most groups one unit disk can touch");
  verify->add_option("--lattice", lattice, "square or hex")->required()->check(CLI::IsMember({"square", "hex"}));
  verify->add_option("--radius", search_radius, "Search radius")->check(CLI::PositiveNumber);

  // gen
  std::string kind, out_path;
  std::uint64_t seed = 0;
  std::optional<std::size_t> gen_n;
  std::size_t gen_dim = 2;
  double spread = 2.5;
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--kind", kind, "random, lattice-square, lattice-hex, pentagon, icosahedron")->required();
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("-o,--output", out_path, "Output point file")->required();
  gen->add_option("--n", gen_n, "Number of points (random kinds)");
  gen->add_option("--dim", gen_dim, "Dimension (random kind)")->check(CLI::PositiveNumber);
  gen->add_option("--spread", spread, "Sampling radius (random kinds)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*run) {
      const cover::PointSet ps = cover::parse_points(input);
      auto a = cover::make_algorithm(algo, ps.dim, algo_seed);
      cover::MatchLimits limits;
      limits.compute_opt = !no_opt;
      finish_match(cover::run_match(*a, ps.points, input, limits), report_path, svg_path);
    } else if (*duel) {
      auto a = cover::make_algorithm(algo, dim, algo_seed);
      auto x = cover::make_adversary(adversary, dim);
      finish_match(cover::run_match(*a, *x), report_path, svg_path);
    } else if (*opt) {
      const cover::PointSet ps = cover::parse_points(input);
      json j;
      j["input"] = input;
      j["dimension"] = ps.dim;
      j["n"] = ps.points.size();
      j["radius"] = radius;
      if (ps.points.empty()) {
        j["opt"] = 0;
        j["clusters"] = json::array();
      } else {
        const cover::OptResult r = cover::opt_cover_exact(ps.points, radius);
        j["opt"] = r.count;
        j["clusters"] = clusters_json(r);
      }
      std::cout << j.dump(2) << "\n";
    } else if (*bounds) {
      std::cout << cover::bounds_report(bounds_dim).dump(2) << "\n";
    } else if (*verify) {
      const cover::Lattice l = cover::parse_lattice(lattice);
      json j;
      j["lattice"] = lattice;
      j["radius"] = search_radius;
      j["max_groups"] = cover::verify_partition(l, search_radius);
      std::cout << j.dump(2) << "\n";
    } else if (*gen) {
      cover::InstanceParams params;
      params.n = gen_n;
      params.dim = gen_dim;
      params.spread = spread;
      const cover::PointSet ps = cover::generate_instance(kind, seed, params);
      cover::write_points(out_path, ps.dim, ps.points);
    }
  } catch (const std::exception& e) {
    const int status = cover::exit_status(e);
    std::cerr << (status == 2 ? "illegal move: " : "error: ") << e.what() << "\n";
    return status;
  }
  return 0;
}
