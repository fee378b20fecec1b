/*
   Copyright 2026 The symmpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "symmpoly/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symmpoly/ensemble.hpp"
#include "symmpoly/error.hpp"
#include "symmpoly/monte_carlo.hpp"
#include "symmpoly/polygon_io.hpp"
#include "symmpoly/tv_bounds.hpp"
#include "symmpoly/verify.hpp"

namespace symmpoly {
namespace {

constexpr std::uint64_t kDefaultSeed = 7;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes `text` to `path`, or to `out` when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::Domain, "cannot open '" + path + "' for writing");
  file << text;
  if (!file) fail(ErrorKind::Domain, "failed writing '" + path + "'");
}

std::vector<EnsembleFunctional> default_functionals(Space space) {
  std::vector<EnsembleFunctional> f{builtin_functional("total_curvature"), builtin_functional("theta_1")};
  if (dimension(space) == 3) {
    f.push_back(builtin_functional("total_torsion"));
    f.push_back(builtin_functional("tau_1"));
  }
  return f;
}

Space space_of(const Polygon& p) {
  if (p.dim() == 2) return p.closed() ? Space::pol2 : Space::arm2;
  return p.closed() ? Space::pol3 : Space::arm3;
}

Space counterpart(Space s) {
  switch (s) {
    case Space::arm2: return Space::pol2;
    case Space::pol2: return Space::arm2;
    case Space::arm3: return Space::pol3;
    case Space::pol3: return Space::arm3;
  }
  return s;
}

EnsembleValues evaluate_stored(const std::vector<Polygon>& polygons,
                               const std::vector<EnsembleFunctional>& functionals) {
  const auto width = static_cast<Eigen::Index>(functionals.size());
  std::vector<Eigen::RowVectorXd> rows;
  EnsembleValues v;
  v.requested = polygons.size();
  for (const auto& p : polygons) {
    Eigen::RowVectorXd row(width);
    try {
      for (Eigen::Index j = 0; j < width; ++j) row[j] = functionals[static_cast<std::size_t>(j)].eval(p);
      rows.push_back(row);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateEdge && e.kind() != ErrorKind::DegenerateTorsion) throw;
      ++v.excluded;
    }
  }
  if (static_cast<double>(v.excluded) > kMaxExcludedFraction * static_cast<double>(v.requested)) {
    fail(ErrorKind::Reliability, std::to_string(v.excluded) + " stored polygons are degenerate");
  }
  v.values.resize(static_cast<Eigen::Index>(rows.size()), width);
  for (std::size_t i = 0; i < rows.size(); ++i) v.values.row(static_cast<Eigen::Index>(i)) = rows[i];
  return v;
}

std::string bound_row(BoundFamily family, int k, int n) {
  const BoundEvaluation e = evaluate_bound(family, {{"k", k}, {"n", n}});
  if (!e.valid()) {
    fail(ErrorKind::BoundUndefined, std::string(to_string(family)) + " undefined at k=" + std::to_string(k) +
                                        ", n=" + std::to_string(n));
  }
  return std::string(to_string(family)) + "," + std::to_string(k) + "," + std::to_string(n) + "," +
         format_double(*e.value) + "," + format_double(*e.clipped()) + "," +
         (e.asymptote_coeff ? format_double(*e.asymptote_coeff) : std::string()) + "\n";
}

// CLI11 writes defaults into the bound variables when options are declared,
// so each subcommand gets its own copies of the shared flags.
struct Options {
  std::string space;
  std::string against;
  long n = 0;
  long count = 0;
  int k = 0;
  int dim = 2;
  int bins = 12;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  std::string out;
  std::string in;
  std::string grid;
  std::string level = "desk";
  std::string format = "jsonl";
  int criterion = 0;
  std::vector<std::string> functionals;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random polygons from the symmetric measure: sampling, statistics and bounds.", "symmpoly"};
  app.require_subcommand(1);
  Options os, ost, ot, ob, ov, od;
  const auto spaces = CLI::IsMember({"arm2", "pol2", "arm3", "pol3"});

  auto add_common = [](CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    cmd->add_option("--workers", o.workers, "Worker threads (output does not depend on it)")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "Output path (default stdout)");
  };

  auto* sample = app.add_subcommand("sample", "Sample polygons as JSONL (or CSV edges)");
  sample->add_option("--space", os.space, "Polygon space")->required()->check(spaces);
  sample->add_option("--n", os.n, "Edges")->required()->check(CLI::Range(3L, 100'000'000L));
  sample->add_option("--count", os.count, "Polygons")->default_val(1)->check(CLI::Range(1L, 1'000'000'000L));
  sample->add_option("--format", os.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
  add_common(sample, os);

  auto* stats = app.add_subcommand("stats", "Moments of functionals over a sampled or stored ensemble");
  stats->add_option("--space", ost.space, "Polygon space")->check(spaces);
  stats->add_option("--n", ost.n, "Edges")->check(CLI::Range(3L, 100'000'000L));
  stats->add_option("--count", ost.count, "Samples")->default_val(10'000)->check(CLI::Range(2L, 1'000'000'000L));
  stats->add_option("--functional", ost.functionals,
                    "total_curvature, total_torsion, theta_<i> or tau_<i> (repeatable)");
  stats->add_option("--in", ost.in, "Read polygons from a JSONL file instead of sampling");
  add_common(stats, ost);

  auto* tv = app.add_subcommand("tv", "Binned total variation between k-segment marginals");
  tv->add_option("--space", ot.space, "First space")->default_val("pol2")->check(spaces);
  tv->add_option("--against", ot.against, "Second space (default: the other space of the same dimension)")
      ->check(spaces);
  tv->add_option("--n", ot.n, "Edges")->default_val(100)->check(CLI::Range(3L, 100'000'000L));
  tv->add_option("--k", ot.k, "Segment length")->default_val(1)->check(CLI::Range(1, 1'000'000));
  tv->add_option("--count", ot.count, "Samples per space")->default_val(400'000)->check(CLI::Range(2L, 1'000'000'000L));
  tv->add_option("--bins", ot.bins, "Bins per axis")->capture_default_str()->check(CLI::Range(4, 1'000'000));
  tv->add_option("--grid", ot.grid, "Also write cell frequencies to this CSV");
  add_common(tv, ot);

  auto* bounds = app.add_subcommand("bounds", "Evaluate b2 or b3");
  bounds->add_option("--dim", ob.dim, "2 or 3")->capture_default_str()->check(CLI::IsMember({2, 3}));
  bounds->add_option("--k", ob.k, "Segment length (default: every valid k)");
  bounds->add_option("--n", ob.n, "Edges")->required();
  bounds->add_option("--out", ob.out, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--level", ov.level, "desk or deep")->check(CLI::IsMember({"desk", "deep"}))->capture_default_str();
  verify->add_option("--criterion", ov.criterion, "Run a single criterion")->check(CLI::Range(1, kCriterionCount));
  add_common(verify, ov);

  auto* density = app.add_subcommand("density-check", "Validate the matrix densities");
  density->add_option("--count", od.count, "Sampled blocks per check")->default_val(100'000)->check(CLI::Range(2L, 1'000'000'000L));
  add_common(density, od);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "symmpoly: " << e.what() << "\n";
    return 2;
  }

  try {
    const Options& o = sample->parsed()  ? os
                       : stats->parsed() ? ost
                       : tv->parsed()    ? ot
                       : bounds->parsed() ? ob
                       : verify->parsed() ? ov
                                          : od;
    const EnsembleOptions options{o.workers};
    std::ostringstream text;
    int status = 0;

    if (sample->parsed()) {
      const Space space = parse_space(o.space);
      const auto polygons = sample_ensemble(space, o.n, static_cast<std::size_t>(o.count),
                                            ensemble_stream(o.seed, space, o.n), options);
      if (o.format == "jsonl") {
        write_ensemble(text, polygons);
      } else {
        text << "polygon,edge,x,y" << (dimension(space) == 3 ? ",z" : "") << "\n";
        for (std::size_t i = 0; i < polygons.size(); ++i) {
          for (Eigen::Index e = 0; e < polygons[i].n(); ++e) {
            text << i << ',' << e;
            for (int d = 0; d < polygons[i].dim(); ++d) text << ',' << format_double(polygons[i].edge(e)[d]);
            text << '\n';
          }
        }
      }
    } else if (stats->parsed()) {
      std::vector<EnsembleFunctional> functionals;
      for (const auto& name : o.functionals) functionals.push_back(builtin_functional(name));
      if (!o.in.empty()) {
        const auto polygons = read_ensemble(o.in);
        if (polygons.size() < 2) fail(ErrorKind::InvalidSize, "stats needs at least two stored polygons");
        const Space space = space_of(polygons.front());
        for (const auto& p : polygons) {
          if (space_of(p) != space || p.n() != polygons.front().n()) {
            fail(ErrorKind::Parse, "stored polygons mix spaces or sizes");
          }
        }
        if (functionals.empty()) functionals = default_functionals(space);
        write_summary_csv(text, summarize(space, polygons.front().n(), o.seed,
                                          evaluate_stored(polygons, functionals), functionals));
      } else {
        if (o.space.empty() || o.n == 0) fail(ErrorKind::Domain, "stats needs --space and --n, or --in");
        const Space space = parse_space(o.space);
        if (functionals.empty()) functionals = default_functionals(space);
        write_summary_csv(text, run_ensemble(space, o.n, static_cast<std::size_t>(o.count), functionals, o.seed,
                                             options));
      }
    } else if (tv->parsed()) {
      const Space a = parse_space(o.space);
      const Space b = o.against.empty() ? counterpart(a) : parse_space(o.against);
      const GridHistogram g = estimate_tv(a, b, o.n, o.k, static_cast<std::size_t>(o.count), o.bins, o.seed, options);
      text << "space_a,space_b,n,k,N,bins,cells,tv_estimate,null_calibration,tv_std_error\n"
           << to_string(a) << ',' << to_string(b) << ',' << o.n << ',' << o.k << ',' << g.N << ',' << o.bins << ','
           << g.cells() << ',' << format_double(g.tv_estimate) << ',' << format_double(g.null_calibration) << ','
           << format_double(g.tv_std_error) << '\n';
      if (!o.grid.empty()) {
        std::ostringstream cells;
        write_grid_csv(cells, g);
        emit(cells.str(), o.grid, out);
      }
    } else if (bounds->parsed()) {
      const BoundFamily family = o.dim == 2 ? BoundFamily::b2 : BoundFamily::b3;
      const int n = static_cast<int>(o.n);
      text << "family,k,n,value,clipped,asymptote_coeff\n";
      if (o.k != 0) {
        text << bound_row(family, o.k, n);
      } else {
        if (n < 6) fail(ErrorKind::BoundUndefined, "no valid k for n = " + std::to_string(n));
        for (int k = 1; k + 5 <= n; ++k) text << bound_row(family, k, n);
      }
    } else if (verify->parsed()) {
      VerifyConfig config{parse_level(o.level), o.seed, o.workers, std::nullopt};
      if (o.criterion != 0) config.criterion = o.criterion;
      const auto checks = run_acceptance(config);
      write_checks_csv(text, checks);
      status = all_passed(checks) ? 0 : 1;
    } else if (density->parsed()) {
      const auto checks = density_checks(o.seed, static_cast<std::size_t>(o.count), o.workers);
      write_checks_csv(text, checks);
      status = all_passed(checks) ? 0 : 1;
    }
    emit(text.str(), o.out, out);
    return status;
  } catch (const Error& e) {
    err << "symmpoly: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace symmpoly
