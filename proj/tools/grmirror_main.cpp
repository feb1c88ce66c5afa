#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grmirror/gelfand_cetlin.hpp"
#include "grmirror/mirror.hpp"
#include "grmirror/parallel.hpp"
#include "grmirror/quantum.hpp"
#include "grmirror/render.hpp"
#include "grmirror/verify.hpp"

namespace {

using namespace grmirror;

struct Options {
  int k = 0;
  int n = 0;
  std::string format = "text";
  std::string out;
  int jobs = default_jobs();
  double tol = 1e-9;
};

void add_common(CLI::App* cmd, Options& opt, bool svg_allowed) {
  cmd->add_option("--k", opt.k, "rows of the Grassmannian grid")->required();
  cmd->add_option("--n", opt.n, "ambient dimension")->required();
  const std::vector<std::string> formats =
      svg_allowed ? std::vector<std::string>{"text", "json", "svg"}
                  : std::vector<std::string>{"text", "json"};
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember(formats));
  cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
  cmd->add_option("--jobs", opt.jobs, "parallelism degree over root sets")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", opt.tol, "tolerance for float-side comparisons");
}

GridShape parse_grid(const Options& opt) {
  const GridShape grid{opt.k, opt.n};
  if (!grid.valid()) {
    throw CLI::ValidationError("--k/--n", "need 1 <= k < n");
  }
  return grid;
}

int emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << opt.out << "\n";
    return 1;
  }
  f << payload;
  return 0;
}

std::string potential_text(GridShape grid) {
  std::string out;
  out += "disk potential:  " + disk_potential(grid).to_text() + "\n";
  out += "chart potential: " + chart_potential(grid).to_text() + "\n";
  out += "substitution:\n";
  const auto images = theta_substitution(grid);
  const auto xreg = disk_registry(grid);
  const auto preg = chart_registry(grid);
  for (int v = 0; v < xreg->size(); ++v) {
    std::string image;
    for (int t = 0; t < preg->size(); ++t) {
      const int e = images[static_cast<std::size_t>(v)].exponents[static_cast<std::size_t>(t)];
      if (e == 0) continue;
      if (!image.empty()) image += " * ";
      image += preg->name(t);
      if (e != 1) image += "^" + std::to_string(e);
    }
    if (image.empty()) image = "1";
    out += "  " + xreg->name(v) + " -> " + image + "\n";
  }
  out += std::string("pullback identity: ") + (verify_pullback(grid) ? "holds" : "FAILS") + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial mirror-symmetry data of Grassmannians Gr(k,n)"};
  app.require_subcommand(1);

  Options flower_opt;
  CLI::App* flower = app.add_subcommand("flower", "eigenvalues of c1* on QH(Gr(k,n))");
  add_common(flower, flower_opt, true);

  Options branes_opt;
  CLI::App* branes = app.add_subcommand("branes", "eigenvalue summands carrying torus objects");
  add_common(branes, branes_opt, true);

  Options verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite for one grid");
  add_common(verify, verify_opt, false);

  Options potential_opt;
  CLI::App* potential = app.add_subcommand("potential", "disk and chart potentials with the substitution table");
  add_common(potential, potential_opt, false);

  try {
    app.parse(argc, argv);

    if (flower->parsed()) {
      const GridShape grid = parse_grid(flower_opt);
      const SpectralSummary s = spectral_decomposition(grid, flower_opt.tol);
      if (flower_opt.format == "json") return emit(flower_opt, spectral_to_json(s) + "\n");
      if (flower_opt.format == "svg") return emit(flower_opt, render_flower_svg(s));
      return emit(flower_opt, render_flower_text(s));
    }
    if (branes->parsed()) {
      const GridShape grid = parse_grid(branes_opt);
      const BranesSummary b = branes_summary(grid, branes_opt.jobs, branes_opt.tol);
      if (branes_opt.format == "json") return emit(branes_opt, branes_to_json(b) + "\n");
      if (branes_opt.format == "svg") return emit(branes_opt, render_branes_svg(b));
      return emit(branes_opt, render_branes_text(b));
    }
    if (verify->parsed()) {
      const GridShape grid = parse_grid(verify_opt);
      const VerifyReport r = verify_suite(grid, verify_opt.jobs, verify_opt.tol);
      const int rc = emit(verify_opt, verify_opt.format == "json" ? verify_to_json(r) + "\n"
                                                                  : verify_to_text(r));
      if (rc != 0) return rc;
      return r.all_pass ? 0 : 2;
    }
    if (potential->parsed()) {
      const GridShape grid = parse_grid(potential_opt);
      return emit(potential_opt, potential_opt.format == "json" ? potential_to_json(grid) + "\n"
                                                                : potential_text(grid));
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
