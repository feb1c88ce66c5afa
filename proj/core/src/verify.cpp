#include "grmirror/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grmirror/gelfand_cetlin.hpp"
#include "grmirror/mirror.hpp"
#include "grmirror/quantum.hpp"
#include "grmirror/schur.hpp"

namespace grmirror {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string exps_str(const RootSet& I) {
  std::string s = "{";
  for (std::size_t t = 0; t < I.exponents.size(); ++t) {
    if (t > 0) s += ",";
    s += std::to_string(I.exponents[t]);
  }
  return s + "}";
}

VerifyCheck check_eigenvectors(GridShape grid, int jobs) {
  VerifyCheck c{"pieri_eigenvectors", false, ""};
  const std::vector<int> failures = verify_all_schur_eigenvectors(grid, jobs);
  c.pass = failures.empty();
  if (!c.pass) {
    c.witness = "failing J index " + std::to_string(failures.front());
  }
  return c;
}

VerifyCheck check_three_route(GridShape grid) {
  VerifyCheck c{"schur_three_route", true, ""};
  const std::vector<YoungDiagram> diagrams = enumerate_diagrams(grid);
  const std::vector<RootSet> sets = quantum_rootsets(grid);
  const SchurEvaluator eval(grid);
  // Exhaustive on small grids, a deterministic stride otherwise.
  const bool exhaustive = grid.cells() <= 12;
  const std::size_t dstep = exhaustive ? 1 : std::max<std::size_t>(1, diagrams.size() / 8);
  const std::size_t jstep = exhaustive ? 1 : std::max<std::size_t>(1, sets.size() / 8);
  for (std::size_t ji = 0; ji < sets.size() && c.pass; ji += jstep) {
    const RootSet& J = sets[ji];
    const std::vector<CycInt> batch = eval.values(J);
    const CycInt v = vandermonde(J);
    for (std::size_t di = 0; di < diagrams.size() && c.pass; di += dstep) {
      const YoungDiagram& d = diagrams[di];
      // keep the tableau enumeration feasible on user-chosen large grids
      if (!exhaustive && hook_content_count(d, grid.k) > 200000) continue;
      const CycInt s1 = schur_ssyt(d, J);
      const CycInt s2 = schur_jacobi_trudi(d, J);
      const CycInt a = alternant(d, J);
      if (!(s1 - s2).is_zero() || !(a - v * s1).is_zero() || !(batch[di] - s1).is_zero()) {
        c.pass = false;
        c.witness = "d=" + to_text(d) + " J=" + exps_str(J);
      }
    }
  }
  if (!exhaustive && c.pass) c.witness = "strided sample";
  return c;
}

VerifyCheck check_pullback(GridShape grid) {
  VerifyCheck c{"pullback", verify_pullback(grid), ""};
  if (!c.pass) c.witness = "disk and chart potentials differ under theta";
  return c;
}

VerifyCheck check_face_count(GridShape grid) {
  const int expected = (grid.k - 1) * grid.cols() + grid.k * (grid.cols() - 1) + 2;
  const int got = static_cast<int>(codim1_faces(grid).size());
  VerifyCheck c{"face_count", got == expected, ""};
  if (!c.pass) {
    c.witness = "expected " + std::to_string(expected) + ", got " + std::to_string(got);
  }
  return c;
}

VerifyCheck check_equivariance(GridShape grid, int jobs) {
  const EquivarianceReport rep = verify_equivariance(grid, jobs);
  VerifyCheck c{"equivariance", rep.violations.empty(), ""};
  if (!c.pass) c.witness = rep.violations.front();
  return c;
}

VerifyCheck check_value_multiset(const BranesSummary& branes) {
  VerifyCheck c{"value_multiset", branes.value_multiset_match, ""};
  if (!c.pass) c.witness = "critical values do not match the eigenvalue multiset";
  return c;
}

VerifyCheck check_max_modulus_occupancy(const BranesSummary& branes) {
  VerifyCheck c{"max_modulus_occupancy", true, ""};
  const GridShape grid = branes.grid;
  RootSet orbit = mirror_closest_rootset(grid);
  std::map<std::vector<int>, int> expected;  // exponents -> rotation count
  for (int s = 0; s < grid.n; ++s) {
    expected.emplace(orbit.exponents, s);
    orbit = rotate(orbit);
  }
  int hit = 0;
  for (std::size_t g = 0; g < branes.spectral.groups.size(); ++g) {
    if (!branes.spectral.groups[g].max_modulus) continue;
    if (!branes.occupied[g]) {
      c.pass = false;
      c.witness = "max-modulus group without witness";
      return c;
    }
    for (const RootSet& I : branes.witnesses[g]) {
      if (expected.count(I.exponents) == 0) {
        c.pass = false;
        c.witness = "witness " + exps_str(I) + " is not a rotation of the closest set";
        return c;
      }
      ++hit;
    }
  }
  if (hit != grid.n) {
    c.pass = false;
    c.witness = "closest-set orbit does not cover all max-modulus groups";
  }
  return c;
}

VerifyCheck check_prime_membership(GridShape grid, int jobs) {
  VerifyCheck c{"prime_membership", true, ""};
  if (!is_prime(grid.n)) {
    c.witness = "n not prime, vacuous";
    return c;
  }
  const std::vector<ChartReport> reports = all_chart_reports(grid, jobs, true);
  for (const ChartReport& rep : reports) {
    if (!rep.member) {
      c.pass = false;
      c.witness = "non-member I=" + exps_str(rep.I);
      return c;
    }
  }
  return c;
}

VerifyCheck check_orbit_dichotomy(const BranesSummary& branes) {
  VerifyCheck c{"orbit_dichotomy", occupancy_is_orbit_closed(branes), ""};
  if (!c.pass) c.witness = "occupancy is not constant on a dihedral orbit";
  return c;
}

}  // namespace

VerifyReport verify_suite(GridShape grid, int jobs, double tol) {
  VerifyReport r;
  r.grid = grid;
  const BranesSummary branes = branes_summary(grid, jobs, tol);
  r.checks.push_back(check_eigenvectors(grid, jobs));
  r.checks.push_back(check_three_route(grid));
  r.checks.push_back(check_pullback(grid));
  r.checks.push_back(check_face_count(grid));
  r.checks.push_back(check_equivariance(grid, jobs));
  r.checks.push_back(check_value_multiset(branes));
  r.checks.push_back(check_max_modulus_occupancy(branes));
  r.checks.push_back(check_prime_membership(grid, jobs));
  r.checks.push_back(check_orbit_dichotomy(branes));
  r.all_pass = std::all_of(r.checks.begin(), r.checks.end(),
                           [](const VerifyCheck& c) { return c.pass; });
  return r;
}

std::string verify_to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["k"] = r.grid.k;
  j["n"] = r.grid.n;
  j["pass"] = r.all_pass;
  nlohmann::json checks = nlohmann::json::array();
  for (const VerifyCheck& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  j["checks"] = std::move(checks);
  return j.dump(2);
}

std::string verify_to_text(const VerifyReport& r) {
  std::ostringstream out;
  out << "Gr(" << r.grid.k << "," << r.grid.n << ") verification\n";
  for (const VerifyCheck& c : r.checks) {
    out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.witness.empty()) out << "  (" << c.witness << ")";
    out << "\n";
  }
  out << (r.all_pass ? "all checks passed" : "FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace grmirror
