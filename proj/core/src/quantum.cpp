#include "grmirror/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "grmirror/parallel.hpp"

namespace grmirror {

PieriMatrix::PieriMatrix(GridShape grid) : grid_(grid), diagrams_(enumerate_diagrams(grid)) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < diagrams_.size(); ++i) {
    index.emplace(diagrams_[i].rows(), static_cast<int>(i));
  }
  columns_.resize(diagrams_.size());
  rows_.resize(diagrams_.size());
  for (std::size_t d = 0; d < diagrams_.size(); ++d) {
    const PieriExpansion exp = pieri_expand(diagrams_[d]);
    std::vector<int>& col = columns_[d];
    for (const YoungDiagram& t : exp.classical) col.push_back(index.at(t.rows()));
    if (exp.quantum) col.push_back(index.at(exp.quantum->rows()));
    std::sort(col.begin(), col.end());
    for (int r : col) rows_[static_cast<std::size_t>(r)].push_back(static_cast<int>(d));
  }
}

bool PieriMatrix::entry(int row, int col) const {
  const std::vector<int>& c = columns_[static_cast<std::size_t>(col)];
  return std::binary_search(c.begin(), c.end(), row);
}

std::vector<CycInt> PieriMatrix::apply(const std::vector<CycInt>& v) const {
  if (v.size() != diagrams_.size()) throw std::invalid_argument("PieriMatrix::apply: size mismatch");
  const int order = v.front().order();
  std::vector<CycInt> out(v.size(), CycInt(order));
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (int d : rows_[r]) out[r] += v[static_cast<std::size_t>(d)];
  }
  return out;
}

int quantum_sign(GridShape grid) { return grid.k % 2 == 0 ? -1 : +1; }

std::vector<RootSet> quantum_rootsets(GridShape grid) {
  return enumerate_rootsets(grid.n, grid.k, quantum_sign(grid));
}

CycInt closed_form_eigenvalue(GridShape grid, const RootSet& J) {
  if (J.n != grid.n || J.size() != grid.k || J.sign != quantum_sign(grid)) {
    throw std::invalid_argument("closed_form_eigenvalue: J must be k roots of x^n = (-1)^(k+1)");
  }
  CycInt sum(J.order());
  for (int e : J.exponents) sum.add_term(e, 1);
  return sum * CycInt::integer(J.order(), grid.n);
}

std::vector<CycInt> schur_vector(const SchurEvaluator& eval, const RootSet& J) {
  std::vector<CycInt> v = eval.values(J);
  for (CycInt& c : v) c = c.conj();
  return v;
}

namespace {

bool eigenvector_holds(const PieriMatrix& pieri, const SchurEvaluator& eval, const RootSet& J) {
  const std::vector<CycInt> v = schur_vector(eval, J);
  const std::vector<CycInt> lhs = pieri.apply(v);
  CycInt s_box(J.order());
  for (int e : J.exponents) s_box.add_term(e, 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(lhs[i] - s_box * v[i]).is_zero()) return false;
  }
  return true;
}

}  // namespace

bool verify_schur_eigenvector(GridShape grid, const RootSet& J) {
  const PieriMatrix pieri(grid);
  const SchurEvaluator eval(grid);
  return eigenvector_holds(pieri, eval, J);
}

std::vector<int> verify_all_schur_eigenvectors(GridShape grid, int jobs) {
  const PieriMatrix pieri(grid);
  const SchurEvaluator eval(grid);
  const std::vector<RootSet> sets = quantum_rootsets(grid);
  std::vector<char> ok(sets.size(), 0);
  parallel_for(jobs, sets.size(), [&](std::size_t i) {
    ok[i] = eigenvector_holds(pieri, eval, sets[i]) ? 1 : 0;
  });
  std::vector<int> failures;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!ok[i]) failures.push_back(static_cast<int>(i));
  }
  return failures;
}

SpectralSummary spectral_decomposition(GridShape grid, double tol) {
  const std::vector<RootSet> sets = quantum_rootsets(grid);
  std::map<std::vector<BigInt>, SpectralGroup> groups;
  for (const RootSet& J : sets) {
    CycInt lambda = closed_form_eigenvalue(grid, J);
    auto [it, inserted] = groups.try_emplace(lambda.canonical());
    if (inserted) {
      it->second.eigenvalue = std::move(lambda);
    }
    it->second.members.push_back(J);
    ++it->second.multiplicity;
  }
  SpectralSummary out;
  out.grid = grid;
  for (auto& [key, g] : groups) {
    g.value = g.eigenvalue.to_complex();
    g.modulus = std::abs(g.value);
    out.max_modulus = std::max(out.max_modulus, g.modulus);
    out.groups.push_back(std::move(g));
  }
  int max_count = 0;
  for (SpectralGroup& g : out.groups) {
    g.max_modulus = g.modulus > out.max_modulus - tol;
    if (g.max_modulus) {
      ++max_count;
      if (g.multiplicity != 1) {
        throw std::logic_error("spectral_decomposition: max-modulus eigenvalue with multiplicity > 1");
      }
    }
  }
  if (max_count != grid.n) {
    throw std::logic_error("spectral_decomposition: expected n max-modulus eigenvalues");
  }
  auto is_prime = [](int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  };
  if (is_prime(grid.n)) {
    for (const SpectralGroup& g : out.groups) {
      if (g.multiplicity != 1) {
        throw std::logic_error("spectral_decomposition: multiple eigenvalue for prime n");
      }
    }
  }
  std::sort(out.groups.begin(), out.groups.end(), [](const SpectralGroup& a, const SpectralGroup& b) {
    if (a.modulus != b.modulus) return a.modulus > b.modulus;
    const double arga = std::atan2(a.value.imag(), a.value.real());
    const double argb = std::atan2(b.value.imag(), b.value.real());
    return arga < argb;
  });
  return out;
}

std::string spectral_to_json(const SpectralSummary& s) {
  nlohmann::json j;
  j["k"] = s.grid.k;
  j["n"] = s.grid.n;
  nlohmann::json eigenvalues = nlohmann::json::array();
  for (const SpectralGroup& g : s.groups) {
    nlohmann::json je;
    je["re"] = g.value.real();
    je["im"] = g.value.imag();
    je["modulus"] = g.modulus;
    je["multiplicity"] = g.multiplicity;
    je["max_modulus"] = g.max_modulus;
    nlohmann::json sets = nlohmann::json::array();
    for (const RootSet& J : g.members) sets.push_back(J.exponents);
    je["root_sets"] = std::move(sets);
    eigenvalues.push_back(std::move(je));
  }
  j["eigenvalues"] = std::move(eigenvalues);
  return j.dump(2);
}

}  // namespace grmirror
