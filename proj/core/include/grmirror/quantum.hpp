#pragma once

#include <complex>
#include <string>
#include <vector>

#include "grmirror/cyclotomic.hpp"
#include "grmirror/schur.hpp"
#include "grmirror/young.hpp"

namespace grmirror {

/// Matrix of quantum multiplication by the one-box Schubert class, in the
/// diagram basis of enumerate_diagrams; 0/1 entries, entry (d', d) = 1 iff
/// d' appears in the Pieri expansion of d. Stored sparsely by column.
/// Built once and read-only afterwards.
class PieriMatrix {
 public:
  explicit PieriMatrix(GridShape grid);

  const GridShape& grid() const { return grid_; }
  const std::vector<YoungDiagram>& diagrams() const { return diagrams_; }
  int dimension() const { return static_cast<int>(diagrams_.size()); }
  /// Row indices of the ones in column d.
  const std::vector<int>& column(int d) const { return columns_[static_cast<std::size_t>(d)]; }
  bool entry(int row, int col) const;

  /// Matrix-vector product over Z[zeta].
  std::vector<CycInt> apply(const std::vector<CycInt>& v) const;

 private:
  GridShape grid_;
  std::vector<YoungDiagram> diagrams_;
  std::vector<std::vector<int>> columns_;
  std::vector<std::vector<int>> rows_;  // transpose adjacency, for apply()
};

/// Root sets indexing the eigenbasis: size k, roots of x^n = (-1)^(k+1).
int quantum_sign(GridShape grid);
std::vector<RootSet> quantum_rootsets(GridShape grid);

/// n * (zeta_1 + ... + zeta_k).
CycInt closed_form_eigenvalue(GridShape grid, const RootSet& J);

/// Components conj(S_d(J)) in diagram order; the component at the empty
/// diagram is 1.
std::vector<CycInt> schur_vector(const SchurEvaluator& eval, const RootSet& J);

/// Exact componentwise check of Pieri * sigma_J = S_box(J) * sigma_J.
bool verify_schur_eigenvector(GridShape grid, const RootSet& J);

/// Indices of failing J in quantum_rootsets order; empty when the identity
/// holds for the whole basis.
std::vector<int> verify_all_schur_eigenvectors(GridShape grid, int jobs = 1);

struct SpectralGroup {
  CycInt eigenvalue;
  std::complex<double> value;
  int multiplicity = 0;
  std::vector<RootSet> members;
  double modulus = 0.0;
  bool max_modulus = false;
};

struct SpectralSummary {
  GridShape grid;
  std::vector<SpectralGroup> groups;  // sorted by (-modulus, argument)
  double max_modulus = 0.0;
};

/// Groups the closed-form eigenvalues by exact equality, computes float
/// moduli, and flags the maximum-modulus groups (tolerance on moduli only).
/// There are always exactly n max-modulus groups of multiplicity one, and
/// for prime n every group has multiplicity one; both facts are checked.
SpectralSummary spectral_decomposition(GridShape grid, double tol = 1e-9);

std::string spectral_to_json(const SpectralSummary& s);

}  // namespace grmirror
