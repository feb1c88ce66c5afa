#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "grmirror/cyclotomic.hpp"
#include "grmirror/quantum.hpp"
#include "grmirror/schur.hpp"
#include "grmirror/young.hpp"

namespace grmirror {

/// Critical points of the superpotential are indexed by size n-k sets of
/// roots of x^n = (-1)^(n-k+1).
int mirror_sign(GridShape grid);
std::vector<RootSet> mirror_rootsets(GridShape grid);

/// The size n-k root set closest to 1; its critical point is the totally
/// positive one.
RootSet mirror_closest_rootset(GridShape grid);

/// The QH-side size-k label of the same critical value: the complement of I
/// within its root family, scaled by e^(i pi).
RootSet complement_label(GridShape grid, const RootSet& I);

/// Element r^t s^flip of D_n acting on root sets by rI = e^(2 pi i / n) I
/// and sI = conj(I); flip applies first.
struct DihedralElement {
  int t = 0;
  bool flip = false;
};
DihedralElement compose(const DihedralElement& a, const DihedralElement& b, int n);
std::vector<DihedralElement> dihedral_elements(int n);
RootSet dihedral_act(const DihedralElement& g, const RootSet& I);

/// Exact minor of the critical-point matrix at the rows given by the
/// horizontal steps of d; row r carries the (r-1)-th powers of the roots.
CycInt plucker_minor(const RootSet& I, const YoungDiagram& d);

/// n * S_box(I), the superpotential value at the critical point of I.
CycInt critical_value(GridShape grid, const RootSet& I);

struct ChartReport {
  RootSet I;
  /// Rectangle d of the grid paired with S_{d^T}(I), for all k(n-k)+1 rectangles.
  std::vector<std::pair<YoungDiagram, CycInt>> rectangle_values;
  bool member = false;  // true iff every rectangle value is nonzero
  CycInt value;         // critical value n * S_box(I)
  std::complex<double> value_f;
};

/// When check_alternants is set, nonvanishing of every rectangle value is
/// recomputed through the alternant determinant and the two routes are
/// required to agree.
ChartReport chart_report(GridShape grid, const RootSet& I, bool check_alternants = false);
std::vector<ChartReport> all_chart_reports(GridShape grid, int jobs = 1, bool check_alternants = false);

struct EquivarianceReport {
  int sets_checked = 0;
  std::vector<std::string> violations;  // empty when everything holds
};

/// For every I and every g in D_n: membership is constant on the orbit, the
/// critical value rotates and conjugates with the generators, and the
/// Poincare-dual value vector matches the conjugate vector up to the global
/// scalar S_fullgrid(I), checked by cross-multiplication.
EquivarianceReport verify_equivariance(GridShape grid, int jobs = 1);

struct BranesSummary {
  GridShape grid;
  SpectralSummary spectral;
  /// Parallel to spectral.groups.
  std::vector<char> occupied;
  std::vector<std::vector<RootSet>> witnesses;
  /// Exact multiset equality of critical values and eigenvalues.
  bool value_multiset_match = false;
};

BranesSummary branes_summary(GridShape grid, int jobs = 1, double tol = 1e-9);

/// Occupancy is constant on the D_n orbit of each eigenvalue group.
bool occupancy_is_orbit_closed(const BranesSummary& b);

struct Holonomy {
  int i = 0;  // 1 <= i <= n-k
  int j = 0;  // 1 <= j <= k
  CycInt num;
  CycInt den;
  std::complex<double> value;
};

/// Local-system holonomies of a chart member, one per torus coordinate, as
/// exact Schur-value pairs of nested rectangles plus their float quotient.
/// Throws std::domain_error when I is not a chart member (the object is not
/// defined).
std::vector<Holonomy> holonomy(GridShape grid, const RootSet& I);

std::string branes_to_json(const BranesSummary& b);

}  // namespace grmirror
