#pragma once

#include <vector>

#include "grmirror/bigint.hpp"
#include "grmirror/cyclotomic.hpp"
#include "grmirror/young.hpp"

namespace grmirror {

/// A set of m distinct roots of x^n = sign, stored as the sorted exponents e
/// of zeta_{2n}^e. Since (zeta_{2n}^e)^n = (-1)^e, exponents are even exactly
/// when sign = +1.
struct RootSet {
  int n = 0;
  std::vector<int> exponents;  // sorted, distinct, residues mod 2n, same parity
  int sign = +1;

  int order() const { return 2 * n; }
  int size() const { return static_cast<int>(exponents.size()); }

  friend bool operator==(const RootSet&, const RootSet&) = default;
  friend auto operator<=>(const RootSet&, const RootSet&) = default;
};

/// Validates exponents and infers the sign from their parity.
RootSet make_root_set(int n, std::vector<int> exponents);

/// All C(n,m) size-m sets of roots of x^n = sign, ordered by exponent tuple.
std::vector<RootSet> enumerate_rootsets(int n, int m, int sign);

RootSet rotate(const RootSet& I);     // multiply every root by e^(2 pi i / n)
RootSet conjugate(const RootSet& I);  // complex conjugation

/// The m roots of x^n = sign closest to 1, picked by maximizing the cosine
/// of each root's angle; the parity rule makes the choice tie-free.
RootSet closest_to_one(int n, int m, int sign);

/// Schur value by explicit semistandard-tableau enumeration over labels
/// {1..m}, m = |I|; the reference route.
CycInt schur_ssyt(const YoungDiagram& lam, const RootSet& I);

/// Schur value as the dual Jacobi-Trudi determinant in the elementary
/// symmetric values of I; the fast single-value route.
CycInt schur_jacobi_trudi(const YoungDiagram& lam, const RootSet& I);

/// Generalized Vandermonde determinant with row exponents shifted by lam;
/// alternant(lam, I) = vandermonde(I) * schur(lam, I) exactly.
CycInt alternant(const YoungDiagram& lam, const RootSet& I);

/// prod_{i<j} (zeta_j - zeta_i); never zero for distinct exponents.
CycInt vandermonde(const RootSet& I);

/// Elementary symmetric values e_0..e_m of the roots of I.
std::vector<CycInt> elementary_symmetric(const RootSet& I);

/// Number of semistandard tableaux of lam with labels {1..m}, via the
/// hook-content product; division is performed once at the end and checked
/// to be exact.
BigInt hook_content_count(const YoungDiagram& lam, int m);

/// Evaluates the Schur values of every diagram of a grid at one root set,
/// with |I| = grid.k variables. Runs the branching recursion over horizontal
/// strips, one variable at a time, so a full basis costs little more than a
/// single large evaluation. Immutable after construction; values() is const
/// and safe to call from concurrent tasks.
class SchurEvaluator {
 public:
  explicit SchurEvaluator(GridShape grid);

  const GridShape& grid() const { return grid_; }
  const std::vector<YoungDiagram>& diagrams() const { return diagrams_; }
  int index_of(const YoungDiagram& d) const;

  /// values()[i] = S_{diagrams()[i]}(I).
  std::vector<CycInt> values(const RootSet& I) const;

 private:
  struct Strip {
    int from;  // predecessor diagram index
    int diff;  // boxes added
  };
  GridShape grid_;
  std::vector<YoungDiagram> diagrams_;
  int empty_idx_ = 0;
  std::vector<std::vector<Strip>> strips_;  // per target diagram
};

}  // namespace grmirror
