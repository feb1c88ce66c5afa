#pragma once

#include <string>
#include <vector>

#include "grmirror/laurent.hpp"
#include "grmirror/young.hpp"

namespace grmirror {

enum class FaceKind { HBrick, VBrick, CornerTopRight, CornerBottomLeft };

/// A codimension-1 face of the Gelfand-Cetlin polytope, named by the brick
/// (or corner) of the ladder diagram it erases, together with the inward
/// primitive normal vector in the torus coordinates (i,j), 1 <= i <= k,
/// 1 <= j <= n-k, flattened in lexicographic order.
struct FaceGraph {
  GridShape grid;
  FaceKind kind;
  int i = 0;  // brick position; unused for corners
  int j = 0;
  std::vector<int> normal;  // length k(n-k), at most two entries, each +-1
};

std::vector<FaceGraph> codim1_faces(GridShape grid);

/// Registry of the torus coordinates x_{i,j} in lexicographic (i,j) order.
VarRegistryPtr disk_registry(GridShape grid);

/// Registry of the rectangle coordinates p_{ixj} in lexicographic (i,j)
/// order; the empty rectangle is eliminated (identically 1), so there are
/// exactly k(n-k) variables.
VarRegistryPtr chart_registry(GridShape grid);

/// Maslov-2 disk potential: one coefficient-1 monomial per codimension-1
/// face, exponents the face normal.
LaurentPoly disk_potential(GridShape grid);

/// Superpotential restricted to the rectangular chart, in the rectangle
/// coordinates, with every degenerate rectangle factor replaced by 1.
LaurentPoly chart_potential(GridShape grid);

/// The monomial substitution x_{i,j} -> p_{(k+1-i)xj} / p_{(k-i)x(j-1)}
/// realizing the torus-chart embedding; images indexed like disk_registry.
std::vector<SignedMonomial> theta_substitution(GridShape grid);

/// Exact identity: disk_potential pulled through theta_substitution equals
/// chart_potential.
bool verify_pullback(GridShape grid);

std::string faces_to_json(const std::vector<FaceGraph>& faces);
std::string potential_to_json(GridShape grid);

}  // namespace grmirror
