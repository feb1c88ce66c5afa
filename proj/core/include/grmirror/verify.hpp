#pragma once

#include <string>
#include <vector>

#include "grmirror/young.hpp"

namespace grmirror {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // failure detail, or a short note
};

struct VerifyReport {
  GridShape grid;
  std::vector<VerifyCheck> checks;
  bool all_pass = false;
};

/// Runs the whole invariant suite for one grid: eigenvector identity,
/// three-route Schur agreement, pullback identity, dihedral equivariance,
/// critical-value/eigenvalue multiset match, max-modulus occupancy with the
/// closest-to-one orbit, prime-case exhaustive membership, face counts, and
/// orbit-closure of occupancy.
VerifyReport verify_suite(GridShape grid, int jobs = 1, double tol = 1e-9);

std::string verify_to_json(const VerifyReport& r);
std::string verify_to_text(const VerifyReport& r);

}  // namespace grmirror
