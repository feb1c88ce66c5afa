#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grmirror/bigint.hpp"

namespace grmirror {

/// Ordered list of distinct variable names shared by the polynomials built
/// over it.
class VarRegistry {
 public:
  explicit VarRegistry(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& name) const;  // throws if unknown

  friend bool operator==(const VarRegistry& a, const VarRegistry& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using VarRegistryPtr = std::shared_ptr<const VarRegistry>;

/// A monomial c * prod v_i^{e_i} with c = +1 or -1; the only substitution
/// images allowed.
struct SignedMonomial {
  int sign = +1;
  std::vector<int> exponents;  // length = target registry size
};

/// Sparse Laurent polynomial over Z: exponent vector -> nonzero coefficient.
/// Canonical by construction (no zero coefficients stored, map keys unique),
/// so equality is plain map comparison.
class LaurentPoly {
 public:
  explicit LaurentPoly(VarRegistryPtr registry);

  static LaurentPoly monomial(VarRegistryPtr registry, std::vector<int> exponents, BigInt coeff);

  const VarRegistryPtr& registry() const { return registry_; }
  const std::map<std::vector<int>, BigInt>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  void add_term(const std::vector<int>& exponents, const BigInt& coeff);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Terms joined by " + " in exponent-lex order; "3 * x^2 * y^-1" style,
  /// with unit coefficients and unit exponents elided.
  std::string to_text() const;

 private:
  VarRegistryPtr registry_;
  std::map<std::vector<int>, BigInt> terms_;
};

/// Applies a map sending every source variable to a signed monomial over the
/// target registry; exponent vectors transform linearly.
LaurentPoly substitute_monomials(const LaurentPoly& a,
                                 const std::vector<SignedMonomial>& images,
                                 VarRegistryPtr target);

}  // namespace grmirror
