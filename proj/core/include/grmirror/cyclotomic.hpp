#pragma once

#include <complex>
#include <string>
#include <vector>

#include "grmirror/bigint.hpp"

namespace grmirror {

/// Integer polynomial with coefficients in ascending degree order.
class CycPoly {
 public:
  CycPoly() = default;
  explicit CycPoly(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const CycPoly&, const CycPoly&) = default;

 private:
  std::vector<BigInt> coeffs_;  // trailing (leading-degree) coefficient nonzero
};

/// The N-th cyclotomic polynomial, computed by exact division of x^N - 1 by
/// the product of the lower cyclotomic polynomials. Cached per order; the
/// cache is guarded by a mutex so first use from concurrent tasks is safe.
const CycPoly& cyclotomic_polynomial(int order);

/// Element of Z[zeta_N] held in group-ring form: coefficient of zeta_N^e at
/// index e, all N slots present. Addition and multiplication act mod
/// x^N - 1; equality and zero-testing reduce modulo the cyclotomic
/// polynomial Phi_N, never by raw coefficient comparison.
class CycInt {
 public:
  CycInt() : CycInt(1) {}  // zero of the rational-integer ring
  explicit CycInt(int order);
  static CycInt integer(int order, BigInt value);
  static CycInt zeta_power(int order, long long e);

  int order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& coeff(int e) const { return c_[static_cast<std::size_t>(e)]; }

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  friend CycInt operator+(CycInt lhs, const CycInt& rhs) { return lhs += rhs; }
  friend CycInt operator-(CycInt lhs, const CycInt& rhs) { return lhs -= rhs; }
  friend CycInt operator*(const CycInt& lhs, const CycInt& rhs);
  CycInt operator-() const;

  /// this += a * zeta^shift. Hot path of the batch Schur evaluator.
  void add_shifted(const CycInt& a, long long shift);
  /// this += v * zeta^e.
  void add_term(long long e, const BigInt& v);

  CycInt conj() const;                    // zeta^e -> zeta^(N-e)
  CycInt rotated() const;                 // multiply by zeta_N^2 = e^(2 pi i / n)
  CycInt shifted(long long shift) const;  // multiply by zeta_N^shift

  bool is_zero() const;
  /// Reduced coefficient vector mod Phi_N, length deg Phi_N. Two elements are
  /// equal exactly when their canonical vectors coincide.
  std::vector<BigInt> canonical() const;

  /// Floating-point value; absolute error is bounded by (sum |coeffs|) * 1e-14.
  std::complex<double> to_complex() const;

  std::string to_json_string() const;  // {"order":N,"coeffs":["...", ...]}
  static CycInt from_json_string(const std::string& text);

 private:
  int order_;
  std::vector<BigInt> c_;
};

bool equal(const CycInt& a, const CycInt& b);

/// Exact determinant over Z[zeta_N] by dynamic programming on column
/// subsets; O(2^m * m) ring multiplications for an m x m matrix.
CycInt determinant(const std::vector<std::vector<CycInt>>& m);

}  // namespace grmirror
