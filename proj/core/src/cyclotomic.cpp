#include "grmirror/cyclotomic.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace grmirror {

namespace {

void check_same_order(const CycInt& a, const CycInt& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("CycInt operands live in different cyclotomic rings");
  }
}

// Exact division of integer polynomials; the divisor must be monic and the
// remainder must vanish.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const int dd = static_cast<int>(den.size()) - 1;
  const int dn = static_cast<int>(num.size()) - 1;
  if (den.empty() || den.back() != 1) {
    throw std::logic_error("divide_exact requires a monic divisor");
  }
  if (dn < dd) throw std::logic_error("divide_exact: degree underflow");
  std::vector<BigInt> quot(static_cast<std::size_t>(dn - dd + 1));
  for (int i = dn; i >= dd; --i) {
    BigInt q = num[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(i - dd)] = q;
    if (q == 0) continue;
    for (int t = 0; t <= dd; ++t) {
      num[static_cast<std::size_t>(i - dd + t)] -= q * den[static_cast<std::size_t>(t)];
    }
  }
  for (const BigInt& c : num) {
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  }
  return quot;
}

const CycPoly& cyclotomic_polynomial_locked(int order, std::map<int, CycPoly>& cache) {
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  // x^order - 1
  std::vector<BigInt> poly(static_cast<std::size_t>(order + 1), 0);
  poly.front() = -1;
  poly.back() = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    poly = divide_exact(std::move(poly), cyclotomic_polynomial_locked(d, cache).coeffs());
  }
  return cache.emplace(order, CycPoly(std::move(poly))).first->second;
}

}  // namespace

CycPoly::CycPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.back() == 0) {
    throw std::invalid_argument("CycPoly requires a nonzero leading coefficient");
  }
}

const CycPoly& cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic_polynomial requires order >= 1");
  static std::mutex mutex;
  static std::map<int, CycPoly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_polynomial_locked(order, cache);
}

CycInt::CycInt(int order) : order_(order), c_(static_cast<std::size_t>(order)) {
  if (order < 1) throw std::invalid_argument("CycInt requires order >= 1");
}

CycInt CycInt::integer(int order, BigInt value) {
  CycInt r(order);
  r.c_[0] = std::move(value);
  return r;
}

CycInt CycInt::zeta_power(int order, long long e) {
  CycInt r(order);
  r.add_term(e, 1);
  return r;
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  check_same_order(*this, rhs);
  for (int e = 0; e < order_; ++e) {
    c_[static_cast<std::size_t>(e)] += rhs.c_[static_cast<std::size_t>(e)];
  }
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  check_same_order(*this, rhs);
  for (int e = 0; e < order_; ++e) {
    c_[static_cast<std::size_t>(e)] -= rhs.c_[static_cast<std::size_t>(e)];
  }
  return *this;
}

CycInt operator*(const CycInt& lhs, const CycInt& rhs) {
  check_same_order(lhs, rhs);
  const int n = lhs.order();
  CycInt r(n);
  std::vector<int> nz;
  nz.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (rhs.coeff(j) != 0) nz.push_back(j);
  }
  for (int i = 0; i < n; ++i) {
    const BigInt& a = lhs.coeff(i);
    if (a == 0) continue;
    for (int j : nz) {
      r.c_[static_cast<std::size_t>((i + j) % n)] += a * rhs.coeff(j);
    }
  }
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(order_);
  for (int e = 0; e < order_; ++e) {
    r.c_[static_cast<std::size_t>(e)] = -c_[static_cast<std::size_t>(e)];
  }
  return r;
}

void CycInt::add_shifted(const CycInt& a, long long shift) {
  check_same_order(*this, a);
  const long long s = ((shift % order_) + order_) % order_;
  for (int e = 0; e < order_; ++e) {
    const BigInt& v = a.c_[static_cast<std::size_t>(e)];
    if (v == 0) continue;
    c_[static_cast<std::size_t>((e + s) % order_)] += v;
  }
}

void CycInt::add_term(long long e, const BigInt& v) {
  const long long i = ((e % order_) + order_) % order_;
  c_[static_cast<std::size_t>(i)] += v;
}

CycInt CycInt::conj() const {
  CycInt r(order_);
  for (int e = 0; e < order_; ++e) {
    r.c_[static_cast<std::size_t>((order_ - e) % order_)] = c_[static_cast<std::size_t>(e)];
  }
  return r;
}

CycInt CycInt::rotated() const { return shifted(2); }

CycInt CycInt::shifted(long long shift) const {
  CycInt r(order_);
  r.add_shifted(*this, shift);
  return r;
}

std::vector<BigInt> CycInt::canonical() const {
  const CycPoly& phi = cyclotomic_polynomial(order_);
  const int dp = phi.degree();
  std::vector<BigInt> rem = c_;
  for (int i = order_ - 1; i >= dp; --i) {
    BigInt q = rem[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    rem[static_cast<std::size_t>(i)] = 0;
    for (int t = 0; t < dp; ++t) {
      rem[static_cast<std::size_t>(i - dp + t)] -= q * phi.coeff(t);
    }
  }
  rem.resize(static_cast<std::size_t>(dp));
  return rem;
}

bool CycInt::is_zero() const {
  for (const BigInt& v : canonical()) {
    if (v != 0) return false;
  }
  return true;
}

std::complex<double> CycInt::to_complex() const {
  double re = 0.0;
  double im = 0.0;
  for (int e = 0; e < order_; ++e) {
    const BigInt& v = c_[static_cast<std::size_t>(e)];
    if (v == 0) continue;
    const double x = v.convert_to<double>();
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(order_);
    re += x * std::cos(theta);
    im += x * std::sin(theta);
  }
  return {re, im};
}

std::string CycInt::to_json_string() const {
  nlohmann::json j;
  j["order"] = order_;
  std::vector<std::string> coeffs;
  coeffs.reserve(c_.size());
  for (const BigInt& v : c_) coeffs.push_back(v.str());
  j["coeffs"] = coeffs;
  return j.dump();
}

CycInt CycInt::from_json_string(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  CycInt r(j.at("order").get<int>());
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != r.order_) {
    throw std::invalid_argument("CycInt JSON: coefficient count does not match order");
  }
  for (int e = 0; e < r.order_; ++e) {
    r.c_[static_cast<std::size_t>(e)] = BigInt(coeffs[static_cast<std::size_t>(e)].get<std::string>());
  }
  return r;
}

bool equal(const CycInt& a, const CycInt& b) { return (a - b).is_zero(); }

CycInt determinant(const std::vector<std::vector<CycInt>>& m) {
  const int size = static_cast<int>(m.size());
  if (size == 0) throw std::invalid_argument("determinant of an empty matrix");
  const int order = m[0][0].order();
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != size) {
      throw std::invalid_argument("determinant requires a square matrix");
    }
  }
  // minors[mask] = det of first popcount(mask) rows on the column set mask.
  std::vector<CycInt> minors(std::size_t{1} << size, CycInt(order));
  minors[0] = CycInt::integer(order, 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size); ++mask) {
    const int r = std::popcount(mask) - 1;  // expand along row r
    CycInt acc(order);
    int pos = 0;
    for (int j = 0; j < size; ++j) {
      if (!(mask & (std::uint32_t{1} << j))) continue;
      const CycInt& entry = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      const CycInt sub = minors[mask ^ (std::uint32_t{1} << j)] * entry;
      if ((r + pos) % 2 == 0) {
        acc += sub;
      } else {
        acc -= sub;
      }
      ++pos;
    }
    minors[mask] = std::move(acc);
  }
  return minors[(std::uint32_t{1} << size) - 1];
}

}  // namespace grmirror
