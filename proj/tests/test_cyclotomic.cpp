#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "grmirror/cyclotomic.hpp"
#include "grmirror/parallel.hpp"

using namespace grmirror;

namespace {

// Independent brute-force polynomial arithmetic over Z, used as the oracle
// for the cyclotomic polynomials.
using Poly = std::vector<long long>;  // ascending coefficients

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Long division by a monic divisor; requires zero remainder.
Poly poly_div_exact(Poly num, const Poly& den) {
  REQUIRE(den.back() == 1);
  const int dd = static_cast<int>(den.size()) - 1;
  const int dn = static_cast<int>(num.size()) - 1;
  Poly quot(static_cast<std::size_t>(dn - dd + 1), 0);
  for (int i = dn; i >= dd; --i) {
    const long long q = num[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int t = 0; t <= dd; ++t) num[static_cast<std::size_t>(i - dd + t)] -= q * den[static_cast<std::size_t>(t)];
  }
  for (long long c : num) REQUIRE(c == 0);
  return quot;
}

Poly oracle_cyclotomic(int order) {
  Poly p(static_cast<std::size_t>(order + 1), 0);
  p.front() = -1;
  p.back() = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) p = poly_div_exact(std::move(p), oracle_cyclotomic(d));
  }
  return p;
}

int euler_phi(int n) {
  int count = 0;
  for (int t = 1; t <= n; ++t) {
    if (std::gcd(t, n) == 1) ++count;
  }
  return count;
}

Poly to_poly(const CycPoly& p) {
  Poly out;
  for (const BigInt& c : p.coeffs()) out.push_back(c.convert_to<long long>());
  return out;
}

// Direct floating evaluation, the oracle for to_complex.
std::complex<double> oracle_eval(const CycInt& a) {
  std::complex<double> z{0.0, 0.0};
  for (int e = 0; e < a.order(); ++e) {
    const double c = a.coeff(e).convert_to<double>();
    const double theta = 2.0 * std::numbers::pi * e / a.order();
    z += c * std::polar(1.0, theta);
  }
  return z;
}

CycInt random_element(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  CycInt a(order);
  for (int e = 0; e < order; ++e) a.add_term(e, coeff(rng));
  return a;
}

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
  CHECK(to_poly(cyclotomic_polynomial(1)) == Poly{-1, 1});
  CHECK(to_poly(cyclotomic_polynomial(2)) == Poly{1, 1});
  CHECK(to_poly(cyclotomic_polynomial(4)) == Poly{1, 0, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
  CHECK_THROWS_AS(CycInt(0), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomial of order 10 against the division oracle") {
  const Poly expected = oracle_cyclotomic(10);
  CHECK(expected == Poly{1, -1, 1, -1, 1});  // frozen: x^4 - x^3 + x^2 - x + 1
  CHECK(to_poly(cyclotomic_polynomial(10)) == expected);
}

TEST_CASE("cyclotomic product and degree identities") {
  for (int order = 1; order <= 40; ++order) {
    CHECK(cyclotomic_polynomial(order).degree() == euler_phi(order));
    Poly prod = {1};
    for (int d = 1; d <= order; ++d) {
      if (order % d == 0) prod = poly_mul(prod, to_poly(cyclotomic_polynomial(d)));
    }
    Poly expect(static_cast<std::size_t>(order + 1), 0);
    expect.front() = -1;
    expect.back() = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("zero tests") {
  SUBCASE("zeta_2n^n + 1 vanishes") {
    for (int n = 2; n <= 12; ++n) {
      CycInt a = CycInt::zeta_power(2 * n, n);
      a.add_term(0, 1);
      CHECK(a.is_zero());
    }
  }
  SUBCASE("full sum of n-th roots vanishes") {
    for (int n = 2; n <= 12; ++n) {
      CycInt a(2 * n);
      for (int t = 0; t < n; ++t) a.add_term(2 * t, 1);
      CHECK(a.is_zero());
    }
  }
  SUBCASE("prime case: only the full sum vanishes") {
    for (int p : {3, 5, 7}) {
      const int order = 2 * p;
      CycInt full(order);
      for (int t = 0; t < p; ++t) full.add_term(2 * t, 1);
      CHECK(full.is_zero());
      // every proper nonempty subset of the p-th roots has nonzero sum
      for (unsigned mask = 1; mask + 1 < (1u << p); ++mask) {
        CycInt sub(order);
        for (int t = 0; t < p; ++t) {
          if (mask & (1u << t)) sub.add_term(2 * t, 1);
        }
        CHECK(!sub.is_zero());
      }
    }
  }
}

TEST_CASE("ring operations") {
  SUBCASE("rotate has order n modulo the zero test") {
    for (int n : {2, 3, 5, 8}) {
      CycInt a = CycInt::zeta_power(2 * n, 1);
      a.add_term(4, 3);
      CycInt b = a;
      for (int t = 0; t < n; ++t) b = b.rotated();
      CHECK((a - b).is_zero());
    }
  }
  SUBCASE("conjugation is an exact involution") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const CycInt a = random_element(rng, 14);
      CHECK(a.conj().conj().coeffs() == a.coeffs());
    }
  }
  SUBCASE("roots are units") {
    for (int e = 0; e < 10; ++e) {
      const CycInt z = CycInt::zeta_power(10, e);
      CHECK((z.conj() * z - CycInt::integer(10, 1)).is_zero());
    }
  }
  SUBCASE("order mismatch throws") {
    CHECK_THROWS_AS(CycInt(4) + CycInt(6), std::invalid_argument);
    CHECK_THROWS_AS(CycInt(4) * CycInt(6), std::invalid_argument);
  }
}

TEST_CASE("algebraic laws on random elements") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick_n(2, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = 2 * pick_n(rng);
    const CycInt a = random_element(rng, order);
    const CycInt b = random_element(rng, order);
    const CycInt c = random_element(rng, order);
    CHECK((a * b - b * a).is_zero());
    CHECK(((a * b) * c - a * (b * c)).is_zero());
    CHECK((a * (b + c) - (a * b + a * c)).is_zero());
    CHECK(((a * b).conj() - a.conj() * b.conj()).is_zero());
    CHECK((a.rotated() * b - (a * b).rotated()).is_zero());
  }
}

TEST_CASE("zero test agrees with numerical evaluation") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> pick_n(2, 20);
  for (int trial = 0; trial < 10000; ++trial) {
    const int order = 2 * pick_n(rng);
    const CycInt a = random_element(rng, order);
    const double mag = std::abs(a.to_complex());
    if (a.is_zero()) {
      CHECK(mag < 1e-9);
    } else {
      CHECK(mag > 1e-9);
    }
  }
}

TEST_CASE("float evaluation") {
  SUBCASE("eighth root of unity") {
    const std::complex<double> z = CycInt::zeta_power(8, 1).to_complex();
    CHECK(std::abs(z.real() - 0.7071067811865476) < 1e-12);
    CHECK(std::abs(z.imag() - 0.7071067811865476) < 1e-12);
  }
  SUBCASE("zero element") {
    CHECK(std::abs(CycInt(10).to_complex()) == 0.0);
  }
  SUBCASE("1 + powers of zeta_10 against the evaluation oracle") {
    CycInt a = CycInt::integer(10, 1);
    a.add_term(1, 1);  // 1 + zeta_10
    CHECK(std::abs(a.to_complex() - oracle_eval(a)) < 1e-12);
    CHECK(std::abs(a.to_complex() - std::complex<double>(1.809016994, 0.587785252)) < 1e-9);

    CycInt b = CycInt::integer(10, 1);
    b.add_term(2, 1);  // 1 + zeta_10^2 = 1 + e^(2 pi i / 5)
    CHECK(std::abs(b.to_complex() - oracle_eval(b)) < 1e-12);
    CHECK(std::abs(b.to_complex() - std::complex<double>(1.3090169944, 0.9510565163)) < 1e-9);
  }
}

TEST_CASE("concurrent first use of fresh orders") {
  // zero tests from many threads, hitting orders whose cyclotomic
  // polynomials have not been computed yet
  std::mt19937 rng(41);
  std::vector<CycInt> elems;
  for (int order = 82; order <= 120; ++order) {
    elems.push_back(random_element(rng, order));
    elems.push_back(CycInt(order));  // zero
  }
  std::vector<char> zero(elems.size());
  parallel_for(8, elems.size(), [&](std::size_t i) { zero[i] = elems[i].is_zero() ? 1 : 0; });
  for (std::size_t i = 0; i < elems.size(); ++i) {
    CHECK(zero[i] == (std::abs(elems[i].to_complex()) < 1e-9 ? 1 : 0));
  }
}

TEST_CASE("json round trip") {
  std::mt19937 rng(17);
  const CycInt a = random_element(rng, 12);
  const CycInt back = CycInt::from_json_string(a.to_json_string());
  CHECK(back.order() == a.order());
  CHECK(back.coeffs() == a.coeffs());
  CHECK(CycInt::integer(4, 123456789).to_json_string() ==
        R"({"coeffs":["123456789","0","0","0"],"order":4})");
}
