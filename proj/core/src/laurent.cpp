#include "grmirror/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace grmirror {

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("VarRegistry names must be unique");
  }
}

int VarRegistry::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  }
  throw std::invalid_argument("unknown variable: " + name);
}

namespace {

void check_same_registry(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.registry() != b.registry() && !(*a.registry() == *b.registry())) {
    throw std::invalid_argument("LaurentPoly operands use different registries");
  }
}

}  // namespace

LaurentPoly::LaurentPoly(VarRegistryPtr registry) : registry_(std::move(registry)) {
  if (!registry_) throw std::invalid_argument("LaurentPoly requires a registry");
}

LaurentPoly LaurentPoly::monomial(VarRegistryPtr registry, std::vector<int> exponents, BigInt coeff) {
  LaurentPoly p(std::move(registry));
  p.add_term(exponents, coeff);
  return p;
}

void LaurentPoly::add_term(const std::vector<int>& exponents, const BigInt& coeff) {
  if (static_cast<int>(exponents.size()) != registry_->size()) {
    throw std::invalid_argument("exponent vector length does not match registry");
  }
  if (coeff == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_registry(*this, rhs);
  for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  check_same_registry(lhs, rhs);
  LaurentPoly out(lhs.registry());
  const int nv = lhs.registry()->size();
  std::vector<int> exps(static_cast<std::size_t>(nv));
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < nv; ++i) {
        exps[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
      }
      out.add_term(exps, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(registry_);
  for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_registry(a, b);
  return a.terms_ == b.terms_;
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exps, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    std::string factors;
    for (int i = 0; i < registry_->size(); ++i) {
      const int e = exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!factors.empty()) factors += " * ";
      factors += registry_->name(i);
      if (e != 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += coeff.str();
    } else if (coeff == 1) {
      out += factors;
    } else {
      out += coeff.str() + " * " + factors;
    }
  }
  return out;
}

LaurentPoly substitute_monomials(const LaurentPoly& a,
                                 const std::vector<SignedMonomial>& images,
                                 VarRegistryPtr target) {
  const int ns = a.registry()->size();
  if (static_cast<int>(images.size()) != ns) {
    throw std::invalid_argument("substitute_monomials: every source variable needs an image");
  }
  const int nt = target->size();
  for (const SignedMonomial& im : images) {
    if (static_cast<int>(im.exponents.size()) != nt || (im.sign != 1 && im.sign != -1)) {
      throw std::invalid_argument("substitute_monomials: malformed image monomial");
    }
  }
  LaurentPoly out(std::move(target));
  std::vector<int> exps(static_cast<std::size_t>(nt));
  for (const auto& [ea, coeff] : a.terms()) {
    std::fill(exps.begin(), exps.end(), 0);
    int sign = 1;
    for (int i = 0; i < ns; ++i) {
      const int e = ea[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (images[static_cast<std::size_t>(i)].sign < 0 && e % 2 != 0) sign = -sign;
      for (int j = 0; j < nt; ++j) {
        exps[static_cast<std::size_t>(j)] += e * images[static_cast<std::size_t>(i)].exponents[static_cast<std::size_t>(j)];
      }
    }
    out.add_term(exps, sign < 0 ? BigInt(-coeff) : coeff);
  }
  return out;
}

}  // namespace grmirror
