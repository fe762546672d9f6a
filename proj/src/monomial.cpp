#include "edgeideal/monomial.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "edgeideal/errors.hpp"

namespace edgeideal {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw ValidationError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::one(int nvars) {
  if (nvars < 0) throw ValidationError("negative variable count");
  return Monomial(std::vector<int>(nvars, 0));
}

Monomial Monomial::variable(int nvars, int index, int power) {
  if (index < 0 || index >= nvars) {
    throw ValidationError("variable index out of range");
  }
  if (power < 0) throw ValidationError("negative exponent in monomial");
  std::vector<int> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] > 0) s.push_back(i);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) {
    throw ValidationError("monomials live in different variable counts");
  }
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) {
    throw ValidationError("monomials live in different variable counts");
  }
  std::vector<int> e(exps_.size());
  for (int i = 0; i < nvars(); ++i) {
    long long sum = static_cast<long long>(exps_[i]) + other.exps_[i];
    if (sum > std::numeric_limits<int>::max()) {
      throw LimitError("exponent overflow in monomial product");
    }
    e[i] = static_cast<int>(sum);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) {
    throw ValidationError("inexact monomial division");
  }
  std::vector<int> e(exps_.size());
  for (int i = 0; i < nvars(); ++i) e[i] = exps_[i] - other.exps_[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw ValidationError("monomials live in different variable counts");
  }
  std::vector<int> e(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) {
    e[i] = std::max(a.exponent(i), b.exponent(i));
  }
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw ValidationError("monomials live in different variable counts");
  }
  std::vector<int> e(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) {
    e[i] = std::min(a.exponent(i), b.exponent(i));
  }
  return Monomial(std::move(e));
}

bool degree_lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() < b.exponents();
}

}  // namespace edgeideal
