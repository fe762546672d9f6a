#pragma once

#include <compare>
#include <vector>

namespace edgeideal {

// A monomial in a fixed number of variables, stored as a dense exponent
// vector.  Exponents are non-negative ints; the total degree is kept as a
// long long.  Monomials do not carry their variable names; pairing with a
// VarSet happens at the ideal / text-IO level.
class Monomial {
 public:
  Monomial() = default;  // zero variables; placeholder only
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int nvars);
  // x_i^power.  Throws ValidationError on out-of-range index or power < 0.
  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const noexcept { return static_cast<int>(exps_.size()); }
  int exponent(int i) const { return exps_.at(i); }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  long long degree() const noexcept { return degree_; }

  bool is_constant() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;

  // Throws ValidationError if variable counts differ; LimitError if an
  // exponent would overflow int.
  Monomial operator*(const Monomial& other) const;
  // Exact division; throws ValidationError if `other` does not divide *this.
  Monomial divided_by(const Monomial& other) const;

  bool operator==(const Monomial& other) const noexcept {
    return exps_ == other.exps_;
  }

 private:
  std::vector<int> exps_;
  long long degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// Canonical order: total degree ascending, ties by lexicographic comparison
// of exponent vectors.
bool degree_lex_less(const Monomial& a, const Monomial& b);

}  // namespace edgeideal
