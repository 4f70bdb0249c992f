#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace symcubic {

/// Exponent vector x_0^{e_0} ... x_{n-1}^{e_{n-1}}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial variable(std::size_t nvars, std::size_t i);
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exps() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  /// Lowers exponent i by one. Requires exps[i] > 0.
  Monomial lowered(std::size_t i) const;
  bool divides(const Monomial& o) const;

  /// Graded lexicographic with x_0 > x_1 > ...: higher degree first, then the
  /// larger leading exponent first. `a < b` means a precedes b.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::string to_string() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// All monomials of total degree d in nvars variables, graded-lex order
/// (x_0^d first). Length C(d+nvars-1, nvars-1).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

/// Binomial coefficient for small arguments.
std::size_t binomial(std::size_t n, std::size_t k);

/// Position lookup into a fixed ordered monomial list.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> basis);
  std::size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const Monomial& operator[](std::size_t i) const { return basis_[i]; }
  /// Index of m, or npos when m is not in the list.
  std::size_t find(const Monomial& m) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> position_;
};

}  // namespace symcubic
