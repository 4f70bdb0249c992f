#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symcubic/monomial.hpp"
#include "symcubic/rational.hpp"

namespace symcubic {

/// Homogeneous polynomial with exact rational coefficients. Zero coefficients
/// are never stored; the zero polynomial keeps its declared degree.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(std::size_t nvars, int degree);

  /// Builds from (monomial, coefficient) pairs; repeated monomials are summed.
  /// Throws InvalidInput on arity or degree mismatch.
  static Polynomial from_terms(std::size_t nvars, int degree,
                               const std::vector<std::pair<Monomial, Rational>>& terms);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1));

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(int k) const;
  /// Partial derivative with respect to x_i (degree drops by one).
  Polynomial derivative(std::size_t i) const;
  /// Gradient (d/dx_0, ..., d/dx_{n-1}).
  std::vector<Polynomial> gradient() const;
  /// Replaces x_i by images[i]; all images must share nvars and degree.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  std::size_t nvars_ = 0;
  int degree_ = 0;
  TermMap terms_;
};

}  // namespace symcubic
