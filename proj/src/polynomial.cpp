#include "symcubic/polynomial.hpp"

#include <sstream>

#include "symcubic/errors.hpp"

namespace symcubic {

Polynomial::Polynomial(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (degree < 0) throw InvalidInput("polynomial degree must be non-negative");
}

Polynomial Polynomial::from_terms(std::size_t nvars, int degree,
                                  const std::vector<std::pair<Monomial, Rational>>& terms) {
  Polynomial p(nvars, degree);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return monomial(Monomial::variable(nvars, i));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars(), m.degree());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw InvalidInput("monomial arity does not match polynomial");
  if (m.degree() != degree_) {
    throw InvalidInput("non-homogeneous term " + m.to_string() + " in degree " +
                       std::to_string(degree_) + " polynomial");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw InvalidInput("polynomial arity mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.nvars_, a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw InvalidInput("negative polynomial power");
  Polynomial r = monomial(Monomial::one(nvars_));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= nvars_) throw InvalidInput("derivative index out of range");
  Polynomial r(nvars_, degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    r.add_term(m.lowered(i), c * Rational(m[i]));
  }
  return r;
}

std::vector<Polynomial> Polynomial::gradient() const {
  std::vector<Polynomial> g;
  g.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) g.push_back(derivative(i));
  return g;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw InvalidInput("substitution needs one image per variable");
  const std::size_t target_vars = images.empty() ? 0 : images.front().nvars();
  const int image_degree = images.empty() ? 0 : images.front().degree();
  for (const auto& img : images) {
    if (img.nvars() != target_vars || (!img.is_zero() && img.degree() != image_degree)) {
      throw InvalidInput("substitution images must share arity and degree");
    }
  }
  Polynomial result(target_vars, degree_ * image_degree);
  // Cache powers per variable; exponents are small.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = monomial(Monomial::one(target_vars), c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const int e = m[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(monomial(Monomial::one(target_vars)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      term = term * cache[e];
    }
    if (!term.is_zero()) result += term;
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw InvalidInput("evaluation point has wrong arity");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    }
    total += t;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = mag == Rational(1);
    if (!unit || m.degree() == 0) os << mag;
    if (m.degree() > 0) {
      if (!unit) os << '*';
      os << m.to_string();
    }
    first = false;
  }
  return os.str();
}

}  // namespace symcubic
