#include "symcubic/monomial.hpp"

#include <numeric>
#include <sstream>

#include "symcubic/errors.hpp"

namespace symcubic {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw InvalidInput("negative exponent in monomial");
  }
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.nvars() != nvars()) throw InvalidInput("monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  r.degree_ += o.degree_;
  return r;
}

Monomial Monomial::lowered(std::size_t i) const {
  if (exps_.at(i) == 0) throw InvalidInput("cannot lower a zero exponent");
  Monomial r = *this;
  --r.exps_[i];
  --r.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (o.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return b.degree_ <=> a.degree_;
  const std::size_t n = std::min(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  }
  return a.exps_.size() <=> b.exps_.size();
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << i;
    if (exps_[i] > 1) os << '^' << exps_[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

namespace {

void fill_monomials(std::size_t var, int remaining, std::vector<int>& current,
                    std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    fill_monomials(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  if (nvars == 0) throw InvalidInput("monomials_of_degree needs nvars >= 1");
  if (d < 0) throw InvalidInput("monomials_of_degree needs d >= 0");
  std::vector<Monomial> out;
  out.reserve(binomial(static_cast<std::size_t>(d) + nvars - 1, nvars - 1));
  std::vector<int> current(nvars, 0);
  fill_monomials(0, d, current, out);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) position_.emplace(basis_[i], i);
}

std::size_t MonomialIndex::find(const Monomial& m) const {
  const auto it = position_.find(m);
  return it == position_.end() ? npos : it->second;
}

}  // namespace symcubic
