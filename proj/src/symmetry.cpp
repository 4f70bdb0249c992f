#include "symcubic/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "symcubic/errors.hpp"

namespace symcubic {

int mod_floor(long long a, int n) {
  const long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

SymmetryType SymmetryType::normalized() const {
  if (order < 1) throw InvalidInput("symmetry order must be >= 1");
  SymmetryType s = *this;
  for (int& m : s.weights) m = mod_floor(m, order);
  s.lambda_exp = mod_floor(lambda_exp, order);
  return s;
}

bool SymmetryType::acts_trivially() const {
  const SymmetryType s = normalized();
  return std::all_of(s.weights.begin(), s.weights.end(),
                     [&](int m) { return m == s.weights[0]; });
}

std::string SymmetryType::to_string() const {
  std::ostringstream os;
  os << "N=" << order << " m=(";
  for (std::size_t i = 0; i < kVars; ++i) os << (i ? "," : "") << weights[i];
  os << ") w=" << lambda_exp;
  return os.str();
}

int monomial_weight(const SymmetryType& sym, const Monomial& m) {
  if (m.nvars() != kVars) throw InvalidInput("monomial arity must be 6");
  long long s = 0;
  for (std::size_t i = 0; i < kVars; ++i) s += static_cast<long long>(sym.weights[i]) * m[i];
  return mod_floor(s, sym.order);
}

EigenspaceBasis eigenspace_basis(const SymmetryType& sym, int d) {
  const SymmetryType s = sym.normalized();
  EigenspaceBasis out{s, d, {}};
  const int target = mod_floor(-static_cast<long long>(s.lambda_exp), s.order);
  for (auto& m : monomials_of_degree(kVars, d)) {
    if (monomial_weight(s, m) == target) out.monomials.push_back(std::move(m));
  }
  return out;
}

SymmetryType canonicalize(const SymmetryType& sym, int d) {
  const SymmetryType s = sym.normalized();
  const int n = s.order;
  SymmetryType best = s;
  std::sort(best.weights.begin(), best.weights.end());
  for (int c = 0; c < n; ++c) {
    for (int k = 1; k <= std::max(1, n - 1); ++k) {
      if (gcd_int(k, n) != 1) continue;
      SymmetryType cand;
      cand.order = n;
      for (std::size_t i = 0; i < kVars; ++i) {
        cand.weights[i] = mod_floor(static_cast<long long>(k) * (s.weights[i] + c), n);
      }
      cand.lambda_exp =
          mod_floor(static_cast<long long>(k) * (s.lambda_exp - static_cast<long long>(d) * c), n);
      std::sort(cand.weights.begin(), cand.weights.end());
      if (std::tie(cand.weights, cand.lambda_exp) < std::tie(best.weights, best.lambda_exp)) {
        best = cand;
      }
    }
  }
  return best;
}

std::vector<int> weight_blocks(const SymmetryType& sym) {
  const SymmetryType s = sym.normalized();
  std::map<int, int> counts;
  for (int m : s.weights) ++counts[m];
  std::vector<int> out;
  for (const auto& [value, count] : counts) out.push_back(count);
  return out;
}

int centralizer_dimension(const SymmetryType& sym) {
  int total = 0;
  for (int b : weight_blocks(sym)) total += b * b;
  return total - 1;
}

bool quasismooth_screen(const SymmetryType& sym) {
  const EigenspaceBasis basis = eigenspace_basis(sym, kCubicDegree);
  for (std::size_t i = 0; i < kVars; ++i) {
    const bool covered = std::any_of(basis.monomials.begin(), basis.monomials.end(),
                                     [&](const Monomial& m) { return m[i] >= 2; });
    if (!covered) return false;
  }
  return true;
}

}  // namespace symcubic
