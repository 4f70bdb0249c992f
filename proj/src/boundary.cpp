#include "symcubic/boundary.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symcubic/errors.hpp"
#include "symcubic/modp.hpp"

namespace symcubic {

std::string to_string(FactorTarget t) {
  return t == FactorTarget::determinantal ? "determinantal" : "chordal";
}

int search_modulus(int p) { return p == 2 ? 12 : 6 * p; }

WitnessImage witness_image(const FactorizationWitness& w) {
  const int m = w.modulus;
  if (m < 1) throw InvalidInput("witness modulus must be positive");
  const int g = w.shift;
  const auto& e = w.exponents;
  WitnessImage img;
  if (w.target == FactorTarget::determinantal) {
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) img.weights[pos++] = mod_floor(g + e[i] + e[j], m);
    }
    img.character = mod_floor(-3LL * g - 2LL * (e[0] + e[1] + e[2]), m);
  } else {
    const int s1 = e[0];
    const int s2 = e[1];
    const int u = e[2];
    img.weights = {mod_floor(g + 4 * s1, m),      mod_floor(g + 3 * s1 + s2, m),
                   mod_floor(g + 2 * s1 + 2 * s2, m), mod_floor(g + s1 + 3 * s2, m),
                   mod_floor(g + 4 * s2, m),      mod_floor(g + u, m)};
    img.character = mod_floor(-3LL * g - 3LL * u, m);
    img.admissible = mod_floor(3LL * (2LL * (s1 + s2) - u), m) == 0;
  }
  return img;
}

namespace {

void require_prime_order(const SymmetryType& sym) {
  if (sym.order < 2 || !is_prime(static_cast<std::uint32_t>(sym.order))) {
    throw InvalidInput("Baily-Borel search needs a prime order, got " + std::to_string(sym.order));
  }
}

// Sorted weight multisets of rho^k, keyed to the character exponents k w.
using Targets = std::map<std::array<int, kVars>, std::map<int, int>>;

Targets power_targets(const SymmetryType& sym) {
  const SymmetryType s = sym.normalized();
  Targets out;
  for (int k = 1; k < s.order; ++k) {
    if (gcd_int(k, s.order) != 1) continue;
    std::array<int, kVars> ws{};
    for (std::size_t i = 0; i < kVars; ++i) ws[i] = mod_floor(static_cast<long long>(k) * s.weights[i], s.order);
    std::sort(ws.begin(), ws.end());
    out[ws].emplace(mod_floor(static_cast<long long>(k) * s.lambda_exp, s.order), k);
  }
  return out;
}

// Power k matched by the image, or 0.
int match_power(const WitnessImage& img, int modulus, int p, const Targets& targets) {
  if (!img.admissible) return 0;
  const int q = modulus / p;
  std::array<int, kVars> reduced{};
  for (std::size_t i = 0; i < kVars; ++i) {
    if (img.weights[i] % q != 0) return 0;
    reduced[i] = img.weights[i] / q;
  }
  if (img.character % q != 0) return 0;
  std::sort(reduced.begin(), reduced.end());
  const auto it = targets.find(reduced);
  if (it == targets.end()) return 0;
  const auto jt = it->second.find(img.character / q);
  return jt == it->second.end() ? 0 : jt->second;
}

std::optional<FactorizationWitness> search(const SymmetryType& sym, FactorTarget target) {
  require_prime_order(sym);
  const SymmetryType s = sym.normalized();
  const Targets targets = power_targets(s);
  const int m = search_modulus(s.order);
  FactorizationWitness w;
  w.target = target;
  w.modulus = m;
  for (int g = 0; g < m; ++g) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        for (int c = 0; c < m; ++c) {
          if (target == FactorTarget::chordal && (3 * (2 * (a + b) - c)) % m != 0) continue;
          w.shift = g;
          w.exponents = {a, b, c};
          const int k = match_power(witness_image(w), m, s.order, targets);
          if (k != 0) {
            w.power = k;
            return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool replay_witness(const SymmetryType& sym, const FactorizationWitness& w) {
  const SymmetryType s = sym.normalized();
  if (w.modulus != search_modulus(s.order) || gcd_int(w.power, s.order) != 1) return false;
  const WitnessImage img = witness_image(w);
  if (!img.admissible) return false;
  const int q = w.modulus / s.order;
  std::array<int, kVars> got{};
  std::array<int, kVars> want{};
  for (std::size_t i = 0; i < kVars; ++i) {
    if (img.weights[i] % q != 0) return false;
    got[i] = img.weights[i] / q;
    want[i] = mod_floor(static_cast<long long>(w.power) * s.weights[i], s.order);
  }
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want || img.character % q != 0) return false;
  return img.character / q == mod_floor(static_cast<long long>(w.power) * s.lambda_exp, s.order);
}

std::optional<FactorizationWitness> g1_factorization(const SymmetryType& sym) {
  return search(sym, FactorTarget::determinantal);
}

std::optional<FactorizationWitness> g2_factorization(const SymmetryType& sym) {
  return search(sym, FactorTarget::chordal);
}

BBVerdict bb_verdict(const SymmetryType& sym) {
  BBVerdict v;
  if (auto w = g1_factorization(sym)) v.witnesses.push_back(*w);
  if (auto w = g2_factorization(sym)) v.witnesses.push_back(*w);
  v.is_bb = v.witnesses.empty();
  return v;
}

Polynomial chi_form(const Rational& a, const Rational& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("(a, b) must not both vanish");
  std::vector<Polynomial> x;
  for (std::size_t i = 0; i < kVars; ++i) x.push_back(Polynomial::variable(kVars, i));
  const Polynomial corner = x[2] + Rational(2) * a * x[5];
  const std::array<std::array<Polynomial, 3>, 3> m = {{
      {x[0], x[1], corner},
      {x[1], x[2] - a * x[5], x[3]},
      {corner, x[3], x[4]},
  }};
  Polynomial det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return det + b * x[5].pow(3);
}

std::vector<Polynomial> veronese_parametrization() {
  const Polynomial u = Polynomial::variable(3, 0);
  const Polynomial v = Polynomial::variable(3, 1);
  const Polynomial w = Polynomial::variable(3, 2);
  const Rational third(1, 3);
  return {u * u,
          u * v,
          third * (u * w + Rational(2) * (v * v)),
          v * w,
          w * w,
          third * (u * w - v * v)};
}

bool vanishes_on_veronese(const Polynomial& g) {
  if (g.nvars() != kVars) throw InvalidInput("expected a form in 6 variables");
  const auto images = veronese_parametrization();
  if (!g.substitute(images).is_zero()) return false;
  for (const auto& d : g.gradient()) {
    if (!d.substitute(images).is_zero()) return false;
  }
  return true;
}

bool verify_veronese_singularity() { return vanishes_on_veronese(chi_form(1, 0)); }

}  // namespace symcubic
