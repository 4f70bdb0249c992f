#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "symcubic/lattice.hpp"
#include "symcubic/polynomial.hpp"

namespace oracle {

using symcubic::IntegralLattice;
using symcubic::Polynomial;
using symcubic::Rational;

// Leibniz expansion of det [[x0, x1, x2+2a x5], [x1, x2-a x5, x3], [x2+2a x5, x3, x4]] + b x5^3.
inline Polynomial chi_determinant(const Rational& a, const Rational& b) {
  std::vector<Polynomial> x;
  for (std::size_t i = 0; i < 6; ++i) x.push_back(Polynomial::variable(6, i));
  const std::array<std::array<Polynomial, 3>, 3> m = {{
      {x[0], x[1], x[2] + Rational(2) * a * x[5]},
      {x[1], x[2] - a * x[5], x[3]},
      {x[2] + Rational(2) * a * x[5], x[3], x[4]},
  }};
  std::array<std::size_t, 3> perm = {0, 1, 2};
  Polynomial det(6, 3);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (perm[i] > perm[j]) ++inversions;
    const Polynomial term = m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]];
    det += inversions % 2 == 0 ? term : Rational(-1) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det + b * x[5].pow(3);
}

// Primitive isotropic vectors with |v_i| <= h, found by solving the quadratic
// in the last coordinate for every prefix. Sign-normalized like the library.
inline std::set<std::vector<long>> isotropic_by_quadratic(const IntegralLattice& l, int h) {
  const std::size_t n = l.rank();
  std::vector<std::vector<long>> g(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = l.gram()(i, j).numerator().get_si();
  std::set<std::vector<long>> out;
  std::vector<long> v(n, 0);
  const std::size_t last = n - 1;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == last) {
      // g_ll t^2 + 2 b t + c = 0.
      long b = 0, c = 0;
      for (std::size_t i = 0; i < last; ++i) {
        b += g[i][last] * v[i];
        for (std::size_t j = 0; j < last; ++j) c += v[i] * g[i][j] * v[j];
      }
      const long a = g[last][last];
      std::vector<long> roots;
      if (a == 0) {
        if (b == 0) {
          if (c == 0)
            for (long t = -h; t <= h; ++t) roots.push_back(t);
        } else if (c % (2 * b) == 0) {
          roots.push_back(-c / (2 * b));
        }
      } else {
        const long disc = b * b - a * c;
        if (disc >= 0) {
          const long s = std::lround(std::sqrt(static_cast<double>(disc)));
          for (long r : {s - 1, s, s + 1}) {
            if (r < 0 || r * r != disc) continue;
            for (long num : {-b + r, -b - r})
              if (num % a == 0) roots.push_back(num / a);
          }
        }
      }
      for (long t : roots) {
        if (t < -h || t > h) continue;
        std::vector<long> w = v;
        w[last] = t;
        long d = 0;
        for (long x : w) d = std::gcd(d, x);
        if (d != 1) continue;
        const auto lead = std::find_if(w.begin(), w.end(), [](long x) { return x != 0; });
        if (*lead < 0)
          for (auto& x : w) x = -x;
        out.insert(w);
      }
      return;
    }
    for (long x = -h; x <= h; ++x) {
      v[pos] = x;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

inline std::set<std::vector<long>> as_set(const std::vector<symcubic::IntVector>& vs) {
  std::set<std::vector<long>> out;
  for (const auto& v : vs) {
    std::vector<long> w;
    for (const auto& x : v) w.push_back(x.get_si());
    out.insert(w);
  }
  return out;
}

}  // namespace oracle
