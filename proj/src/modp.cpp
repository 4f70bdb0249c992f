#include "symcubic/modp.hpp"

#include <algorithm>

#include "symcubic/errors.hpp"

namespace symcubic {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

ModpMatrix::ModpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2 || p >= (1u << 31)) throw InvalidInput("modulus must be a prime below 2^31");
}

void ModpMatrix::accumulate(std::size_t r, std::size_t c, std::uint32_t v) {
  auto& e = data_[r * cols_ + c];
  e = static_cast<std::uint32_t>((static_cast<std::uint64_t>(e) + v) % p_);
}

std::size_t ModpMatrix::rank() const {
  std::vector<std::uint32_t> m = data_;
  const std::uint64_t p = p_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rows_;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (m[r * cols_ + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * cols_),
                       m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols_),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * cols_));
    }
    std::uint32_t* prow = &m[rank * cols_];
    const std::uint64_t inv = inverse_mod(prow[c], p_);
    for (std::size_t j = c; j < cols_; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint32_t* row = &m[r * cols_];
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j = c; j < cols_; ++j) {
        if (prow[j] == 0) continue;
        row[j] = static_cast<std::uint32_t>((row[j] + neg * prow[j]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace symcubic
