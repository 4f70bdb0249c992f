#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace symcubic {

/// Largest prime below 2^31 - 1.
inline constexpr std::uint32_t kDefaultPrime = 2147483629u;
/// Fallback used for the optional second-prime recheck.
inline constexpr std::uint32_t kSecondPrime = 2147483587u;

bool is_prime(std::uint64_t n);

/// Dense matrix over F_p, p < 2^31. Rank over F_p never exceeds the rank of
/// any integer/rational matrix it was reduced from.
class ModpMatrix {
 public:
  ModpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v % p_; }
  /// Adds v (already reduced) into entry (r, c).
  void accumulate(std::size_t r, std::size_t c, std::uint32_t v);

  std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace symcubic
