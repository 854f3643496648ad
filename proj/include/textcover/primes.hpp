#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace textcover::primes {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

/// Square-and-multiply modular exponentiation.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t x);

/// Upper bound on the r-th prime (1-based), p_r < r(ln r + ln ln r) for r >= 6.
std::uint64_t nth_prime_upper_bound(std::uint64_t r);

/// Segmented sieve of Eratosthenes over [2, bound]. Odd primes are kept as a
/// bitset with rank counters, so nth() is a binary search plus a word scan.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  std::uint64_t count() const { return count_; }
  /// The k-th prime, 0-based (nth(0) == 2). Requires k < count().
  std::uint64_t nth(std::uint64_t k) const;

 private:
  static constexpr std::uint64_t kBlock = std::uint64_t{1} << 20;
  static constexpr std::size_t kWordsPerRank = 8;

  std::uint64_t bound_;
  std::uint64_t count_ = 0;
  // Bit i of the bitset is set when 2i + 1 is prime.
  std::vector<std::uint64_t> odd_bits_;
  // rank_[s] = number of set bits in words [0, s * kWordsPerRank).
  std::vector<std::uint64_t> rank_;
};

/// Process-wide table covering at least `bound`, grown on demand. Thread-safe.
std::shared_ptr<const PrimeTable> shared_prime_table(std::uint64_t bound);

}  // namespace textcover::primes
