#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "textcover/instance.hpp"
#include "textcover/ledger.hpp"

namespace textcover::hashing {

enum class PrimeMode {
  /// Uniform draw from the first r primes.
  faithful,
  /// Uniform ~61-bit prime found by Miller-Rabin.
  fast,
};

/// ceil(log2(n)), floored at 1 so that budgets stay positive for n = 1.
std::uint64_t ceil_log2_at_least_one(std::uint64_t n);

/// Size of the prime pool that keeps the fingerprinting error below epsilon
/// for m * 4 * ceil(log2 n)^2 hash comparisons over strings of length <= n.
struct PrimeBudget {
  std::uint64_t n = 1;
  std::uint64_t m = 1;
  double epsilon = 0.01;

  /// Hash-comparison budget m * 4 * ceil(log2 n)^2.
  std::uint64_t comparisons() const;
  /// r = ceil(n * comparisons / epsilon).
  std::uint64_t pool_size() const;
};

struct PrimeOptions {
  PrimeMode mode = PrimeMode::fast;
  /// Faithful mode refuses to sieve beyond this bound.
  std::uint64_t max_sieve_bound = std::uint64_t{1} << 32;
};

/// Draws the hash modulus. Primes not exceeding `radix` are rejected and
/// redrawn so that the radix stays invertible. Throws std::length_error when
/// the faithful pool would need a sieve beyond `options.max_sieve_bound`.
std::uint64_t choose_prime(const PrimeBudget& budget, const PrimeOptions& options, std::uint32_t radix,
                           std::mt19937_64& rng);

/// powers[k] = radix^k mod p for k < beta; inverse[k] = radix^-k mod p for k <= beta.
struct PowerTables {
  std::uint64_t modulus = 0;
  std::uint32_t radix = 0;
  std::vector<std::uint64_t> powers;
  std::vector<std::uint64_t> inverse;
};

/// Builds both tables in O(beta + log p); the inverse radix comes from Fermat's
/// little theorem. Throws std::invalid_argument when radix is not invertible mod p.
PowerTables compute_ki(std::size_t beta, std::uint64_t p, std::uint32_t radix);

/// Handle returned by HashContext::register_string.
using StringId = std::size_t;

/// A contiguous window [offset, offset + length) of a registered string.
struct HashedView {
  StringId id = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// Polynomial rolling hash h(u) = sum index(u_i) * radix^(i-1) mod p with
/// per-string prefix tables. Registered strings are not copied; they must
/// outlive the context.
class HashContext {
 public:
  HashContext(std::uint64_t p, std::uint32_t radix, std::size_t beta);

  std::uint64_t modulus() const { return tables_.modulus; }
  const PowerTables& tables() const { return tables_; }

  /// Computes and stores h(u[1, i]) for i = 0..|u|. O(|u|).
  StringId register_string(SymbolView u);

  /// prefix_hashes(id)[i] == h(u[1, i]).
  const std::vector<std::uint64_t>& prefix_hashes(StringId id) const { return prefix_.at(id); }
  SymbolView symbols(StringId id) const { return strings_.at(id); }

  /// Hash of u[i..j], 1-based inclusive. O(1).
  std::uint64_t substring_hash(StringId id, std::size_t i, std::size_t j) const;

  HashedView whole(StringId id) const { return {id, 0, strings_.at(id).size()}; }

  /// Hash of the first `len` symbols of `view`; len == 0 hashes to 0.
  std::uint64_t view_prefix_hash(const HashedView& view, std::size_t len) const;

  /// Longest common prefix located by binary search over prefix hashes.
  std::size_t lcp(const HashedView& u, const HashedView& v, QueryLedger* ledger = nullptr) const;

  /// Lexicographic comparison: -1, 0 or +1. Correct unless a hash collision
  /// misleads the lcp search.
  int compare(const HashedView& u, const HashedView& v, QueryLedger* ledger = nullptr) const;

 private:
  PowerTables tables_;
  std::vector<SymbolView> strings_;
  std::vector<std::vector<std::uint64_t>> prefix_;
};

/// Hash of a standalone string, evaluated directly from the definition.
std::uint64_t direct_hash(SymbolView u, std::uint64_t p, std::uint32_t radix);

}  // namespace textcover::hashing
