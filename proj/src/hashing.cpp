#include "textcover/hashing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "textcover/primes.hpp"

namespace textcover::hashing {

using primes::mul_mod;

std::uint64_t ceil_log2_at_least_one(std::uint64_t n) {
  std::uint64_t bits = 0;
  while ((std::uint64_t{1} << bits) < n) ++bits;
  return std::max<std::uint64_t>(bits, 1);
}

std::uint64_t PrimeBudget::comparisons() const {
  const auto lg = ceil_log2_at_least_one(n);
  return m * 4 * lg * lg;
}

std::uint64_t PrimeBudget::pool_size() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1]");
  const long double r = static_cast<long double>(n) * static_cast<long double>(comparisons()) / epsilon;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(r - 1e-9L)));
}

std::uint64_t choose_prime(const PrimeBudget& budget, const PrimeOptions& options, std::uint32_t radix,
                           std::mt19937_64& rng) {
  if (options.mode == PrimeMode::fast) {
    std::uniform_int_distribution<std::uint64_t> draw(std::uint64_t{1} << 60, (std::uint64_t{1} << 61) - 1);
    for (;;) {
      const auto candidate = draw(rng) | 1;
      if (candidate > radix && primes::is_prime(candidate)) return candidate;
    }
  }

  const auto r = budget.pool_size();
  const auto bound = primes::nth_prime_upper_bound(r);
  if (bound > options.max_sieve_bound) {
    throw std::length_error("faithful prime pool of " + std::to_string(r) + " primes needs a sieve up to " +
                            std::to_string(bound) + "; use fast prime mode");
  }
  const auto table = primes::shared_prime_table(bound);
  std::uint64_t usable = 0;
  for (std::uint64_t k = 0; k < r && table->nth(k) <= radix; ++k) ++usable;
  if (usable == r) {
    throw std::invalid_argument("every prime in the pool is <= the alphabet size");
  }
  std::uniform_int_distribution<std::uint64_t> draw(0, r - 1);
  for (;;) {
    const auto p = table->nth(draw(rng));
    if (p > radix) return p;
  }
}

PowerTables compute_ki(std::size_t beta, std::uint64_t p, std::uint32_t radix) {
  if (beta < 1) throw std::invalid_argument("beta must be at least 1");
  if (p < 2 || radix % p == 0) {
    throw std::invalid_argument("radix " + std::to_string(radix) + " is not invertible modulo " + std::to_string(p));
  }
  PowerTables t;
  t.modulus = p;
  t.radix = radix;
  t.powers.resize(beta);
  t.inverse.resize(beta + 1);
  const auto radix_inv = primes::pow_mod(radix, p - 2, p);
  t.powers[0] = 1 % p;
  for (std::size_t k = 1; k < beta; ++k) t.powers[k] = mul_mod(t.powers[k - 1], radix, p);
  t.inverse[0] = 1 % p;
  for (std::size_t k = 1; k <= beta; ++k) t.inverse[k] = mul_mod(t.inverse[k - 1], radix_inv, p);
  return t;
}

HashContext::HashContext(std::uint64_t p, std::uint32_t radix, std::size_t beta)
    : tables_(compute_ki(beta, p, radix)) {}

StringId HashContext::register_string(SymbolView u) {
  if (u.size() > tables_.powers.size()) {
    throw std::invalid_argument("string longer than the power tables");
  }
  const auto p = tables_.modulus;
  std::vector<std::uint64_t> prefix(u.size() + 1, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] >= tables_.radix) {
      throw std::invalid_argument("symbol index " + std::to_string(u[i]) + " outside the alphabet");
    }
    prefix[i + 1] = (prefix[i] + mul_mod(tables_.powers[i], u[i], p)) % p;
  }
  strings_.push_back(u);
  prefix_.push_back(std::move(prefix));
  return strings_.size() - 1;
}

std::uint64_t HashContext::substring_hash(StringId id, std::size_t i, std::size_t j) const {
  const auto& prefix = prefix_.at(id);
  if (i < 1 || i > j || j >= prefix.size()) {
    throw std::out_of_range("substring bounds [" + std::to_string(i) + ", " + std::to_string(j) + "] invalid");
  }
  const auto p = tables_.modulus;
  const auto diff = (prefix[j] + p - prefix[i - 1]) % p;
  return mul_mod(diff, tables_.inverse[i - 1], p);
}

std::uint64_t HashContext::view_prefix_hash(const HashedView& view, std::size_t len) const {
  if (len == 0) return 0;
  return substring_hash(view.id, view.offset + 1, view.offset + len);
}

std::size_t HashContext::lcp(const HashedView& u, const HashedView& v, QueryLedger* ledger) const {
  std::size_t lo = 0;
  std::size_t hi = std::min(u.length, v.length);
  while (lo < hi) {
    const auto mid = lo + (hi - lo + 1) / 2;
    if (ledger) ledger->hashEvals += 2;
    if (view_prefix_hash(u, mid) == view_prefix_hash(v, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

int HashContext::compare(const HashedView& u, const HashedView& v, QueryLedger* ledger) const {
  if (ledger) ++ledger->compareCalls;
  const auto common = lcp(u, v, ledger);
  if (common < u.length && common < v.length) {
    if (ledger) ledger->characterQueries += 2;
    const auto a = strings_[u.id][u.offset + common];
    const auto b = strings_[v.id][v.offset + common];
    if (a != b) return a < b ? -1 : 1;
    // A collision hid an earlier mismatch; the symbols here agree, so fall
    // through to the length rule as if the views were equal.
  }
  if (u.length == v.length) return 0;
  return u.length < v.length ? -1 : 1;
}

std::uint64_t direct_hash(SymbolView u, std::uint64_t p, std::uint32_t radix) {
  std::uint64_t h = 0;
  std::uint64_t power = 1 % p;
  for (auto x : u) {
    h = (h + mul_mod(power, x, p)) % p;
    power = mul_mod(power, radix, p);
  }
  return h;
}

}  // namespace textcover::hashing
