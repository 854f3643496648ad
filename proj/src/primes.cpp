#include "textcover/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace textcover::primes {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto w : kWitnesses) {
    if (x % w == 0) return x == w;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto w : kWitnesses) {
    auto y = pow_mod(w, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t nth_prime_upper_bound(std::uint64_t r) {
  if (r < 6) return 13;
  const double rd = static_cast<double>(r);
  return static_cast<std::uint64_t>(rd * (std::log(rd) + std::log(std::log(rd)))) + 16;
}

PrimeTable::PrimeTable(std::uint64_t bound) : bound_(std::max<std::uint64_t>(bound, 2)) {
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound_))) + 1;
  std::vector<std::uint32_t> base;
  std::vector<bool> composite(root + 1, false);
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (composite[i]) continue;
    base.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) composite[j] = true;
  }

  const std::uint64_t odd_count = (bound_ + 1) / 2;  // odd numbers 1, 3, ..., <= bound
  odd_bits_.assign((odd_count + 63) / 64, 0);
  std::vector<std::uint8_t> is_comp;
  for (std::uint64_t lo = 0; lo < odd_count; lo += kBlock) {
    const auto hi = std::min(lo + kBlock, odd_count);
    is_comp.assign(hi - lo, 0);
    if (lo == 0) is_comp[0] = 1;  // 1 is not prime
    for (auto p32 : base) {
      const std::uint64_t p = p32;
      if (p * p > 2 * hi - 1) break;
      // First odd multiple of p that is >= max(p * p, 2 * lo + 1).
      auto start = std::max(p * p, (2 * lo + 1 + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (auto x = start; (x - 1) / 2 < hi; x += 2 * p) is_comp[(x - 1) / 2 - lo] = 1;
    }
    for (auto i = lo; i < hi; ++i) {
      if (!is_comp[i - lo]) odd_bits_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }

  std::uint64_t total = 0;
  for (std::size_t w = 0; w < odd_bits_.size(); ++w) {
    if (w % kWordsPerRank == 0) rank_.push_back(total);
    total += static_cast<std::uint64_t>(std::popcount(odd_bits_[w]));
  }
  count_ = total + 1;  // the prime 2
}

std::uint64_t PrimeTable::nth(std::uint64_t k) const {
  if (k >= count_) throw std::out_of_range("prime index beyond sieved range");
  if (k == 0) return 2;
  const auto target = k - 1;
  const auto super = static_cast<std::size_t>(std::upper_bound(rank_.begin(), rank_.end(), target) - rank_.begin()) - 1;
  auto remaining = target - rank_[super];
  for (auto w = super * kWordsPerRank; w < odd_bits_.size(); ++w) {
    auto word = odd_bits_[w];
    const auto ones = static_cast<std::uint64_t>(std::popcount(word));
    if (remaining >= ones) {
      remaining -= ones;
      continue;
    }
    for (; remaining > 0; --remaining) word &= word - 1;
    const auto bit = static_cast<std::uint64_t>(std::countr_zero(word));
    return 2 * (w * 64 + bit) + 1;
  }
  throw std::logic_error("prime rank table is inconsistent");
}

std::shared_ptr<const PrimeTable> shared_prime_table(std::uint64_t bound) {
  static std::mutex mutex;
  static std::shared_ptr<const PrimeTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->bound() < bound) {
    // Grow geometrically so a sweep of increasing budgets re-sieves rarely.
    const auto target = table ? std::max(bound, table->bound() * 2) : bound;
    table = std::make_shared<const PrimeTable>(target);
  }
  return table;
}

}  // namespace textcover::primes
