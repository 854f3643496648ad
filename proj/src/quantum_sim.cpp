#include "textcover/quantum_sim.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace textcover {

double resolve_gamma(const QuantumConfig& cfg, const Instance& inst) {
  const double gamma = cfg.gamma.value_or(
      std::max(2.0, static_cast<double>(inst.m()) * std::log2(static_cast<double>(inst.n()))));
  if (!(gamma >= 2.0)) throw std::invalid_argument("gamma must be at least 2");
  return gamma;
}

std::uint64_t grover_budget(std::size_t k, double cq) {
  const auto b = static_cast<std::uint64_t>(std::floor(cq * std::sqrt(static_cast<double>(k)) + 1e-9));
  return std::max<std::uint64_t>(b, 1);
}

namespace {

// Grover over indices [0, size) padded with unmarked items to a power of two;
// returns the measured index.
std::size_t grover_measure(std::span<const std::uint8_t> marked, std::size_t size, std::uint64_t iterations,
                           std::mt19937_64& rng) {
  const auto dim = std::bit_ceil(std::max<std::size_t>(size, 2));
  std::vector<double> amp(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  for (std::uint64_t it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < size; ++i) {
      if (marked[i]) amp[i] = -amp[i];
    }
    const double mean = std::accumulate(amp.begin(), amp.end(), 0.0) / static_cast<double>(dim);
    for (auto& a : amp) a = 2.0 * mean - a;
  }
  std::vector<double> prob(dim);
  std::transform(amp.begin(), amp.end(), prob.begin(), [](double a) { return a * a; });
  std::discrete_distribution<std::size_t> measure(prob.begin(), prob.end());
  return measure(rng);
}

}  // namespace

GroverRun grover_first_marked(std::span<const std::uint8_t> marked, double cq, std::mt19937_64& rng) {
  const auto budget = grover_budget(marked.size(), cq);
  GroverRun run;
  std::size_t hi = marked.size();
  unsigned round = 0;
  while (hi > 0 && run.oracle_calls < budget) {
    const auto remaining = budget - run.oracle_calls;
    if (hi <= remaining) {
      for (std::size_t x = 0; x < hi; ++x) {
        ++run.oracle_calls;
        if (marked[x]) {
          run.index = x;
          break;
        }
      }
      break;
    }
    const std::uint64_t iterations = std::min<std::uint64_t>(round % 2 == 0 ? 1 : 0, remaining - 1);
    ++round;
    const auto x = grover_measure(marked, hi, iterations, rng);
    run.oracle_calls += iterations + 1;
    if (x < hi && marked[x]) {
      run.index = x;
      hi = x;
      round = 0;
    }
  }
  return run;
}

QuantumComparator::QuantumComparator(const QuantumConfig& cfg, double gamma, std::mt19937_64& rng,
                                     QueryLedger& ledger)
    : cfg_(cfg), gamma_(gamma), rng_(rng), ledger_(ledger) {
  if (!(cfg.cq > 0.0)) throw std::invalid_argument("c_q must be positive");
  if (!(gamma >= 2.0)) throw std::invalid_argument("gamma must be at least 2");
}

std::uint64_t QuantumComparator::model_cost(std::size_t k) const {
  if (k == 0) return 0;
  return static_cast<std::uint64_t>(
      std::ceil(cfg_.cq * std::sqrt(static_cast<double>(k)) * std::log2(gamma_) - 1e-9));
}

std::optional<std::size_t> QuantumComparator::first_mismatch(SymbolView u, SymbolView v, std::size_t k) {
  if (u.size() < k || v.size() < k) throw std::invalid_argument("compared length exceeds an operand");
  if (cfg_.mode == QueryMode::statevector) {
    if (k > kMaxStatevectorLength) {
      throw std::invalid_argument("statevector mode supports lengths up to " +
                                  std::to_string(kMaxStatevectorLength));
    }
    std::vector<std::uint8_t> differs(k);
    for (std::size_t i = 0; i < k; ++i) differs[i] = u[i] != v[i];
    const auto run = grover_first_marked(differs, cfg_.cq, rng_);
    ledger_.characterQueries += run.oracle_calls;
    if (!run.index) return std::nullopt;
    return *run.index + 1;
  }
  ledger_.characterQueries += model_cost(k);
  const auto end = u.begin() + static_cast<std::ptrdiff_t>(k);
  const auto at = std::mismatch(u.begin(), end, v.begin()).first;
  if (at == end) return std::nullopt;
  return static_cast<std::size_t>(at - u.begin()) + 1;
}

int QuantumComparator::compare_base(SymbolView u, SymbolView v, std::size_t l) {
  ++ledger_.compareCalls;
  const auto x = first_mismatch(u, v, l);
  int sign = 0;
  if (x) sign = u[*x - 1] < v[*x - 1] ? -1 : 1;
  if (cfg_.mode == QueryMode::model && cfg_.error_injection) {
    std::bernoulli_distribution fails(1.0 / (gamma_ * gamma_ * gamma_));
    if (fails(rng_)) {
      // Uniform over the two wrong answers.
      std::bernoulli_distribution coin(0.5);
      const int first_wrong = sign == -1 ? 0 : -1;
      const int second_wrong = sign == 1 ? 0 : 1;
      sign = coin(rng_) ? first_wrong : second_wrong;
    }
  }
  return sign;
}

int QuantumComparator::compare(SymbolView u, SymbolView v) {
  if (u.size() == v.size()) return compare_base(u, v, u.size());
  if (u.size() < v.size()) {
    const int r = compare_base(u, v, u.size());
    return r == 0 ? -1 : r;
  }
  const int r = compare_base(u, v, v.size());
  return r == 0 ? 1 : r;
}

SolveResult solve_quantum_sim(const Instance& inst, const QuantumConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  const double gamma = resolve_gamma(cfg, inst);
  std::mt19937_64 rng(cfg.seed);
  const auto radix = static_cast<std::uint32_t>(inst.alphabet.size());
  const SymbolView text(inst.text);
  const auto n = inst.n();

  QueryLedger spent;
  SolveResult result;
  for (unsigned attempt = 1; attempt <= 2; ++attempt) {
    SolveResult out;
    const auto suf = construct_suffix_array(text, radix);
    out.ledger.textReads += n;
    QuantumComparator comparator(cfg, gamma, rng, out.ledger);
    detail::aggregate_and_cover(
        inst, suf,
        [&](std::size_t j) {
          const SymbolView word(inst.dictionary[j]);
          return search_segment(n, [&](std::size_t rank) {
            const std::size_t start = suf[rank];
            return comparator.compare(text.subspan(start, std::min(n - start, word.size())), word);
          });
        },
        out);
    spent += out.ledger;
    result = std::move(out);
    result.attempts = attempt;
    if (!cfg.verify_final || !result.cover) break;
    spent.structureOps += detail::cover_check_cost(inst, *result.cover);
    if (validate_cover(inst, *result.cover)) break;
    result.cover.reset();
  }
  result.ledger = spent;
  result.ledger.elapsed_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace textcover
