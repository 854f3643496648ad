#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "textcover/pipeline.hpp"

namespace textcover {

enum class QueryMode {
  /// Charge ceil(c_q * sqrt(k) * log2(gamma)) queries and answer exactly,
  /// optionally corrupting the answer with probability 1 / gamma^3.
  model,
  /// Run a statevector Grover search for the first mismatch (k <= 16).
  statevector,
};

inline constexpr std::size_t kMaxStatevectorLength = 16;

struct QuantumConfig {
  /// Error parameter; defaults to m * log2(n), floored at 2.
  std::optional<double> gamma;
  /// Leading constant of the query cost.
  double cq = 3.0;
  QueryMode mode = QueryMode::model;
  std::uint64_t seed = 0;
  bool error_injection = true;
  bool verify_final = true;
};

/// gamma for `inst` under `cfg`, validated (>= 2).
double resolve_gamma(const QuantumConfig& cfg, const Instance& inst);

/// Oracle calls allowed to one statevector first-mismatch search.
std::uint64_t grover_budget(std::size_t k, double cq);

struct GroverRun {
  /// 0-based index of the reported marked item.
  std::optional<std::size_t> index;
  std::uint64_t oracle_calls = 0;
};

/// First marked index of `marked`, searched with at most grover_budget(k, cq)
/// oracle calls. Each round runs Grover iterations over the candidate prefix
/// [0, hi), measures, and checks the outcome with one oracle call; a hit
/// shrinks the prefix. Rounds alternate one and zero iterations. Once the
/// prefix fits in the remaining budget it is scanned directly.
GroverRun grover_first_marked(std::span<const std::uint8_t> marked, double cq, std::mt19937_64& rng);

/// The string comparison primitive of the simulated quantum engine. Charges
/// every oracle call to the ledger it was built with.
class QuantumComparator {
 public:
  QuantumComparator(const QuantumConfig& cfg, double gamma, std::mt19937_64& rng, QueryLedger& ledger);

  double gamma() const { return gamma_; }
  /// Query cost charged in model mode for a length-k comparison.
  std::uint64_t model_cost(std::size_t k) const;

  /// 1-based index of the first position in [1, k] where u and v differ.
  std::optional<std::size_t> first_mismatch(SymbolView u, SymbolView v, std::size_t k);
  /// Compares the length-l prefixes of u and v.
  int compare_base(SymbolView u, SymbolView v, std::size_t l);
  /// Full lexicographic comparison; a proper prefix is smaller.
  int compare(SymbolView u, SymbolView v);

 private:
  const QuantumConfig& cfg_;
  double gamma_;
  std::mt19937_64& rng_;
  QueryLedger& ledger_;
};

/// The classical pipeline with the hash comparator replaced by QuantumComparator.
SolveResult solve_quantum_sim(const Instance& inst, const QuantumConfig& cfg = {});

}  // namespace textcover
