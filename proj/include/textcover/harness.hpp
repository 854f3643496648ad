#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textcover/classical.hpp"
#include "textcover/instance.hpp"
#include "textcover/quantum_sim.hpp"

namespace textcover::harness {

enum class Family {
  random,
  planted,
  lb_L,
  lb_n,
  /// Planted, |s| = ceil(log2 n)^2, m = ceil(n / |s|), so L is about n.
  scaling,
  /// Planted, |s| = ceil((log2 n * (log2 m + log2 log2 n))^2).
  long_strings,
  /// Random text, m random substrings of one common length.
  fixed_shape,
};

std::string to_string(Family family);
/// Accepts the CLI spellings ("lb-L", "long-strings", ...). Throws std::invalid_argument.
Family parse_family(std::string_view name);

struct GenSpec {
  Family family = Family::planted;
  std::size_t n = 16;
  std::size_t m = 4;
  std::size_t len_min = 1;
  std::size_t len_max = 4;
  Alphabet alphabet = Alphabet::binary();
  std::uint64_t seed = 0;
  /// lb-L: plant the single 1; lb-n: plant the single 0.
  bool planted = true;
  /// Planted family: most dictionary strings cut from the planted chain (default m).
  std::optional<std::size_t> max_planted;
};

/// Text and dictionary drawn at random; half the strings are cut from the text.
Instance gen_random(const GenSpec& spec);

/// Guaranteed-feasible instance: a random chain of overlapping pieces covering
/// the text, padded with random decoys up to m strings.
Instance gen_planted(const GenSpec& spec);

/// Text of zeros with a single 1 at floor(n/2); all-zero dictionary with
/// lengths <= n/2 and L > n, plus the filler "0". When planted, one string
/// carries a 1 placed so that it covers the text's 1.
Instance gen_lb_L(std::size_t n, std::size_t m, bool planted, std::uint64_t seed);

/// Dictionary ("1"); text of ones, with one 0 at a random position when planted_zero.
Instance gen_lb_n(std::size_t n, bool planted_zero, std::uint64_t seed);

Instance gen_scaling(std::size_t n, std::uint64_t seed);
Instance gen_long_strings(std::size_t n, std::size_t m, std::uint64_t seed);
Instance gen_fixed_shape(std::size_t n, std::size_t m, std::size_t len, std::uint64_t seed);

/// Piece length used by the long-strings family.
std::size_t long_string_length(std::size_t n, std::size_t m);

Instance generate(const GenSpec& spec);

enum class Engine { classical, quantum_sim, naive };

std::string to_string(Engine engine);
Engine parse_engine(std::string_view name);

struct EngineOptions {
  ClassicalConfig classical{};
  QuantumConfig quantum{};
};

/// Runs one engine. The naive engine decides through the exact long array.
SolveResult run_engine(Engine engine, const Instance& inst, const EngineOptions& options = {});

struct BenchSpec {
  std::vector<Engine> engines;
  std::vector<std::size_t> sizes;
  std::size_t repeats = 1;
  std::uint64_t seed = 0;
  Family family = Family::scaling;
  /// Dictionary size for long-strings and fixed-shape.
  std::size_t m = 4;
  /// Piece length for fixed-shape.
  std::size_t len = 64;
  EngineOptions options{};
};

struct BenchRow {
  std::string engine;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t L = 0;
  std::uint64_t seed = 0;
  bool feasible = false;
  QueryLedger ledger;
};

struct Quartiles {
  double median = 0;
  double iqr = 0;
};

struct BenchSummary {
  std::string engine;
  std::size_t n = 0;
  std::size_t runs = 0;
  Quartiles characterQueries, hashEvals, compareCalls, dictionaryReads, total, elapsed_ns;
};

struct BenchTable {
  std::vector<BenchRow> rows;
  std::vector<BenchSummary> summary;
};

Quartiles quartiles(std::vector<double> values);

BenchTable bench_run(const BenchSpec& spec);

/// CSV with columns engine, family, n, m, L, seed, feasible, characterQueries,
/// hashEvals, compareCalls, elapsed_ns.
std::string to_csv(const BenchTable& table);
std::string to_json_string(const BenchTable& table);

}  // namespace textcover::harness
