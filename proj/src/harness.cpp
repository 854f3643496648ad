#include "textcover/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "textcover/cover.hpp"
#include "textcover/hashing.hpp"
#include "textcover/oracle.hpp"

namespace textcover::harness {
namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

SymbolString random_string(std::mt19937_64& rng, std::size_t len, std::size_t radix) {
  SymbolString s(len);
  for (auto& x : s) x = static_cast<Symbol>(uniform(rng, 0, radix - 1));
  return s;
}

SymbolString cut(const SymbolString& text, std::size_t start, std::size_t len) {
  return SymbolString(text.begin() + static_cast<std::ptrdiff_t>(start),
                      text.begin() + static_cast<std::ptrdiff_t>(start + len));
}

void check_dimensions(const GenSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw std::invalid_argument("n and m must be at least 1");
  if (spec.len_min < 1 || spec.len_min > spec.len_max) {
    throw std::invalid_argument("piece lengths need 1 <= len-min <= len-max");
  }
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::random: return "random";
    case Family::planted: return "planted";
    case Family::lb_L: return "lb-L";
    case Family::lb_n: return "lb-n";
    case Family::scaling: return "scaling";
    case Family::long_strings: return "long-strings";
    case Family::fixed_shape: return "fixed-shape";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::random, Family::planted, Family::lb_L, Family::lb_n, Family::scaling,
                 Family::long_strings, Family::fixed_shape}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

Instance gen_random(const GenSpec& spec) {
  check_dimensions(spec);
  std::mt19937_64 rng(spec.seed);
  const auto radix = spec.alphabet.size();
  auto text = random_string(rng, spec.n, radix);
  std::vector<SymbolString> dict;
  for (std::size_t j = 0; j < spec.m; ++j) {
    const auto len = uniform(rng, spec.len_min, spec.len_max);
    if (len <= spec.n && uniform(rng, 0, 1) == 0) {
      dict.push_back(cut(text, uniform(rng, 0, spec.n - len), len));
    } else {
      dict.push_back(random_string(rng, len, radix));
    }
  }
  return Instance::make(std::move(text), std::move(dict), spec.alphabet);
}

Instance gen_planted(const GenSpec& spec) {
  check_dimensions(spec);
  const auto limit = spec.max_planted.value_or(spec.m);
  if (limit == 0) throw std::invalid_argument("a planted instance needs at least one planted piece");
  if (limit > spec.m) throw std::invalid_argument("more planted pieces than dictionary strings");
  if (spec.len_min > spec.n) throw std::invalid_argument("len-min exceeds n; no piece fits the text");
  const auto longest = std::min(spec.len_max, spec.n);
  if ((spec.n + longest - 1) / longest > limit) {
    throw std::invalid_argument("n cannot be covered by " + std::to_string(limit) + " pieces of length <= " +
                                std::to_string(longest));
  }

  std::mt19937_64 rng(spec.seed);
  const auto radix = spec.alphabet.size();
  auto text = random_string(rng, spec.n, radix);

  // Chain of pieces; positions below are 1-based, `covered` = rightmost end so far.
  std::set<SymbolString> planted;
  std::size_t covered = 0;
  std::size_t used = 0;
  while (covered < spec.n) {
    const auto remaining = spec.n - covered;
    const auto pieces_left = limit - used;
    const auto slack = (pieces_left - 1) * longest;
    const auto min_progress = remaining > slack ? remaining - slack : std::size_t{1};
    const auto len = uniform(rng, std::max(spec.len_min, min_progress), longest);
    const auto q_lo = covered + 1 + min_progress > len ? covered + 1 + min_progress - len : std::size_t{1};
    const auto q_hi = std::min(covered + 1, spec.n - len + 1);
    const auto q = uniform(rng, std::max<std::size_t>(q_lo, 1), q_hi);
    planted.insert(cut(text, q - 1, len));
    covered = std::max(covered, q + len - 1);
    ++used;
  }

  std::vector<SymbolString> dict(planted.begin(), planted.end());
  while (dict.size() < spec.m) dict.push_back(random_string(rng, uniform(rng, spec.len_min, spec.len_max), radix));
  std::shuffle(dict.begin(), dict.end(), rng);
  return Instance::make(std::move(text), std::move(dict), spec.alphabet);
}

Instance gen_lb_L(std::size_t n, std::size_t m, bool planted, std::uint64_t seed) {
  const auto half = n / 2;
  if (half < 1 || m < 2 || (m - 1) * half + 1 <= n) {
    throw std::invalid_argument("lb-L needs n >= 2 and (m - 1) * floor(n/2) + 1 > n so that L > n");
  }
  std::mt19937_64 rng(seed);
  const auto z = uniform(rng, 0, m - 1);
  auto filler = uniform(rng, 0, m - 2);
  if (filler >= z) ++filler;

  std::vector<std::size_t> lengths(m);
  for (std::size_t j = 0; j < m; ++j) lengths[j] = j == filler ? 1 : uniform(rng, 1, half);
  auto total = [&] {
    std::size_t s = 0;
    for (auto len : lengths) s += len;
    return s;
  };
  while (total() <= n) {
    const auto j = uniform(rng, 0, m - 1);
    if (j != filler && lengths[j] < half) ++lengths[j];
  }

  std::vector<SymbolString> dict;
  for (auto len : lengths) dict.emplace_back(len, Symbol{0});
  if (planted) {
    const auto j0 = uniform(rng, 1, lengths[z]);
    dict[z][j0 - 1] = 1;
  }
  SymbolString text(n, 0);
  text[half - 1] = 1;
  return Instance::make(std::move(text), std::move(dict), Alphabet::binary());
}

Instance gen_lb_n(std::size_t n, bool planted_zero, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::mt19937_64 rng(seed);
  SymbolString text(n, 1);
  if (planted_zero) text[uniform(rng, 0, n - 1)] = 0;
  return Instance::make(std::move(text), {SymbolString{1}}, Alphabet::binary());
}

Instance gen_scaling(std::size_t n, std::uint64_t seed) {
  const auto lg = hashing::ceil_log2_at_least_one(n);
  const auto len = std::min<std::size_t>(n, lg * lg);
  GenSpec spec;
  spec.family = Family::planted;
  spec.n = n;
  spec.m = (n + len - 1) / len;
  spec.len_min = spec.len_max = len;
  spec.seed = seed;
  return gen_planted(spec);
}

std::size_t long_string_length(std::size_t n, std::size_t m) {
  const double lgn = std::log2(static_cast<double>(n));
  const double inner = std::log2(static_cast<double>(m)) + (lgn > 0 ? std::log2(lgn) : 0.0);
  const double root = lgn * inner;
  if (root <= 1.0) return 1;
  return static_cast<std::size_t>(std::ceil(root * root - 1e-9));
}

Instance gen_long_strings(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("long-strings needs n >= 2");
  const auto len = long_string_length(n, m);
  if (len > n) throw std::invalid_argument("long-strings piece length " + std::to_string(len) + " exceeds n");
  GenSpec spec;
  spec.family = Family::planted;
  spec.n = n;
  spec.m = m;
  spec.len_min = spec.len_max = len;
  spec.seed = seed;
  return gen_planted(spec);
}

Instance gen_fixed_shape(std::size_t n, std::size_t m, std::size_t len, std::uint64_t seed) {
  if (len < 1 || len > n || m < 1) throw std::invalid_argument("fixed-shape needs 1 <= len <= n and m >= 1");
  std::mt19937_64 rng(seed);
  auto text = random_string(rng, n, 2);
  std::vector<SymbolString> dict;
  for (std::size_t j = 0; j < m; ++j) dict.push_back(cut(text, uniform(rng, 0, n - len), len));
  return Instance::make(std::move(text), std::move(dict), Alphabet::binary());
}

Instance generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::random: return gen_random(spec);
    case Family::planted: return gen_planted(spec);
    case Family::lb_L: return gen_lb_L(spec.n, spec.m, spec.planted, spec.seed);
    case Family::lb_n: return gen_lb_n(spec.n, spec.planted, spec.seed);
    case Family::scaling: return gen_scaling(spec.n, spec.seed);
    case Family::long_strings: return gen_long_strings(spec.n, spec.m, spec.seed);
    case Family::fixed_shape: return gen_fixed_shape(spec.n, spec.m, spec.len_max, spec.seed);
  }
  throw std::invalid_argument("unknown family");
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::classical: return "classical";
    case Engine::quantum_sim: return "quantum-sim";
    case Engine::naive: return "naive";
  }
  return "?";
}

Engine parse_engine(std::string_view name) {
  for (auto e : {Engine::classical, Engine::quantum_sim, Engine::naive}) {
    if (to_string(e) == name) return e;
  }
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

SolveResult run_engine(Engine engine, const Instance& inst, const EngineOptions& options) {
  switch (engine) {
    case Engine::classical: return solve_classical(inst, options.classical);
    case Engine::quantum_sim: return solve_quantum_sim(inst, options.quantum);
    case Engine::naive: {
      SolveResult out;
      out.attempts = 1;
      out.long_array = oracle::naive_long(inst, &out.ledger);
      out.cover = construct_qi(out.long_array, inst);
      return out;
    }
  }
  throw std::invalid_argument("unknown engine");
}

Quartiles quartiles(std::vector<double> values) {
  if (values.empty()) return {};
  std::sort(values.begin(), values.end());
  auto at = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    return values[lo] + (values[hi] - values[lo]) * (pos - static_cast<double>(lo));
  };
  return {at(0.5), at(0.75) - at(0.25)};
}

BenchTable bench_run(const BenchSpec& spec) {
  BenchTable table;
  for (auto n : spec.sizes) {
    for (std::size_t r = 0; r < spec.repeats; ++r) {
      const auto seed = spec.seed + 1000003 * r + n;
      GenSpec gen;
      gen.family = spec.family;
      gen.n = n;
      gen.m = spec.m;
      gen.len_min = 1;
      gen.len_max = spec.len;
      gen.seed = seed;
      const auto inst = generate(gen);
      for (auto engine : spec.engines) {
        auto options = spec.options;
        options.classical.seed = seed;
        options.quantum.seed = seed;
        const auto result = run_engine(engine, inst, options);
        table.rows.push_back(BenchRow{to_string(engine), to_string(spec.family), inst.n(), inst.m(),
                                      inst.total_length(), seed, result.feasible(), result.ledger});
      }
    }
  }

  std::map<std::pair<std::string, std::size_t>, std::vector<const BenchRow*>> groups;
  for (const auto& row : table.rows) groups[{row.engine, row.n}].push_back(&row);
  for (const auto& [key, rows] : groups) {
    auto collect = [&rows](auto field) {
      std::vector<double> v;
      for (const auto* row : rows) v.push_back(static_cast<double>(field(row->ledger)));
      return quartiles(std::move(v));
    };
    BenchSummary s;
    s.engine = key.first;
    s.n = key.second;
    s.runs = rows.size();
    s.characterQueries = collect([](const QueryLedger& l) { return l.characterQueries; });
    s.hashEvals = collect([](const QueryLedger& l) { return l.hashEvals; });
    s.compareCalls = collect([](const QueryLedger& l) { return l.compareCalls; });
    s.dictionaryReads = collect([](const QueryLedger& l) { return l.dictionaryReads; });
    s.total = collect([](const QueryLedger& l) { return l.total(); });
    s.elapsed_ns = collect([](const QueryLedger& l) { return l.elapsed_ns; });
    table.summary.push_back(s);
  }
  return table;
}

std::string to_csv(const BenchTable& table) {
  std::ostringstream out;
  out << "engine,family,n,m,L,seed,feasible,characterQueries,hashEvals,compareCalls,elapsed_ns\n";
  for (const auto& r : table.rows) {
    out << r.engine << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.L << ',' << r.seed << ','
        << (r.feasible ? "true" : "false") << ',' << r.ledger.characterQueries << ',' << r.ledger.hashEvals << ','
        << r.ledger.compareCalls << ',' << r.ledger.elapsed_ns << '\n';
  }
  return out.str();
}

std::string to_json_string(const BenchTable& table) {
  using nlohmann::json;
  auto q = [](const Quartiles& x) { return json{{"median", x.median}, {"iqr", x.iqr}}; };
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"engine", r.engine},
                    {"family", r.family},
                    {"n", r.n},
                    {"m", r.m},
                    {"L", r.L},
                    {"seed", r.seed},
                    {"feasible", r.feasible},
                    {"characterQueries", r.ledger.characterQueries},
                    {"hashEvals", r.ledger.hashEvals},
                    {"compareCalls", r.ledger.compareCalls},
                    {"dictionaryReads", r.ledger.dictionaryReads},
                    {"total", r.ledger.total()},
                    {"elapsed_ns", r.ledger.elapsed_ns}});
  }
  json summary = json::array();
  for (const auto& s : table.summary) {
    summary.push_back({{"engine", s.engine},
                       {"n", s.n},
                       {"runs", s.runs},
                       {"characterQueries", q(s.characterQueries)},
                       {"hashEvals", q(s.hashEvals)},
                       {"compareCalls", q(s.compareCalls)},
                       {"dictionaryReads", q(s.dictionaryReads)},
                       {"total", q(s.total)},
                       {"elapsed_ns", q(s.elapsed_ns)}});
  }
  return json{{"rows", rows}, {"summary", summary}}.dump(2);
}

}  // namespace textcover::harness
