// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "textcover/classical.hpp"
#include "textcover/harness.hpp"
#include "textcover/oracle.hpp"
#include "textcover/quantum_sim.hpp"
#include "textcover/segment_tree.hpp"
#include "textcover/suffix_array.hpp"

using namespace textcover;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  [%2d] %s: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", id, name, out.detail.c_str(), secs);
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Half planted, half random; n <= 128, m <= 16.
std::vector<Instance> oracle_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (int i = 0; i < 1000; ++i) {
    harness::GenSpec spec;
    spec.m = 1 + rng() % 16;
    spec.len_min = 1;
    spec.len_max = 1 + rng() % 16;
    spec.n = 1 + rng() % std::min<std::size_t>(128, spec.m * spec.len_max);
    spec.seed = rng();
    spec.alphabet = i % 4 < 2 ? Alphabet::binary() : Alphabet::dna();
    out.push_back(i % 2 == 0 ? harness::gen_planted(spec) : harness::gen_random(spec));
  }
  return out;
}

Outcome agreement(const std::vector<Instance>& suite, double need,
                  const std::function<SolveResult(const Instance&, std::uint64_t)>& solve) {
  std::size_t agree = 0, returned = 0, valid = 0, feasible = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto truth = oracle::naive_feasible(suite[i]);
    const auto r = solve(suite[i], i);
    feasible += truth;
    agree += r.feasible() == truth;
    if (r.cover) {
      ++returned;
      valid += validate_cover(suite[i], *r.cover);
    }
  }
  const double rate = static_cast<double>(agree) / suite.size();
  return {rate >= need && valid == returned,
          fmt("agreement %.4f (need >= %.2f), valid covers %.0f/%.0f", rate, need, double(valid), double(returned)) +
              ", oracle-feasible " + std::to_string(feasible)};
}

double log2d(double x) { return std::log2(x); }

}  // namespace

int main() {
  const auto suite = oracle_suite(1);

  report(1, "classical oracle agreement (faithful primes, eps 0.01)", [&] {
    ClassicalConfig cfg;
    cfg.epsilon = 0.01;
    cfg.primes.mode = hashing::PrimeMode::faithful;
    return agreement(suite, 0.99, [&](const Instance& inst, std::uint64_t i) {
      auto c = cfg;
      c.seed = 1000 + i;
      return solve_classical(inst, c);
    });
  });

  report(2, "quantum-sim oracle agreement (gamma = m log2 n, injection on)", [&] {
    return agreement(suite, 0.98, [&](const Instance& inst, std::uint64_t i) {
      QuantumConfig cfg;
      cfg.seed = 2000 + i;
      return solve_quantum_sim(inst, cfg);
    });
  });

  report(3, "classical scaling law", [&] {
    harness::BenchSpec spec;
    spec.engines = {harness::Engine::classical};
    for (std::size_t e = 10; e <= 16; ++e) spec.sizes.push_back(std::size_t{1} << e);
    spec.repeats = 3;
    spec.seed = 3;
    spec.family = harness::Family::scaling;
    const auto table = harness::bench_run(spec);
    double worst = 0;
    std::string ratios;
    for (std::size_t i = 1; i < table.summary.size(); ++i) {
      const double ratio = table.summary[i].total.median / table.summary[i - 1].total.median;
      worst = std::max(worst, ratio);
      ratios += fmt("%.3f ", ratio);
    }
    return Outcome{worst <= 2.4, "per-doubling total ratios " + ratios + fmt("(max %.3f, need <= 2.4)", worst)};
  });

  report(4, "quantum query-count law on fixed-shape families", [&] {
    harness::BenchSpec spec;
    spec.engines = {harness::Engine::quantum_sim};
    for (std::size_t e = 10; e <= 14; ++e) spec.sizes.push_back(std::size_t{1} << e);
    spec.repeats = 3;
    spec.seed = 4;
    spec.family = harness::Family::fixed_shape;
    spec.m = 64;
    spec.len = 64;
    const auto table = harness::bench_run(spec);
    std::vector<double> norm;
    std::string shown;
    for (const auto& s : table.summary) {
      const double n = static_cast<double>(s.n), m = 64, L = 64.0 * 64.0;
      const double bound = log2d(n) * (log2d(m) + log2d(log2d(n))) * std::sqrt(m * L);
      norm.push_back(s.characterQueries.median / bound);
      shown += fmt("%.3f ", norm.back());
    }
    // Constant fitted at the smallest size.
    const double c = norm.front();
    double spread = 0;
    for (double x : norm) spread = std::max(spread, std::abs(x / c - 1));
    return Outcome{spread <= 0.25, "normalized queries " + shown + fmt("(max deviation %.1f%%, need <= 25%%)", 100 * spread)};
  });

  report(5, "crossover on long-strings family (n >= 2^14)", [&] {
    bool all = true;
    std::string shown;
    for (std::size_t e = 14; e <= 15; ++e) {
      const std::size_t n = std::size_t{1} << e;
      const auto inst = harness::gen_long_strings(n, 8, 5 + e);
      const auto q = solve_quantum_sim(inst, QuantumConfig{});
      const auto c = solve_classical(inst, ClassicalConfig{});
      const double qc = static_cast<double>(q.ledger.characterQueries);
      const double reads = static_cast<double>(c.ledger.dictionaryReads);
      all = all && qc < reads;
      shown += fmt("n=2^%.0f |s|=%.0f: quantum %.0f vs dictionary reads %.0f", double(e),
                   double(inst.max_piece_length()), qc, reads) +
               fmt(" (ratio %.2f); ", qc / reads);
    }
    return Outcome{all, shown + "need quantum < classical"};
  });

  report(6, "suffix array vs naive sort", [&] {
    std::mt19937_64 rng(6);
    int agree = 0;
    for (int i = 0; i < 500; ++i) {
      const std::uint32_t sigma = i % 2 ? 2 : 4;
      SymbolString text(1 + rng() % 512);
      for (auto& x : text) x = static_cast<Symbol>(rng() % sigma);
      agree += construct_suffix_array(text, sigma) == naive_suffix_array(text);
    }
    return Outcome{agree == 500, fmt("%.0f/500 agree", agree)};
  });

  report(7, "segment tree differential test", [&] {
    std::mt19937_64 rng(7);
    const LenIndexLess less;
    std::size_t ops = 0, mismatches = 0;
    while (ops < 10000) {
      const std::size_t l = 1 + rng() % 1024;
      std::vector<LenIndex> plain(l, kNeutralEntry);
      auto tree = make_max_segment_tree(plain);
      for (int k = 0; k < 1000 && ops < 10000; ++k, ++ops) {
        const auto kind = rng() % 4;
        if (kind < 2) {
          auto a = rng() % l, b = rng() % l;
          if (a > b) std::swap(a, b);
          const LenIndex x{rng() % 32, static_cast<std::int32_t>(1 + rng() % 16)};
          tree.update(a, b, x);
          for (auto i = a; i <= b; ++i) {
            if (less(plain[i], x)) plain[i] = x;
          }
        } else if (kind == 2) {
          tree.push();
        } else {
          const auto i = rng() % l;
          mismatches += !(tree.request(i) == plain[i]);
        }
      }
      tree.push();
      for (std::size_t i = 0; i < l; ++i) mismatches += !(tree.request(i) == plain[i]);
    }
    return Outcome{mismatches == 0, fmt("%.0f ops, %.0f mismatches", double(ops), double(mismatches))};
  });

  report(8, "hash error rate, faithful primes, eps 0.25", [&] {
    // Pool for n = 16, m = 1: r = 16 * 4 * 16 / 0.25 = 4096 primes. Pairs are
    // binary strings of length 16 whose integer values differ by a product
    // of small odd primes, so that many pool primes divide the difference.
    const hashing::PrimeBudget budget{16, 1, 0.25};
    const std::uint64_t diffs[] = {3 * 5 * 7 * 11 * 13, 3 * 5 * 7 * 11 * 13 * 4, 3 * 5 * 7 * 11 * 17,
                                   3 * 5 * 7 * 13 * 19, 3 * 5 * 7 * 11 * 23,     3 * 3 * 5 * 7 * 11 * 13};
    std::mt19937_64 rng(8);
    const auto to_bits = [](std::uint64_t value) {
      SymbolString s(16);
      for (std::size_t i = 0; i < 16; ++i) s[i] = static_cast<Symbol>((value >> i) & 1);
      return s;
    };
    std::size_t wrong = 0, trials = 0;
    for (; trials < 20000; ++trials) {
      const auto d = diffs[trials % std::size(diffs)];
      const auto low = rng() % ((std::uint64_t{1} << 16) - d);
      const auto u = to_bits(low), v = to_bits(low + d);
      const auto p = hashing::choose_prime(budget, {hashing::PrimeMode::faithful}, 2, rng);
      hashing::HashContext ctx(p, 2, 16);
      const auto iu = ctx.register_string(u), iv = ctx.register_string(v);
      const int got = ctx.compare(ctx.whole(iu), ctx.whole(iv));
      const int want = std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end()) ? -1 : 1;
      wrong += got != want;
    }
    const double rate = static_cast<double>(wrong) / trials;
    return Outcome{rate <= 0.25, fmt("%.0f errors in %.0f compares, rate %.5f (need <= 0.25)", double(wrong),
                                     double(trials), rate)};
  });

  report(9, "lower-bound fixtures, all engines (quantum gamma 64, injection on)", [&] {
    std::size_t runs = 0, correct = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::size_t n = 4 + seed % 61;
      const std::size_t m = 4 + seed % 5;
      for (bool planted : {true, false}) {
        const Instance fixtures[] = {harness::gen_lb_L(n, m, planted, seed), harness::gen_lb_n(n, !planted, seed)};
        for (const auto& inst : fixtures) {
          for (auto engine : {harness::Engine::classical, harness::Engine::quantum_sim, harness::Engine::naive}) {
            harness::EngineOptions options;
            options.classical.seed = seed;
            options.quantum.seed = seed;
            // lb-n has m = 1, where the default gamma is below 6 and injected
            // errors turn into missed matches that no cover check can catch.
            options.quantum.gamma = 64;
            ++runs;
            correct += harness::run_engine(engine, inst, options).feasible() == planted;
          }
        }
      }
    }
    return Outcome{correct == runs, fmt("%.0f/%.0f classified correctly", double(correct), double(runs))};
  });

  report(10, "statevector Grover first-mismatch validation", [&] {
    const double cq = 3.0;
    QuantumConfig sv;
    sv.mode = QueryMode::statevector;
    sv.error_injection = false;
    QuantumConfig model;  // injection on, gamma 8
    std::mt19937_64 rng(10);
    std::size_t runs = 0, correct = 0, over_budget = 0, sign_runs = 0, sign_diff = 0;
    std::size_t sampled_runs = 0, sampled_correct = 0;

    const auto one = [&](const SymbolString& u, const SymbolString& v) {
      const auto k = u.size();
      std::optional<std::size_t> truth;
      for (std::size_t i = 0; i < k; ++i) {
        if (u[i] != v[i]) {
          truth = i + 1;
          break;
        }
      }
      QueryLedger sv_ledger, model_ledger;
      QuantumComparator sv_cmp(sv, 8, rng, sv_ledger), model_cmp(model, 8, rng, model_ledger);
      const auto got = sv_cmp.first_mismatch(u, v, k);
      ++runs;
      correct += got == truth;
      if (k > 8) {
        ++sampled_runs;
        sampled_correct += got == truth;
      }
      over_budget += static_cast<double>(sv_ledger.characterQueries) > cq * std::sqrt(static_cast<double>(k));
      ++sign_runs;
      sign_diff += sv_cmp.compare_base(u, v, k) != model_cmp.compare_base(u, v, k);
    };

    for (std::size_t k = 1; k <= 8; ++k) {
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
          SymbolString u(k), v(k);
          for (std::size_t i = 0; i < k; ++i) {
            u[i] = static_cast<Symbol>((a >> i) & 1);
            v[i] = static_cast<Symbol>((b >> i) & 1);
          }
          one(u, v);
        }
      }
    }
    for (int s = 0; s < 200; ++s) {
      const std::size_t k = 9 + rng() % 8;
      // Mismatch density varies so the first mismatch lands across the range.
      const std::uint64_t density = 2 + rng() % 14;
      SymbolString u(k), v(k);
      for (std::size_t i = 0; i < k; ++i) {
        u[i] = static_cast<Symbol>(rng() & 1);
        v[i] = rng() % density == 0 ? static_cast<Symbol>(1 - u[i]) : u[i];
      }
      one(u, v);
    }
    const double success = static_cast<double>(correct) / runs;
    const double sampled = static_cast<double>(sampled_correct) / sampled_runs;
    const double disagree = static_cast<double>(sign_diff) / sign_runs;
    return Outcome{success >= 0.9 && sampled >= 0.9 && over_budget == 0 && disagree <= 0.1,
                   fmt("%.0f runs, first-mismatch success %.4f overall and %.4f on sampled k >= 9 (need >= 0.9), ",
                       double(runs), success, sampled) +
                       fmt("over budget %.0f, ", double(over_budget)) +
                       fmt("sign disagreement %.4f (need <= 0.1)", disagree)};
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
