#include <doctest.h>

#include <cmath>
#include <random>

#include "textcover/classical.hpp"
#include "textcover/harness.hpp"
#include "textcover/oracle.hpp"
#include "textcover/quantum_sim.hpp"

using namespace textcover;

namespace {

SymbolString enc(std::string_view s) { return Alphabet::ascii().encode(s); }

struct Rig {
  QuantumConfig cfg;
  std::mt19937_64 rng{1};
  QueryLedger ledger;
  QuantumComparator cmp;

  explicit Rig(QuantumConfig c, double gamma = 8) : cfg(c), cmp(cfg, gamma, rng, ledger) {}
};

QuantumConfig exact() {
  QuantumConfig c;
  c.error_injection = false;
  return c;
}

}  // namespace

TEST_CASE("model cost") {
  Rig rig(exact());
  CHECK(rig.cmp.model_cost(9) == 27);
  const auto u = enc("abcdefghi");
  CHECK_FALSE(rig.cmp.first_mismatch(u, u, 9));
  CHECK(rig.ledger.characterQueries == 27);
  CHECK(rig.cmp.first_mismatch(enc("0001"), enc("0000"), 4) == 4);
}

TEST_CASE("compare_base and compare examples") {
  Rig rig(exact());
  CHECK(rig.cmp.compare_base(enc("ab"), enc("ab"), 2) == 0);
  CHECK(rig.cmp.compare_base(enc("ab"), enc("aa"), 2) == 1);
  CHECK(rig.cmp.compare_base(enc("abc"), enc("abd"), 2) == 0);
  CHECK(rig.cmp.compare(enc("ab"), enc("abc")) == -1);
  CHECK(rig.cmp.compare(enc("abc"), enc("ab")) == 1);
  CHECK(rig.cmp.compare(enc("ba"), enc("abc")) == 1);
  CHECK(rig.ledger.compareCalls == 6);
}

TEST_CASE("gamma resolution") {
  const auto inst = Instance::from_strings("abababab", {"ab", "ba", "a", "b"});
  CHECK(resolve_gamma({}, inst) == doctest::Approx(12.0));
  QuantumConfig c;
  c.gamma = 1.5;
  CHECK_THROWS_AS(resolve_gamma(c, inst), std::invalid_argument);
  CHECK(resolve_gamma({}, Instance::from_strings("a", {"a"})) == doctest::Approx(2.0));
}

TEST_CASE("statevector first mismatch") {
  QuantumConfig c = exact();
  c.mode = QueryMode::statevector;
  SUBCASE("mismatches at 2 and 4") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      QueryLedger ledger;
      std::mt19937_64 rng(seed);
      QuantumComparator cmp(c, 8, rng, ledger);
      hits += cmp.first_mismatch(enc("0000"), enc("0101"), 4) == 2;
      CHECK(ledger.characterQueries <= grover_budget(4, c.cq));
    }
    CHECK(hits >= 180);
  }
  SUBCASE("k beyond the simulator limit") {
    Rig rig(c);
    const SymbolString u(17, 0);
    CHECK_THROWS_AS(rig.cmp.first_mismatch(u, u, 17), std::invalid_argument);
  }
  SUBCASE("grover region success rate") {
    std::mt19937_64 rng(99);
    int ok = 0, runs = 0;
    for (std::size_t k = 10; k <= 16; ++k) {
      for (int t = 0; t < 60; ++t) {
        std::vector<std::uint8_t> marked(k);
        for (auto& x : marked) x = (rng() % 4) == 0;
        const auto run = grover_first_marked(marked, 3.0, rng);
        CHECK(run.oracle_calls <= grover_budget(k, 3.0));
        std::optional<std::size_t> truth;
        for (std::size_t i = 0; i < k; ++i) {
          if (marked[i]) {
            truth = i;
            break;
          }
        }
        ok += run.index == truth;
        ++runs;
      }
    }
    CHECK(static_cast<double>(ok) / runs >= 0.85);
  }
}

TEST_CASE("grover budget") {
  CHECK(grover_budget(1, 3.0) == 3);
  CHECK(grover_budget(16, 3.0) == 12);
  CHECK(grover_budget(16, 0.1) == 1);
}

TEST_CASE("error injection rate") {
  QuantumConfig c;
  std::mt19937_64 rng(5);
  QueryLedger ledger;
  QuantumComparator cmp(c, 2.0, rng, ledger);
  const auto u = enc("abcd"), v = enc("abce");
  int wrong = 0;
  const int trials = 40000;
  for (int i = 0; i < trials; ++i) wrong += cmp.compare_base(u, v, 4) != -1;
  // 1 / gamma^3 = 0.125.
  CHECK(static_cast<double>(wrong) / trials == doctest::Approx(0.125).epsilon(0.08));
}

TEST_CASE("solve_quantum_sim examples") {
  const auto abab = Instance::from_strings("abab", {"ab", "ba"});
  const auto r = solve_quantum_sim(abab, exact());
  REQUIRE(r.feasible());
  CHECK(validate_cover(abab, *r.cover));
  CHECK(r.feasible() == solve_classical(abab).feasible());
  CHECK(r.ledger.hashEvals == 0);

  const auto whole = Instance::from_strings("abcab", {"abcab"});
  const auto w = solve_quantum_sim(whole, exact());
  REQUIRE(w.feasible());
  CHECK(w.cover->pieces == std::vector<Piece>{{1, 1}});
}

TEST_CASE("without injection the engines agree") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    harness::GenSpec spec;
    spec.m = 1 + rng() % 12;
    spec.len_max = 1 + rng() % 10;
    spec.n = 1 + rng() % std::min<std::size_t>(96, spec.m * spec.len_max);
    spec.seed = rng();
    const auto inst = trial % 2 ? harness::gen_planted(spec) : harness::gen_random(spec);
    const auto q = solve_quantum_sim(inst, exact());
    REQUIRE(q.long_array == oracle::naive_long(inst));
    REQUIRE(q.feasible() == solve_classical(inst).feasible());
  }
}

TEST_CASE("statevector engine on small instances") {
  QuantumConfig c = exact();
  c.mode = QueryMode::statevector;
  const auto inst = Instance::from_strings("abaab", {"ab", "aab", "ba"});
  const auto r = solve_quantum_sim(inst, c);
  if (r.cover) CHECK(validate_cover(inst, *r.cover));
  CHECK(r.ledger.characterQueries > 0);
}
