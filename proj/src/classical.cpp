#include "textcover/classical.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace textcover {

LongArray build_long(const MaxSegmentTree& tree, const SuffixArray& suf) {
  LongArray out(suf.size(), kNoMatch);
  for (std::size_t i = 0; i < suf.size(); ++i) out[suf[i]] = tree.request(i).ind;
  return out;
}

std::optional<SuffixRange> search_segment_hashed(const hashing::HashContext& ctx, hashing::StringId text,
                                                 hashing::StringId word, const SuffixArray& suf,
                                                 QueryLedger* ledger) {
  const auto n = ctx.symbols(text).size();
  const auto pattern = ctx.whole(word);
  return search_segment(n, [&](std::size_t rank) {
    const std::size_t start = suf[rank];
    const hashing::HashedView prefix{text, start, std::min(n - start, pattern.length)};
    return ctx.compare(prefix, pattern, ledger);
  });
}

namespace {

SolveResult run_once(const Instance& inst, const ClassicalConfig& cfg, std::mt19937_64& rng) {
  SolveResult out;
  const auto radix = static_cast<std::uint32_t>(inst.alphabet.size());
  const hashing::PrimeBudget budget{inst.n(), inst.m(), cfg.epsilon};
  out.prime = hashing::choose_prime(budget, cfg.primes, radix, rng);

  hashing::HashContext ctx(out.prime, radix, std::max(inst.n(), inst.max_piece_length()));
  const auto text_id = ctx.register_string(inst.text);
  out.ledger.textReads += inst.n();
  std::vector<hashing::StringId> word_ids;
  word_ids.reserve(inst.m());
  for (const auto& word : inst.dictionary) {
    word_ids.push_back(ctx.register_string(word));
    out.ledger.dictionaryReads += word.size();
  }

  const auto suf = construct_suffix_array(inst.text, radix);
  out.ledger.textReads += inst.n();

  detail::aggregate_and_cover(
      inst, suf,
      [&](std::size_t j) { return search_segment_hashed(ctx, text_id, word_ids[j], suf, &out.ledger); }, out);
  return out;
}

}  // namespace

SolveResult solve_classical(const Instance& inst, const ClassicalConfig& cfg) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const auto started = std::chrono::steady_clock::now();
  std::mt19937_64 rng(cfg.seed);

  QueryLedger spent;
  SolveResult result;
  for (unsigned attempt = 1; attempt <= 2; ++attempt) {
    result = run_once(inst, cfg, rng);
    spent += result.ledger;
    result.attempts = attempt;
    if (!cfg.verify_final || !result.cover) break;
    spent.structureOps += detail::cover_check_cost(inst, *result.cover);
    if (validate_cover(inst, *result.cover)) break;
    // A hash collision produced a bogus cover.
    result.cover.reset();
  }
  result.ledger = spent;
  result.ledger.elapsed_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace textcover
