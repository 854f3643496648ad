#include "textcover/oracle.hpp"

#include <algorithm>
#include <deque>

namespace textcover::oracle {

MatchTable match_table(const Instance& inst, QueryLedger* ledger) {
  const auto n = inst.n();
  MatchTable table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < inst.m(); ++j) {
      const auto& word = inst.dictionary[j];
      if (word.size() > n - i) continue;
      const auto begin = inst.text.begin() + static_cast<std::ptrdiff_t>(i);
      const auto at = std::mismatch(word.begin(), word.end(), begin).first;
      if (ledger) ledger->characterQueries += static_cast<std::uint64_t>(at - word.begin()) + 1;
      if (at == word.end()) table[i].push_back(j + 1);
    }
  }
  return table;
}

LongArray naive_long(const Instance& inst, QueryLedger* ledger) {
  const auto table = match_table(inst, ledger);
  LongArray out(inst.n(), kNoMatch);
  for (std::size_t i = 0; i < inst.n(); ++i) {
    std::size_t best_len = 0;
    for (auto j : table[i]) {
      // Indices are ascending, so strict > keeps the smaller index on ties.
      if (inst.piece_length(j) > best_len) {
        best_len = inst.piece_length(j);
        out[i] = static_cast<std::int32_t>(j);
      }
    }
  }
  return out;
}

bool naive_feasible(const Instance& inst) {
  const auto n = inst.n();
  const auto table = match_table(inst);
  std::vector<bool> seen(n + 1, false);
  std::deque<std::size_t> frontier;
  for (auto j : table[0]) {
    const auto end = inst.piece_length(j);
    if (!seen[end]) {
      seen[end] = true;
      frontier.push_back(end);
    }
  }
  while (!frontier.empty()) {
    const auto end = frontier.front();
    frontier.pop_front();
    if (end == n) return true;
    for (std::size_t q = 1; q <= end + 1; ++q) {
      for (auto j : table[q - 1]) {
        const auto next = std::max(end, q + inst.piece_length(j) - 1);
        if (!seen[next]) {
          seen[next] = true;
          frontier.push_back(next);
        }
      }
    }
  }
  return false;
}

}  // namespace textcover::oracle
