#pragma once

#include <optional>
#include <vector>

#include "textcover/instance.hpp"
#include "textcover/ledger.hpp"

namespace textcover::oracle {

/// For each text position (0-based), the 1-based indices of every dictionary
/// string matching there, by direct symbol comparison.
using MatchTable = std::vector<std::vector<std::size_t>>;

MatchTable match_table(const Instance& inst, QueryLedger* ledger = nullptr);

/// Longest match per position; ties go to the smaller index.
LongArray naive_long(const Instance& inst, QueryLedger* ledger = nullptr);

/// Whether any cover exists: breadth-first search over "rightmost covered
/// end" states, seeded by every match at position 1. A match starting at
/// q <= e + 1 moves state e to max(e, q + len - 1).
bool naive_feasible(const Instance& inst);

}  // namespace textcover::oracle
