#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace textcover {

/// Index of a symbol in its alphabet, in [0, K).
using Symbol = std::uint8_t;
using SymbolString = std::vector<Symbol>;
using SymbolView = std::span<const Symbol>;

/// Ordered finite alphabet of single-byte symbols.
class Alphabet {
 public:
  Alphabet() { index_.fill(-1); }
  explicit Alphabet(std::string_view symbols);

  static Alphabet binary() { return Alphabet("01"); }
  static Alphabet dna() { return Alphabet("ACGT"); }
  static Alphabet ascii();
  /// Sorted set of the distinct bytes appearing in any of `parts`.
  static Alphabet infer(std::span<const std::string> parts);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
  Symbol index(char c) const;
  char symbol(Symbol s) const { return symbols_.at(s); }

  /// Throws std::invalid_argument naming the first offending offset.
  SymbolString encode(std::string_view s) const;
  std::string decode(SymbolView s) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// A text and the dictionary it should be tiled from.
struct Instance {
  SymbolString text;
  std::vector<SymbolString> dictionary;
  Alphabet alphabet;

  /// Validates the instance invariants, throwing std::invalid_argument.
  static Instance make(SymbolString text, std::vector<SymbolString> dictionary, Alphabet alphabet);

  /// Convenience factory; infers the alphabet from content when none is given.
  static Instance from_strings(std::string_view text, const std::vector<std::string>& dictionary,
                               std::optional<Alphabet> alphabet = std::nullopt);

  std::size_t n() const { return text.size(); }
  std::size_t m() const { return dictionary.size(); }
  std::size_t total_length() const;
  std::size_t max_piece_length() const;
  /// Length of dictionary string `j` (1-based).
  std::size_t piece_length(std::size_t j) const { return dictionary.at(j - 1).size(); }

  bool operator==(const Instance&) const = default;
};

/// One tile of a cover: dictionary string `dict_index` placed at text position `pos`.
/// Both fields are 1-based.
struct Piece {
  std::size_t pos = 0;
  std::size_t dict_index = 0;

  bool operator==(const Piece&) const = default;
};

struct Cover {
  std::vector<Piece> pieces;

  std::size_t size() const { return pieces.size(); }
  bool operator==(const Cover&) const = default;
};

/// For each text position (0-based slot), the 1-based index of the longest
/// dictionary string matching there, or -1 when nothing matches.
using LongArray = std::vector<std::int32_t>;

inline constexpr std::int32_t kNoMatch = -1;

}  // namespace textcover
