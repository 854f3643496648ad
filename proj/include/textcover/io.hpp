#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "textcover/instance.hpp"
#include "textcover/ledger.hpp"

namespace textcover::io {

/// Unreadable or unwritable files.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed content: empty text, blank dictionary line, foreign symbol, bad cover JSON.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class AlphabetChoice { infer, binary, dna, ascii };

AlphabetChoice parse_alphabet_choice(std::string_view name);

/// Text = first line of `text_content`; dictionary = one string per line.
/// A single trailing LF is not a line of its own.
Instance decode_instance_content(std::string_view text_content, std::string_view dict_content,
                                 AlphabetChoice choice = AlphabetChoice::infer);

Instance decode_instance(const std::filesystem::path& text_file, const std::filesystem::path& dict_file,
                         AlphabetChoice choice = AlphabetChoice::infer);

inline constexpr const char* kTextFileName = "text.txt";
inline constexpr const char* kDictFileName = "dict.txt";

/// Writes text.txt and dict.txt (LF-terminated lines) into `dir`, creating it.
void write_instance(const std::filesystem::path& dir, const Instance& inst);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

nlohmann::json ledger_to_json(const QueryLedger& ledger);

struct RunReport {
  bool feasible = false;
  std::vector<Piece> pieces;
  QueryLedger stats;
  std::string engine;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
  std::optional<double> gamma;
};

nlohmann::json to_json(const RunReport& report);

/// Reads the pieces of a cover file: a RunReport, or any object with a
/// "pieces" array of {pos, dict_index}. Throws FormatError.
Cover parse_cover(std::string_view json_text);

}  // namespace textcover::io
