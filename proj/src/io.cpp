#include "textcover/io.hpp"

#include <fstream>
#include <sstream>

namespace textcover::io {

AlphabetChoice parse_alphabet_choice(std::string_view name) {
  if (name == "infer") return AlphabetChoice::infer;
  if (name == "binary") return AlphabetChoice::binary;
  if (name == "dna") return AlphabetChoice::dna;
  if (name == "ascii") return AlphabetChoice::ascii;
  throw std::invalid_argument("unknown alphabet '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> split_lines(std::string_view content) {
  std::vector<std::string> lines;
  if (content.empty()) return lines;
  if (content.back() == '\n') content.remove_suffix(1);
  std::size_t start = 0;
  for (;;) {
    const auto end = content.find('\n', start);
    lines.emplace_back(content.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

SymbolString encode_line(const Alphabet& alphabet, const std::string& line, const std::string& where) {
  for (std::size_t col = 0; col < line.size(); ++col) {
    if (!alphabet.contains(line[col])) {
      throw FormatError(where + ", column " + std::to_string(col + 1) + " (offset " + std::to_string(col) +
                        "): byte " + std::to_string(static_cast<unsigned char>(line[col])) +
                        " is outside the alphabet");
    }
  }
  return alphabet.encode(line);
}

}  // namespace

Instance decode_instance_content(std::string_view text_content, std::string_view dict_content,
                                 AlphabetChoice choice) {
  const auto text_lines = split_lines(text_content);
  if (text_lines.empty() || text_lines.front().empty()) throw FormatError("text file: line 1 is empty");
  const auto& text = text_lines.front();

  const auto dict_lines = split_lines(dict_content);
  if (dict_lines.empty()) throw FormatError("dictionary file: no strings");
  for (std::size_t i = 0; i < dict_lines.size(); ++i) {
    if (dict_lines[i].empty()) throw FormatError("dictionary file: line " + std::to_string(i + 1) + " is empty");
  }

  Alphabet alphabet;
  switch (choice) {
    case AlphabetChoice::binary: alphabet = Alphabet::binary(); break;
    case AlphabetChoice::dna: alphabet = Alphabet::dna(); break;
    case AlphabetChoice::ascii: alphabet = Alphabet::ascii(); break;
    case AlphabetChoice::infer: {
      std::vector<std::string> parts(dict_lines);
      parts.push_back(text);
      alphabet = Alphabet::infer(parts);
      break;
    }
  }

  auto encoded_text = encode_line(alphabet, text, "text file: line 1");
  std::vector<SymbolString> dict;
  dict.reserve(dict_lines.size());
  for (std::size_t i = 0; i < dict_lines.size(); ++i) {
    dict.push_back(encode_line(alphabet, dict_lines[i], "dictionary file: line " + std::to_string(i + 1)));
  }
  return Instance::make(std::move(encoded_text), std::move(dict), std::move(alphabet));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

Instance decode_instance(const std::filesystem::path& text_file, const std::filesystem::path& dict_file,
                         AlphabetChoice choice) {
  return decode_instance_content(read_file(text_file), read_file(dict_file), choice);
}

void write_instance(const std::filesystem::path& dir, const Instance& inst) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / kTextFileName, inst.alphabet.decode(inst.text) + "\n");
  std::string dict;
  for (const auto& word : inst.dictionary) {
    dict += inst.alphabet.decode(word);
    dict += '\n';
  }
  write_file(dir / kDictFileName, dict);
}

nlohmann::json ledger_to_json(const QueryLedger& ledger) {
  return {{"characterQueries", ledger.characterQueries}, {"hashEvals", ledger.hashEvals},
          {"compareCalls", ledger.compareCalls},         {"dictionaryReads", ledger.dictionaryReads},
          {"textReads", ledger.textReads},               {"structureOps", ledger.structureOps},
          {"total", ledger.total()},                     {"elapsed_ns", ledger.elapsed_ns}};
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : report.pieces) pieces.push_back({{"pos", p.pos}, {"dict_index", p.dict_index}});
  nlohmann::json out{{"feasible", report.feasible},
                     {"pieces", pieces},
                     {"stats", ledger_to_json(report.stats)},
                     {"engine", report.engine},
                     {"seed", report.seed}};
  out["epsilon"] = report.epsilon ? nlohmann::json(*report.epsilon) : nlohmann::json(nullptr);
  out["gamma"] = report.gamma ? nlohmann::json(*report.gamma) : nlohmann::json(nullptr);
  return out;
}

Cover parse_cover(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("cover file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array()) {
    throw FormatError("cover file needs a \"pieces\" array");
  }
  Cover cover;
  for (std::size_t i = 0; i < doc["pieces"].size(); ++i) {
    const auto& p = doc["pieces"][i];
    if (!p.is_object() || !p.contains("pos") || !p.contains("dict_index") || !p["pos"].is_number_unsigned() ||
        !p["dict_index"].is_number_unsigned()) {
      throw FormatError("cover piece " + std::to_string(i + 1) + " needs unsigned \"pos\" and \"dict_index\"");
    }
    cover.pieces.push_back({p["pos"].get<std::size_t>(), p["dict_index"].get<std::size_t>()});
  }
  return cover;
}

}  // namespace textcover::io
