#include "textcover/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace textcover {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(-1);
  if (symbols_.empty() || symbols_.size() > 256) {
    throw std::invalid_argument("alphabet must hold between 1 and 256 symbols");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = index_[static_cast<unsigned char>(symbols_[i])];
    if (slot >= 0) {
      throw std::invalid_argument("duplicate alphabet symbol");
    }
    slot = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::ascii() {
  std::string all(128, '\0');
  for (int c = 0; c < 128; ++c) all[c] = static_cast<char>(c);
  return Alphabet(all);
}

Alphabet Alphabet::infer(std::span<const std::string> parts) {
  std::array<bool, 256> seen{};
  for (const auto& part : parts) {
    for (char c : part) seen[static_cast<unsigned char>(c)] = true;
  }
  std::string symbols;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) symbols.push_back(static_cast<char>(c));
  }
  return Alphabet(symbols);
}

Symbol Alphabet::index(char c) const {
  const auto i = index_[static_cast<unsigned char>(c)];
  if (i < 0) throw std::invalid_argument("symbol outside alphabet");
  return static_cast<Symbol>(i);
}

SymbolString Alphabet::encode(std::string_view s) const {
  SymbolString out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto idx = index_[static_cast<unsigned char>(s[i])];
    if (idx < 0) {
      throw std::invalid_argument("byte " + std::to_string(static_cast<unsigned char>(s[i])) +
                                  " at offset " + std::to_string(i) + " is outside the alphabet");
    }
    out[i] = static_cast<Symbol>(idx);
  }
  return out;
}

std::string Alphabet::decode(SymbolView s) const {
  std::string out(s.size(), '\0');
  std::transform(s.begin(), s.end(), out.begin(), [this](Symbol x) { return symbols_.at(x); });
  return out;
}

Instance Instance::make(SymbolString text, std::vector<SymbolString> dictionary, Alphabet alphabet) {
  if (text.empty()) throw std::invalid_argument("text must be non-empty");
  if (dictionary.empty()) throw std::invalid_argument("dictionary must be non-empty");
  const auto k = alphabet.size();
  auto in_alphabet = [k](const SymbolString& s) {
    return std::all_of(s.begin(), s.end(), [k](Symbol x) { return x < k; });
  };
  if (!in_alphabet(text)) throw std::invalid_argument("text symbol outside alphabet");
  for (std::size_t j = 0; j < dictionary.size(); ++j) {
    if (dictionary[j].empty()) {
      throw std::invalid_argument("dictionary string " + std::to_string(j + 1) + " is empty");
    }
    if (!in_alphabet(dictionary[j])) {
      throw std::invalid_argument("dictionary string " + std::to_string(j + 1) +
                                  " has a symbol outside the alphabet");
    }
  }
  return Instance{std::move(text), std::move(dictionary), std::move(alphabet)};
}

Instance Instance::from_strings(std::string_view text, const std::vector<std::string>& dictionary,
                                std::optional<Alphabet> alphabet) {
  if (!alphabet) {
    std::vector<std::string> parts(dictionary);
    parts.emplace_back(text);
    alphabet = Alphabet::infer(parts);
  }
  std::vector<SymbolString> dict;
  dict.reserve(dictionary.size());
  for (const auto& s : dictionary) dict.push_back(alphabet->encode(s));
  return make(alphabet->encode(text), std::move(dict), *alphabet);
}

std::size_t Instance::total_length() const {
  std::size_t total = 0;
  for (const auto& s : dictionary) total += s.size();
  return total;
}

std::size_t Instance::max_piece_length() const {
  std::size_t best = 0;
  for (const auto& s : dictionary) best = std::max(best, s.size());
  return best;
}

}  // namespace textcover
