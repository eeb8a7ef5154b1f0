#include "ucycle/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "ucycle/errors.hpp"

namespace ucycle {

namespace {

bool binary_display(std::size_t alphabet) { return alphabet == 2; }

bool digit_display(std::size_t alphabet) { return alphabet <= 9; }

std::size_t display_offset(std::size_t alphabet) { return binary_display(alphabet) ? 0 : 1; }

Symbol parse_symbol(std::string_view token, std::size_t alphabet) {
  unsigned value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
    throw InvalidArgument("malformed symbol '" + std::string(token) + "'");
  }
  const std::size_t offset = display_offset(alphabet);
  if (value < offset || value - offset >= alphabet) {
    throw InvalidArgument("symbol " + std::string(token) + " outside alphabet of size " +
                          std::to_string(alphabet));
  }
  return static_cast<Symbol>(value - offset);
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (alphabet_ == 0 || alphabet_ > kMaxAlphabet) {
    throw InvalidArgument("alphabet size must be in [1, 256]");
  }
  if (symbols_.empty()) throw InvalidArgument("a word has at least one symbol");
  for (Symbol s : symbols_) {
    if (s >= alphabet_) throw InvalidArgument("symbol outside alphabet");
  }
}

Word window(const Word& w, std::size_t start, std::size_t size) {
  if (size == 0 || size > w.size()) throw InvalidArgument("window size out of range");
  if (start >= w.size()) throw InvalidArgument("window start out of range");
  std::vector<Symbol> out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = w[(start + i) % w.size()];
  return Word(std::move(out), w.alphabet());
}

Word rotate(const Word& w, std::int64_t shift) {
  const auto len = static_cast<std::int64_t>(w.size());
  const auto s = static_cast<std::size_t>(((shift % len) + len) % len);
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(s), out.end());
  return Word(std::move(out), w.alphabet());
}

std::size_t minimal_period(const Word& w) {
  const auto sym = w.symbols();
  const std::size_t len = sym.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    if (std::equal(sym.begin() + p, sym.end(), sym.begin())) return p;
  }
  return len;
}

Word shift_append(const Word& w, Symbol next) {
  std::vector<Symbol> out(w.symbols().begin() + 1, w.symbols().end());
  out.push_back(next);
  return Word(std::move(out), w.alphabet());
}

Word shift_prepend(Symbol first, const Word& w) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  out.push_back(first);
  out.insert(out.end(), w.symbols().begin(), w.symbols().end() - 1);
  return Word(std::move(out), w.alphabet());
}

bool ends_with(const Word& w, std::span<const Symbol> suffix) {
  if (suffix.size() > w.size()) return false;
  return std::equal(suffix.begin(), suffix.end(), w.symbols().end() - suffix.size());
}

std::string symbol_to_string(Symbol s, std::size_t alphabet) {
  return std::to_string(s + display_offset(alphabet));
}

std::string to_string(const Word& w) {
  std::string out;
  const bool digits = digit_display(w.alphabet());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += symbol_to_string(w[i], w.alphabet());
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t alphabet) {
  if (alphabet == 0 || alphabet > kMaxAlphabet) throw InvalidArgument("alphabet size must be in [1, 256]");
  std::vector<Symbol> symbols;
  if (text.find(',') != std::string_view::npos || !digit_display(alphabet)) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      symbols.push_back(parse_symbol(text.substr(pos, comma - pos), alphabet));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) symbols.push_back(parse_symbol(std::string_view(&c, 1), alphabet));
  }
  return Word(std::move(symbols), alphabet);
}

bool fits_code(std::size_t length, std::size_t alphabet) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < length; ++i) {
    if (alphabet > 1 && limit < alphabet) return false;
    limit /= alphabet;
  }
  return true;
}

std::uint64_t encode(std::span<const Symbol> symbols, std::size_t alphabet) {
  std::uint64_t code = 0;
  for (Symbol s : symbols) code = code * alphabet + s;
  return code;
}

Word decode(std::uint64_t code, std::size_t length, std::size_t alphabet) {
  std::vector<Symbol> out(length);
  for (std::size_t i = length; i-- > 0;) {
    out[i] = static_cast<Symbol>(code % alphabet);
    code /= alphabet;
  }
  return Word(std::move(out), alphabet);
}

}  // namespace ucycle
