#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ucycle {

using Symbol = std::uint8_t;

inline constexpr std::size_t kMaxAlphabet = 256;

/// Immutable fixed-length word over the alphabet {0, ..., alphabet-1}.
///
/// Symbols are 0-based internally. For display, a binary alphabet renders as
/// 0/1 and every other alphabet renders 1-based (symbol i prints as i+1).
class Word {
 public:
  Word(std::vector<Symbol> symbols, std::size_t alphabet);
  Word(std::initializer_list<Symbol> symbols, std::size_t alphabet)
      : Word(std::vector<Symbol>(symbols), alphabet) {}

  std::size_t size() const { return symbols_.size(); }
  std::size_t alphabet() const { return alphabet_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic on symbols; alphabets are compared first.
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::size_t alphabet_;
};

/// Cyclic subword of `size` symbols starting at `start`.
Word window(const Word& w, std::size_t start, std::size_t size);

/// Left cyclic shift by `shift` (negative shifts rotate right).
Word rotate(const Word& w, std::int64_t shift);

/// Smallest p dividing w.size() with rotate(w, p) == w.
std::size_t minimal_period(const Word& w);

/// Drops the first symbol and appends `next`: the step along one graph edge.
Word shift_append(const Word& w, Symbol next);

/// Prepends `first` and drops the last symbol: the inverse of shift_append.
Word shift_prepend(Symbol first, const Word& w);

bool ends_with(const Word& w, std::span<const Symbol> suffix);

// Text form: contiguous digits when the alphabet fits in one digit per symbol
// (n <= 9, or n == 2 with 0/1), otherwise comma-separated 1-based integers.
std::string symbol_to_string(Symbol s, std::size_t alphabet);
std::string to_string(const Word& w);
Word parse_word(std::string_view text, std::size_t alphabet);

// Base-`alphabet` packing of symbol sequences, most significant symbol first,
// so numeric order matches lexicographic order for equal lengths.
std::uint64_t encode(std::span<const Symbol> symbols, std::size_t alphabet);
Word decode(std::uint64_t code, std::size_t length, std::size_t alphabet);

/// True when alphabet^length is representable in 64 bits.
bool fits_code(std::size_t length, std::size_t alphabet);

}  // namespace ucycle
