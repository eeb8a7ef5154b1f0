#include "ucycle/function_class.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <utility>

#include "ucycle/errors.hpp"

namespace ucycle {

namespace {

constexpr std::array<std::pair<FunctionClass, std::string_view>, 7> kNames{{
    {FunctionClass::AllWords, "all-words"},
    {FunctionClass::Injective, "injective"},
    {FunctionClass::Onto, "onto"},
    {FunctionClass::AlmostOnto, "almost-onto"},
    {FunctionClass::Equitable, "equitable"},
    {FunctionClass::OneInequitable, "one-inequitable"},
    {FunctionClass::TwoInequitable, "two-inequitable"},
}};

// Required |#ones - #zeros| for the binary classes.
std::size_t target_imbalance(FunctionClass c) {
  switch (c) {
    case FunctionClass::Equitable: return 0;
    case FunctionClass::OneInequitable: return 1;
    case FunctionClass::TwoInequitable: return 2;
    default: return 0;
  }
}

bool is_binary_class(FunctionClass c) {
  return c == FunctionClass::Equitable || c == FunctionClass::OneInequitable ||
         c == FunctionClass::TwoInequitable;
}

// Depth-first lexicographic generation with per-class pruning on symbol counts.
class MemberWalker {
 public:
  MemberWalker(const ClassSpec& spec, const std::function<void(std::span<const Symbol>)>& visit)
      : spec_(spec), visit_(visit), word_(spec.k), counts_(spec.n, 0) {}

  void run() { descend(0); }

 private:
  bool feasible(std::size_t filled) const {
    const std::size_t remaining = spec_.k - filled;
    switch (spec_.cls) {
      case FunctionClass::AllWords:
      case FunctionClass::Injective:
        return true;
      case FunctionClass::Onto:
        return spec_.n - distinct_ <= remaining;
      case FunctionClass::AlmostOnto:
        return distinct_ + 1 <= spec_.n && spec_.n - 1 - distinct_ <= remaining;
      case FunctionClass::Equitable:
      case FunctionClass::OneInequitable:
      case FunctionClass::TwoInequitable: {
        const auto d = static_cast<long>(target_imbalance(spec_.cls));
        const auto diff = static_cast<long>(counts_[1]) - static_cast<long>(counts_[0]);
        const auto r = static_cast<long>(remaining);
        // x more ones and r - x more zeros must land on |diff + 2x - r| == d.
        for (long sign : {-1L, 1L}) {
          const long twice_x = sign * d - diff + r;
          if (twice_x >= 0 && twice_x % 2 == 0 && twice_x / 2 <= r) return true;
        }
        return false;
      }
    }
    return false;
  }

  void descend(std::size_t pos) {
    if (pos == spec_.k) {
      if (is_member_unchecked(spec_, word_)) visit_(word_);
      return;
    }
    for (std::size_t s = 0; s < spec_.n; ++s) {
      if (spec_.cls == FunctionClass::Injective && counts_[s] > 0) continue;
      word_[pos] = static_cast<Symbol>(s);
      if (counts_[s]++ == 0) ++distinct_;
      if (feasible(pos + 1)) descend(pos + 1);
      if (--counts_[s] == 0) --distinct_;
    }
  }

  const ClassSpec& spec_;
  const std::function<void(std::span<const Symbol>)>& visit_;
  std::vector<Symbol> word_;
  std::vector<std::size_t> counts_;
  std::size_t distinct_ = 0;
};

std::size_t distinct_symbols(std::span<const Symbol> w) {
  std::array<bool, kMaxAlphabet> seen{};
  std::size_t distinct = 0;
  for (Symbol s : w) {
    if (!seen[s]) {
      seen[s] = true;
      ++distinct;
    }
  }
  return distinct;
}

}  // namespace

std::string_view class_name(FunctionClass c) {
  for (const auto& [cls, name] : kNames) {
    if (cls == c) return name;
  }
  return "unknown";
}

FunctionClass parse_class_name(std::string_view name) {
  for (const auto& [cls, known] : kNames) {
    if (known == name) return cls;
  }
  throw InvalidArgument("unknown class '" + std::string(name) + "'");
}

bool is_target_class(FunctionClass c) {
  return c != FunctionClass::AlmostOnto && c != FunctionClass::TwoInequitable;
}

void validate(const ClassSpec& spec) {
  const std::string what = describe(spec);
  if (spec.k == 0) throw InvalidArgument(what + ": k must be positive");
  if (spec.n == 0 || spec.n > kMaxAlphabet) throw InvalidArgument(what + ": n must be in [1, 256]");
  if (is_binary_class(spec.cls) && spec.n != 2) throw InvalidArgument(what + ": class is binary, n must be 2");
  switch (spec.cls) {
    case FunctionClass::AllWords:
      break;
    case FunctionClass::Injective:
      if (spec.k > spec.n) throw InvalidArgument(what + ": injective requires k <= n");
      break;
    case FunctionClass::Onto:
      if (spec.k < spec.n) throw InvalidArgument(what + ": onto requires k >= n");
      break;
    case FunctionClass::AlmostOnto:
      if (spec.n < 2 || spec.k + 1 < spec.n) throw InvalidArgument(what + ": almost-onto requires n >= 2 and k >= n-1");
      break;
    case FunctionClass::Equitable:
      if (spec.k % 2 != 0 || spec.k < 2) throw InvalidArgument(what + ": equitable requires even k >= 2");
      break;
    case FunctionClass::OneInequitable:
      if (spec.k % 2 != 1 || spec.k < 3) throw InvalidArgument(what + ": one-inequitable requires odd k >= 3");
      break;
    case FunctionClass::TwoInequitable:
      if (spec.k % 2 != 0) throw InvalidArgument(what + ": two-inequitable requires even k");
      break;
  }
}

ClassSpec make_spec(FunctionClass cls, std::size_t k, std::size_t n) {
  ClassSpec spec{cls, k, n};
  validate(spec);
  return spec;
}

std::string describe(const ClassSpec& spec) {
  return std::string(class_name(spec.cls)) + " k=" + std::to_string(spec.k) + " n=" + std::to_string(spec.n);
}

bool has_all_symbols(std::span<const Symbol> w, std::size_t n) { return distinct_symbols(w) == n; }

bool misses_exactly_one(std::span<const Symbol> w, std::size_t n) { return distinct_symbols(w) + 1 == n; }

bool has_no_repeat(std::span<const Symbol> w) { return distinct_symbols(w) == w.size(); }

std::size_t binary_imbalance(std::span<const Symbol> w) {
  std::size_t ones = 0;
  for (Symbol s : w) ones += s;
  const std::size_t zeros = w.size() - ones;
  return ones > zeros ? ones - zeros : zeros - ones;
}

bool is_member_unchecked(const ClassSpec& spec, std::span<const Symbol> w) {
  switch (spec.cls) {
    case FunctionClass::AllWords: return true;
    case FunctionClass::Injective: return has_no_repeat(w);
    case FunctionClass::Onto: return has_all_symbols(w, spec.n);
    case FunctionClass::AlmostOnto: return misses_exactly_one(w, spec.n);
    case FunctionClass::Equitable:
    case FunctionClass::OneInequitable:
    case FunctionClass::TwoInequitable:
      return binary_imbalance(w) == target_imbalance(spec.cls);
  }
  return false;
}

bool is_member(const ClassSpec& spec, const Word& w) {
  if (w.size() != spec.k) {
    throw InvalidArgument("word length " + std::to_string(w.size()) + " does not match " + describe(spec));
  }
  if (w.alphabet() != spec.n) {
    throw InvalidArgument("word alphabet " + std::to_string(w.alphabet()) + " does not match " + describe(spec));
  }
  return is_member_unchecked(spec, w.symbols());
}

void for_each_member(const ClassSpec& spec, const std::function<void(std::span<const Symbol>)>& visit) {
  validate(spec);
  MemberWalker(spec, visit).run();
}

std::vector<Word> enumerate(const ClassSpec& spec) {
  std::vector<Word> out;
  for_each_member(spec, [&](std::span<const Symbol> w) {
    out.emplace_back(std::vector<Symbol>(w.begin(), w.end()), spec.n);
  });
  return out;
}

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

BigInt onto_count(std::size_t k, std::size_t n) {
  BigInt total = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt term = binomial(n, i) * boost::multiprecision::pow(BigInt(n - i), static_cast<unsigned>(k));
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt cardinality(const ClassSpec& spec) {
  validate(spec);
  const std::size_t k = spec.k;
  const std::size_t n = spec.n;
  switch (spec.cls) {
    case FunctionClass::AllWords:
      return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k));
    case FunctionClass::Injective: {
      BigInt falling = 1;
      for (std::size_t i = 0; i < k; ++i) falling *= n - i;
      return falling;
    }
    case FunctionClass::Onto: return onto_count(k, n);
    case FunctionClass::AlmostOnto: return BigInt(n) * onto_count(k, n - 1);
    case FunctionClass::Equitable: return binomial(k, k / 2);
    case FunctionClass::OneInequitable: return 2 * binomial(k, k / 2);
    case FunctionClass::TwoInequitable: return 2 * binomial(k, k / 2 - 1);
  }
  return 0;
}

std::size_t to_size(const BigInt& value) {
  if (value < 0 || value > BigInt(std::numeric_limits<std::size_t>::max())) {
    throw InvalidArgument("value " + value.str() + " does not fit in a machine word");
  }
  return value.convert_to<std::size_t>();
}

std::string_view reason_name(ExistenceReason r) {
  switch (r) {
    case ExistenceReason::EulerianConnected: return "eulerian-connected";
    case ExistenceReason::DegreeImbalance: return "degree-imbalance";
    case ExistenceReason::Disconnected: return "disconnected";
    case ExistenceReason::EmptyClass: return "empty-class";
  }
  return "unknown";
}

}  // namespace ucycle
