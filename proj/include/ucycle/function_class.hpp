#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ucycle/word.hpp"

namespace ucycle {

using BigInt = boost::multiprecision::cpp_int;

enum class FunctionClass {
  AllWords,
  Injective,
  Onto,
  AlmostOnto,
  Equitable,
  OneInequitable,
  TwoInequitable,
};

std::string_view class_name(FunctionClass c);
/// Parses any of the seven class names; throws InvalidArgument otherwise.
FunctionClass parse_class_name(std::string_view name);
/// The names accepted as U-cycle targets on the command line.
bool is_target_class(FunctionClass c);

/// Words of length k over an n-symbol alphabet that belong to one class.
struct ClassSpec {
  FunctionClass cls;
  std::size_t k;
  std::size_t n;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

/// Checks the per-class invariants on (k, n) and returns the spec unchanged.
ClassSpec make_spec(FunctionClass cls, std::size_t k, std::size_t n);
void validate(const ClassSpec& spec);
std::string describe(const ClassSpec& spec);

// Symbol-count predicates used both for class membership and for classifying
// graph vertices (which need not have the class's own length).
bool has_all_symbols(std::span<const Symbol> w, std::size_t n);
bool misses_exactly_one(std::span<const Symbol> w, std::size_t n);
bool has_no_repeat(std::span<const Symbol> w);
/// |#ones - #zeros| for a binary word.
std::size_t binary_imbalance(std::span<const Symbol> w);

/// Membership on raw symbols; assumes length and alphabet already match.
bool is_member_unchecked(const ClassSpec& spec, std::span<const Symbol> w);
bool is_member(const ClassSpec& spec, const Word& w);

/// Visits every member in lexicographic order. The span is only valid
/// during the callback.
void for_each_member(const ClassSpec& spec,
                     const std::function<void(std::span<const Symbol>)>& visit);
std::vector<Word> enumerate(const ClassSpec& spec);

/// Closed-form class size.
BigInt cardinality(const ClassSpec& spec);

BigInt binomial(std::size_t n, std::size_t r);
BigInt onto_count(std::size_t k, std::size_t n);

/// Narrowing conversion that throws InvalidArgument when the value does not fit.
std::size_t to_size(const BigInt& value);

enum class ExistenceReason { EulerianConnected, DegreeImbalance, Disconnected, EmptyClass };

std::string_view reason_name(ExistenceReason r);

struct DegreeWitness {
  Word vertex;
  std::size_t in_degree;
  std::size_t out_degree;
};

struct ExistenceVerdict {
  bool exists = false;
  ExistenceReason reason = ExistenceReason::EmptyClass;
  /// Two vertices in different weak components (reason == Disconnected).
  std::optional<std::pair<Word, Word>> disconnected_pair;
  /// An unbalanced vertex (reason == DegreeImbalance).
  std::optional<DegreeWitness> imbalance;
};

}  // namespace ucycle
