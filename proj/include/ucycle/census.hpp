#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ucycle/function_class.hpp"

namespace ucycle {

/// Cycle counts of the equitable transition graph for even word length k.
///
/// Each cycle of the graph is the rotation class of an equitable word, so a
/// cycle has length d exactly when its words have minimal period d, and d is
/// then an even divisor of k. b_d counts the cycles of length d and
/// a_k = sum of b_d over all even divisors d of k.
struct CensusReport {
  std::size_t k = 0;
  BigInt a_k;
  BigInt b_k;
  /// b_d for every even divisor d of k, including k itself.
  std::map<std::size_t, BigInt> divisor_detail;
  BigInt equitable_count;  // C(k, k/2)
};

/// Throws InvalidArgument for odd or non-positive k, and InternalConsistency
/// if a division that must be exact leaves a remainder.
CensusReport census(std::size_t k);

/// Reports for k = 2, 4, ..., max_k.
std::vector<CensusReport> census_table(std::size_t max_k);

struct CrossCheck {
  bool ok = false;
  CensusReport report;
  std::size_t decomposed_cycles = 0;
  std::map<std::size_t, std::size_t> decomposed_histogram;
  std::vector<std::string> discrepancies;
};

/// Compares the recursion against a direct decomposition of the built graph.
CrossCheck cross_check(std::size_t k);

}  // namespace ucycle
