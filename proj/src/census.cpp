#include "ucycle/census.hpp"

#include "ucycle/errors.hpp"
#include "ucycle/transition_graph.hpp"

namespace ucycle {

namespace {

void require_even(std::size_t k) {
  if (k == 0 || k % 2 != 0) throw InvalidArgument("census needs an even k >= 2, got " + std::to_string(k));
}

std::vector<std::size_t> even_divisors(std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d <= k; d += 2) {
    if (k % d == 0) out.push_back(d);
  }
  return out;
}

// b_d = (C(d, d/2) - sum over proper even divisors e of d of e * b_e) / d,
// filled bottom-up; every even divisor of d is also an even divisor of k.
const BigInt& full_length_cycles(std::size_t d, std::map<std::size_t, BigInt>& memo) {
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  BigInt rest = binomial(d, d / 2);
  for (std::size_t e : even_divisors(d)) {
    if (e == d) continue;
    rest -= BigInt(e) * full_length_cycles(e, memo);
  }
  if (rest < 0 || rest % d != 0) {
    throw InternalConsistency("cycle count for length " + std::to_string(d) + " is not a whole number: " +
                              rest.str() + " / " + std::to_string(d));
  }
  return memo[d] = rest / d;
}

}  // namespace

CensusReport census(std::size_t k) {
  require_even(k);
  CensusReport report;
  report.k = k;
  report.equitable_count = binomial(k, k / 2);
  for (std::size_t d : even_divisors(k)) {
    full_length_cycles(d, report.divisor_detail);
  }
  // The memo only ever holds divisors of k.
  report.b_k = report.divisor_detail.at(k);
  report.a_k = 0;
  for (const auto& [d, b] : report.divisor_detail) report.a_k += b;
  return report;
}

std::vector<CensusReport> census_table(std::size_t max_k) {
  require_even(max_k);
  std::vector<CensusReport> out;
  for (std::size_t k = 2; k <= max_k; k += 2) out.push_back(census(k));
  return out;
}

CrossCheck cross_check(std::size_t k) {
  CrossCheck check;
  check.report = census(k);
  const TransitionGraph g = TransitionGraph::build(make_spec(FunctionClass::Equitable, k, 2));
  const CycleDecomposition dec = decompose_cycles(g);
  check.decomposed_cycles = dec.total_cycles;
  check.decomposed_histogram = dec.length_histogram;

  if (BigInt(dec.total_cycles) != check.report.a_k) {
    check.discrepancies.push_back("a_" + std::to_string(k) + ": recursion " + check.report.a_k.str() +
                                  ", decomposition " + std::to_string(dec.total_cycles));
  }
  for (const auto& [d, b] : check.report.divisor_detail) {
    auto it = dec.length_histogram.find(d);
    const std::size_t seen = it == dec.length_histogram.end() ? 0 : it->second;
    if (BigInt(seen) != b) {
      check.discrepancies.push_back("b_" + std::to_string(d) + ": recursion " + b.str() + ", decomposition " +
                                    std::to_string(seen));
    }
  }
  for (const auto& [len, count] : dec.length_histogram) {
    if (!check.report.divisor_detail.contains(len)) {
      check.discrepancies.push_back("decomposition has " + std::to_string(count) + " cycles of length " +
                                    std::to_string(len) + ", not an even divisor of " + std::to_string(k));
    }
  }
  check.ok = check.discrepancies.empty();
  return check;
}

}  // namespace ucycle
