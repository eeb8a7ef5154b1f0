#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ucycle/function_class.hpp"
#include "ucycle/word.hpp"

namespace ucycle {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct OutEdge {
  Symbol symbol;  // appended to the source word
  VertexId target;
};

/// Overlap digraph of a class: vertices are the length-(k-1) prefixes and
/// suffixes of class members, and each member w is one edge from its prefix
/// to its suffix.
///
/// Vertices are stored as packed codes in lexicographic order; out-edges are
/// kept in compressed rows sorted by appended symbol, so edge ids also run in
/// lexicographic order of their labels.
class TransitionGraph {
 public:
  /// Throws EmptyClass when the class has no members and InvalidArgument
  /// when k < 2 or the words do not pack into 64 bits.
  static TransitionGraph build(const ClassSpec& spec);

  const ClassSpec& spec() const { return spec_; }
  std::size_t vertex_count() const { return vertex_codes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  Word vertex(VertexId v) const;
  std::optional<VertexId> find(std::span<const Symbol> word) const;
  std::optional<VertexId> find(const Word& word) const;

  std::span<const OutEdge> out_edges(VertexId v) const;
  EdgeId first_edge(VertexId v) const { return static_cast<EdgeId>(row_begin_[v]); }
  std::size_t out_degree(VertexId v) const { return row_begin_[v + 1] - row_begin_[v]; }
  std::size_t in_degree(VertexId v) const { return in_degree_[v]; }

  const OutEdge& edge(EdgeId e) const { return edges_[e]; }
  VertexId edge_source(EdgeId e) const { return edge_source_[e]; }
  Word edge_label(EdgeId e) const;

  bool has_edge(const Word& from, const Word& to) const;

 private:
  TransitionGraph() = default;

  ClassSpec spec_{};
  std::vector<std::uint64_t> vertex_codes_;
  std::vector<std::size_t> row_begin_;
  std::vector<OutEdge> edges_;
  std::vector<VertexId> edge_source_;
  std::vector<std::size_t> in_degree_;
};

/// Name of the class a vertex word falls in, e.g. "onto" / "almost-onto".
std::string vertex_class(const ClassSpec& spec, std::span<const Symbol> vertex);

struct DegreeRange {
  std::size_t min_in = 0, max_in = 0, min_out = 0, max_out = 0;
  std::size_t vertices = 0;
};

struct DegreeAudit {
  bool balanced = true;
  /// Every vertex class with a known degree law (onto n/1, equitable 2/1, ...)
  /// matched it exactly.
  bool degree_law_holds = true;
  std::map<std::string, DegreeRange> by_class;
  std::vector<DegreeWitness> offenders;
};

DegreeAudit audit_degrees(const TransitionGraph& g);

struct Connectivity {
  bool connected = true;
  std::size_t component_count = 0;
  std::optional<std::pair<Word, Word>> witness;
};

/// Weak connectivity over edge-incident vertices.
Connectivity is_connected(const TransitionGraph& g);

/// Component index per vertex, numbered in order of first appearance.
std::vector<std::size_t> weak_components(const TransitionGraph& g);

struct UCycle {
  ClassSpec spec;
  Word symbols;
};

/// Hierholzer circuit from the smallest vertex, taking out-edges in ascending
/// symbol order. Throws PreconditionViolation when the graph is unbalanced or
/// disconnected.
UCycle eulerian_circuit(const TransitionGraph& g);

/// Edge ids of a circuit in traversal order (the data behind eulerian_circuit).
std::vector<EdgeId> eulerian_edge_order(const TransitionGraph& g);

struct VerifyReport {
  bool ok = false;
  std::size_t expected_length = 0;
  std::size_t actual_length = 0;
  bool alphabet_mismatch = false;
  std::vector<Word> missing;
  /// Members read more than once, with their window count.
  std::vector<std::pair<Word, std::size_t>> duplicated;
  /// Windows that are not class members.
  std::vector<Word> foreign;
};

VerifyReport verify_ucycle(const ClassSpec& spec, const Word& candidate);

struct Cycle {
  std::vector<EdgeId> edges;
};

struct CycleDecomposition {
  std::vector<Cycle> cycles;
  std::map<std::size_t, std::size_t> length_histogram;
  std::size_t total_cycles = 0;
};

/// Partitions the edges of a graph whose vertices all have in = out = 1 into
/// directed cycles. Each cycle starts at its lexicographically smallest label.
CycleDecomposition decompose_cycles(const TransitionGraph& g);

struct Generation {
  ExistenceVerdict verdict;
  std::optional<UCycle> cycle;
};

ExistenceVerdict decide_existence(const TransitionGraph& g);
ExistenceVerdict decide_existence(const ClassSpec& spec);
Generation generate(const ClassSpec& spec);

/// Graphviz rendering: nodes in lexicographic order, one edge per member
/// labelled with the k-word.
void write_dot(const TransitionGraph& g, std::ostream& out);

}  // namespace ucycle
