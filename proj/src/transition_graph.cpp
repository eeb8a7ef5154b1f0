#include "ucycle/transition_graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ucycle/errors.hpp"

namespace ucycle {

namespace {

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

std::uint64_t power(std::size_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// In/out degree every vertex of the named class must have, when known.
std::optional<std::size_t> degree_law(const ClassSpec& spec, const std::string& vclass) {
  switch (spec.cls) {
    case FunctionClass::AllWords: return spec.n;
    case FunctionClass::Injective: return spec.n - spec.k + 1;
    case FunctionClass::Onto:
      if (vclass == "onto") return spec.n;
      if (vclass == "almost-onto") return 1;
      return std::nullopt;
    case FunctionClass::OneInequitable:
      if (vclass == "equitable") return 2;
      if (vclass == "two-inequitable") return 1;
      return std::nullopt;
    case FunctionClass::Equitable: return 1;
    default: return std::nullopt;
  }
}

std::string describe_witness(const DegreeWitness& w) {
  return to_string(w.vertex) + " (in " + std::to_string(w.in_degree) + ", out " + std::to_string(w.out_degree) + ")";
}

}  // namespace

TransitionGraph TransitionGraph::build(const ClassSpec& spec) {
  validate(spec);
  if (spec.k < 2) throw InvalidArgument(describe(spec) + ": the transition graph needs k >= 2");
  if (!fits_code(spec.k, spec.n)) throw InvalidArgument(describe(spec) + ": words too long to index");

  std::vector<std::uint64_t> members;
  for_each_member(spec, [&](std::span<const Symbol> w) { members.push_back(encode(w, spec.n)); });
  if (members.empty()) throw EmptyClass(describe(spec) + " has no members");
  if (members.size() >= kNoEdge) throw InvalidArgument(describe(spec) + ": too many edges");

  const std::uint64_t suffix_base = power(spec.n, spec.k - 1);
  TransitionGraph g;
  g.spec_ = spec;
  g.vertex_codes_.reserve(2 * members.size());
  for (std::uint64_t code : members) {
    g.vertex_codes_.push_back(code / spec.n);
    g.vertex_codes_.push_back(code % suffix_base);
  }
  std::sort(g.vertex_codes_.begin(), g.vertex_codes_.end());
  g.vertex_codes_.erase(std::unique(g.vertex_codes_.begin(), g.vertex_codes_.end()), g.vertex_codes_.end());

  const auto index_of = [&](std::uint64_t code) {
    auto it = std::lower_bound(g.vertex_codes_.begin(), g.vertex_codes_.end(), code);
    return static_cast<VertexId>(it - g.vertex_codes_.begin());
  };

  const std::size_t vertex_count = g.vertex_codes_.size();
  g.row_begin_.assign(vertex_count + 1, 0);
  g.in_degree_.assign(vertex_count, 0);
  g.edges_.reserve(members.size());
  g.edge_source_.reserve(members.size());
  // Members arrive in ascending code order, so sources are non-decreasing.
  for (std::uint64_t code : members) {
    const VertexId source = index_of(code / spec.n);
    const VertexId target = index_of(code % suffix_base);
    g.edges_.push_back({static_cast<Symbol>(code % spec.n), target});
    g.edge_source_.push_back(source);
    ++g.row_begin_[source + 1];
    ++g.in_degree_[target];
  }
  std::partial_sum(g.row_begin_.begin(), g.row_begin_.end(), g.row_begin_.begin());
  return g;
}

Word TransitionGraph::vertex(VertexId v) const { return decode(vertex_codes_.at(v), spec_.k - 1, spec_.n); }

std::optional<VertexId> TransitionGraph::find(std::span<const Symbol> word) const {
  if (word.size() + 1 != spec_.k) return std::nullopt;
  for (Symbol s : word) {
    if (s >= spec_.n) return std::nullopt;
  }
  const std::uint64_t code = encode(word, spec_.n);
  auto it = std::lower_bound(vertex_codes_.begin(), vertex_codes_.end(), code);
  if (it == vertex_codes_.end() || *it != code) return std::nullopt;
  return static_cast<VertexId>(it - vertex_codes_.begin());
}

std::optional<VertexId> TransitionGraph::find(const Word& word) const {
  if (word.alphabet() != spec_.n) return std::nullopt;
  return find(word.symbols());
}

std::span<const OutEdge> TransitionGraph::out_edges(VertexId v) const {
  return std::span<const OutEdge>(edges_).subspan(row_begin_[v], row_begin_[v + 1] - row_begin_[v]);
}

Word TransitionGraph::edge_label(EdgeId e) const {
  return decode(vertex_codes_[edge_source_[e]] * spec_.n + edges_[e].symbol, spec_.k, spec_.n);
}

bool TransitionGraph::has_edge(const Word& from, const Word& to) const {
  const auto u = find(from);
  const auto v = find(to);
  if (!u || !v) return false;
  for (const OutEdge& e : out_edges(*u)) {
    if (e.target == *v && e.symbol == to[to.size() - 1]) return true;
  }
  return false;
}

std::string vertex_class(const ClassSpec& spec, std::span<const Symbol> vertex) {
  switch (spec.cls) {
    case FunctionClass::AllWords: return "all-words";
    case FunctionClass::Injective: return "injective";
    case FunctionClass::Onto:
      if (has_all_symbols(vertex, spec.n)) return "onto";
      if (misses_exactly_one(vertex, spec.n)) return "almost-onto";
      return "other";
    case FunctionClass::OneInequitable:
    case FunctionClass::Equitable:
    case FunctionClass::TwoInequitable:
      switch (binary_imbalance(vertex)) {
        case 0: return "equitable";
        case 1: return "one-inequitable";
        case 2: return "two-inequitable";
        default: return "other";
      }
    default: return "other";
  }
}

DegreeAudit audit_degrees(const TransitionGraph& g) {
  DegreeAudit audit;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Word word = g.vertex(v);
    const std::size_t in = g.in_degree(v);
    const std::size_t out = g.out_degree(v);
    const std::string vclass = vertex_class(g.spec(), word.symbols());

    auto [it, fresh] = audit.by_class.try_emplace(vclass, DegreeRange{in, in, out, out, 0});
    DegreeRange& range = it->second;
    range.min_in = std::min(range.min_in, in);
    range.max_in = std::max(range.max_in, in);
    range.min_out = std::min(range.min_out, out);
    range.max_out = std::max(range.max_out, out);
    ++range.vertices;

    if (in != out) audit.offenders.push_back({word, in, out});
    if (auto law = degree_law(g.spec(), vclass); law && (in != *law || out != *law)) {
      audit.degree_law_holds = false;
    }
  }
  audit.balanced = audit.offenders.empty();
  return audit;
}

std::vector<std::size_t> weak_components(const TransitionGraph& g) {
  DisjointSets sets(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) sets.unite(g.edge_source(e), g.edge(e).target);

  std::vector<std::size_t> component(g.vertex_count());
  std::unordered_map<std::size_t, std::size_t> numbering;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = numbering.try_emplace(sets.find(v), numbering.size());
    component[v] = it->second;
  }
  return component;
}

Connectivity is_connected(const TransitionGraph& g) {
  const auto component = weak_components(g);
  Connectivity result;
  result.component_count = component.empty() ? 0 : *std::max_element(component.begin(), component.end()) + 1;
  result.connected = result.component_count <= 1;
  if (!result.connected) {
    auto other = std::find_if(component.begin(), component.end(), [](std::size_t c) { return c != 0; });
    result.witness.emplace(g.vertex(0), g.vertex(static_cast<VertexId>(other - component.begin())));
  }
  return result;
}

std::vector<EdgeId> eulerian_edge_order(const TransitionGraph& g) {
  const DegreeAudit audit = audit_degrees(g);
  if (!audit.balanced) {
    throw PreconditionViolation("graph of " + describe(g.spec()) +
                                " is unbalanced at " + describe_witness(audit.offenders.front()));
  }
  const Connectivity conn = is_connected(g);
  if (!conn.connected) {
    throw PreconditionViolation("graph of " + describe(g.spec()) + " is disconnected: " +
                                to_string(conn.witness->first) + " and " + to_string(conn.witness->second) +
                                " lie in different components");
  }

  std::vector<std::size_t> next(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) next[v] = g.first_edge(v);

  std::vector<EdgeId> circuit;
  circuit.reserve(g.edge_count());
  std::vector<std::pair<VertexId, EdgeId>> stack{{0, kNoEdge}};
  while (!stack.empty()) {
    const VertexId v = stack.back().first;
    if (next[v] < g.first_edge(v) + g.out_degree(v)) {
      const auto e = static_cast<EdgeId>(next[v]++);
      stack.emplace_back(g.edge(e).target, e);
    } else {
      if (stack.back().second != kNoEdge) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != g.edge_count()) {
    throw InternalConsistency("circuit used " + std::to_string(circuit.size()) + " of " +
                              std::to_string(g.edge_count()) + " edges");
  }
  return circuit;
}

UCycle eulerian_circuit(const TransitionGraph& g) {
  const auto circuit = eulerian_edge_order(g);
  // Reading the start vertex followed by each appended symbol spells the
  // labels one after another; the first |E| symbols are the cyclic word.
  const Word start = g.vertex(g.edge_source(circuit.front()));
  std::vector<Symbol> spelled(start.symbols().begin(), start.symbols().end());
  for (EdgeId e : circuit) spelled.push_back(g.edge(e).symbol);
  spelled.resize(circuit.size());
  return UCycle{g.spec(), Word(std::move(spelled), g.spec().n)};
}

VerifyReport verify_ucycle(const ClassSpec& spec, const Word& candidate) {
  validate(spec);
  if (!fits_code(spec.k, spec.n)) throw InvalidArgument(describe(spec) + ": words too long to index");
  VerifyReport report;
  report.expected_length = to_size(cardinality(spec));
  report.actual_length = candidate.size();
  if (candidate.alphabet() != spec.n) {
    report.alphabet_mismatch = true;
    return report;
  }

  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<Symbol> win(spec.k);
  for (std::size_t start = 0; start < candidate.size(); ++start) {
    for (std::size_t i = 0; i < spec.k; ++i) win[i] = candidate[(start + i) % candidate.size()];
    ++seen[encode(win, spec.n)];
  }

  for_each_member(spec, [&](std::span<const Symbol> member) {
    const std::uint64_t code = encode(member, spec.n);
    auto it = seen.find(code);
    if (it == seen.end()) {
      report.missing.emplace_back(std::vector<Symbol>(member.begin(), member.end()), spec.n);
      return;
    }
    if (it->second > 1) {
      report.duplicated.emplace_back(Word(std::vector<Symbol>(member.begin(), member.end()), spec.n), it->second);
    }
    seen.erase(it);
  });
  std::vector<std::uint64_t> foreign;
  for (const auto& [code, count] : seen) foreign.push_back(code);
  std::sort(foreign.begin(), foreign.end());
  for (std::uint64_t code : foreign) report.foreign.push_back(decode(code, spec.k, spec.n));

  report.ok = report.expected_length == report.actual_length && report.missing.empty() &&
              report.duplicated.empty() && report.foreign.empty();
  return report;
}

CycleDecomposition decompose_cycles(const TransitionGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.in_degree(v) != 1 || g.out_degree(v) != 1) {
      throw PreconditionViolation("decomposition needs in = out = 1 everywhere; " +
                                  describe_witness({g.vertex(v), g.in_degree(v), g.out_degree(v)}));
    }
  }
  CycleDecomposition result;
  std::vector<bool> used(g.edge_count(), false);
  for (EdgeId start = 0; start < g.edge_count(); ++start) {
    if (used[start]) continue;
    Cycle cycle;
    EdgeId e = start;
    do {
      used[e] = true;
      cycle.edges.push_back(e);
      e = g.first_edge(g.edge(e).target);
    } while (e != start);
    ++result.length_histogram[cycle.edges.size()];
    result.cycles.push_back(std::move(cycle));
  }
  result.total_cycles = result.cycles.size();
  return result;
}

ExistenceVerdict decide_existence(const TransitionGraph& g) {
  ExistenceVerdict verdict;
  const DegreeAudit audit = audit_degrees(g);
  if (!audit.balanced) {
    verdict.reason = ExistenceReason::DegreeImbalance;
    verdict.imbalance = audit.offenders.front();
    return verdict;
  }
  Connectivity conn = is_connected(g);
  if (!conn.connected) {
    verdict.reason = ExistenceReason::Disconnected;
    verdict.disconnected_pair = std::move(conn.witness);
    return verdict;
  }
  verdict.exists = true;
  verdict.reason = ExistenceReason::EulerianConnected;
  return verdict;
}

ExistenceVerdict decide_existence(const ClassSpec& spec) {
  if (cardinality(spec) == 0) return ExistenceVerdict{};
  return decide_existence(TransitionGraph::build(spec));
}

Generation generate(const ClassSpec& spec) {
  Generation out;
  if (cardinality(spec) == 0) return out;
  const TransitionGraph g = TransitionGraph::build(spec);
  out.verdict = decide_existence(g);
  if (out.verdict.exists) out.cycle = eulerian_circuit(g);
  return out;
}

void write_dot(const TransitionGraph& g, std::ostream& out) {
  out << "digraph \"" << describe(g.spec()) << "\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  \"" << to_string(g.vertex(v)) << "\";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  \"" << to_string(g.vertex(g.edge_source(e))) << "\" -> \"" << to_string(g.vertex(g.edge(e).target))
        << "\" [label=\"" << to_string(g.edge_label(e)) << "\"];\n";
  }
  out << "}\n";
}

}  // namespace ucycle
