#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/transition_graph.hpp"

using namespace ucycle;

namespace {

TransitionGraph graph(FunctionClass c, std::size_t k, std::size_t n) {
  return TransitionGraph::build(make_spec(c, k, n));
}

std::vector<std::string> vertex_cycle(const TransitionGraph& g, const Cycle& c) {
  std::vector<std::string> out;
  for (EdgeId e : c.edges) out.push_back(to_string(g.vertex(g.edge_source(e))));
  return out;
}

// Rotate so the smallest element comes first; cycles compare up to rotation.
std::vector<std::string> canonical(std::vector<std::string> cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

}  // namespace

TEST_CASE("build sizes") {
  const auto onto = graph(FunctionClass::Onto, 6, 5);
  CHECK(onto.vertex_count() == 1320);
  CHECK(onto.edge_count() == 1800);

  const auto words = graph(FunctionClass::AllWords, 3, 2);
  CHECK(words.vertex_count() == 4);
  CHECK(words.edge_count() == 8);

  // Every binary 3-word other than 000 and 111 is one-inequitable: 6 vertices.
  const auto eq = graph(FunctionClass::Equitable, 4, 2);
  CHECK(eq.vertex_count() == 6);
  CHECK(eq.edge_count() == 6);
  for (VertexId v = 0; v < eq.vertex_count(); ++v) CHECK(binary_imbalance(eq.vertex(v).symbols()) == 1);

  CHECK_THROWS_AS(graph(FunctionClass::AllWords, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(graph(FunctionClass::AllWords, 64, 2), InvalidArgument);
}

TEST_CASE("build matches the first-principles overlap graph") {
  for (auto [c, k, n] : std::vector<std::tuple<FunctionClass, std::size_t, std::size_t>>{
           {FunctionClass::Onto, 5, 3}, {FunctionClass::Injective, 3, 4}, {FunctionClass::OneInequitable, 7, 2},
           {FunctionClass::Equitable, 8, 2}, {FunctionClass::AllWords, 4, 3}}) {
    const auto g = graph(c, k, n);
    const auto ref = oracle::overlap_graph(c, k, n);
    CAPTURE(describe(g.spec()));
    REQUIRE(g.vertex_count() == ref.out.size());
    std::size_t edges = 0;
    for (const auto& [v, outs] : ref.out) {
      const auto id = g.find(v);
      REQUIRE(id);
      CHECK(g.out_degree(*id) == outs.size());
      CHECK(g.in_degree(*id) == ref.in.at(v));
      for (const auto& w : outs) CHECK(g.has_edge(Word(v, n), Word(w, n)));
      edges += outs.size();
    }
    CHECK(g.edge_count() == edges);
    CHECK(g.edge_count() == cardinality(g.spec()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(is_member(g.spec(), g.edge_label(e)));
  }
}

TEST_CASE("degree audit") {
  const auto onto = audit_degrees(graph(FunctionClass::Onto, 6, 5));
  CHECK(onto.balanced);
  CHECK(onto.degree_law_holds);
  CHECK(onto.by_class.size() == 2);
  CHECK(onto.by_class.at("onto").min_in == 5);
  CHECK(onto.by_class.at("onto").max_out == 5);
  CHECK(onto.by_class.at("onto").vertices == 120);
  CHECK(onto.by_class.at("almost-onto").max_in == 1);
  CHECK(onto.by_class.at("almost-onto").min_out == 1);
  CHECK(onto.by_class.at("almost-onto").vertices == 1200);

  const auto words = audit_degrees(graph(FunctionClass::AllWords, 3, 2));
  CHECK(words.balanced);
  CHECK(words.by_class.at("all-words").min_in == 2);
  CHECK(words.by_class.at("all-words").max_out == 2);

  const auto ineq = audit_degrees(graph(FunctionClass::OneInequitable, 5, 2));
  CHECK(ineq.balanced);
  CHECK(ineq.degree_law_holds);
  CHECK(ineq.by_class.at("equitable").min_in == 2);
  CHECK(ineq.by_class.at("equitable").max_out == 2);
  CHECK(ineq.by_class.at("two-inequitable").max_in == 1);
  CHECK(ineq.by_class.at("two-inequitable").min_out == 1);
  CHECK(ineq.offenders.empty());
}

TEST_CASE("connectivity") {
  const auto inj = graph(FunctionClass::Injective, 3, 3);
  const auto conn = is_connected(inj);
  CHECK_FALSE(conn.connected);
  CHECK(conn.component_count == 2);
  REQUIRE(conn.witness);
  const auto comp = weak_components(inj);
  CHECK(comp[*inj.find(conn.witness->first)] != comp[*inj.find(conn.witness->second)]);
  CHECK(comp[*inj.find(parse_word("12", 3))] != comp[*inj.find(parse_word("21", 3))]);
  CHECK(comp[*inj.find(parse_word("12", 3))] == comp[*inj.find(parse_word("31", 3))]);

  CHECK(is_connected(graph(FunctionClass::AllWords, 3, 2)).connected);

  const auto eq6 = is_connected(graph(FunctionClass::Equitable, 6, 2));
  CHECK_FALSE(eq6.connected);
  CHECK(eq6.component_count == oracle::component_count(oracle::overlap_graph(FunctionClass::Equitable, 6, 2)));
  CHECK(eq6.component_count == 4);

  // Two symbols, k = n = 2: 12 and 21 close up into one 2-cycle.
  CHECK(is_connected(graph(FunctionClass::Injective, 2, 2)).connected);
}

TEST_CASE("eulerian circuits are U-cycles") {
  const auto debruijn = eulerian_circuit(graph(FunctionClass::AllWords, 3, 2));
  CHECK(debruijn.symbols.size() == 8);
  CHECK(verify_ucycle(debruijn.spec, debruijn.symbols).ok);
  CHECK(verify_ucycle(make_spec(FunctionClass::AllWords, 3, 2), parse_word("11100010", 2)).ok);

  const auto onto = eulerian_circuit(graph(FunctionClass::Onto, 4, 3));
  CHECK(onto.symbols.size() == 36);
  CHECK(verify_ucycle(onto.spec, onto.symbols).ok);

  const auto ineq = eulerian_circuit(graph(FunctionClass::OneInequitable, 3, 2));
  CHECK(ineq.symbols.size() == 6);
  const auto windows = oracle::cyclic_windows(
      std::vector<Symbol>(ineq.symbols.symbols().begin(), ineq.symbols.symbols().end()), 3);
  CHECK(windows.size() == 6);
  for (const auto& [w, count] : windows) {
    CHECK(count == 1);
    CHECK(binary_imbalance(w) == 1);
  }

  // The cycle starts with the label of the circuit's first edge.
  const auto g = graph(FunctionClass::Injective, 2, 4);
  const auto order = eulerian_edge_order(g);
  const auto cyc = eulerian_circuit(g);
  CHECK(window(cyc.symbols, 0, 2) == g.edge_label(order.front()));
  CHECK(g.edge_source(order.front()) == 0);

  // n = 1: a single self-loop.
  const auto single = eulerian_circuit(graph(FunctionClass::Onto, 3, 1));
  CHECK(to_string(single.symbols) == "1");
  CHECK(verify_ucycle(single.spec, single.symbols).ok);

  CHECK_THROWS_AS(eulerian_circuit(graph(FunctionClass::Injective, 3, 3)), PreconditionViolation);
  CHECK_THROWS_AS(eulerian_circuit(graph(FunctionClass::Equitable, 4, 2)), PreconditionViolation);
}

TEST_CASE("verify reports discrepancies") {
  const ClassSpec spec = make_spec(FunctionClass::AllWords, 3, 2);
  const Word mutated = parse_word("11110010", 2);
  const auto report = verify_ucycle(spec, mutated);
  CHECK_FALSE(report.ok);

  // Brute-force window multiset of the mutated word.
  const auto windows = oracle::cyclic_windows(oracle::digits("11110010", 0), 3);
  std::vector<std::string> missing, duplicated;
  for (const auto& m : oracle::members(FunctionClass::AllWords, 3, 2)) {
    auto it = windows.find(m);
    if (it == windows.end()) missing.push_back(to_string(Word(m, 2)));
    else if (it->second > 1) duplicated.push_back(to_string(Word(m, 2)));
  }
  CHECK(duplicated == std::vector<std::string>{"111"});
  CHECK(missing == std::vector<std::string>{"000"});
  REQUIRE(report.missing.size() == 1);
  CHECK(to_string(report.missing[0]) == "000");
  REQUIRE(report.duplicated.size() == 1);
  CHECK(to_string(report.duplicated[0].first) == "111");
  CHECK(report.duplicated[0].second == 2);

  CHECK_FALSE(verify_ucycle(spec, parse_word("1110001", 2)).ok);
  CHECK_FALSE(verify_ucycle(spec, parse_word("111000100", 2)).ok);
  CHECK_FALSE(verify_ucycle(spec, parse_word("12312312", 3)).ok);

  const auto foreign = verify_ucycle(make_spec(FunctionClass::OneInequitable, 3, 2), parse_word("000111", 2));
  CHECK_FALSE(foreign.ok);
  CHECK(foreign.foreign.size() == 2);
}

TEST_CASE("cycle decomposition") {
  const auto eq4 = graph(FunctionClass::Equitable, 4, 2);
  const auto dec = decompose_cycles(eq4);
  CHECK(dec.total_cycles == 2);
  CHECK(dec.length_histogram == std::map<std::size_t, std::size_t>{{2, 1}, {4, 1}});
  REQUIRE(dec.cycles.size() == 2);
  std::vector<std::string> first;
  for (EdgeId e : dec.cycles[0].edges) first.push_back(to_string(eq4.edge_label(e)));
  CHECK(first == std::vector<std::string>{"0011", "0110", "1100", "1001"});

  CHECK(decompose_cycles(graph(FunctionClass::Equitable, 6, 2)).total_cycles == 4);

  const auto inj = graph(FunctionClass::Injective, 3, 3);
  const auto inj_dec = decompose_cycles(inj);
  std::set<std::vector<std::string>> cycles;
  for (const Cycle& c : inj_dec.cycles) cycles.insert(canonical(vertex_cycle(inj, c)));
  CHECK(cycles == std::set<std::vector<std::string>>{{"12", "23", "31"}, {"13", "32", "21"}});

  CHECK_THROWS_AS(decompose_cycles(graph(FunctionClass::AllWords, 3, 2)), PreconditionViolation);
}

TEST_CASE("periods and rotation closure in equitable decompositions") {
  for (std::size_t k = 2; k <= 14; k += 2) {
    const auto g = graph(FunctionClass::Equitable, k, 2);
    const auto dec = decompose_cycles(g);
    std::size_t total = 0;
    for (const Cycle& c : dec.cycles) {
      total += c.edges.size();
      std::set<Word> labels;
      for (EdgeId e : c.edges) labels.insert(g.edge_label(e));
      for (EdgeId e : c.edges) {
        const Word w = g.edge_label(e);
        CHECK(minimal_period(w) == c.edges.size());
        CHECK(labels.count(rotate(w, 1)) == 1);
      }
    }
    CHECK(total == cardinality(g.spec()));
  }
}

TEST_CASE("existence verdicts") {
  const auto onto33 = decide_existence(make_spec(FunctionClass::Onto, 3, 3));
  CHECK_FALSE(onto33.exists);
  CHECK(onto33.reason == ExistenceReason::Disconnected);
  CHECK(onto33.disconnected_pair);

  const auto debruijn = decide_existence(make_spec(FunctionClass::AllWords, 3, 2));
  CHECK(debruijn.exists);
  CHECK(debruijn.reason == ExistenceReason::EulerianConnected);

  const auto gen = generate(make_spec(FunctionClass::Injective, 2, 3));
  REQUIRE(gen.cycle);
  CHECK(verify_ucycle(gen.cycle->spec, gen.cycle->symbols).ok);

  for (std::size_t n = 3; n <= 5; ++n) {
    CHECK(decide_existence(make_spec(FunctionClass::Injective, n, n)).reason == ExistenceReason::Disconnected);
  }
}

TEST_CASE("dot export is deterministic") {
  std::ostringstream a, b;
  write_dot(graph(FunctionClass::Equitable, 4, 2), a);
  write_dot(graph(FunctionClass::Equitable, 4, 2), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("digraph \"equitable k=4 n=2\" {\n  \"001\";\n", 0) == 0);
  CHECK(a.str().find("\"001\" -> \"011\" [label=\"0011\"];") != std::string::npos);
  CHECK(a.str().back() == '\n');
}

TEST_CASE("existence dichotomies for onto and injective classes") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t k = n + 1; k <= 7; ++k) {
      const auto g = graph(FunctionClass::Onto, k, n);
      CHECK(audit_degrees(g).balanced);
      CHECK(is_connected(g).connected);
    }
    for (std::size_t k = 2; k < n; ++k) {
      const auto g = graph(FunctionClass::Injective, k, n);
      CHECK(audit_degrees(g).balanced);
      CHECK(audit_degrees(g).degree_law_holds);
      CHECK(is_connected(g).connected);
      const auto cycle = eulerian_circuit(g);
      CHECK(verify_ucycle(cycle.spec, cycle.symbols).ok);
    }
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    CHECK_FALSE(is_connected(graph(FunctionClass::Injective, n, n)).connected);
    CHECK_FALSE(is_connected(graph(FunctionClass::Onto, n, n)).connected);
  }
}
