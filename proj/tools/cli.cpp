#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ucycle/census.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/function_class.hpp"
#include "ucycle/path_builder.hpp"
#include "ucycle/transition_graph.hpp"

namespace ucycle::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
// Decomposition listings beyond this many edges print the histogram only.
constexpr std::size_t kCycleListingLimit = 10000;

ordered_json big_number(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return v.convert_to<std::uint64_t>();
  return v.str();
}

ordered_json envelope(const std::string& command) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void add_spec(ordered_json& j, const ClassSpec& spec) {
  j["class"] = class_name(spec.cls);
  j["k"] = spec.k;
  j["n"] = spec.n;
}

bool is_binary(FunctionClass c) {
  return c == FunctionClass::Equitable || c == FunctionClass::OneInequitable;
}

ClassSpec spec_from(const RunConfig& config) {
  if (config.class_name.empty()) throw InvalidArgument("--class is required for " + config.command);
  const FunctionClass cls = parse_class_name(config.class_name);
  if (!is_target_class(cls)) throw InvalidArgument("class '" + config.class_name + "' is not a U-cycle target");
  if (!config.k) throw InvalidArgument("--k is required for " + config.command);
  std::size_t n = 0;
  if (config.n) {
    n = *config.n;
  } else if (is_binary(cls)) {
    n = 2;
  } else {
    throw InvalidArgument("--n is required for class " + config.class_name);
  }
  return make_spec(cls, *config.k, n);
}

ordered_json verdict_json(const ExistenceVerdict& v) {
  ordered_json j;
  j["exists"] = v.exists;
  j["reason"] = reason_name(v.reason);
  if (v.disconnected_pair) {
    j["witness"] = {{"kind", "components"},
                    {"vertices", {to_string(v.disconnected_pair->first), to_string(v.disconnected_pair->second)}}};
  } else if (v.imbalance) {
    j["witness"] = {{"kind", "imbalance"},
                    {"vertex", to_string(v.imbalance->vertex)},
                    {"in_degree", v.imbalance->in_degree},
                    {"out_degree", v.imbalance->out_degree}};
  }
  return j;
}

void print_verdict(std::ostream& out, const ClassSpec& spec, const ExistenceVerdict& v) {
  out << "class: " << describe(spec) << '\n';
  out << "exists: " << (v.exists ? "true" : "false") << '\n';
  out << "reason: " << reason_name(v.reason) << '\n';
  if (v.disconnected_pair) {
    out << "witness: " << to_string(v.disconnected_pair->first) << ' ' << to_string(v.disconnected_pair->second)
        << " (different components)\n";
  } else if (v.imbalance) {
    out << "witness: " << to_string(v.imbalance->vertex) << " in " << v.imbalance->in_degree << " out "
        << v.imbalance->out_degree << '\n';
  }
}

int cmd_generate(const RunConfig& config, std::ostream& out) {
  const ClassSpec spec = spec_from(config);
  const Generation gen = generate(spec);
  if (config.format == Format::Json) {
    ordered_json j = envelope("generate");
    add_spec(j, spec);
    j.update(verdict_json(gen.verdict));
    if (gen.cycle) {
      j["length"] = gen.cycle->symbols.size();
      j["cycle"] = to_string(gen.cycle->symbols);
    }
    out << j.dump(2) << '\n';
  } else if (gen.cycle) {
    out << to_string(gen.cycle->symbols) << '\n';
  } else {
    print_verdict(out, spec, gen.verdict);
  }
  return gen.cycle ? kExitOk : kExitNoCycle;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const ClassSpec spec = spec_from(config);
  if (config.input.empty()) throw InvalidArgument("--input is required for verify");
  const Word candidate = parse_word(config.input, spec.n);
  const VerifyReport report = verify_ucycle(spec, candidate);

  const auto words = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& w : ws) out.push_back(to_string(w));
    return out;
  };
  if (config.format == Format::Json) {
    ordered_json j = envelope("verify");
    add_spec(j, spec);
    j["ok"] = report.ok;
    j["expected_length"] = report.expected_length;
    j["actual_length"] = report.actual_length;
    j["missing"] = words(report.missing);
    ordered_json dup = ordered_json::array();
    for (const auto& [w, count] : report.duplicated) dup.push_back({{"word", to_string(w)}, {"count", count}});
    j["duplicated"] = dup;
    j["foreign"] = words(report.foreign);
    out << j.dump(2) << '\n';
  } else {
    out << (report.ok ? "PASS" : "FAIL") << ' ' << describe(spec) << " length " << report.actual_length << '\n';
    if (report.alphabet_mismatch) out << "alphabet does not match n\n";
    if (report.actual_length != report.expected_length) {
      out << "expected length " << report.expected_length << '\n';
    }
    for (const Word& w : report.missing) out << "missing " << to_string(w) << '\n';
    for (const auto& [w, count] : report.duplicated) out << "duplicated " << to_string(w) << " x" << count << '\n';
    for (const Word& w : report.foreign) out << "foreign " << to_string(w) << '\n';
  }
  return report.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_exists(const RunConfig& config, std::ostream& out) {
  const ClassSpec spec = spec_from(config);
  const ExistenceVerdict v = decide_existence(spec);
  if (config.format == Format::Json) {
    ordered_json j = envelope("exists");
    add_spec(j, spec);
    j.update(verdict_json(v));
    out << j.dump(2) << '\n';
  } else {
    print_verdict(out, spec, v);
  }
  return kExitOk;
}

int cmd_decompose(const RunConfig& config, std::ostream& out) {
  const ClassSpec spec = spec_from(config);
  const TransitionGraph g = TransitionGraph::build(spec);
  const CycleDecomposition dec = decompose_cycles(g);
  const bool list_cycles = g.edge_count() <= kCycleListingLimit;

  if (config.format == Format::Json) {
    ordered_json j = envelope("decompose");
    add_spec(j, spec);
    j["total_cycles"] = dec.total_cycles;
    ordered_json hist = ordered_json::array();
    for (const auto& [len, count] : dec.length_histogram) hist.push_back({{"length", len}, {"count", count}});
    j["length_histogram"] = hist;
    if (list_cycles) {
      ordered_json cycles = ordered_json::array();
      for (const Cycle& c : dec.cycles) {
        ordered_json labels = ordered_json::array();
        for (EdgeId e : c.edges) labels.push_back(to_string(g.edge_label(e)));
        cycles.push_back(labels);
      }
      j["cycles"] = cycles;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "class: " << describe(spec) << '\n';
  out << "cycles: " << dec.total_cycles << '\n';
  for (const auto& [len, count] : dec.length_histogram) out << "length " << len << ": " << count << '\n';
  if (!list_cycles) {
    out << "(cycle listing omitted for " << g.edge_count() << " edges)\n";
    return kExitOk;
  }
  for (const Cycle& c : dec.cycles) {
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      out << (i ? " -> " : "") << to_string(g.edge_label(c.edges[i]));
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_census(const RunConfig& config, std::ostream& out) {
  if (!config.max_k) throw InvalidArgument("--max-k is required for census");
  const auto table = census_table(*config.max_k);
  if (config.format == Format::Json) {
    ordered_json j = envelope("census");
    ordered_json reports = ordered_json::array();
    for (const CensusReport& r : table) {
      ordered_json detail;
      for (const auto& [d, b] : r.divisor_detail) detail[std::to_string(d)] = big_number(b);
      reports.push_back({{"k", r.k},
                         {"equitable_count", big_number(r.equitable_count)},
                         {"a_k", big_number(r.a_k)},
                         {"b_k", big_number(r.b_k)},
                         {"divisor_detail", detail}});
    }
    j["reports"] = reports;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  std::size_t widths[4] = {1, 8, 3, 3};
  for (const CensusReport& r : table) {
    widths[0] = std::max(widths[0], std::to_string(r.k).size());
    widths[1] = std::max(widths[1], r.equitable_count.str().size());
    widths[2] = std::max(widths[2], r.a_k.str().size());
    widths[3] = std::max(widths[3], r.b_k.str().size());
  }
  const auto row = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    out << std::setw(static_cast<int>(widths[0])) << a << "  " << std::setw(static_cast<int>(widths[1])) << b << "  "
        << std::setw(static_cast<int>(widths[2])) << c << "  " << std::setw(static_cast<int>(widths[3])) << d << '\n';
  };
  row("k", "C(k,k/2)", "a_k", "b_k");
  for (const CensusReport& r : table) row(std::to_string(r.k), r.equitable_count.str(), r.a_k.str(), r.b_k.str());
  return kExitOk;
}

int cmd_path(const RunConfig& config, std::ostream& out) {
  const ClassSpec spec = spec_from(config);
  if (config.source.empty() || config.target.empty()) throw InvalidArgument("path needs --source and --target");
  const Word source = parse_word(config.source, spec.n);
  const Word target = parse_word(config.target, spec.n);

  PathTrace trace = [&] {
    switch (spec.cls) {
      case FunctionClass::Onto: return connect_onto(source, target, spec);
      case FunctionClass::OneInequitable: return connect_inequitable(source, target, spec);
      default: throw UnsupportedSpec("path supports the onto and one-inequitable classes only");
    }
  }();
  if (!validate_trace(trace, TransitionGraph::build(spec))) {
    throw InternalConsistency("constructed path is not a walk in the transition graph");
  }

  if (config.format == Format::Json) {
    ordered_json j = envelope("path");
    add_spec(j, spec);
    ordered_json steps = ordered_json::array();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      steps.push_back({{"word", to_string(trace.steps[i])}, {"phase", phase_name(trace.phases[i])}});
    }
    j["steps"] = steps;
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      out << to_string(trace.steps[i]) << ' ' << phase_name(trace.phases[i]) << '\n';
    }
  }
  return kExitOk;
}

int cmd_export_dot(const RunConfig& config, std::ostream& out) {
  write_dot(TransitionGraph::build(spec_from(config)), out);
  return kExitOk;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  if (config.command == "generate") return cmd_generate(config, out);
  if (config.command == "verify") return cmd_verify(config, out);
  if (config.command == "exists") return cmd_exists(config, out);
  if (config.command == "decompose") return cmd_decompose(config, out);
  if (config.command == "census") return cmd_census(config, out);
  if (config.command == "path") return cmd_path(config, out);
  if (config.command == "export-dot") return cmd_export_dot(config, out);
  throw InvalidArgument("unknown command '" + config.command + "'");
}

}  // namespace

ParseResult parse_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and count universal cycles of function classes", "ucycle"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::size_t k = 0, n = 0, max_k = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", config.out_path, "Write output to FILE");
  };
  const auto add_spec_options = [&](CLI::App* sub) {
    sub->add_option("--class", config.class_name, "all-words, injective, onto, equitable, one-inequitable")
        ->required();
    sub->add_option("--k", k, "Word length")->required();
    sub->add_option("--n", n, "Alphabet size (defaults to 2 for binary classes)");
  };

  auto* generate_cmd = app.add_subcommand("generate", "Print a U-cycle or a non-existence report");
  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate U-cycle");
  auto* exists_cmd = app.add_subcommand("exists", "Decide whether a U-cycle exists");
  auto* decompose_cmd = app.add_subcommand("decompose", "Split a 1-regular transition graph into cycles");
  auto* census_cmd = app.add_subcommand("census", "Cycle counts of the equitable graphs");
  auto* path_cmd = app.add_subcommand("path", "Constructive path between two vertices");
  auto* dot_cmd = app.add_subcommand("export-dot", "Write the transition graph as Graphviz DOT");

  for (auto* sub : {generate_cmd, verify_cmd, exists_cmd, decompose_cmd, path_cmd, dot_cmd}) {
    add_spec_options(sub);
    add_common(sub);
  }
  add_common(census_cmd);
  verify_cmd->add_option("--input", config.input, "Candidate cyclic word")->required();
  path_cmd->add_option("--source", config.source, "Start vertex")->required();
  path_cmd->add_option("--target", config.target, "End vertex")->required();
  census_cmd->add_option("--max-k", max_k, "Largest even k")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return {std::nullopt, app.exit(e, out, err)};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return {std::nullopt, kExitUsage};
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? Format::Json : Format::Text;
  auto* sub = app.get_subcommands().front();
  const auto given = [sub](const char* name) {
    const CLI::Option* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--k")) config.k = k;
  if (given("--n")) config.n = n;
  if (given("--max-k")) config.max_k = max_k;
  return {config, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostringstream buffer;
  try {
    const int code = dispatch(config, buffer);
    if (config.out_path.empty()) {
      out << buffer.str();
    } else {
      file.open(config.out_path);
      if (!file) {
        err << "ucycle: cannot open " << config.out_path << '\n';
        return kExitUsage;
      }
      file << buffer.str();
    }
    return code;
  } catch (const InternalConsistency& e) {
    err << "ucycle: internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InvalidArgument& e) {
    err << "ucycle: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionViolation& e) {
    err << "ucycle: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EmptyClass& e) {
    err << "ucycle: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ucycle::cli
