#include "ucycle/path_builder.hpp"

#include <set>

#include "ucycle/errors.hpp"

namespace ucycle {

namespace {

// The path construction only relies on two facts about the vertex classes:
// "full" vertices (onto / equitable) take every legal edge and stay full under
// rotation, and every other vertex has exactly one edge in and one edge out.
class PathBuilder {
 public:
  using FullTest = bool (*)(const ClassSpec&, std::span<const Symbol>);

  PathBuilder(const ClassSpec& spec, FullTest is_full) : spec_(spec), is_full_(is_full) {}

  PathTrace connect(const Word& a, const Word& b) {
    PathTrace trace{spec_, {a}, {PathPhase::Source}};
    if (a == b) return trace;

    Word from = a;
    if (!full(a)) from = run_to_full(a, trace, PathPhase::ReintroduceMissing);

    // Target side: walk the forced in-edges of b back to a full vertex.
    std::vector<Word> chain{b};
    while (!full(chain.back())) {
      Word prev = shift_prepend(forced_predecessor(chain.back()), chain.back());
      for (const Word& seen : chain) {
        if (seen == prev) throw InternalConsistency("backtrack from " + to_string(b) + " revisited " + to_string(prev));
      }
      chain.push_back(std::move(prev));
    }

    spell_target(from, chain.back(), trace);
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) push(trace, *it, PathPhase::BacktrackDerived);
    return trace;
  }

 private:
  bool full(const Word& w) const { return is_full_(spec_, w.symbols()); }

  bool legal(const Word& w, Symbol next) const {
    scratch_.assign(w.symbols().begin(), w.symbols().end());
    scratch_.push_back(next);
    return is_member_unchecked(spec_, scratch_);
  }

  bool legal_before(Symbol first, const Word& w) const {
    scratch_.assign(1, first);
    scratch_.insert(scratch_.end(), w.symbols().begin(), w.symbols().end());
    return is_member_unchecked(spec_, scratch_);
  }

  Symbol forced_successor(const Word& w) const {
    std::optional<Symbol> only;
    for (std::size_t s = 0; s < spec_.n; ++s) {
      if (!legal(w, static_cast<Symbol>(s))) continue;
      if (only) throw InternalConsistency(to_string(w) + " has more than one out-edge");
      only = static_cast<Symbol>(s);
    }
    if (!only) throw InternalConsistency(to_string(w) + " has no out-edge");
    return *only;
  }

  Symbol forced_predecessor(const Word& w) const {
    std::optional<Symbol> only;
    for (std::size_t s = 0; s < spec_.n; ++s) {
      if (!legal_before(static_cast<Symbol>(s), w)) continue;
      if (only) throw InternalConsistency(to_string(w) + " has more than one in-edge");
      only = static_cast<Symbol>(s);
    }
    if (!only) throw InternalConsistency(to_string(w) + " has no in-edge");
    return *only;
  }

  static void push(PathTrace& trace, Word w, PathPhase phase) {
    trace.steps.push_back(std::move(w));
    trace.phases.push_back(phase);
  }

  // Follows the unique out-edges from a degree-1 vertex until a full vertex.
  Word run_to_full(Word w, PathTrace& trace, PathPhase arrival) const {
    std::set<Word> visited{w};
    while (!full(w)) {
      w = shift_append(w, forced_successor(w));
      if (!visited.insert(w).second) {
        throw InternalConsistency("forced run revisited " + to_string(w) + " without reaching a full vertex");
      }
      push(trace, w, full(w) ? arrival : PathPhase::ForcedRun);
    }
    return w;
  }

  // Full vertex to full vertex. `built` counts how many leading symbols of
  // the target currently sit at the tail of w; it only grows.
  void spell_target(Word w, const Word& target, PathTrace& trace) const {
    const std::size_t len = target.size();
    const auto goal = target.symbols();
    std::size_t built = 0;
    if (w == target) return;
    while (built < len) {
      if (legal(w, goal[built])) {
        w = shift_append(w, goal[built]);
        ++built;
        push(trace, w, PathPhase::BuildTarget);
        continue;
      }
      if (full(w)) throw InternalConsistency("full vertex " + to_string(w) + " refused an edge");
      w = run_to_full(w, trace, PathPhase::ForcedRun);

      const auto prefix = goal.first(built);
      std::size_t turns = 0;
      while (turns < len && !ends_with(rotate(w, static_cast<std::int64_t>(turns)), prefix)) ++turns;
      if (turns == len) {
        throw InternalConsistency("forced run toward " + to_string(target) + " consumed the spelled prefix");
      }
      for (std::size_t i = 0; i < turns; ++i) {
        w = shift_append(w, w[0]);
        push(trace, w, PathPhase::Rotation);
      }
    }
  }

  const ClassSpec& spec_;
  FullTest is_full_;
  mutable std::vector<Symbol> scratch_;
};

bool onto_full(const ClassSpec& spec, std::span<const Symbol> w) { return has_all_symbols(w, spec.n); }

bool equitable_full(const ClassSpec&, std::span<const Symbol> w) { return binary_imbalance(w) == 0; }

void check_endpoint(const Word& w, const ClassSpec& spec, bool (*kind_ok)(const ClassSpec&, const Word&),
                    std::string_view expected) {
  if (w.size() + 1 != spec.k || w.alphabet() != spec.n) {
    throw InvalidArgument("endpoint " + to_string(w) + " is not a length-" + std::to_string(spec.k - 1) +
                          " word over " + std::to_string(spec.n) + " symbols");
  }
  if (!kind_ok(spec, w)) throw InvalidArgument("endpoint " + to_string(w) + " is not " + std::string(expected));
}

}  // namespace

std::string_view phase_name(PathPhase p) {
  switch (p) {
    case PathPhase::Source: return "source";
    case PathPhase::BuildTarget: return "build-target";
    case PathPhase::ForcedRun: return "forced-run";
    case PathPhase::Rotation: return "rotation";
    case PathPhase::ReintroduceMissing: return "reintroduce-missing";
    case PathPhase::BacktrackDerived: return "backtrack-derived";
  }
  return "unknown";
}

PathTrace connect_onto(const Word& source, const Word& target, const ClassSpec& spec) {
  if (spec.cls != FunctionClass::Onto || spec.k <= spec.n) {
    throw UnsupportedSpec("onto paths need an onto spec with k > n, got " + describe(spec));
  }
  validate(spec);
  const auto kind_ok = [](const ClassSpec& s, const Word& w) {
    return has_all_symbols(w.symbols(), s.n) || misses_exactly_one(w.symbols(), s.n);
  };
  check_endpoint(source, spec, kind_ok, "onto or almost-onto");
  check_endpoint(target, spec, kind_ok, "onto or almost-onto");
  return PathBuilder(spec, onto_full).connect(source, target);
}

PathTrace connect_inequitable(const Word& source, const Word& target, const ClassSpec& spec) {
  if (spec.cls != FunctionClass::OneInequitable || spec.k % 2 == 0 || spec.k < 3) {
    throw UnsupportedSpec("inequitable paths need a one-inequitable spec with odd k >= 3, got " + describe(spec));
  }
  validate(spec);
  const auto kind_ok = [](const ClassSpec&, const Word& w) {
    const std::size_t d = binary_imbalance(w.symbols());
    return d == 0 || d == 2;
  };
  check_endpoint(source, spec, kind_ok, "equitable or two-inequitable");
  check_endpoint(target, spec, kind_ok, "equitable or two-inequitable");
  return PathBuilder(spec, equitable_full).connect(source, target);
}

bool validate_trace(const PathTrace& trace, const TransitionGraph& g) {
  if (!(trace.spec == g.spec()) || trace.steps.empty()) return false;
  for (const Word& w : trace.steps) {
    if (!g.find(w)) return false;
  }
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    if (!g.has_edge(trace.steps[i - 1], trace.steps[i])) return false;
  }
  return true;
}

}  // namespace ucycle
