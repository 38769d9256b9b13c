#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tock2ta/csp/ast.hpp"
#include "tock2ta/trace.hpp"

namespace tock2ta::semantics {

enum class ActionKind { Visible, Tock, Tau, Tick };

/// A transition label. `event` names the event of a Visible action; for a
/// Tau produced by hiding it keeps the hidden event for diagnostics.
struct Action {
  ActionKind kind = ActionKind::Tau;
  std::string event;

  friend bool operator==(const Action&, const Action&) = default;
  friend auto operator<=>(const Action&, const Action&) = default;
};

std::string toString(const Action& a);

using StateId = std::int32_t;

/// Hash-consed process terms of one set of definitions and their successor
/// relation. Terms are created on demand; `stateCap` bounds how many may
/// exist before BoundExceeded is raised.
class Lts {
 public:
  struct Transition {
    ActionKind kind;
    std::int32_t event;  // interned name, -1 if none
    StateId target;
  };

  explicit Lts(const csp::Definitions& defs, std::size_t stateCap = 2'000'000);

  StateId intern(const csp::Process& p);
  StateId terminated();
  const std::vector<Transition>& step(StateId s);

  const std::string& eventName(std::int32_t id) const { return events_[id]; }
  Action action(const Transition& t) const;

  /// Converts a term back to syntax; nullptr stands for the terminated state.
  csp::ProcPtr toProcess(StateId s) const;
  std::size_t size() const { return terms_.size(); }

 private:
  enum class Kind : std::uint8_t {
    Stop, Skip, Omega, Prefix, Seq, GenPar, ExtChoice, IntChoice, Interrupt, Hide, Rename, Ref,
  };
  struct Term {
    Kind kind;
    std::int32_t a = -1;      // left / body / continuation
    std::int32_t b = -1;      // right
    std::int32_t label = -1;  // event, set, renaming or definition id
    friend bool operator==(const Term&, const Term&) = default;
  };
  struct TermHash {
    std::size_t operator()(const Term& t) const;
  };

  StateId make(Kind k, StateId a = -1, StateId b = -1, std::int32_t label = -1);
  std::int32_t eventId(const std::string& name);
  std::int32_t setId(const csp::EventSet& s);
  std::int32_t idsToSet(std::vector<std::int32_t> ids);
  // (X \ A) \ B is stored as X \ (A u B), keeping recursion through hiding finite.
  StateId hidden(StateId body, std::int32_t set);
  std::int32_t renameId(const csp::RenameMap& m);
  bool inSet(std::int32_t set, std::int32_t event) const;
  std::int32_t applyRename(std::int32_t map, std::int32_t event) const;
  void compute(StateId s, std::vector<Transition>& out);

  const csp::Definitions& defs_;
  std::size_t cap_;
  std::vector<Term> terms_;
  std::unordered_map<Term, StateId, TermHash> index_;
  std::vector<std::vector<Transition>> succ_;
  std::vector<bool> computed_;
  std::vector<std::string> events_;
  std::unordered_map<std::string, std::int32_t> eventIndex_;
  std::vector<std::vector<std::int32_t>> sets_;
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> renames_;
  std::vector<std::string> defNames_;
  std::unordered_map<std::string, std::int32_t> defIndex_;
  std::int32_t tock_;
};

/// Successor of one small step; `next == nullptr` is the terminated state.
struct Successor {
  Action action;
  csp::ProcPtr next;
};

/// The exact successor set of `p` (duplicates removed).
std::vector<Successor> step(const csp::ProcPtr& p, const csp::Definitions& defs);

/// First visible non-tock events of `p`, looking through silent steps.
csp::EventSet initials(const csp::Process& p, const csp::Definitions& defs);

/// All traces of length <= depth (visible events and tock) of the main process.
TraceSet tracesTockCsp(const csp::CspSpec& spec, std::size_t depth, std::size_t stateCap = 2'000'000);

/// Same, starting from an arbitrary process over `defs`.
TraceSet tracesOf(const csp::Process& p, const csp::Definitions& defs, std::size_t depth,
                  std::size_t stateCap = 2'000'000);

/// Number of distinct process states reachable from main.
std::size_t reachableStates(const csp::CspSpec& spec, std::size_t stateCap = 100'000);

}  // namespace tock2ta::semantics
