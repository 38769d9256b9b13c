#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tock2ta/csp/ast.hpp"
#include "tock2ta/ta/model.hpp"

namespace tock2ta::translate {

/// Raised for constructs the translation deliberately does not cover
/// (for instance recursion through a parallel operand).
class NotImplemented : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hands out globally unique generated names. One registry per translation.
class NameRegistry {
 public:
  /// Reserves `name` exactly; false if it is already taken.
  bool claim(const std::string& name);
  bool taken(const std::string& name) const { return used_.count(name) > 0; }

  /// `<prefix><branch>_<n>` with a network-wide counter n.
  std::string fresh(const std::string& prefix, const std::string& branch);

  /// `<event>___sync`, or `<event>_<k>___sync` when that is taken.
  std::string syncChannel(const std::string& event);

 private:
  std::set<std::string> used_;
  int counter_ = 0;
};

struct TranslationContext {
  std::string procName;
  std::string branchId = "0";
  std::string startAction;
  std::string finishAction;
  NameRegistry* names = nullptr;
};

/// A multi-party event: fires `event` (the channel seen by the environment,
/// possibly an itau channel) once every readiness variable is 1, then
/// broadcasts `channel` to the participants.
struct SyncRequirement {
  std::string event;
  std::vector<std::string> participants;
  std::string channel;

  friend bool operator==(const SyncRequirement&, const SyncRequirement&) = default;
};

struct Translation {
  std::vector<ta::TimedAutomaton> automata;
  std::vector<SyncRequirement> requirements;
  /// Every channel the automata use, except user events and tock.
  std::vector<ta::ChannelDecl> channels;
  /// Hidden-event channels emitted by the automata (subset of `channels`).
  std::vector<std::string> hiddenChannels;
  /// Readiness variables, all initially 0.
  std::vector<std::string> variables;
};

/// Compiles `p` into small automata started by ctx.startAction and
/// signalling termination on ctx.finishAction. If ctx.procName names a
/// definition, `p` is taken to be its body, so recursion back to it reuses
/// the start action.
Translation transTA(const csp::Process& p, const csp::Definitions& defs, TranslationContext& ctx);

/// The single-location environment: co-actions for `events` and `hidden`,
/// the one-shot start, the root finish and the periodic tock broadcast.
ta::TimedAutomaton buildEnvironmentTA(const csp::EventSet& events, const std::string& startAction,
                                      const std::string& finishAction,
                                      const std::vector<std::string>& hidden = {});

ta::TimedAutomaton buildSyncTA(const std::vector<SyncRequirement>& reqs);

struct AssembleOptions {
  /// Overrides the root start action (default `startID<main>`).
  std::optional<std::string> rootStart;
};

inline constexpr const char* kEnvironmentName = "Env";
inline constexpr const char* kSyncName = "Sync";
inline constexpr const char* kRootFinish = "finishID0";

ta::NetworkModel assemble(const csp::CspSpec& spec, const AssembleOptions& options = {});

}  // namespace tock2ta::translate
