#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tock2ta::ta {

enum class LocationKind { Normal, Urgent, Committed };

enum class Rel { Lt, Le, Eq, Ge, Gt };

std::string_view relText(Rel r);
bool holds(long lhs, Rel r, long rhs);

/// `t1 + ... + tk  rel  constant`. A single-term atom over a clock is a
/// clock constraint; otherwise every term is an integer variable.
struct Atom {
  std::vector<std::string> terms;
  Rel rel = Rel::Eq;
  int constant = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

using Conjunction = std::vector<Atom>;

struct Location {
  std::string id;
  std::string displayName;
  LocationKind kind = LocationKind::Normal;
  Conjunction invariant;

  friend bool operator==(const Location&, const Location&) = default;
};

enum class Direction { Send, Receive };

struct SyncLabel {
  std::string channel;
  Direction direction = Direction::Send;

  friend bool operator==(const SyncLabel&, const SyncLabel&) = default;
};

/// `var := value`; for a clock the value is always 0 (a reset).
struct Update {
  std::string var;
  int value = 0;

  friend bool operator==(const Update&, const Update&) = default;
};

struct Edge {
  std::string source;
  std::string target;
  Conjunction guard;
  std::optional<SyncLabel> sync;
  std::vector<Update> updates;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct TimedAutomaton {
  std::string name;
  std::vector<Location> locations;
  std::string initial;
  std::vector<std::string> clocks;
  std::vector<Edge> edges;

  const Location* location(std::string_view id) const;
  friend bool operator==(const TimedAutomaton&, const TimedAutomaton&) = default;
};

enum class ChannelMode { Binary, Broadcast, UrgentBinary };

enum class ChannelKind {
  UserEvent,
  TockChannel,
  Flow,
  Terminating,
  Synchronisation,
  ExtChoiceCoord,
  InterruptCoord,
  ExceptionCoord,
  HiddenItau,
};

std::string_view kindName(ChannelKind k);
std::optional<ChannelKind> kindFromText(std::string_view s);
std::string_view modeName(ChannelMode m);

/// Classifies a channel by the reserved naming patterns alone.
ChannelKind kindFromName(std::string_view name);
bool isErased(ChannelKind k);

struct ChannelDecl {
  std::string name;
  ChannelMode mode = ChannelMode::Binary;
  ChannelKind kind = ChannelKind::UserEvent;

  friend bool operator==(const ChannelDecl&, const ChannelDecl&) = default;
};

struct NetworkModel {
  std::vector<TimedAutomaton> automata;
  std::vector<ChannelDecl> channels;
  std::vector<std::pair<std::string, int>> intVars;
  std::vector<std::string> globalClocks;
  std::size_t environmentIndex = 0;

  const ChannelDecl* channel(std::string_view name) const;
  friend bool operator==(const NetworkModel&, const NetworkModel&) = default;
};

/// One message per violated invariant; empty means valid.
std::vector<std::string> validate(const NetworkModel& net);

/// Channels removed from traces before comparison: every coordinating kind
/// plus hidden itau channels.
std::set<std::string> erasureSet(const NetworkModel& net);

}  // namespace tock2ta::ta
