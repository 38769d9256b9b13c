#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tock2ta/ta/model.hpp"
#include "tock2ta/trace.hpp"

namespace tock2ta::exec {

/// Locations are indices into each automaton's location list; integers
/// follow NetworkModel::intVars; clocks are the global clocks followed by
/// every automaton's local clocks in network order.
struct Configuration {
  std::vector<int> locations;
  std::vector<int> ints;
  std::vector<int> clocks;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct NetStep {
  enum class Kind { Silent, Binary, Broadcast, TimeTick };
  Kind kind = Kind::TimeTick;
  int sender = -1;      // automaton index (the only mover of a Silent step)
  int senderEdge = -1;  // edge index within that automaton
  /// (automaton, edge) for every receiver, in automaton order.
  std::vector<std::pair<int, int>> receivers;
  std::string channel;

  friend bool operator==(const NetStep&, const NetStep&) = default;
};

/// Indexed view of a network for fast stepping. Clock values are kept
/// exact up to one more than the largest constant they are compared with.
class Executor {
 public:
  explicit Executor(const ta::NetworkModel& net);

  const ta::NetworkModel& network() const { return net_; }
  Configuration initial() const;
  std::vector<NetStep> enabledSteps(const Configuration& cfg) const;
  Configuration apply(const Configuration& cfg, const NetStep& step) const;
  bool timeCanPass(const Configuration& cfg) const;
  std::string describe(const Configuration& cfg) const;

 private:
  struct CAtom {
    std::vector<int> vars;
    int clock = -1;
    ta::Rel rel;
    int constant;
  };
  struct CUpdate {
    int var = -1;
    int clock = -1;
    int value = 0;
  };
  struct CEdge {
    int source, target;
    std::vector<CAtom> guard;
    int channel = -1;  // -1 for silent
    bool send = false;
    std::vector<CUpdate> updates;
  };
  struct CAutomaton {
    std::vector<ta::LocationKind> kinds;
    std::vector<std::vector<CAtom>> invariants;
    std::vector<std::vector<int>> outgoing;  // edge indices per location
    std::vector<CEdge> edges;
  };

  bool holds(const std::vector<CAtom>& atoms, const Configuration& cfg) const;
  bool enabled(const CEdge& e, const Configuration& cfg) const;
  bool invariantsHold(const Configuration& cfg) const;
  void applyEdge(int a, const CEdge& e, Configuration& cfg) const;

  const ta::NetworkModel& net_;
  std::vector<CAutomaton> automata_;
  std::vector<ta::ChannelMode> modes_;
  std::vector<std::string> channelNames_;
  std::vector<std::string> clockNames_;
  int clockCap_ = 1;
};

std::vector<NetStep> enabledSteps(const ta::NetworkModel& net, const Configuration& cfg);
Configuration applyStep(const ta::NetworkModel& net, const Configuration& cfg, const NetStep& step);

/// Bounded traces recording every channel (coordinating ones included).
TraceSet tracesTAPrime(const ta::NetworkModel& net, std::size_t depth, std::size_t stateCap = 2'000'000);

/// Bounded traces with the coordinating and itau channels erased.
TraceSet tracesTA(const ta::NetworkModel& net, std::size_t depth, std::size_t stateCap = 2'000'000);

/// Bounded traces with an arbitrary set of channels treated as internal.
TraceSet tracesErasing(const ta::NetworkModel& net, std::size_t depth, const std::set<std::string>& erased,
                       std::size_t stateCap = 2'000'000);

struct LivenessReport {
  bool ok = true;
  std::size_t configurations = 0;  // configurations examined
  std::string witness;             // a configuration that cannot let time pass
};

/// From every configuration reachable within `observableDepth` visible
/// actions, searches at most `internalSteps` further steps for one where
/// time can pass.
LivenessReport checkTimeLiveness(const ta::NetworkModel& net, std::size_t observableDepth = 4,
                                 std::size_t internalSteps = 20, std::size_t stateCap = 2'000'000);

}  // namespace tock2ta::exec
