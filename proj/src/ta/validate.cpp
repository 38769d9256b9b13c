#include <map>

#include "tock2ta/ta/model.hpp"

namespace tock2ta::ta {

namespace {

struct Scope {
  std::set<std::string> ints;
  std::set<std::string> clocks;
};

void checkAtoms(const Conjunction& atoms, const Scope& scope, bool clocksOnly, const std::string& where,
                std::vector<std::string>& out) {
  for (const auto& a : atoms) {
    if (a.terms.empty()) {
      out.push_back(where + ": empty atom");
      continue;
    }
    if (a.constant < 0) out.push_back(where + ": negative constant");
    bool isClock = a.terms.size() == 1 && scope.clocks.count(a.terms[0]);
    if (clocksOnly && !isClock) out.push_back(where + ": invariant must constrain a clock");
    if (!isClock) {
      for (const auto& t : a.terms) {
        if (!scope.ints.count(t)) out.push_back(where + ": undeclared variable '" + t + "'");
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate(const NetworkModel& net) {
  std::vector<std::string> out;

  std::map<std::string, int> seen;
  for (const auto& c : net.channels) {
    if (seen[c.name]++ == 1) out.push_back("duplicate channel '" + c.name + "'");
    if (c.kind == ChannelKind::TockChannel && c.mode != ChannelMode::Broadcast) {
      out.push_back("channel '" + c.name + "' must be broadcast");
    }
    if (kindFromName(c.name) != c.kind) {
      out.push_back("channel '" + c.name + "' kind " + std::string(kindName(c.kind)) +
                    " disagrees with its name");
    }
  }

  Scope global;
  for (const auto& [v, init] : net.intVars) {
    if (!global.ints.insert(v).second) out.push_back("duplicate variable '" + v + "'");
  }
  for (const auto& c : net.globalClocks) global.clocks.insert(c);

  if (net.environmentIndex >= net.automata.size()) {
    out.push_back("environment index out of range");
  } else if (net.automata[net.environmentIndex].locations.size() != 1) {
    out.push_back("environment automaton must have exactly one location");
  }

  std::set<std::string> names;
  for (const auto& ta : net.automata) {
    const std::string at = "automaton " + ta.name;
    if (!names.insert(ta.name).second) out.push_back(at + ": duplicate automaton name");
    Scope scope = global;
    for (const auto& c : ta.clocks) scope.clocks.insert(c);

    std::set<std::string> ids;
    for (const auto& l : ta.locations) {
      if (!ids.insert(l.id).second) out.push_back(at + ": duplicate location '" + l.id + "'");
      checkAtoms(l.invariant, scope, true, at + " location " + l.id, out);
    }
    if (!ids.count(ta.initial)) out.push_back(at + ": missing initial location");

    for (std::size_t i = 0; i < ta.edges.size(); ++i) {
      const Edge& e = ta.edges[i];
      const std::string where = at + " edge " + std::to_string(i);
      if (!ids.count(e.source)) out.push_back(where + ": unknown source '" + e.source + "'");
      if (!ids.count(e.target)) out.push_back(where + ": unknown target '" + e.target + "'");
      checkAtoms(e.guard, scope, false, where, out);
      if (e.sync && !net.channel(e.sync->channel)) {
        out.push_back(where + ": unresolved channel '" + e.sync->channel + "'");
      }
      for (const auto& u : e.updates) {
        if (scope.clocks.count(u.var)) {
          if (u.value != 0) out.push_back(where + ": clock '" + u.var + "' may only be reset to 0");
        } else if (!scope.ints.count(u.var)) {
          out.push_back(where + ": undeclared variable '" + u.var + "'");
        }
      }
    }
  }
  return out;
}

}  // namespace tock2ta::ta
