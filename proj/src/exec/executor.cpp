#include "tock2ta/exec/executor.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace tock2ta::exec {

Executor::Executor(const ta::NetworkModel& net) : net_(net) {
  std::map<std::string, int> ints;
  for (std::size_t i = 0; i < net.intVars.size(); ++i) ints[net.intVars[i].first] = static_cast<int>(i);
  std::map<std::string, int> channels;
  for (const auto& c : net.channels) {
    channels[c.name] = static_cast<int>(modes_.size());
    modes_.push_back(c.mode);
    channelNames_.push_back(c.name);
  }
  std::map<std::string, int> globalClocks;
  for (const auto& c : net.globalClocks) {
    globalClocks[c] = static_cast<int>(clockNames_.size());
    clockNames_.push_back(c);
  }

  int maxConst = 0;
  for (const auto& ta : net.automata) {
    std::map<std::string, int> clocks = globalClocks;
    for (const auto& c : ta.clocks) {
      clocks[c] = static_cast<int>(clockNames_.size());
      clockNames_.push_back(ta.name + "." + c);
    }
    std::map<std::string, int> locs;
    for (std::size_t i = 0; i < ta.locations.size(); ++i) locs[ta.locations[i].id] = static_cast<int>(i);

    auto atoms = [&](const ta::Conjunction& conj) {
      std::vector<CAtom> out;
      for (const auto& a : conj) {
        CAtom c{{}, -1, a.rel, a.constant};
        if (a.terms.size() == 1 && clocks.count(a.terms[0])) {
          c.clock = clocks.at(a.terms[0]);
          maxConst = std::max(maxConst, a.constant);
        } else {
          for (const auto& t : a.terms) {
            auto it = ints.find(t);
            if (it == ints.end()) throw std::invalid_argument("undeclared variable " + t + " in " + ta.name);
            c.vars.push_back(it->second);
          }
        }
        out.push_back(std::move(c));
      }
      return out;
    };

    CAutomaton ca;
    ca.outgoing.resize(ta.locations.size());
    for (const auto& l : ta.locations) {
      ca.kinds.push_back(l.kind);
      ca.invariants.push_back(atoms(l.invariant));
    }
    for (const auto& e : ta.edges) {
      CEdge ce;
      ce.source = locs.at(e.source);
      ce.target = locs.at(e.target);
      ce.guard = atoms(e.guard);
      if (e.sync) {
        auto it = channels.find(e.sync->channel);
        if (it == channels.end()) throw std::invalid_argument("undeclared channel " + e.sync->channel);
        ce.channel = it->second;
        ce.send = e.sync->direction == ta::Direction::Send;
      }
      for (const auto& u : e.updates) {
        CUpdate cu;
        cu.value = u.value;
        if (clocks.count(u.var)) {
          cu.clock = clocks.at(u.var);
        } else {
          cu.var = ints.at(u.var);
        }
        ce.updates.push_back(cu);
      }
      ca.outgoing[ce.source].push_back(static_cast<int>(ca.edges.size()));
      ca.edges.push_back(std::move(ce));
    }
    automata_.push_back(std::move(ca));
  }
  clockCap_ = maxConst + 1;
}

Configuration Executor::initial() const {
  Configuration cfg;
  for (const auto& ta : net_.automata) {
    int idx = 0;
    for (std::size_t i = 0; i < ta.locations.size(); ++i) {
      if (ta.locations[i].id == ta.initial) idx = static_cast<int>(i);
    }
    cfg.locations.push_back(idx);
  }
  for (const auto& [name, v] : net_.intVars) cfg.ints.push_back(v);
  cfg.clocks.assign(clockNames_.size(), 0);
  return cfg;
}

bool Executor::holds(const std::vector<CAtom>& atoms, const Configuration& cfg) const {
  for (const auto& a : atoms) {
    long lhs = 0;
    if (a.clock >= 0) {
      lhs = cfg.clocks[a.clock];
    } else {
      for (int v : a.vars) lhs += cfg.ints[v];
    }
    if (!ta::holds(lhs, a.rel, a.constant)) return false;
  }
  return true;
}

bool Executor::enabled(const CEdge& e, const Configuration& cfg) const { return holds(e.guard, cfg); }

bool Executor::invariantsHold(const Configuration& cfg) const {
  for (std::size_t a = 0; a < automata_.size(); ++a) {
    if (!holds(automata_[a].invariants[cfg.locations[a]], cfg)) return false;
  }
  return true;
}

void Executor::applyEdge(int a, const CEdge& e, Configuration& cfg) const {
  cfg.locations[a] = e.target;
  for (const auto& u : e.updates) {
    if (u.clock >= 0) {
      cfg.clocks[u.clock] = std::min(u.value, clockCap_);
    } else {
      cfg.ints[u.var] = u.value;
    }
  }
}

bool Executor::timeCanPass(const Configuration& cfg) const {
  std::vector<std::vector<int>> sends(modes_.size()), recvs(modes_.size());
  for (std::size_t a = 0; a < automata_.size(); ++a) {
    const auto& ca = automata_[a];
    auto kind = ca.kinds[cfg.locations[a]];
    if (kind != ta::LocationKind::Normal) return false;
    for (int ei : ca.outgoing[cfg.locations[a]]) {
      const CEdge& e = ca.edges[ei];
      if (e.channel < 0 || modes_[e.channel] != ta::ChannelMode::UrgentBinary || !enabled(e, cfg)) continue;
      (e.send ? sends : recvs)[e.channel].push_back(static_cast<int>(a));
    }
  }
  for (std::size_t c = 0; c < modes_.size(); ++c) {
    for (int s : sends[c]) {
      for (int r : recvs[c]) {
        if (s != r) return false;
      }
    }
  }
  Configuration next = cfg;
  for (auto& v : next.clocks) v = std::min(v + 1, clockCap_);
  return invariantsHold(next);
}

std::vector<NetStep> Executor::enabledSteps(const Configuration& cfg) const {
  const int n = static_cast<int>(automata_.size());
  bool anyCommitted = false;
  std::vector<bool> committed(n, false);
  for (int a = 0; a < n; ++a) {
    committed[a] = automata_[a].kinds[cfg.locations[a]] == ta::LocationKind::Committed;
    anyCommitted = anyCommitted || committed[a];
  }

  std::vector<NetStep> out;
  auto keep = [&](NetStep step) {
    Configuration next = apply(cfg, step);
    if (invariantsHold(next)) out.push_back(std::move(step));
  };

  std::vector<std::vector<std::pair<int, int>>> sends(modes_.size()), recvs(modes_.size());
  for (int a = 0; a < n; ++a) {
    const auto& ca = automata_[a];
    for (int ei : ca.outgoing[cfg.locations[a]]) {
      const CEdge& e = ca.edges[ei];
      if (!enabled(e, cfg)) continue;
      if (e.channel < 0) {
        if (!anyCommitted || committed[a]) {
          NetStep s;
          s.kind = NetStep::Kind::Silent;
          s.sender = a;
          s.senderEdge = ei;
          keep(std::move(s));
        }
      } else {
        (e.send ? sends : recvs)[e.channel].push_back({a, ei});
      }
    }
  }

  for (std::size_t c = 0; c < modes_.size(); ++c) {
    if (modes_[c] == ta::ChannelMode::Broadcast) {
      for (const auto& [sa, se] : sends[c]) {
        // One receive edge per ready automaton; each choice is a separate step.
        std::vector<std::vector<std::pair<int, int>>> groups;
        for (const auto& r : recvs[c]) {
          if (r.first == sa) continue;
          if (groups.empty() || groups.back().front().first != r.first) groups.emplace_back();
          groups.back().push_back(r);
        }
        bool involvesCommitted = committed[sa];
        for (const auto& g : groups) involvesCommitted = involvesCommitted || committed[g.front().first];
        if (anyCommitted && !involvesCommitted) continue;
        std::vector<std::size_t> pick(groups.size(), 0);
        for (;;) {
          NetStep s;
          s.kind = NetStep::Kind::Broadcast;
          s.sender = sa;
          s.senderEdge = se;
          s.channel = channelNames_[c];
          for (std::size_t i = 0; i < groups.size(); ++i) s.receivers.push_back(groups[i][pick[i]]);
          keep(std::move(s));
          std::size_t i = 0;
          while (i < groups.size() && ++pick[i] == groups[i].size()) pick[i++] = 0;
          if (i == groups.size()) break;
        }
      }
    } else {
      for (const auto& [sa, se] : sends[c]) {
        for (const auto& [ra, re] : recvs[c]) {
          if (sa == ra) continue;
          if (anyCommitted && !committed[sa] && !committed[ra]) continue;
          NetStep s;
          s.kind = NetStep::Kind::Binary;
          s.sender = sa;
          s.senderEdge = se;
          s.receivers = {{ra, re}};
          s.channel = channelNames_[c];
          keep(std::move(s));
        }
      }
    }
  }

  if (!anyCommitted && timeCanPass(cfg)) out.push_back(NetStep{});
  return out;
}

Configuration Executor::apply(const Configuration& cfg, const NetStep& step) const {
  Configuration next = cfg;
  if (step.kind == NetStep::Kind::TimeTick) {
    for (auto& v : next.clocks) v = std::min(v + 1, clockCap_);
    return next;
  }
  assert(step.sender >= 0);
  applyEdge(step.sender, automata_[step.sender].edges[step.senderEdge], next);
  for (const auto& [a, e] : step.receivers) applyEdge(a, automata_[a].edges[e], next);
  return next;
}

std::string Executor::describe(const Configuration& cfg) const {
  std::string out = "(";
  for (std::size_t a = 0; a < net_.automata.size(); ++a) {
    if (a) out += ", ";
    out += net_.automata[a].name + "." + net_.automata[a].locations[cfg.locations[a]].id;
  }
  for (std::size_t i = 0; i < cfg.ints.size(); ++i) out += ", " + net_.intVars[i].first + "=" + std::to_string(cfg.ints[i]);
  for (std::size_t i = 0; i < cfg.clocks.size(); ++i) out += ", " + clockNames_[i] + "=" + std::to_string(cfg.clocks[i]);
  return out + ")";
}

std::vector<NetStep> enabledSteps(const ta::NetworkModel& net, const Configuration& cfg) {
  return Executor(net).enabledSteps(cfg);
}

Configuration applyStep(const ta::NetworkModel& net, const Configuration& cfg, const NetStep& step) {
  return Executor(net).apply(cfg, step);
}

}  // namespace tock2ta::exec
