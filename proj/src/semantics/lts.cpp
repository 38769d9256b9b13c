#include "tock2ta/semantics/lts.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace tock2ta::semantics {

std::string toString(const Action& a) {
  switch (a.kind) {
    case ActionKind::Visible: return a.event;
    case ActionKind::Tock: return std::string(csp::kTock);
    case ActionKind::Tick: return "tick";
    case ActionKind::Tau: return a.event.empty() ? "tau" : "tau(" + a.event + ")";
  }
  return "?";
}

std::size_t Lts::TermHash::operator()(const Term& t) const {
  std::size_t h = static_cast<std::size_t>(t.kind);
  h = h * 1000003u ^ static_cast<std::size_t>(t.a + 1);
  h = h * 1000003u ^ static_cast<std::size_t>(t.b + 1);
  h = h * 1000003u ^ static_cast<std::size_t>(t.label + 1);
  return h;
}

Lts::Lts(const csp::Definitions& defs, std::size_t stateCap) : defs_(defs), cap_(stateCap) {
  tock_ = eventId(std::string(csp::kTock));
}

StateId Lts::make(Kind k, StateId a, StateId b, std::int32_t label) {
  Term t{k, a, b, label};
  auto it = index_.find(t);
  if (it != index_.end()) return it->second;
  if (terms_.size() >= cap_) {
    throw BoundExceeded("process state budget of " + std::to_string(cap_) + " terms exceeded");
  }
  auto id = static_cast<StateId>(terms_.size());
  terms_.push_back(t);
  succ_.emplace_back();
  computed_.push_back(false);
  index_.emplace(t, id);
  return id;
}

std::int32_t Lts::eventId(const std::string& name) {
  auto it = eventIndex_.find(name);
  if (it != eventIndex_.end()) return it->second;
  auto id = static_cast<std::int32_t>(events_.size());
  events_.push_back(name);
  eventIndex_.emplace(name, id);
  return id;
}

std::int32_t Lts::setId(const csp::EventSet& s) {
  std::vector<std::int32_t> ids;
  for (const auto& e : s) ids.push_back(eventId(e));
  return idsToSet(std::move(ids));
}

std::int32_t Lts::idsToSet(std::vector<std::int32_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i] == ids) return static_cast<std::int32_t>(i);
  }
  sets_.push_back(std::move(ids));
  return static_cast<std::int32_t>(sets_.size() - 1);
}

std::int32_t Lts::renameId(const csp::RenameMap& m) {
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  for (const auto& [from, to] : m) pairs.emplace_back(eventId(from), eventId(to));
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < renames_.size(); ++i) {
    if (renames_[i] == pairs) return static_cast<std::int32_t>(i);
  }
  renames_.push_back(std::move(pairs));
  return static_cast<std::int32_t>(renames_.size() - 1);
}

bool Lts::inSet(std::int32_t set, std::int32_t event) const {
  const auto& s = sets_[set];
  return std::binary_search(s.begin(), s.end(), event);
}

std::int32_t Lts::applyRename(std::int32_t map, std::int32_t event) const {
  for (const auto& [from, to] : renames_[map]) {
    if (from == event) return to;
  }
  return event;
}

StateId Lts::hidden(StateId body, std::int32_t set) {
  const Term inner = terms_[body];
  if (inner.kind != Kind::Hide) return make(Kind::Hide, body, -1, set);
  std::vector<std::int32_t> ids = sets_[inner.label];
  ids.insert(ids.end(), sets_[set].begin(), sets_[set].end());
  return make(Kind::Hide, inner.a, -1, idsToSet(std::move(ids)));
}

StateId Lts::terminated() { return make(Kind::Omega); }

StateId Lts::intern(const csp::Process& p) {
  using csp::Op;
  switch (p.op) {
    case Op::Stop: return make(Kind::Stop);
    case Op::Skip: return make(Kind::Skip);
    case Op::Prefix: return make(Kind::Prefix, intern(*p.left), -1, eventId(p.name));
    case Op::Seq: return make(Kind::Seq, intern(*p.left), intern(*p.right));
    case Op::GenPar: return make(Kind::GenPar, intern(*p.left), intern(*p.right), setId(p.events));
    case Op::Interleave: return make(Kind::GenPar, intern(*p.left), intern(*p.right), setId({}));
    case Op::ExtChoice: return make(Kind::ExtChoice, intern(*p.left), intern(*p.right));
    case Op::IntChoice: return make(Kind::IntChoice, intern(*p.left), intern(*p.right));
    case Op::Interrupt: return make(Kind::Interrupt, intern(*p.left), intern(*p.right));
    case Op::Hide: return hidden(intern(*p.left), setId(p.events));
    case Op::Rename: return make(Kind::Rename, intern(*p.left), -1, renameId(p.renaming));
    case Op::Ref: {
      auto it = defIndex_.find(p.name);
      std::int32_t d;
      if (it == defIndex_.end()) {
        if (!defs_.count(p.name)) throw std::invalid_argument("undefined process " + p.name);
        d = static_cast<std::int32_t>(defNames_.size());
        defNames_.push_back(p.name);
        defIndex_.emplace(p.name, d);
      } else {
        d = it->second;
      }
      return make(Kind::Ref, -1, -1, d);
    }
  }
  throw std::logic_error("unknown operator");
}

const std::vector<Lts::Transition>& Lts::step(StateId s) {
  if (!computed_[s]) {
    std::vector<Transition> out;
    compute(s, out);
    std::sort(out.begin(), out.end(), [](const Transition& x, const Transition& y) {
      return std::tie(x.kind, x.event, x.target) < std::tie(y.kind, y.event, y.target);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Transition& x, const Transition& y) {
                            return x.kind == y.kind && x.event == y.event && x.target == y.target;
                          }),
              out.end());
    succ_[s] = std::move(out);
    computed_[s] = true;
  }
  return succ_[s];
}

void Lts::compute(StateId s, std::vector<Transition>& out) {
  const Term t = terms_[s];
  using K = ActionKind;
  auto tocks = [](const std::vector<Transition>& v) {
    std::vector<StateId> r;
    for (const auto& x : v) {
      if (x.kind == K::Tock) r.push_back(x.target);
    }
    return r;
  };

  switch (t.kind) {
    case Kind::Stop:
    case Kind::Omega:
      out.push_back({K::Tock, tock_, s});
      return;
    case Kind::Skip:
      out.push_back({K::Tock, tock_, s});
      out.push_back({K::Tick, -1, terminated()});
      return;
    case Kind::Prefix:
      if (t.label == tock_) {
        out.push_back({K::Tock, tock_, t.a});
      } else {
        out.push_back({K::Visible, t.label, t.a});
        out.push_back({K::Tock, tock_, s});
      }
      return;
    case Kind::Seq: {
      const auto l = step(t.a);
      for (const auto& x : l) {
        if (x.kind == K::Tick) {
          out.push_back({K::Tau, -1, t.b});
        } else {
          out.push_back({x.kind, x.event, make(Kind::Seq, x.target, t.b)});
        }
      }
      return;
    }
    case Kind::ExtChoice: {
      const auto l = step(t.a);
      const auto r = step(t.b);
      for (int side = 0; side < 2; ++side) {
        for (const auto& x : side == 0 ? l : r) {
          switch (x.kind) {
            case K::Visible: out.push_back(x); break;
            case K::Tick: out.push_back({K::Tick, -1, terminated()}); break;
            case K::Tau:
              out.push_back({K::Tau, x.event,
                             side == 0 ? make(Kind::ExtChoice, x.target, t.b) : make(Kind::ExtChoice, t.a, x.target)});
              break;
            case K::Tock: break;
          }
        }
      }
      for (StateId pl : tocks(l)) {
        for (StateId pr : tocks(r)) out.push_back({K::Tock, tock_, make(Kind::ExtChoice, pl, pr)});
      }
      return;
    }
    case Kind::IntChoice:
      out.push_back({K::Tau, -1, t.a});
      out.push_back({K::Tau, -1, t.b});
      return;
    case Kind::GenPar: {
      const auto l = step(t.a);
      const auto r = step(t.b);
      for (const auto& x : l) {
        if (x.kind == K::Tau || (x.kind == K::Visible && !inSet(t.label, x.event))) {
          out.push_back({x.kind, x.event, make(Kind::GenPar, x.target, t.b, t.label)});
        }
      }
      for (const auto& y : r) {
        if (y.kind == K::Tau || (y.kind == K::Visible && !inSet(t.label, y.event))) {
          out.push_back({y.kind, y.event, make(Kind::GenPar, t.a, y.target, t.label)});
        }
      }
      for (const auto& x : l) {
        for (const auto& y : r) {
          if (x.kind != y.kind) continue;
          if (x.kind == K::Visible && x.event == y.event && inSet(t.label, x.event)) {
            out.push_back({K::Visible, x.event, make(Kind::GenPar, x.target, y.target, t.label)});
          } else if (x.kind == K::Tock) {
            out.push_back({K::Tock, tock_, make(Kind::GenPar, x.target, y.target, t.label)});
          } else if (x.kind == K::Tick) {
            out.push_back({K::Tick, -1, terminated()});
          }
        }
      }
      return;
    }
    case Kind::Interrupt: {
      const auto l = step(t.a);
      const auto r = step(t.b);
      for (const auto& x : l) {
        if (x.kind == K::Visible || x.kind == K::Tau) {
          out.push_back({x.kind, x.event, make(Kind::Interrupt, x.target, t.b)});
        } else if (x.kind == K::Tick) {
          out.push_back({K::Tick, -1, terminated()});
        }
      }
      for (const auto& y : r) {
        if (y.kind == K::Visible) {
          out.push_back(y);
        } else if (y.kind == K::Tau) {
          out.push_back({K::Tau, y.event, make(Kind::Interrupt, t.a, y.target)});
        } else if (y.kind == K::Tick) {
          out.push_back({K::Tick, -1, terminated()});
        }
      }
      for (StateId pl : tocks(l)) {
        for (StateId pr : tocks(r)) out.push_back({K::Tock, tock_, make(Kind::Interrupt, pl, pr)});
      }
      return;
    }
    case Kind::Hide: {
      const auto l = step(t.a);
      for (const auto& x : l) {
        if (x.kind == K::Tick) {
          out.push_back({K::Tick, -1, terminated()});
        } else if (x.kind == K::Visible && inSet(t.label, x.event)) {
          out.push_back({K::Tau, x.event, hidden(x.target, t.label)});
        } else {
          out.push_back({x.kind, x.event, hidden(x.target, t.label)});
        }
      }
      return;
    }
    case Kind::Rename: {
      const auto l = step(t.a);
      for (const auto& x : l) {
        if (x.kind == K::Tick) {
          out.push_back({K::Tick, -1, terminated()});
        } else {
          std::int32_t e = x.kind == K::Visible ? applyRename(t.label, x.event) : x.event;
          out.push_back({x.kind, e, make(Kind::Rename, x.target, -1, t.label)});
        }
      }
      return;
    }
    case Kind::Ref: {
      StateId body = intern(*defs_.at(defNames_[t.label]));
      out = step(body);
      return;
    }
  }
}

Action Lts::action(const Transition& t) const {
  Action a;
  a.kind = t.kind;
  if (t.event >= 0 && t.kind != ActionKind::Tock) a.event = events_[t.event];
  return a;
}

csp::ProcPtr Lts::toProcess(StateId s) const {
  const Term& t = terms_[s];
  auto sub = [&](StateId x) {
    auto p = toProcess(x);
    if (!p) throw std::logic_error("terminated state below an operator");
    return p;
  };
  auto setOf = [&](std::int32_t id) {
    csp::EventSet r;
    for (auto e : sets_[id]) r.insert(events_[e]);
    return r;
  };
  switch (t.kind) {
    case Kind::Omega: return nullptr;
    case Kind::Stop: return csp::stop();
    case Kind::Skip: return csp::skip();
    case Kind::Prefix: return csp::prefix(events_[t.label], sub(t.a));
    case Kind::Seq: return csp::seq(sub(t.a), sub(t.b));
    case Kind::GenPar:
      if (sets_[t.label].empty()) return csp::interleave(sub(t.a), sub(t.b));
      return csp::genPar(sub(t.a), sub(t.b), setOf(t.label));
    case Kind::ExtChoice: return csp::extChoice(sub(t.a), sub(t.b));
    case Kind::IntChoice: return csp::intChoice(sub(t.a), sub(t.b));
    case Kind::Interrupt: return csp::interrupt(sub(t.a), sub(t.b));
    case Kind::Hide: return csp::hide(sub(t.a), setOf(t.label));
    case Kind::Rename: {
      csp::RenameMap m;
      for (const auto& [from, to] : renames_[t.label]) m.emplace(events_[from], events_[to]);
      return csp::rename(sub(t.a), m);
    }
    case Kind::Ref: return csp::ref(defNames_[t.label]);
  }
  return nullptr;
}

std::vector<Successor> step(const csp::ProcPtr& p, const csp::Definitions& defs) {
  Lts lts(defs);
  StateId s = lts.intern(*p);
  std::vector<Successor> out;
  for (const auto& t : lts.step(s)) {
    Successor x{lts.action(t), lts.toProcess(t.target)};
    bool dup = std::any_of(out.begin(), out.end(),
                           [&](const Successor& y) { return y.action == x.action && csp::equal(y.next, x.next); });
    if (!dup) out.push_back(std::move(x));
  }
  return out;
}

csp::EventSet initials(const csp::Process& p, const csp::Definitions& defs) {
  Lts lts(defs);
  csp::EventSet out;
  std::vector<StateId> stack{lts.intern(p)};
  std::set<StateId> seen(stack.begin(), stack.end());
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const auto& t : lts.step(s)) {
      if (t.kind == ActionKind::Visible) {
        out.insert(lts.eventName(t.event));
      } else if (t.kind == ActionKind::Tau && seen.insert(t.target).second) {
        stack.push_back(t.target);
      }
    }
  }
  return out;
}

namespace {

// Subset construction over the observable actions, explored to a fixed depth.
class Determiniser {
 public:
  Determiniser(Lts& lts, std::size_t cap) : lts_(lts), cap_(cap) {}

  int closure(std::vector<StateId> seed) {
    std::set<StateId> seen(seed.begin(), seed.end());
    std::vector<StateId> stack(seen.begin(), seen.end());
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (const auto& t : lts_.step(s)) {
        if ((t.kind == ActionKind::Tau || t.kind == ActionKind::Tick) && seen.insert(t.target).second) {
          stack.push_back(t.target);
        }
      }
    }
    std::vector<StateId> key(seen.begin(), seen.end());
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    if (sets_.size() >= cap_) throw BoundExceeded("determinised state budget exceeded");
    int id = static_cast<int>(sets_.size());
    sets_.push_back(key);
    moves_.emplace_back();
    done_.push_back(false);
    ids_.emplace(std::move(key), id);
    return id;
  }

  const std::vector<std::pair<std::string, int>>& moves(int set) {
    if (!done_[set]) {
      std::map<std::string, std::vector<StateId>> groups;
      for (StateId s : sets_[set]) {
        for (const auto& t : lts_.step(s)) {
          if (t.kind == ActionKind::Visible || t.kind == ActionKind::Tock) {
            groups[lts_.eventName(t.event)].push_back(t.target);
          }
        }
      }
      std::vector<std::pair<std::string, int>> out;
      for (auto& [e, targets] : groups) out.emplace_back(e, closure(std::move(targets)));
      moves_[set] = std::move(out);
      done_[set] = true;
    }
    return moves_[set];
  }

  void explore(int set, Trace& trace, std::size_t depth, TraceSet& out) {
    out.traces.insert(trace);
    if (trace.size() == depth) return;
    const auto ms = moves(set);
    for (const auto& [e, next] : ms) {
      trace.push_back(e);
      explore(next, trace, depth, out);
      trace.pop_back();
    }
  }

 private:
  Lts& lts_;
  std::size_t cap_;
  std::vector<std::vector<StateId>> sets_;
  std::map<std::vector<StateId>, int> ids_;
  std::vector<std::vector<std::pair<std::string, int>>> moves_;
  std::vector<bool> done_;
};

}  // namespace

TraceSet tracesOf(const csp::Process& p, const csp::Definitions& defs, std::size_t depth, std::size_t stateCap) {
  Lts lts(defs, stateCap);
  Determiniser det(lts, stateCap);
  TraceSet out;
  out.depth = depth;
  Trace trace;
  det.explore(det.closure({lts.intern(p)}), trace, depth, out);
  return out;
}

TraceSet tracesTockCsp(const csp::CspSpec& spec, std::size_t depth, std::size_t stateCap) {
  return tracesOf(spec.body(spec.main), spec.definitions, depth, stateCap);
}

std::size_t reachableStates(const csp::CspSpec& spec, std::size_t stateCap) {
  Lts lts(spec.definitions, stateCap);
  StateId init = lts.intern(spec.body(spec.main));
  std::set<StateId> seen{init};
  std::deque<StateId> queue{init};
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const auto& t : lts.step(s)) {
      if (seen.insert(t.target).second) {
        if (seen.size() > stateCap) throw BoundExceeded("reachable state budget exceeded");
        queue.push_back(t.target);
      }
    }
  }
  return seen.size();
}

}  // namespace tock2ta::semantics
