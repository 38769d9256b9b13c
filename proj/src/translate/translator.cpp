#include "tock2ta/translate/translator.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "tock2ta/csp/analysis.hpp"

namespace tock2ta::translate {

bool NameRegistry::claim(const std::string& name) { return used_.insert(name).second; }

std::string NameRegistry::fresh(const std::string& prefix, const std::string& branch) {
  for (;;) {
    std::string name = prefix + branch + "_" + std::to_string(counter_++);
    if (claim(name)) return name;
  }
}

std::string NameRegistry::syncChannel(const std::string& event) {
  std::string name = event + "___sync";
  for (int k = 1; !claim(name); ++k) name = event + "_" + std::to_string(k) + "___sync";
  return name;
}

namespace {

using csp::Op;
using csp::Process;
using ta::Direction;
using ta::LocationKind;
using ta::SyncLabel;
using ta::Update;

// Where a subterm sits relative to its parent; used to decide whether
// recursion may close the loop by reusing a start action.
enum class Step { PrefixCont, SeqLeft, SeqRight, ParOperand, ExtBranch, IntBranch, IntrOperand, Hide, Rename };

std::string_view stepName(Step s) {
  switch (s) {
    case Step::PrefixCont: return "prefix";
    case Step::SeqLeft: return "the left of ;";
    case Step::SeqRight: return "the right of ;";
    case Step::ParOperand: return "a parallel operand";
    case Step::ExtBranch: return "an undecided external choice";
    case Step::IntBranch: return "internal choice";
    case Step::IntrOperand: return "an interrupt operand";
    case Step::Hide: return "hiding";
    case Step::Rename: return "renaming";
  }
  return "?";
}

struct Frame {
  enum class Kind { GenPar, Hide, Rename, Region } kind;
  const csp::EventSet* events = nullptr;
  const csp::RenameMap* renaming = nullptr;
  std::string kill;     // Region: broadcast sent by events resolving it
  bool initial = true;  // Region: no resolving event has happened yet
};

struct PathStep {
  Step step;
  int frame = -1;  // region frame of an ExtBranch, hidden set of a Hide
  const csp::EventSet* hidden = nullptr;
};

struct Ctx {
  std::string branch;
  std::string start;
  std::string finish;
  std::vector<Frame> frames;
  std::vector<PathStep> path;
  std::vector<std::string> finishKills;
  std::vector<std::string> killReceivers;
};

struct Participant {
  int ta;
  std::string ready;
  std::string var;
  std::vector<std::string> kills;
  std::string cont;
};

struct Combo {
  std::string name;
  std::vector<int> parts;
};
using Pending = std::vector<Combo>;

struct DefEntry {
  std::string name;
  std::string start;
  std::size_t pathSize;
};

struct Receiver {
  int ta;
  std::string loc;
  std::vector<Update> updates;
};

// One action of a committed chain: a sync (or nothing) plus updates.
struct Act {
  std::optional<SyncLabel> sync;
  std::vector<Update> updates;
  std::string target;  // only meaningful for the last act; empty means s0
};

SyncLabel send(const std::string& c) { return {c, Direction::Send}; }
SyncLabel recv(const std::string& c) { return {c, Direction::Receive}; }

std::string pad2(std::size_t i) { return i < 10 ? "0" + std::to_string(i) : std::to_string(i); }

struct Builder {
  ta::TimedAutomaton ta;
  int next = 0;

  std::string loc(LocationKind k) {
    std::string id = "s" + std::to_string(next++);
    ta.locations.push_back({id, id, k, {}});
    return id;
  }
  void edge(const std::string& src, const std::string& tgt, std::optional<SyncLabel> sync,
            std::vector<Update> updates = {}, ta::Conjunction guard = {}) {
    ta.edges.push_back({src, tgt, std::move(guard), std::move(sync), std::move(updates)});
  }
};

// Result of walking the frames outward from an event occurrence.
struct EventInfo {
  bool participant = false;
  std::string emit;                 // channel for a non-participant
  std::vector<std::string> kills;   // region kills to send
  std::vector<int> resolved;        // region frames resolved by the event
};

class Translator {
 public:
  Translator(const csp::Definitions& defs, NameRegistry& names) : defs_(defs), names_(names) {}

  Pending translate(const Process& p, const Ctx& ctx);
  void enter(const std::string& def, const std::string& start, std::size_t pathSize) {
    stack_.push_back({def, start, pathSize});
  }
  Translation finish();

 private:
  int newTa();
  void receiveStart(int t, const std::string& channel, const std::string& target, std::vector<Update> updates);
  void chain(int t, const std::string& from, std::vector<Act> acts);
  Act flowTo(int t, const std::string& channel);
  void killEdges(int t, const std::vector<std::string>& locs, const Ctx& ctx, const std::string& var = "");
  std::optional<std::string> loopBack(const Process& child, const Ctx& childCtx) const;
  std::string prepare(const Process& child, Ctx& childCtx, const std::string& freshPrefix, bool& loop);
  EventInfo analyse(const std::string& event, const std::vector<Frame>& frames) const;
  std::string emissionFrom(const std::string& name, const std::vector<Frame>& frames) const;
  bool syncedAbove(const std::string& name, const std::vector<Frame>& frames) const;
  void finalise(const std::string& name, const Combo& combo, const std::vector<Frame>& frames);
  void declare(const std::string& name, ta::ChannelMode mode, ta::ChannelKind kind);
  std::string freshStart(const std::string& branch) {
    auto n = names_.fresh("startID", branch);
    declare(n, ta::ChannelMode::Binary, ta::ChannelKind::Flow);
    return n;
  }
  std::string freshFinish(const std::string& branch) {
    auto n = names_.fresh("finishID", branch);
    declare(n, ta::ChannelMode::Binary, ta::ChannelKind::Terminating);
    return n;
  }
  std::string freshKill(const std::string& prefix, const std::string& branch, ta::ChannelKind kind) {
    auto n = names_.fresh(prefix, branch);
    declare(n, ta::ChannelMode::Broadcast, kind);
    return n;
  }

  Pending prefix(const Process& p, const Ctx& ctx);
  Pending parallel(const Process& p, const Ctx& ctx);
  Pending extChoice(const Process& p, const Ctx& ctx);
  Pending intChoice(const Process& p, const Ctx& ctx);
  Pending interruptOp(const Process& p, const Ctx& ctx);
  Pending seq(const Process& p, const Ctx& ctx);

  const csp::Definitions& defs_;
  NameRegistry& names_;
  std::vector<Builder> tas_;
  std::vector<DefEntry> stack_;
  std::map<std::string, Receiver> receivers_;
  std::vector<Participant> participants_;
  std::vector<SyncRequirement> reqs_;
  std::vector<ta::ChannelDecl> channels_;
  std::set<std::string> declared_;
  std::vector<std::string> hidden_;
  std::vector<std::string> vars_;
};

void Translator::declare(const std::string& name, ta::ChannelMode mode, ta::ChannelKind kind) {
  if (declared_.insert(name).second) channels_.push_back({name, mode, kind});
}

int Translator::newTa() {
  Builder b;
  b.ta.name = "TA" + pad2(tas_.size());
  b.ta.initial = b.loc(LocationKind::Normal);
  tas_.push_back(std::move(b));
  return static_cast<int>(tas_.size() - 1);
}

void Translator::receiveStart(int t, const std::string& channel, const std::string& target,
                              std::vector<Update> updates) {
  tas_[t].edge("s0", target, recv(channel), updates);
  receivers_[channel] = {t, target, std::move(updates)};
}

// Sending on a flow channel, or jumping straight back when this automaton
// is itself the receiver (binary synchronisation needs two automata).
Act Translator::flowTo(int t, const std::string& channel) {
  auto it = receivers_.find(channel);
  if (it != receivers_.end() && it->second.ta == t) return {std::nullopt, it->second.updates, it->second.loc};
  return {send(channel), {}, ""};
}

void Translator::chain(int t, const std::string& from, std::vector<Act> acts) {
  Builder& b = tas_[t];
  std::string cur = from;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    bool last = i + 1 == acts.size();
    std::string tgt = last ? (acts[i].target.empty() ? "s0" : acts[i].target) : b.loc(LocationKind::Committed);
    b.edge(cur, tgt, acts[i].sync, acts[i].updates);
    cur = tgt;
  }
}

void Translator::killEdges(int t, const std::vector<std::string>& locs, const Ctx& ctx, const std::string& var) {
  for (const auto& k : ctx.killReceivers) {
    for (const auto& l : locs) {
      std::vector<Update> ups;
      if (!var.empty()) ups.push_back({var, 0});
      tas_[t].edge(l, "s0", recv(k), ups);
    }
  }
}

EventInfo Translator::analyse(const std::string& event, const std::vector<Frame>& frames) const {
  EventInfo info;
  std::string n = event;
  bool hidden = false;
  for (int i = static_cast<int>(frames.size()) - 1; i >= 0 && !hidden; --i) {
    const Frame& f = frames[i];
    switch (f.kind) {
      case Frame::Kind::GenPar:
        if (!info.participant && f.events->count(n)) info.participant = true;
        break;
      case Frame::Kind::Hide:
        if (f.events->count(n)) {
          hidden = true;
          if (!info.participant) info.emit = "itau_" + n;
        }
        break;
      case Frame::Kind::Rename: {
        auto it = f.renaming->find(n);
        if (it != f.renaming->end()) n = it->second;
        break;
      }
      case Frame::Kind::Region:
        info.kills.push_back(f.kill);
        info.resolved.push_back(i);
        break;
    }
  }
  if (!hidden && !info.participant) info.emit = n;
  return info;
}

std::string Translator::emissionFrom(const std::string& name, const std::vector<Frame>& frames) const {
  std::string n = name;
  for (int i = static_cast<int>(frames.size()) - 1; i >= 0; --i) {
    const Frame& f = frames[i];
    if (f.kind == Frame::Kind::Hide && f.events->count(n)) return "itau_" + n;
    if (f.kind == Frame::Kind::Rename) {
      auto it = f.renaming->find(n);
      if (it != f.renaming->end()) n = it->second;
    }
  }
  return n;
}

bool Translator::syncedAbove(const std::string& name, const std::vector<Frame>& frames) const {
  std::string n = name;
  for (int i = static_cast<int>(frames.size()) - 1; i >= 0; --i) {
    const Frame& f = frames[i];
    if (f.kind == Frame::Kind::GenPar && f.events->count(n)) return true;
    if (f.kind == Frame::Kind::Hide && f.events->count(n)) return false;
    if (f.kind == Frame::Kind::Rename) {
      auto it = f.renaming->find(n);
      if (it != f.renaming->end()) n = it->second;
    }
  }
  return false;
}

// Hidden sets wrapped directly around a definition body.
csp::EventSet hiddenAtTop(const Process& body) {
  csp::EventSet out;
  for (const Process* q = &body; q->op == Op::Hide; q = q->left.get()) out.insert(q->events.begin(), q->events.end());
  return out;
}

std::optional<std::string> Translator::loopBack(const Process& child, const Ctx& childCtx) const {
  std::vector<PathStep> extra;
  std::set<std::string> seen;
  const Process* q = &child;
  for (;;) {
    if (q->op == Op::Hide) {
      extra.push_back({Step::Hide, -1, &q->events});
      q = q->left.get();
    } else if (q->op == Op::Rename) {
      extra.push_back({Step::Rename});
      q = q->left.get();
    } else if (q->op == Op::Ref) {
      const DefEntry* entry = nullptr;
      for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
        if (it->name == q->name) {
          entry = &*it;
          break;
        }
      }
      if (!entry) {
        if (!seen.insert(q->name).second) return std::nullopt;
        q = defs_.at(q->name).get();
        continue;
      }
      csp::EventSet top = hiddenAtTop(*defs_.at(entry->name));
      std::vector<PathStep> path(childCtx.path.begin() + static_cast<long>(entry->pathSize), childCtx.path.end());
      path.insert(path.end(), extra.begin(), extra.end());
      for (const auto& s : path) {
        bool ok = false;
        switch (s.step) {
          case Step::PrefixCont:
          case Step::SeqRight:
          case Step::IntBranch:
            ok = true;
            break;
          case Step::ExtBranch:
            ok = !childCtx.frames[s.frame].initial;
            break;
          case Step::Hide:
            ok = std::includes(top.begin(), top.end(), s.hidden->begin(), s.hidden->end());
            break;
          default:
            ok = false;
        }
        if (!ok) {
          throw NotImplemented("recursion to " + entry->name + " through " + std::string(stepName(s.step)) +
                               " is not supported");
        }
      }
      return entry->start;
    } else {
      return std::nullopt;
    }
  }
}

std::string Translator::prepare(const Process& child, Ctx& childCtx, const std::string& freshPrefix, bool& loop) {
  if (auto s = loopBack(child, childCtx)) {
    loop = true;
    childCtx.start = *s;
  } else {
    loop = false;
    childCtx.start = freshPrefix == "finishID" ? freshFinish(childCtx.branch) : freshStart(childCtx.branch);
  }
  return childCtx.start;
}

Pending merge(Pending a, const Pending& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Pending Translator::translate(const Process& p, const Ctx& ctx) {
  switch (p.op) {
    case Op::Stop:
    case Op::Skip: {
      int t = newTa();
      std::string s1 = tas_[t].loc(LocationKind::Normal);
      receiveStart(t, ctx.start, s1, {});
      tas_[t].edge(s1, s1, recv(std::string(csp::kTock)));
      killEdges(t, {s1}, ctx);
      if (p.op == Op::Skip) {
        std::vector<Act> acts;
        for (const auto& k : ctx.finishKills) acts.push_back({send(k), {}, ""});
        acts.push_back(flowTo(t, ctx.finish));
        chain(t, s1, acts);
      }
      return {};
    }
    case Op::Prefix: return prefix(p, ctx);
    case Op::Seq: return seq(p, ctx);
    case Op::GenPar:
    case Op::Interleave: return parallel(p, ctx);
    case Op::ExtChoice: return extChoice(p, ctx);
    case Op::IntChoice: return intChoice(p, ctx);
    case Op::Interrupt: return interruptOp(p, ctx);
    case Op::Hide: {
      Ctx c = ctx;
      c.frames.push_back({Frame::Kind::Hide, &p.events, nullptr, "", true});
      c.path.push_back({Step::Hide, -1, &p.events});
      return translate(*p.left, c);
    }
    case Op::Rename: {
      Ctx c = ctx;
      c.frames.push_back({Frame::Kind::Rename, nullptr, &p.renaming, "", true});
      c.path.push_back({Step::Rename});
      Pending out = translate(*p.left, c);
      for (auto& combo : out) {
        auto it = p.renaming.find(combo.name);
        if (it != p.renaming.end()) combo.name = it->second;
      }
      return out;
    }
    case Op::Ref: {
      for (const auto& e : stack_) {
        if (e.name == p.name) throw std::logic_error("unresolved recursion to " + p.name);
      }
      stack_.push_back({p.name, ctx.start, ctx.path.size()});
      Pending out = translate(*defs_.at(p.name), ctx);
      stack_.pop_back();
      return out;
    }
  }
  throw std::logic_error("unknown operator");
}

Pending Translator::prefix(const Process& p, const Ctx& ctx) {
  int t = newTa();
  std::string s1 = tas_[t].loc(LocationKind::Normal);
  Ctx c = ctx;
  c.path.push_back({Step::PrefixCont});
  bool loop = false;

  if (p.name == csp::kTock) {
    receiveStart(t, ctx.start, s1, {});
    killEdges(t, {s1}, ctx);
    prepare(*p.left, c, "startID", loop);
    Pending out = loop ? Pending{} : translate(*p.left, c);
    chain(t, s1, {{recv(std::string(csp::kTock)), {}, ""}, flowTo(t, c.start)});
    return out;
  }

  EventInfo info = analyse(p.name, ctx.frames);
  std::string var;
  if (info.participant) {
    var = names_.fresh("g_" + p.name, ctx.branch);
    vars_.push_back(var);
    receiveStart(t, ctx.start, s1, {{var, 1}});
  } else {
    receiveStart(t, ctx.start, s1, {});
  }
  tas_[t].edge(s1, s1, recv(std::string(csp::kTock)));
  killEdges(t, {s1}, ctx, var);

  for (int i : info.resolved) c.frames[i].initial = false;
  prepare(*p.left, c, "startID", loop);
  Pending out = loop ? Pending{} : translate(*p.left, c);

  if (info.participant) {
    participants_.push_back({t, s1, var, info.kills, c.start});
    out.insert(out.begin(), Combo{p.name, {static_cast<int>(participants_.size() - 1)}});
    return out;
  }

  if (info.emit.rfind("itau_", 0) == 0) {
    declare(info.emit, ta::ChannelMode::Binary, ta::ChannelKind::HiddenItau);
    if (std::find(hidden_.begin(), hidden_.end(), info.emit) == hidden_.end()) hidden_.push_back(info.emit);
  }
  std::vector<Act> acts;
  for (const auto& k : info.kills) acts.push_back({send(k), {}, ""});
  acts.push_back({send(info.emit), {}, ""});
  acts.push_back(flowTo(t, c.start));
  chain(t, s1, acts);
  return out;
}

Pending Translator::seq(const Process& p, const Ctx& ctx) {
  Ctx right = ctx;
  right.path.push_back({Step::SeqRight});
  // Regions already resolved by everything the left side must do first.
  if (csp::engagesBeforeTermination(*p.left, defs_)) {
    for (std::size_t i = 0; i < right.frames.size(); ++i) {
      if (right.frames[i].kind != Frame::Kind::Region) continue;
      bool shielded = false;
      for (std::size_t j = i + 1; j < right.frames.size(); ++j) {
        auto k = right.frames[j].kind;
        shielded = shielded || k == Frame::Kind::Hide || k == Frame::Kind::Rename;
      }
      if (!shielded) right.frames[i].initial = false;
    }
  }
  bool loop = false;
  std::string mid = prepare(*p.right, right, "finishID", loop);

  Ctx left = ctx;
  left.finish = mid;
  left.finishKills.clear();
  left.path.push_back({Step::SeqLeft});
  // Recursion cannot close here; loopBack reports it.
  if (loopBack(*p.left, left)) throw std::logic_error("recursion through the left of ;");
  Pending out = translate(*p.left, left);
  if (!loop) out = merge(out, translate(*p.right, right));
  return out;
}

Pending Translator::parallel(const Process& p, const Ctx& ctx) {
  int t = newTa();
  Builder& b = tas_[t];
  std::string c1 = b.loc(LocationKind::Committed);
  std::string c2 = b.loc(LocationKind::Committed);
  std::string c3 = b.loc(LocationKind::Committed);
  std::string w = b.loc(LocationKind::Normal);
  std::string wl = b.loc(LocationKind::Normal);
  std::string wr = b.loc(LocationKind::Normal);
  std::string d = b.loc(LocationKind::Committed);
  receiveStart(t, ctx.start, c1, {});

  static const csp::EventSet kNone;
  const csp::EventSet& sync = p.op == Op::GenPar ? p.events : kNone;
  Ctx l = ctx, r = ctx;
  l.branch = ctx.branch + "0";
  r.branch = ctx.branch + "1";
  for (Ctx* c : {&l, &r}) {
    c->frames.push_back({Frame::Kind::GenPar, &sync, nullptr, "", true});
    c->path.push_back({Step::ParOperand});
    c->finishKills.clear();
  }
  bool loop = false;
  std::string sl = prepare(*p.left, l, "startID", loop);
  std::string sr = prepare(*p.right, r, "startID", loop);
  l.finish = freshFinish(l.branch);
  r.finish = freshFinish(r.branch);

  tas_[t].edge(c1, c2, send(sl));
  tas_[t].edge(c2, w, send(sr));
  tas_[t].edge(c1, c3, send(sr));
  tas_[t].edge(c3, w, send(sl));
  tas_[t].edge(w, wl, recv(l.finish));
  tas_[t].edge(w, wr, recv(r.finish));
  tas_[t].edge(wl, d, recv(r.finish));
  tas_[t].edge(wr, d, recv(l.finish));
  std::vector<Act> acts;
  for (const auto& k : ctx.finishKills) acts.push_back({send(k), {}, ""});
  acts.push_back(flowTo(t, ctx.finish));
  chain(t, d, acts);
  killEdges(t, {w, wl, wr}, ctx);

  Pending lp = translate(*p.left, l);
  Pending rp = translate(*p.right, r);

  Pending out;
  for (const auto* side : {&lp, &rp}) {
    for (const auto& c : *side) {
      if (!sync.count(c.name)) out.push_back(c);
    }
  }
  for (const auto& name : sync) {
    for (const auto& a : lp) {
      if (a.name != name) continue;
      for (const auto& bb : rp) {
        if (bb.name != name) continue;
        Combo m{name, a.parts};
        m.parts.insert(m.parts.end(), bb.parts.begin(), bb.parts.end());
        if (syncedAbove(name, ctx.frames)) {
          out.push_back(m);
        } else {
          finalise(name, m, ctx.frames);
        }
      }
    }
  }
  return out;
}

void Translator::finalise(const std::string& name, const Combo& combo, const std::vector<Frame>& frames) {
  SyncRequirement req;
  req.event = emissionFrom(name, frames);
  req.channel = names_.syncChannel(name);
  declare(req.channel, ta::ChannelMode::Broadcast, ta::ChannelKind::Synchronisation);
  if (req.event.rfind("itau_", 0) == 0) {
    declare(req.event, ta::ChannelMode::Binary, ta::ChannelKind::HiddenItau);
    if (std::find(hidden_.begin(), hidden_.end(), req.event) == hidden_.end()) hidden_.push_back(req.event);
  }
  for (int idx : combo.parts) {
    const Participant& part = participants_[idx];
    req.participants.push_back(part.var);
    std::vector<Act> acts;
    acts.push_back({recv(req.channel), {{part.var, 0}}, ""});
    for (const auto& k : part.kills) acts.push_back({send(k), {}, ""});
    acts.push_back(flowTo(part.ta, part.cont));
    chain(part.ta, part.ready, acts);
  }
  reqs_.push_back(std::move(req));
}

Pending Translator::extChoice(const Process& p, const Ctx& ctx) {
  int t = newTa();
  std::string c1 = tas_[t].loc(LocationKind::Committed);
  std::string c2 = tas_[t].loc(LocationKind::Committed);
  receiveStart(t, ctx.start, c1, {});

  Ctx l = ctx, r = ctx;
  l.branch = ctx.branch + "0";
  r.branch = ctx.branch + "1";
  std::string kl = freshKill("extID", l.branch, ta::ChannelKind::ExtChoiceCoord);
  std::string kr = freshKill("extID", r.branch, ta::ChannelKind::ExtChoiceCoord);
  for (auto [c, own, other] : {std::tuple{&l, kl, kr}, std::tuple{&r, kr, kl}}) {
    c->frames.push_back({Frame::Kind::Region, nullptr, nullptr, own, true});
    c->path.push_back({Step::ExtBranch, static_cast<int>(c->frames.size() - 1)});
    c->killReceivers.push_back(other);
    c->finishKills.push_back(own);
  }
  bool ll = false, rl = false;
  std::string sl = prepare(*p.left, l, "startID", ll);
  std::string sr = prepare(*p.right, r, "startID", rl);
  chain(t, c1, {{send(sl), {}, ""}, {send(sr), {}, ""}});
  Pending out = ll ? Pending{} : translate(*p.left, l);
  if (!rl) out = merge(out, translate(*p.right, r));
  return out;
}

Pending Translator::intChoice(const Process& p, const Ctx& ctx) {
  int t = newTa();
  std::string c1 = tas_[t].loc(LocationKind::Committed);
  std::string c2 = tas_[t].loc(LocationKind::Committed);
  std::string c3 = tas_[t].loc(LocationKind::Committed);
  receiveStart(t, ctx.start, c1, {});
  tas_[t].edge(c1, c2, std::nullopt);
  tas_[t].edge(c1, c3, std::nullopt);

  Ctx l = ctx, r = ctx;
  l.branch = ctx.branch + "0";
  r.branch = ctx.branch + "1";
  l.path.push_back({Step::IntBranch});
  r.path.push_back({Step::IntBranch});
  bool ll = false, rl = false;
  prepare(*p.left, l, "startID", ll);
  prepare(*p.right, r, "startID", rl);
  Pending out = ll ? Pending{} : translate(*p.left, l);
  if (!rl) out = merge(out, translate(*p.right, r));
  // Self-flow is only known once the branches exist.
  chain(t, c2, {flowTo(t, l.start)});
  chain(t, c3, {flowTo(t, r.start)});
  return out;
}

Pending Translator::interruptOp(const Process& p, const Ctx& ctx) {
  int t = newTa();
  std::string c1 = tas_[t].loc(LocationKind::Committed);
  std::string c2 = tas_[t].loc(LocationKind::Committed);
  receiveStart(t, ctx.start, c1, {});

  Ctx l = ctx, r = ctx;
  l.branch = ctx.branch + "0";
  r.branch = ctx.branch + "1";
  std::string kp = freshKill("intrpID", l.branch, ta::ChannelKind::InterruptCoord);
  std::string kq = freshKill("intrpID", r.branch, ta::ChannelKind::InterruptCoord);
  l.killReceivers.push_back(kp);
  l.finishKills.push_back(kq);
  r.frames.push_back({Frame::Kind::Region, nullptr, nullptr, kp, true});
  r.killReceivers.push_back(kq);
  r.finishKills.push_back(kp);
  l.path.push_back({Step::IntrOperand});
  r.path.push_back({Step::IntrOperand});
  bool ll = false, rl = false;
  std::string sl = prepare(*p.left, l, "startID", ll);
  std::string sr = prepare(*p.right, r, "startID", rl);
  chain(t, c1, {{send(sl), {}, ""}, {send(sr), {}, ""}});
  Pending out = translate(*p.left, l);
  return merge(out, translate(*p.right, r));
}

Translation Translator::finish() {
  Translation out;
  for (auto& b : tas_) out.automata.push_back(std::move(b.ta));
  out.requirements = reqs_;
  out.channels = channels_;
  out.hiddenChannels = hidden_;
  out.variables = vars_;
  return out;
}

}  // namespace

Translation transTA(const csp::Process& p, const csp::Definitions& defs, TranslationContext& ctx) {
  NameRegistry local;
  NameRegistry& names = ctx.names ? *ctx.names : local;
  names.claim(ctx.startAction);
  names.claim(ctx.finishAction);
  Translator tr(defs, names);
  if (defs.count(ctx.procName)) tr.enter(ctx.procName, ctx.startAction, 0);
  Ctx root;
  root.branch = ctx.branchId;
  root.start = ctx.startAction;
  root.finish = ctx.finishAction;
  tr.translate(p, root);
  return tr.finish();
}

}  // namespace tock2ta::translate
