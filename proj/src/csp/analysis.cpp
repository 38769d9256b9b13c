#include "tock2ta/csp/analysis.hpp"

#include <functional>
#include <map>

namespace tock2ta::csp {

namespace {

void collectRefs(const Process& p, std::vector<const Process*>& out) {
  if (p.op == Op::Ref) out.push_back(&p);
  if (p.left) collectRefs(*p.left, out);
  if (p.right) collectRefs(*p.right, out);
}

// Reference names reachable from `p` without passing a prefix.
void unguardedRefs(const Process& p, const Definitions& defs, std::set<std::string>& out) {
  switch (p.op) {
    case Op::Stop:
    case Op::Skip:
    case Op::Prefix:
      return;
    case Op::Ref:
      out.insert(p.name);
      return;
    case Op::Seq:
      unguardedRefs(*p.left, defs, out);
      if (!guardsTermination(*p.left, defs)) unguardedRefs(*p.right, defs, out);
      return;
    default:
      if (p.left) unguardedRefs(*p.left, defs, out);
      if (p.right) unguardedRefs(*p.right, defs, out);
  }
}

bool guards(const Process& p, const Definitions& defs, std::set<std::string>& visiting) {
  switch (p.op) {
    case Op::Stop:
    case Op::Prefix:
      return true;
    case Op::Skip:
      return false;
    case Op::Seq:
      return guards(*p.left, defs, visiting) || guards(*p.right, defs, visiting);
    case Op::GenPar:
    case Op::Interleave:
      return guards(*p.left, defs, visiting) || guards(*p.right, defs, visiting);
    case Op::ExtChoice:
    case Op::IntChoice:
    case Op::Interrupt:
      return guards(*p.left, defs, visiting) && guards(*p.right, defs, visiting);
    case Op::Hide:
    case Op::Rename:
      return guards(*p.left, defs, visiting);
    case Op::Ref: {
      // A cycle reached here without a prefix is reported by checkSpec.
      if (!visiting.insert(p.name).second) return true;
      auto it = defs.find(p.name);
      bool r = it == defs.end() || guards(*it->second, defs, visiting);
      visiting.erase(p.name);
      return r;
    }
  }
  return false;
}

bool engages(const Process& p, const Definitions& defs, const EventSet& hidden, std::set<std::string>& visiting) {
  switch (p.op) {
    case Op::Stop:
      return true;
    case Op::Skip:
      return false;
    case Op::Prefix:
      if (p.name != kTock && !hidden.count(p.name)) return true;
      return engages(*p.left, defs, hidden, visiting);
    case Op::Seq:
    case Op::GenPar:
    case Op::Interleave:
      return engages(*p.left, defs, hidden, visiting) || engages(*p.right, defs, hidden, visiting);
    case Op::ExtChoice:
    case Op::IntChoice:
    case Op::Interrupt:
      return engages(*p.left, defs, hidden, visiting) && engages(*p.right, defs, hidden, visiting);
    case Op::Hide: {
      EventSet inner = hidden;
      inner.insert(p.events.begin(), p.events.end());
      return engages(*p.left, defs, inner, visiting);
    }
    case Op::Rename:
      return false;
    case Op::Ref: {
      if (!visiting.insert(p.name).second) return true;
      auto it = defs.find(p.name);
      bool r = it != defs.end() && engages(*it->second, defs, hidden, visiting);
      visiting.erase(p.name);
      return r;
    }
  }
  return false;
}

}  // namespace

bool guardsTermination(const Process& p, const Definitions& defs) {
  std::set<std::string> visiting;
  return guards(p, defs, visiting);
}

bool engagesBeforeTermination(const Process& p, const Definitions& defs) {
  std::set<std::string> visiting;
  return engages(p, defs, {}, visiting);
}

void checkSpec(const CspSpec& spec) {
  if (!spec.definitions.count(spec.main)) {
    throw SpecError(SpecError::Kind::UnresolvedReference, {}, "main process " + spec.main + " is not defined");
  }
  for (const auto& [name, body] : spec.definitions) {
    std::vector<const Process*> refs;
    collectRefs(*body, refs);
    for (const Process* r : refs) {
      if (!spec.definitions.count(r->name)) {
        throw SpecError(SpecError::Kind::UnresolvedReference, r->pos, "unresolved reference to " + r->name);
      }
    }
  }

  // Cycle search over the "reachable without a prefix" relation.
  std::map<std::string, std::set<std::string>> edges;
  for (const auto& [name, body] : spec.definitions) unguardedRefs(*body, spec.definitions, edges[name]);

  enum class Mark { None, Active, Done };
  std::map<std::string, Mark> mark;
  std::function<void(const std::string&)> dfs = [&](const std::string& n) {
    mark[n] = Mark::Active;
    for (const auto& m : edges[n]) {
      if (mark[m] == Mark::Active) {
        throw SpecError(SpecError::Kind::UnguardedRecursion, spec.definitions.at(n)->pos,
                        "unguarded recursion through " + n + " and " + m);
      }
      if (mark[m] == Mark::None) dfs(m);
    }
    mark[n] = Mark::Done;
  };
  for (const auto& [name, body] : spec.definitions) {
    if (mark[name] == Mark::None) dfs(name);
  }
}

EventSet alphabet(const CspSpec& spec) {
  EventSet out;
  // Renamings in force are kept innermost-last; a definition is expanded once
  // per distinct renaming context.
  std::set<std::pair<std::string, std::vector<const RenameMap*>>> seen;
  std::function<void(const Process&, std::vector<const RenameMap*>&)> walk =
      [&](const Process& p, std::vector<const RenameMap*>& ctx) {
        switch (p.op) {
          case Op::Prefix:
            if (p.name != kTock) {
              std::string e = p.name;
              for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
                auto f = (*it)->find(e);
                if (f != (*it)->end()) e = f->second;
              }
              out.insert(e);
            }
            walk(*p.left, ctx);
            return;
          case Op::Rename:
            ctx.push_back(&p.renaming);
            walk(*p.left, ctx);
            ctx.pop_back();
            return;
          case Op::Ref:
            if (seen.emplace(p.name, ctx).second) walk(*spec.definitions.at(p.name), ctx);
            return;
          default:
            if (p.left) walk(*p.left, ctx);
            if (p.right) walk(*p.right, ctx);
        }
      };
  std::vector<const RenameMap*> ctx;
  seen.emplace(spec.main, ctx);
  walk(*spec.definitions.at(spec.main), ctx);
  return out;
}

}  // namespace tock2ta::csp
