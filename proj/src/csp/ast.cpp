#include "tock2ta/csp/ast.hpp"

#include <cctype>

namespace tock2ta::csp {

std::string_view opName(Op op) {
  switch (op) {
    case Op::Stop: return "Stop";
    case Op::Skip: return "Skip";
    case Op::Prefix: return "Prefix";
    case Op::Seq: return "Seq";
    case Op::GenPar: return "GenPar";
    case Op::Interleave: return "Interleave";
    case Op::ExtChoice: return "ExtChoice";
    case Op::IntChoice: return "IntChoice";
    case Op::Interrupt: return "Interrupt";
    case Op::Hide: return "Hide";
    case Op::Rename: return "Rename";
    case Op::Ref: return "Ref";
  }
  return "?";
}

bool Process::isBinary() const {
  switch (op) {
    case Op::Seq:
    case Op::GenPar:
    case Op::Interleave:
    case Op::ExtChoice:
    case Op::IntChoice:
    case Op::Interrupt:
      return true;
    default:
      return false;
  }
}

bool equal(const ProcPtr& a, const ProcPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Process& a, const Process& b) {
  return a.op == b.op && a.name == b.name && a.events == b.events && a.renaming == b.renaming &&
         equal(a.left, b.left) && equal(a.right, b.right);
}

namespace {

ProcPtr make(Op op, std::string name = {}, ProcPtr l = nullptr, ProcPtr r = nullptr) {
  auto p = std::make_shared<Process>();
  p->op = op;
  p->name = std::move(name);
  p->left = std::move(l);
  p->right = std::move(r);
  return p;
}

}  // namespace

ProcPtr stop() { return make(Op::Stop); }
ProcPtr skip() { return make(Op::Skip); }
ProcPtr prefix(std::string event, ProcPtr cont) { return make(Op::Prefix, std::move(event), std::move(cont)); }
ProcPtr seq(ProcPtr l, ProcPtr r) { return make(Op::Seq, {}, std::move(l), std::move(r)); }
ProcPtr interleave(ProcPtr l, ProcPtr r) { return make(Op::Interleave, {}, std::move(l), std::move(r)); }
ProcPtr extChoice(ProcPtr l, ProcPtr r) { return make(Op::ExtChoice, {}, std::move(l), std::move(r)); }
ProcPtr intChoice(ProcPtr l, ProcPtr r) { return make(Op::IntChoice, {}, std::move(l), std::move(r)); }
ProcPtr interrupt(ProcPtr l, ProcPtr r) { return make(Op::Interrupt, {}, std::move(l), std::move(r)); }
ProcPtr ref(std::string name) { return make(Op::Ref, std::move(name)); }

ProcPtr genPar(ProcPtr l, ProcPtr r, EventSet sync) {
  auto p = std::make_shared<Process>();
  p->op = Op::GenPar;
  p->left = std::move(l);
  p->right = std::move(r);
  p->events = std::move(sync);
  return p;
}

ProcPtr hide(ProcPtr body, EventSet hidden) {
  auto p = std::make_shared<Process>();
  p->op = Op::Hide;
  p->left = std::move(body);
  p->events = std::move(hidden);
  return p;
}

ProcPtr rename(ProcPtr body, RenameMap map) {
  auto p = std::make_shared<Process>();
  p->op = Op::Rename;
  p->left = std::move(body);
  p->renaming = std::move(map);
  return p;
}

const Process& CspSpec::body(const std::string& name) const {
  auto it = definitions.find(name);
  if (it == definitions.end()) throw std::out_of_range("no definition named " + name);
  return *it->second;
}

bool operator==(const CspSpec& a, const CspSpec& b) {
  if (a.main != b.main || a.definitions.size() != b.definitions.size()) return false;
  for (const auto& [name, body] : a.definitions) {
    auto it = b.definitions.find(name);
    if (it == b.definitions.end() || !equal(body, it->second)) return false;
  }
  return true;
}

CspSpec singleton(std::string name, ProcPtr body) {
  CspSpec spec;
  spec.main = name;
  spec.order.push_back(name);
  spec.definitions.emplace(std::move(name), std::move(body));
  return spec;
}

SpecError::SpecError(Kind kind, SourcePos pos, const std::string& message)
    : std::runtime_error(pos.line > 0 ? std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message
                                      : message),
      kind_(kind),
      pos_(pos) {}

bool isValidIdentifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool isReservedEventName(std::string_view name) {
  if (name == "tau" || name == "itau" || name == "tick") return true;
  if (name.starts_with("itau_")) return true;
  for (std::string_view prefix : {"startID", "finishID", "extID", "intrpID", "excpID"}) {
    if (name.starts_with(prefix)) return true;
  }
  return name.find("___sync") != std::string_view::npos;
}

}  // namespace tock2ta::csp
