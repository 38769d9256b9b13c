#include "tock2ta/csp/parser.hpp"

namespace tock2ta::csp {

namespace {

std::string joinSet(const EventSet& events) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : events) {
    if (!first) out += ", ";
    out += e;
    first = false;
  }
  return out + "}";
}

std::string binary(const Process& p, std::string_view op) {
  return "(" + print(*p.left) + " " + std::string(op) + " " + print(*p.right) + ")";
}

}  // namespace

std::string print(const Process& p) {
  switch (p.op) {
    case Op::Stop: return "STOP";
    case Op::Skip: return "SKIP";
    case Op::Ref: return p.name;
    case Op::Prefix: return p.name + " -> " + print(*p.left);
    case Op::Seq: return binary(p, ";");
    case Op::GenPar: return binary(p, "[|" + joinSet(p.events) + "|]");
    case Op::Interleave: return binary(p, "|||");
    case Op::ExtChoice: return binary(p, "[]");
    case Op::IntChoice: return binary(p, "|~|");
    case Op::Interrupt: return binary(p, "/\\");
    case Op::Hide: return "(" + print(*p.left) + ") \\ " + joinSet(p.events);
    case Op::Rename: {
      std::string out = "(" + print(*p.left) + ") [[";
      bool first = true;
      for (const auto& [from, to] : p.renaming) {
        if (!first) out += ", ";
        out += from + " <- " + to;
        first = false;
      }
      return out + "]]";
    }
  }
  return "?";
}

std::string print(const CspSpec& spec) {
  std::string out;
  auto emit = [&](const std::string& name) { out += name + " = " + print(*spec.definitions.at(name)) + "\n"; };
  // The main definition goes first so the first-definition rule recovers it.
  emit(spec.main);
  for (const auto& name : spec.order) {
    if (name != spec.main) emit(name);
  }
  for (const auto& [name, body] : spec.definitions) {
    bool listed = name == spec.main;
    for (const auto& o : spec.order) listed = listed || o == name;
    if (!listed) emit(name);
  }
  return out;
}

}  // namespace tock2ta::csp
