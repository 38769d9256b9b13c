#include "tock2ta/ta/model.hpp"

#include <array>

namespace tock2ta::ta {

namespace {

constexpr std::array<std::pair<ChannelKind, std::string_view>, 9> kKindNames{{
    {ChannelKind::UserEvent, "user"},
    {ChannelKind::TockChannel, "tock"},
    {ChannelKind::Flow, "flow"},
    {ChannelKind::Terminating, "terminating"},
    {ChannelKind::Synchronisation, "sync"},
    {ChannelKind::ExtChoiceCoord, "extchoice"},
    {ChannelKind::InterruptCoord, "interrupt"},
    {ChannelKind::ExceptionCoord, "exception"},
    {ChannelKind::HiddenItau, "itau"},
}};

bool startsWith(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }
bool endsWith(std::string_view s, std::string_view p) {
  return s.size() >= p.size() && s.substr(s.size() - p.size()) == p;
}

}  // namespace

std::string_view relText(Rel r) {
  switch (r) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Eq: return "==";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
  }
  return "?";
}

bool holds(long lhs, Rel r, long rhs) {
  switch (r) {
    case Rel::Lt: return lhs < rhs;
    case Rel::Le: return lhs <= rhs;
    case Rel::Eq: return lhs == rhs;
    case Rel::Ge: return lhs >= rhs;
    case Rel::Gt: return lhs > rhs;
  }
  return false;
}

const Location* TimedAutomaton::location(std::string_view id) const {
  for (const auto& l : locations) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

const ChannelDecl* NetworkModel::channel(std::string_view name) const {
  for (const auto& c : channels) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string_view kindName(ChannelKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<ChannelKind> kindFromText(std::string_view s) {
  for (const auto& [kind, name] : kKindNames) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

std::string_view modeName(ChannelMode m) {
  switch (m) {
    case ChannelMode::Binary: return "chan";
    case ChannelMode::Broadcast: return "broadcast chan";
    case ChannelMode::UrgentBinary: return "urgent chan";
  }
  return "?";
}

ChannelKind kindFromName(std::string_view name) {
  if (name == "tock") return ChannelKind::TockChannel;
  if (startsWith(name, "startID")) return ChannelKind::Flow;
  if (startsWith(name, "finishID")) return ChannelKind::Terminating;
  if (startsWith(name, "extID")) return ChannelKind::ExtChoiceCoord;
  if (startsWith(name, "intrpID")) return ChannelKind::InterruptCoord;
  if (startsWith(name, "excpID")) return ChannelKind::ExceptionCoord;
  if (endsWith(name, "___sync")) return ChannelKind::Synchronisation;
  if (startsWith(name, "itau")) return ChannelKind::HiddenItau;
  return ChannelKind::UserEvent;
}

bool isErased(ChannelKind k) { return k != ChannelKind::UserEvent && k != ChannelKind::TockChannel; }

std::set<std::string> erasureSet(const NetworkModel& net) {
  std::set<std::string> out;
  for (const auto& c : net.channels) {
    if (isErased(c.kind)) out.insert(c.name);
  }
  return out;
}

}  // namespace tock2ta::ta
