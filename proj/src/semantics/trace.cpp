#include "tock2ta/trace.hpp"

#include <algorithm>
#include <sstream>

namespace tock2ta {

bool TraceSet::isPrefixClosed() const {
  if (!traces.count(Trace{})) return false;
  for (const auto& t : traces) {
    if (!t.empty() && !traces.count(Trace(t.begin(), t.end() - 1))) return false;
  }
  return true;
}

std::string formatTrace(const Trace& t) {
  if (t.empty()) return "<>";
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += t[i];
  }
  return out;
}

std::string serialize(const TraceSet& set) {
  std::vector<std::string> lines;
  lines.reserve(set.traces.size());
  for (const auto& t : set.traces) lines.push_back(formatTrace(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

TraceSet deserialize(std::string_view text, std::size_t depth) {
  TraceSet out;
  out.depth = depth;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Trace t;
    if (line != "<>") {
      std::istringstream ls(line);
      std::string ev;
      while (std::getline(ls, ev, ',')) {
        if (ev.empty()) throw std::runtime_error("empty event in trace line: " + line);
        t.push_back(ev);
      }
    }
    out.traces.insert(std::move(t));
  }
  return out;
}

TraceSet erase(const TraceSet& set, const std::set<std::string>& erased, std::size_t depth) {
  TraceSet out;
  out.depth = depth;
  for (const auto& t : set.traces) {
    Trace kept;
    for (const auto& e : t) {
      if (!erased.count(e)) kept.push_back(e);
    }
    if (kept.size() <= depth) out.traces.insert(std::move(kept));
  }
  return out;
}

}  // namespace tock2ta
