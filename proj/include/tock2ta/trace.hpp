#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tock2ta {

using Trace = std::vector<std::string>;

/// A bounded, prefix-closed set of traces, tagged with the depth it was
/// enumerated at.
struct TraceSet {
  std::size_t depth = 0;
  std::set<Trace> traces;

  bool contains(const Trace& t) const { return traces.count(t) > 0; }
  std::size_t size() const { return traces.size(); }
  bool isPrefixClosed() const;

  friend bool operator==(const TraceSet&, const TraceSet&) = default;
};

/// Raised when an exploration exceeds its configured state budget.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One trace per line, events comma-separated, lines sorted; "<>" is the
/// empty trace.
std::string formatTrace(const Trace& t);
std::string serialize(const TraceSet& set);
TraceSet deserialize(std::string_view text, std::size_t depth);

/// Deletes every event in `erase` and keeps results of length <= depth.
TraceSet erase(const TraceSet& set, const std::set<std::string>& erase, std::size_t depth);

}  // namespace tock2ta
