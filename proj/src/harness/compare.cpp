#include <algorithm>
#include <stdexcept>

#include "tock2ta/harness/harness.hpp"

namespace tock2ta::harness {

std::string_view verdictName(Verdict v) {
  switch (v) {
    case Verdict::EqualAtStage1: return "EqualAtStage1";
    case Verdict::AcceptedAtStage2: return "AcceptedAtStage2";
    case Verdict::Mismatch: return "Mismatch";
  }
  return "?";
}

namespace {

std::set<Trace> sortedClasses(const TraceSet& s) {
  std::set<Trace> out;
  for (Trace t : s.traces) {
    std::sort(t.begin(), t.end());
    out.insert(std::move(t));
  }
  return out;
}

}  // namespace

ComparisonReport compareTraces(const TraceSet& cspTraces, const TraceSet& taTraces, std::size_t maxWitnesses) {
  if (cspTraces.depth != taTraces.depth) {
    throw std::invalid_argument("trace sets enumerated at different depths (" + std::to_string(cspTraces.depth) +
                                " vs " + std::to_string(taTraces.depth) + ")");
  }
  ComparisonReport r;
  r.depth = cspTraces.depth;
  for (const auto& t : cspTraces.traces) {
    if (!taTraces.contains(t) && r.onlyCsp.size() < maxWitnesses) r.onlyCsp.push_back(t);
  }
  for (const auto& t : taTraces.traces) {
    if (!cspTraces.contains(t) && r.onlyTa.size() < maxWitnesses) r.onlyTa.push_back(t);
  }
  if (r.onlyCsp.empty() && r.onlyTa.empty()) {
    r.verdict = Verdict::EqualAtStage1;
  } else if (sortedClasses(cspTraces) == sortedClasses(taTraces)) {
    r.verdict = Verdict::AcceptedAtStage2;
  } else {
    r.verdict = Verdict::Mismatch;
  }
  return r;
}

}  // namespace tock2ta::harness
