#include "tock2ta/exec/executor.hpp"
#include "tock2ta/harness/harness.hpp"
#include "tock2ta/semantics/lts.hpp"
#include "tock2ta/translate/translator.hpp"

namespace tock2ta::harness {

namespace {

TraceSet tockTraces(std::size_t n, const std::string& lead = "") {
  TraceSet s;
  s.depth = n;
  s.traces.insert(Trace{});
  Trace t;
  if (!lead.empty()) {
    if (n == 0) return s;
    t.push_back(lead);
    s.traces.insert(t);
  }
  while (t.size() < n) {
    t.push_back(std::string(csp::kTock));
    s.traces.insert(t);
  }
  return s;
}

std::string diff(const TraceSet& got, const TraceSet& want) {
  for (const auto& t : got.traces) {
    if (!want.contains(t)) return "unexpected trace " + formatTrace(t);
  }
  for (const auto& t : want.traces) {
    if (!got.contains(t)) return "missing trace " + formatTrace(t);
  }
  return "";
}

}  // namespace

ProofReport proveStopBase(std::size_t maxN, const std::function<void(ta::NetworkModel&)>& mutate) {
  csp::CspSpec stop = csp::singleton("P", csp::stop());
  translate::AssembleOptions opts;
  opts.rootStart = kStopStart;
  ta::NetworkModel net = translate::assemble(stop, opts);
  if (mutate) mutate(net);

  ProofReport report;
  for (std::size_t n = 0; n <= maxN; ++n) {
    auto record = [&](const char* name, const TraceSet& got, const TraceSet& want) {
      std::string d = diff(got, want);
      report.steps.push_back({n, name, d.empty(), d.empty() ? std::to_string(got.size()) + " traces" : d});
      report.ok = report.ok && d.empty();
    };
    record("csp-stop-traces", semantics::tracesTockCsp(stop, n), tockTraces(n));
    record("ta-raw-traces-shape", exec::tracesTAPrime(net, n), tockTraces(n, kStopStart));
    record("ta-erased-traces", exec::tracesTA(net, n), tockTraces(n));
    if (!report.ok) break;
  }
  return report;
}

}  // namespace tock2ta::harness
