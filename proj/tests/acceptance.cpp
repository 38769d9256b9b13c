// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <regex>
#include <string>

#include "tock2ta/csp/parser.hpp"
#include "tock2ta/exec/executor.hpp"
#include "tock2ta/harness/harness.hpp"
#include "tock2ta/semantics/lts.hpp"
#include "tock2ta/translate/translator.hpp"
#include "tock2ta/xml/uppaal.hpp"

using namespace tock2ta;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

bool hasBoth(const Trace& t, const std::string& x, const std::string& y) {
  return std::find(t.begin(), t.end(), x) != t.end() && std::find(t.begin(), t.end(), y) != t.end();
}

Outcome stopBaseCase() {
  auto t0 = Clock::now();
  csp::CspSpec stop = csp::singleton("P", csp::stop());
  auto net = translate::assemble(stop);
  for (std::size_t n = 0; n <= 20; ++n) {
    TraceSet want;
    want.depth = n;
    Trace t;
    want.traces.insert(t);
    while (t.size() < n) {
      t.push_back(std::string(csp::kTock));
      want.traces.insert(t);
    }
    if (semantics::tracesTockCsp(stop, n) != want) return fail("CSP side differs at n=" + std::to_string(n));
    if (exec::tracesTA(net, n) != want) return fail("TA side differs at n=" + std::to_string(n));
  }
  double s = secondsSince(t0);
  if (s >= 1.0) return fail("took " + std::to_string(s) + " s");
  return {true, "n=0..20 in " + std::to_string(s) + " s"};
}

Outcome corpusEquivalence() {
  auto t0 = Clock::now();
  auto corpus = harness::generateCorpus();
  if (corpus.size() < 111) return fail("only " + std::to_string(corpus.size()) + " specs");
  std::size_t passed = 0;
  std::string firstBad;
  for (const auto& e : corpus) {
    try {
      if (harness::checkSpec(e.spec, 5, e.id).verdict == harness::Verdict::EqualAtStage1) {
        ++passed;
        continue;
      }
    } catch (const std::exception& ex) {
      if (firstBad.empty()) firstBad = e.id + " (" + ex.what() + ")";
      continue;
    }
    if (firstBad.empty()) firstBad = e.id;
  }
  double s = secondsSince(t0);
  std::string summary = std::to_string(passed) + "/" + std::to_string(corpus.size()) + " at depth 5 in " +
                        std::to_string(s) + " s";
  if (passed != corpus.size()) return fail(summary + ", first failure " + firstBad);
  if (s >= 600) return fail(summary);
  return {true, summary};
}

Outcome structuralFidelity() {
  std::size_t ads = translate::assemble(harness::adsSpec()).automata.size();
  std::size_t pe = translate::assemble(harness::peSpec()).automata.size();
  std::size_t pi = translate::assemble(harness::piSpec()).automata.size();
  std::string counts = "ADS=" + std::to_string(ads) + " Pe=" + std::to_string(pe) + " Pi=" + std::to_string(pi);
  if (ads != 8 || pe != 6 || pi != 7) return fail(counts);
  auto net = translate::assemble(harness::adsSpec());
  for (const auto& a : net.automata) {
    if (a.name != translate::kSyncName) continue;
    for (const auto& e : a.edges) {
      if (!e.sync || e.sync->channel != "close") continue;
      std::string guard = xml::formatConjunction(e.guard);
      if (std::regex_match(guard, std::regex(R"(\(g_close\w+ \+ g_close\w+\)==2)"))) {
        return {true, counts + ", guard " + guard};
      }
      return fail("close guard is " + guard);
    }
  }
  return fail("no close synchronisation edge");
}

Outcome externalChoice() {
  auto traces = exec::tracesTA(translate::assemble(harness::peSpec()), 3);
  if (!traces.contains({"left"}) || !traces.contains({"right"})) return fail("missing <left> or <right>");
  for (const auto& t : traces.traces) {
    if (hasBoth(t, "left", "right")) return fail("trace with both branches: " + formatTrace(t));
  }
  auto r = harness::checkSpec(harness::peSpec(), 3);
  if (r.verdict != harness::Verdict::EqualAtStage1) return fail(std::string(harness::verdictName(r.verdict)));
  return {true, std::to_string(traces.size()) + " traces, EqualAtStage1"};
}

Outcome interrupt() {
  auto traces = exec::tracesTA(translate::assemble(harness::piSpec()), 4);
  if (!traces.contains({"fire", "close"})) return fail("missing <fire,close>");
  if (!traces.contains({"open", "fire", "close"})) return fail("missing <open,fire,close>");
  for (const auto& t : traces.traces) {
    if (std::count(t.begin(), t.end(), "open") > 1) return fail("two opens: " + formatTrace(t));
  }
  if (traces != semantics::tracesTockCsp(harness::piSpec(), 4)) return fail("differs from the CSP traces");
  return {true, std::to_string(traces.size()) + " traces, identical to CSP"};
}

Outcome roundTrip() {
  std::vector<csp::CspSpec> specs{harness::adsSpec(), harness::peSpec(), harness::piSpec()};
  for (auto& e : harness::generateCorpus()) specs.push_back(std::move(e.spec));
  std::size_t same = 0;
  for (const auto& s : specs) {
    auto net = translate::assemble(s);
    if (xml::load(xml::emit(net)) == net) ++same;
  }
  std::string summary = std::to_string(same) + "/" + std::to_string(specs.size()) + " networks identical";
  return {same == specs.size(), summary};
}

Outcome timeLiveness() {
  std::size_t configs = 0;
  for (const auto& e : harness::generateCorpus()) {
    auto r = exec::checkTimeLiveness(translate::assemble(e.spec), 4, 20);
    configs += r.configurations;
    if (!r.ok) return fail(e.id + " timelocks at " + r.witness);
  }
  return {true, std::to_string(configs) + " configurations examined"};
}

Outcome caseStudies() {
  auto t0 = Clock::now();
  std::string detail;
  for (const char* f : {"thermostat", "railway"}) {
    auto spec = csp::parseFile(std::string(TOCK2TA_FIXTURES) + "/" + f + ".tcsp");
    auto r = harness::checkSpec(spec, 4, f);
    if (r.verdict != harness::Verdict::EqualAtStage1) return fail(std::string(f) + " " + std::string(harness::verdictName(r.verdict)));
    detail += std::string(f) + " ok, ";
  }
  double s = secondsSince(t0);
  if (s >= 300) return fail("took " + std::to_string(s) + " s");
  return {true, detail + "depth 4 in " + std::to_string(s) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"STOP base case", stopBaseCase},         {"corpus equivalence", corpusEquivalence},
      {"structural fidelity", structuralFidelity}, {"external-choice blocking", externalChoice},
      {"interrupt behaviour", interrupt},       {"XML round trip", roundTrip},
      {"time liveness", timeLiveness},          {"case-study fixtures", caseStudies},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu (%s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  return failures ? 1 : 0;
}
