#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tock2ta/csp/parser.hpp"
#include "tock2ta/harness/harness.hpp"
#include "tock2ta/semantics/lts.hpp"
#include "tock2ta/translate/translator.hpp"

using namespace tock2ta;
using namespace tock2ta::harness;

namespace {

TraceSet ts(std::size_t depth, std::initializer_list<Trace> xs) {
  TraceSet s;
  s.depth = depth;
  s.traces = std::set<Trace>(xs);
  return s;
}

bool corpusHas(const std::vector<CorpusEntry>& corpus, const csp::ProcPtr& p) {
  return std::any_of(corpus.begin(), corpus.end(),
                     [&](const CorpusEntry& e) { return csp::equal(e.spec.definitions.at(e.spec.main), p); });
}

}  // namespace

TEST(Compare, IdenticalSets) {
  auto a = ts(2, {{}, {"a"}, {"a", "b"}});
  EXPECT_EQ(compareTraces(a, a).verdict, Verdict::EqualAtStage1);
}

TEST(Compare, ExtraTaTraceIsMismatch) {
  auto csp = ts(2, {{}, {"a"}, {"a", "b"}});
  auto ta = ts(2, {{}, {"a"}, {"a", "b"}, {"a", "c"}});
  auto r = compareTraces(csp, ta);
  EXPECT_EQ(r.verdict, Verdict::Mismatch);
  EXPECT_TRUE(r.onlyCsp.empty());
  ASSERT_EQ(r.onlyTa.size(), 1u);
  EXPECT_EQ(r.onlyTa[0], (Trace{"a", "c"}));
}

TEST(Compare, WitnessesInBothDirections) {
  auto r = compareTraces(ts(1, {{}, {"a"}}), ts(1, {{}, {"b"}}));
  EXPECT_EQ(r.verdict, Verdict::Mismatch);
  EXPECT_EQ(r.onlyCsp.size(), 1u);
  EXPECT_EQ(r.onlyTa.size(), 1u);
}

TEST(Compare, PermutedTracesAcceptedAtStageTwo) {
  auto csp = ts(2, {{}, {"a"}, {"a", "b"}});
  auto ta = ts(2, {{}, {"a"}, {"b", "a"}});
  EXPECT_EQ(compareTraces(csp, ta).verdict, Verdict::AcceptedAtStage2);
}

TEST(Compare, InsertionOrderIrrelevant) {
  auto text = serialize(ts(2, {{"b"}, {}, {"a", "b"}, {"a"}}));
  auto reread = deserialize(text, 2);
  EXPECT_EQ(compareTraces(reread, ts(2, {{}, {"a"}, {"b"}, {"a", "b"}})).verdict, Verdict::EqualAtStage1);
}

TEST(Compare, DepthMismatchRejected) {
  EXPECT_THROW(compareTraces(ts(1, {{}}), ts(2, {{}})), std::invalid_argument);
}

TEST(Corpus, SizeAndContents) {
  auto corpus = generateCorpus();
  EXPECT_GE(corpus.size(), 111u);
  EXPECT_TRUE(corpusHas(corpus, csp::extChoice(csp::prefix("a", csp::stop()), csp::prefix("b", csp::stop()))));
  EXPECT_TRUE(corpusHas(corpus, csp::genPar(csp::prefix("a", csp::skip()), csp::prefix("a", csp::skip()), {"a"})));
  std::set<std::string> ids;
  for (const auto& e : corpus) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_LE(semantics::reachableStates(e.spec), 5u) << e.id;
  }
}

TEST(Corpus, Deterministic) {
  auto a = generateCorpus(), b = generateCorpus();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].spec, b[i].spec);
  }
}

TEST(Corpus, ChecksIndependentOfOrder) {
  auto corpus = generateCorpus();
  std::map<std::string, Verdict> forward;
  for (const auto& e : corpus) forward[e.id] = checkSpec(e.spec, 3, e.id).verdict;
  std::shuffle(corpus.begin(), corpus.end(), std::mt19937(7));
  for (const auto& e : corpus) EXPECT_EQ(checkSpec(e.spec, 3, e.id).verdict, forward[e.id]) << e.id;
}

TEST(CheckSpec, Examples) {
  EXPECT_EQ(checkSpec(csp::singleton("P", csp::stop()), 5).verdict, Verdict::EqualAtStage1);
  EXPECT_EQ(checkSpec(adsSpec(), 4).verdict, Verdict::EqualAtStage1);
  auto pi = checkSpec(piSpec(), 4, "Pi");
  EXPECT_EQ(pi.verdict, Verdict::EqualAtStage1);
  EXPECT_EQ(pi.id, "Pi");
  EXPECT_EQ(pi.depth, 4u);
}

TEST(CheckSpec, Reproducible) {
  auto a = checkSpec(peSpec(), 3), b = checkSpec(peSpec(), 3);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.onlyCsp, b.onlyCsp);
  EXPECT_EQ(a.onlyTa, b.onlyTa);
}

TEST(ProveStop, HoldsUpToTwenty) {
  auto r = proveStopBase(20);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.steps.size(), 21u * 3u);
}

TEST(ProveStop, DepthZero) {
  auto r = proveStopBase(0);
  EXPECT_TRUE(r.ok);
  for (const auto& s : r.steps) EXPECT_EQ(s.detail, "1 traces");
}

TEST(ProveStop, MutationIsCaught) {
  auto dropTock = [](ta::NetworkModel& net) {
    auto& edges = net.automata[net.environmentIndex].edges;
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const ta::Edge& e) { return e.sync && e.sync->channel == "tock"; }),
                edges.end());
  };
  auto r = proveStopBase(3, dropTock);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.steps.empty());
  const auto& last = r.steps.back();
  EXPECT_FALSE(last.ok);
  EXPECT_EQ(last.n, 1u);
  EXPECT_NE(last.name.find("ta-"), std::string::npos);
}

TEST(Fixtures, CaseStudiesPass) {
  for (const char* f : {"thermostat.tcsp", "railway.tcsp"}) {
    auto spec = csp::parseFile(std::string(TOCK2TA_FIXTURES) + "/" + f);
    EXPECT_EQ(checkSpec(spec, 4, f).verdict, Verdict::EqualAtStage1) << f;
  }
}
