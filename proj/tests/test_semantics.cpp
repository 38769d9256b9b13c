#include <gtest/gtest.h>

#include "tock2ta/csp/parser.hpp"
#include "tock2ta/harness/harness.hpp"
#include "tock2ta/semantics/lts.hpp"

using namespace tock2ta;
using namespace tock2ta::csp;
using namespace tock2ta::semantics;

namespace {

const Definitions kNoDefs;

Trace tr(std::initializer_list<const char*> xs) { return Trace(xs.begin(), xs.end()); }

std::set<Trace> set(std::initializer_list<Trace> xs) { return std::set<Trace>(xs); }

std::string tock() { return std::string(kTock); }

}  // namespace

TEST(Step, StopOnlyTocks) {
  auto s = step(stop(), kNoDefs);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].action.kind, ActionKind::Tock);
  EXPECT_TRUE(equal(s[0].next, stop()));
}

TEST(Step, PrefixOffersEventAndTock) {
  auto p = prefix("open", stop());
  auto s = step(p, kNoDefs);
  ASSERT_EQ(s.size(), 2u);
  bool sawOpen = false, sawTock = false;
  for (const auto& x : s) {
    if (x.action.kind == ActionKind::Visible && x.action.event == "open") sawOpen = equal(x.next, stop());
    if (x.action.kind == ActionKind::Tock) sawTock = equal(x.next, p);
  }
  EXPECT_TRUE(sawOpen);
  EXPECT_TRUE(sawTock);
}

TEST(Step, TockPrefixHasNoSelfLoop) {
  auto s = step(prefix(tock(), skip()), kNoDefs);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(equal(s[0].next, skip()));
}

TEST(Step, InternalChoiceIsTwoTaus) {
  auto s = step(intChoice(stop(), skip()), kNoDefs);
  ASSERT_EQ(s.size(), 2u);
  for (const auto& x : s) EXPECT_EQ(x.action.kind, ActionKind::Tau);
}

TEST(Step, SkipTerminates) {
  auto s = step(skip(), kNoDefs);
  ASSERT_EQ(s.size(), 2u);
  bool tick = false;
  for (const auto& x : s) tick = tick || (x.action.kind == ActionKind::Tick && x.next == nullptr);
  EXPECT_TRUE(tick);
}

TEST(Initials, Examples) {
  EXPECT_EQ(initials(*prefix("fire", prefix("close", stop())), kNoDefs), EventSet{"fire"});
  EXPECT_TRUE(initials(*stop(), kNoDefs).empty());
  EXPECT_EQ(initials(*intChoice(prefix("a", stop()), prefix("b", stop())), kNoDefs), (EventSet{"a", "b"}));
  EXPECT_EQ(initials(*prefix(tock(), prefix("a", stop())), kNoDefs), EventSet{});
}

TEST(Traces, StopAtTwoAndZero) {
  CspSpec s = parse("P = STOP");
  EXPECT_EQ(tracesTockCsp(s, 2).traces, set({{}, {tock()}, {tock(), tock()}}));
  EXPECT_EQ(tracesTockCsp(s, 0).traces, set({{}}));
}

TEST(Traces, TimedMovement) {
  auto t = tracesTockCsp(parse("Pt = move -> tock -> tock -> turn -> SKIP"), 4);
  EXPECT_TRUE(t.contains(tr({"move", "tock", "tock", "turn"})));
  EXPECT_TRUE(t.contains(tr({"tock", "move", "tock", "tock"})));
  EXPECT_FALSE(t.contains(tr({"move", "tock", "turn"})));
}

TEST(Traces, SequenceHandsOverOnTermination) {
  auto t = tracesTockCsp(parse("P = (a -> SKIP) ; (b -> STOP)"), 2);
  EXPECT_EQ(t.traces, set({{}, tr({"a"}), tr({"tock"}), tr({"a", "b"}), tr({"a", "tock"}), tr({"tock", "a"}),
                           tr({"tock", "tock"})}));
}

TEST(Traces, HiddenEventBecomesSilent) {
  auto t = tracesTockCsp(parse("P = (a -> b -> STOP) \\ {a}"), 2);
  EXPECT_EQ(t.traces, set({{}, tr({"b"}), tr({"tock"}), tr({"b", "tock"}), tr({"tock", "b"}), tr({"tock", "tock"})}));
}

TEST(Traces, SynchronisationBlocksUnmatchedEvent) {
  auto t = tracesTockCsp(parse("P = (a -> STOP) [|{a}|] (b -> STOP)"), 2);
  EXPECT_EQ(t.traces, set({{}, tr({"b"}), tr({"tock"}), tr({"b", "tock"}), tr({"tock", "b"}), tr({"tock", "tock"})}));
}

TEST(Traces, RenamingMapsEvents) {
  auto t = tracesTockCsp(parse("P = (a -> STOP) [[a <- b]]"), 1);
  EXPECT_EQ(t.traces, set({{}, tr({"b"}), tr({"tock"})}));
}

TEST(Traces, ExternalChoiceResolves) {
  auto t = tracesTockCsp(harness::peSpec(), 3);
  EXPECT_TRUE(t.contains(tr({"left"})));
  EXPECT_TRUE(t.contains(tr({"tock", "right"})));
  for (const auto& x : t.traces) {
    bool l = std::count(x.begin(), x.end(), "left"), r = std::count(x.begin(), x.end(), "right");
    EXPECT_FALSE(l && r) << formatTrace(x);
  }
}

TEST(Traces, InterruptTakesOver) {
  auto t = tracesTockCsp(harness::piSpec(), 3);
  EXPECT_TRUE(t.contains(tr({"open", "fire", "close"})));
  EXPECT_TRUE(t.contains(tr({"fire", "close"})));
  EXPECT_FALSE(t.contains(tr({"open", "open"})));
  EXPECT_FALSE(t.contains(tr({"fire", "open"})));
}

TEST(Traces, StateBudgetIsEnforced) {
  CspSpec growing = parse("P = a -> (P ||| P)");
  EXPECT_THROW(tracesTockCsp(growing, 12, 50), BoundExceeded);
}

TEST(Traces, ReachableStates) {
  EXPECT_EQ(reachableStates(parse("P = STOP")), 1u);
  EXPECT_EQ(reachableStates(parse("P = a -> P")), 2u);
}

TEST(TraceProperties, PrefixClosedAndMonotone) {
  for (const auto& e : harness::generateCorpus()) {
    auto t4 = tracesTockCsp(e.spec, 4);
    auto t5 = tracesTockCsp(e.spec, 5);
    EXPECT_TRUE(t5.isPrefixClosed()) << e.id;
    for (const auto& x : t4.traces) EXPECT_TRUE(t5.contains(x)) << e.id;
    EXPECT_EQ(erase(t5, {}, 4).traces, t4.traces) << e.id;
  }
}

TEST(TraceProperties, SymmetricOperatorsCommute) {
  std::vector<ProcPtr> atoms{stop(), skip(), prefix("a", stop()), prefix("b", skip()), prefix(tock(), stop())};
  for (const auto& l : atoms) {
    for (const auto& r : atoms) {
      EXPECT_EQ(tracesOf(*interleave(l, r), kNoDefs, 4), tracesOf(*interleave(r, l), kNoDefs, 4));
      EXPECT_EQ(tracesOf(*extChoice(l, r), kNoDefs, 4), tracesOf(*extChoice(r, l), kNoDefs, 4));
      EXPECT_EQ(tracesOf(*intChoice(l, r), kNoDefs, 4), tracesOf(*intChoice(r, l), kNoDefs, 4));
      EXPECT_EQ(tracesOf(*genPar(l, r, {"a"}), kNoDefs, 4), tracesOf(*genPar(r, l, {"a"}), kNoDefs, 4));
    }
  }
}

TEST(TraceProperties, HidingErasesFromTraces) {
  // Each body performs a at most once, so one extra level of depth suffices.
  for (const char* body : {"a -> b -> STOP", "(a -> SKIP) ; (b -> STOP)", "(a -> STOP) ||| (b -> STOP)",
                           "(a -> STOP) [] (b -> SKIP)", "b -> a -> tock -> STOP"}) {
    CspSpec plain = parse(std::string("P = ") + body);
    CspSpec hidden = parse(std::string("P = (") + body + ") \\ {a}");
    for (std::size_t n = 0; n <= 4; ++n) {
      EXPECT_EQ(erase(tracesTockCsp(plain, n + 1), {"a"}, n).traces, tracesTockCsp(hidden, n).traces) << body;
    }
  }
}

TEST(TraceProperties, RecursionThroughHidingStaysFinite) {
  CspSpec s = parse("P = (a -> b -> P) \\ {a}");
  EXPECT_LE(reachableStates(s), 4u);
  EXPECT_TRUE(tracesTockCsp(s, 3).contains(tr({"b", "b", "b"})));
}
