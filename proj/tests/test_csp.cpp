#include <gtest/gtest.h>

#include "tock2ta/csp/analysis.hpp"
#include "tock2ta/csp/parser.hpp"
#include "tock2ta/harness/harness.hpp"

using namespace tock2ta;
using namespace tock2ta::csp;

namespace {

SpecError::Kind errorKind(const std::string& src) {
  try {
    parse(src);
  } catch (const SpecError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << src;
  return SpecError::Kind::Syntax;
}

}  // namespace

TEST(Parser, AdsHasThreeDefinitions) {
  CspSpec s = harness::adsSpec();
  EXPECT_EQ(s.definitions.size(), 3u);
  EXPECT_EQ(s.main, "ADS");
  const Process& top = s.body("ADS");
  ASSERT_EQ(top.op, Op::GenPar);
  EXPECT_EQ(top.events, EventSet{"close"});
}

TEST(Parser, Stop) {
  CspSpec s = parse("P = STOP");
  EXPECT_EQ(s.main, "P");
  EXPECT_EQ(s.body("P").op, Op::Stop);
}

TEST(Parser, ExternalChoiceOfPrefixes) {
  CspSpec s = parse("Pe = (left->STOP)[](right->STOP)");
  EXPECT_TRUE(equal(s.definitions.at("Pe"), extChoice(prefix("left", stop()), prefix("right", stop()))));
}

TEST(Parser, MainDefinitionWins) {
  CspSpec s = parse("Q = a -> STOP\nMAIN = Q");
  EXPECT_EQ(s.main, "MAIN");
}

TEST(Parser, CommentsIgnored) {
  CspSpec s = parse("-- header\nP = a -> STOP -- trailing\n");
  EXPECT_TRUE(equal(s.definitions.at("P"), prefix("a", stop())));
}

TEST(Parser, PrefixBindsTighterThanChoice) {
  CspSpec s = parse("P = a -> STOP [] b -> SKIP");
  EXPECT_EQ(s.body("P").op, Op::ExtChoice);
}

TEST(Parser, Errors) {
  EXPECT_EQ(errorKind("P = Q"), SpecError::Kind::UnresolvedReference);
  EXPECT_EQ(errorKind("P = P"), SpecError::Kind::UnguardedRecursion);
  EXPECT_EQ(errorKind("P = (tock -> STOP) \\ {tock}"), SpecError::Kind::TockInSet);
  EXPECT_EQ(errorKind("P = itau -> STOP"), SpecError::Kind::ReservedName);
  EXPECT_EQ(errorKind("P = a ->"), SpecError::Kind::Syntax);
}

TEST(Parser, SyntaxErrorHasPosition) {
  try {
    parse("P = a -> STOP\nQ = ( b -> STOP");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.pos().line, 2);
  }
}

TEST(Printer, RoundTripsExamples) {
  for (const auto& s : {harness::adsSpec(), harness::peSpec(), harness::piSpec(),
                        parse("P = ((a -> SKIP) ; P) [[a <- b]]\n"), parse("P = (a -> b -> P) \\ {a}")}) {
    EXPECT_EQ(parse(print(s)), s) << print(s);
  }
}

TEST(Printer, RoundTripsWholeCorpus) {
  for (const auto& e : harness::generateCorpus()) EXPECT_EQ(parse(print(e.spec)), e.spec) << e.id;
}

TEST(Analysis, Alphabet) {
  EXPECT_EQ(alphabet(harness::adsSpec()), (EventSet{"open", "close", "offLight"}));
  EXPECT_TRUE(alphabet(parse("P = STOP")).empty());
  EXPECT_EQ(alphabet(parse("P = (a->STOP)[[a <- b]]")), EventSet{"b"});
  EXPECT_EQ(alphabet(parse("P = tock -> a -> STOP")), EventSet{"a"});
}

TEST(Analysis, Termination) {
  Definitions none;
  EXPECT_FALSE(guardsTermination(*skip(), none));
  EXPECT_TRUE(guardsTermination(*prefix("a", skip()), none));
  EXPECT_TRUE(guardsTermination(*stop(), none));
  EXPECT_TRUE(engagesBeforeTermination(*prefix("a", skip()), none));
  EXPECT_FALSE(engagesBeforeTermination(*prefix(std::string(kTock), skip()), none));
  EXPECT_FALSE(engagesBeforeTermination(*hide(prefix("a", skip()), {"a"}), none));
}

TEST(Ast, Identifiers) {
  EXPECT_TRUE(isValidIdentifier("offLight"));
  EXPECT_FALSE(isValidIdentifier("1a"));
  EXPECT_TRUE(isReservedEventName("itau"));
  EXPECT_TRUE(isReservedEventName("startID3"));
  EXPECT_FALSE(isReservedEventName("open"));
}
