#include <gtest/gtest.h>

#include "tock2ta/harness/harness.hpp"
#include "tock2ta/ta/model.hpp"
#include "tock2ta/translate/translator.hpp"

using namespace tock2ta;
using namespace tock2ta::ta;

namespace {

NetworkModel tiny() {
  NetworkModel net;
  TimedAutomaton a;
  a.name = "A";
  a.locations = {{"s0", "s0", LocationKind::Normal, {}}, {"s1", "s1", LocationKind::Normal, {}}};
  a.initial = "s0";
  a.edges.push_back({"s0", "s1", {}, SyncLabel{"go", Direction::Send}, {}});
  TimedAutomaton env;
  env.name = "Env";
  env.locations = {{"s0", "s0", LocationKind::Normal, {}}};
  env.initial = "s0";
  env.edges.push_back({"s0", "s0", {}, SyncLabel{"go", Direction::Receive}, {}});
  net.automata = {a, env};
  net.channels = {{"tock", ChannelMode::Broadcast, ChannelKind::TockChannel}, {"go", ChannelMode::Binary, ChannelKind::UserEvent}};
  net.environmentIndex = 1;
  return net;
}

bool mentions(const std::vector<std::string>& diags, const std::string& what) {
  for (const auto& d : diags) {
    if (d.find(what) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(KindFromName, ReservedPatterns) {
  EXPECT_EQ(kindFromName("tock"), ChannelKind::TockChannel);
  EXPECT_EQ(kindFromName("startID0_0"), ChannelKind::Flow);
  EXPECT_EQ(kindFromName("finishID0"), ChannelKind::Terminating);
  EXPECT_EQ(kindFromName("close___sync"), ChannelKind::Synchronisation);
  EXPECT_EQ(kindFromName("extID0_3"), ChannelKind::ExtChoiceCoord);
  EXPECT_EQ(kindFromName("intrpID0_2"), ChannelKind::InterruptCoord);
  EXPECT_EQ(kindFromName("itau_a"), ChannelKind::HiddenItau);
  EXPECT_EQ(kindFromName("open"), ChannelKind::UserEvent);
  EXPECT_TRUE(isErased(ChannelKind::Flow));
  EXPECT_FALSE(isErased(ChannelKind::UserEvent));
  EXPECT_FALSE(isErased(ChannelKind::TockChannel));
}

TEST(KindText, RoundTrips) {
  for (auto k : {ChannelKind::UserEvent, ChannelKind::TockChannel, ChannelKind::Flow, ChannelKind::Terminating,
                 ChannelKind::Synchronisation, ChannelKind::ExtChoiceCoord, ChannelKind::InterruptCoord,
                 ChannelKind::ExceptionCoord, ChannelKind::HiddenItau}) {
    EXPECT_EQ(kindFromText(kindName(k)), k);
  }
  EXPECT_FALSE(kindFromText("bogus").has_value());
}

TEST(Validate, HandBuiltNetworkIsClean) { EXPECT_TRUE(validate(tiny()).empty()); }

TEST(Validate, TranslatedExamplesAreClean) {
  for (const auto& s : {harness::adsSpec(), harness::peSpec(), harness::piSpec()}) {
    auto diags = validate(translate::assemble(s));
    EXPECT_TRUE(diags.empty()) << diags.front();
  }
}

TEST(Validate, UnresolvedChannel) {
  auto net = tiny();
  net.automata[0].edges[0].sync->channel = "nowhere";
  auto diags = validate(net);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_TRUE(mentions(diags, "unresolved channel"));
}

TEST(Validate, DuplicateChannel) {
  auto net = tiny();
  net.channels.push_back({"close___sync", ChannelMode::Broadcast, ChannelKind::Synchronisation});
  net.channels.push_back({"close___sync", ChannelMode::Broadcast, ChannelKind::Synchronisation});
  auto diags = validate(net);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_TRUE(mentions(diags, "duplicate channel"));
}

TEST(Validate, OtherViolations) {
  auto net = tiny();
  net.channels[0].mode = ChannelMode::Binary;
  EXPECT_TRUE(mentions(validate(net), "tock"));

  net = tiny();
  net.automata[0].edges[0].target = "s9";
  EXPECT_TRUE(mentions(validate(net), "s9"));

  net = tiny();
  net.automata[0].edges[0].updates.push_back({"x", 1});
  EXPECT_TRUE(mentions(validate(net), "x"));

  net = tiny();
  net.automata[0].initial = "";
  EXPECT_FALSE(validate(net).empty());

  net = tiny();
  net.environmentIndex = 7;
  EXPECT_FALSE(validate(net).empty());
}

TEST(ErasureSet, Examples) {
  EXPECT_TRUE(erasureSet(tiny()).empty());
  auto ads = erasureSet(translate::assemble(harness::adsSpec()));
  EXPECT_TRUE(ads.count("close___sync"));
  EXPECT_TRUE(ads.count("finishID0"));
  EXPECT_TRUE(ads.count("startIDADS"));
  for (const char* e : {"open", "close", "offLight", "tock"}) EXPECT_FALSE(ads.count(e)) << e;
  for (const auto& c : ads) {
    EXPECT_TRUE(c.rfind("startID", 0) == 0 || c.rfind("finishID", 0) == 0 || c.find("___sync") != std::string::npos) << c;
  }
}

TEST(ErasureSet, StopNetwork) {
  translate::AssembleOptions opts;
  opts.rootStart = harness::kStopStart;
  auto e = erasureSet(translate::assemble(csp::singleton("P", csp::stop()), opts));
  EXPECT_EQ(e, (std::set<std::string>{"startID0_0", "finishID0"}));
}
