#include <gtest/gtest.h>

#include "tock2ta/harness/harness.hpp"
#include "tock2ta/translate/translator.hpp"
#include "tock2ta/xml/uppaal.hpp"

using namespace tock2ta;

namespace {

ta::NetworkModel stopNet() {
  translate::AssembleOptions opts;
  opts.rootStart = harness::kStopStart;
  return translate::assemble(csp::singleton("P", csp::stop()), opts);
}

std::string errorOf(const std::string& doc) {
  try {
    xml::load(doc);
  } catch (const xml::XmlError& e) {
    return e.what();
  }
  return "";
}

const char* const kHead = "<?xml version=\"1.0\"?><nta><declaration>broadcast chan tock; chan go;</declaration>";

}  // namespace

TEST(Emit, StopDeclarations) {
  std::string doc = xml::emit(stopNet());
  EXPECT_NE(doc.find("broadcast chan tock;"), std::string::npos);
  EXPECT_NE(doc.find("urgent chan startID0_0;"), std::string::npos);
  EXPECT_NE(doc.find("chan finishID0;"), std::string::npos);
  EXPECT_NE(doc.find("clock ck;"), std::string::npos);
}

TEST(Emit, AdsSystemLineListsEightTemplates) {
  std::string doc = xml::emit(translate::assemble(harness::adsSpec()));
  std::size_t templates = 0;
  for (auto p = doc.find("<template>"); p != std::string::npos; p = doc.find("<template>", p + 1)) ++templates;
  EXPECT_EQ(templates, 8u);
  EXPECT_NE(doc.find("<system>system TA00, TA01, TA02, TA03, TA04, TA05, Sync, Env;</system>"), std::string::npos);
  EXPECT_NE(doc.find("&gt;="), std::string::npos);
}

TEST(Emit, EmptySyncTemplate) {
  ta::NetworkModel net;
  net.automata.push_back(translate::buildSyncTA({}));
  std::string doc = xml::emit(net);
  EXPECT_EQ(doc.find("<transition>"), std::string::npos);
  EXPECT_EQ(xml::load(doc), net);
}

TEST(RoundTrip, Examples) {
  for (const auto& s : {harness::adsSpec(), harness::peSpec(), harness::piSpec()}) {
    auto net = translate::assemble(s);
    EXPECT_EQ(xml::load(xml::emit(net)), net);
  }
  EXPECT_EQ(xml::load(xml::emit(stopNet())), stopNet());
}

TEST(RoundTrip, WholeCorpus) {
  for (const auto& e : harness::generateCorpus()) {
    auto net = translate::assemble(e.spec);
    EXPECT_EQ(xml::load(xml::emit(net)), net) << e.id;
  }
}

TEST(RoundTrip, InvariantsAndLocationKinds) {
  ta::NetworkModel net;
  ta::TimedAutomaton a;
  a.name = "A";
  a.clocks = {"x"};
  a.locations = {{"s0", "idle", ta::LocationKind::Urgent, {{{"x"}, ta::Rel::Le, 3}}},
                 {"s1", "s1", ta::LocationKind::Committed, {}}};
  a.initial = "s0";
  a.edges.push_back({"s0", "s1", {{{"x"}, ta::Rel::Gt, 1}, {{"v", "w"}, ta::Rel::Lt, 2}}, std::nullopt, {{"x", 0}, {"v", 4}}});
  net.automata = {a};
  net.intVars = {{"v", -1}, {"w", 0}};
  net.channels = {{"tock", ta::ChannelMode::Broadcast, ta::ChannelKind::TockChannel}};
  EXPECT_EQ(xml::load(xml::emit(net)), net);
}

TEST(Load, KindsFallBackToNames) {
  std::string doc = std::string(kHead) + "<template><name>A</name><location id=\"a\"/><init ref=\"a\"/></template>"
                    "<system>system A;</system></nta>";
  auto net = xml::load(doc);
  ASSERT_EQ(net.channels.size(), 2u);
  EXPECT_EQ(net.channels[0].kind, ta::ChannelKind::TockChannel);
  EXPECT_EQ(net.channels[1].kind, ta::ChannelKind::UserEvent);
  EXPECT_EQ(net.automata[0].initial, "a");
}

TEST(Load, MissingInit) {
  std::string doc = std::string(kHead) + "<template><name>A</name><location id=\"a\"/></template></nta>";
  EXPECT_NE(errorOf(doc).find("missing initial location"), std::string::npos);
}

TEST(Load, ForeignFeaturesRejected) {
  std::string param = std::string(kHead) +
                      "<template><name>A</name><parameter>int i</parameter><location id=\"a\"/><init ref=\"a\"/>"
                      "</template></nta>";
  EXPECT_NE(errorOf(param).find("unsupported expression"), std::string::npos);
  std::string select = std::string(kHead) +
                       "<template><name>A</name><location id=\"a\"/><init ref=\"a\"/><transition><source ref=\"a\"/>"
                       "<target ref=\"a\"/><label kind=\"select\">i : int[0,3]</label></transition></template></nta>";
  std::string err = errorOf(select);
  EXPECT_NE(err.find("unsupported expression"), std::string::npos);
  EXPECT_NE(err.find("template A"), std::string::npos);
  std::string fn = "<nta><declaration>void f() {}</declaration></nta>";
  EXPECT_NE(errorOf(fn).find("unsupported expression"), std::string::npos);
}

TEST(Load, Malformed) {
  EXPECT_NE(errorOf("<nta><template>").find("malformed"), std::string::npos);
  EXPECT_NE(errorOf("<other/>").find("malformed"), std::string::npos);
}
