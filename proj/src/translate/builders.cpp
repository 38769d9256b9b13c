#include "tock2ta/translate/translator.hpp"

namespace tock2ta::translate {

using ta::Direction;
using ta::LocationKind;

ta::TimedAutomaton buildEnvironmentTA(const csp::EventSet& events, const std::string& startAction,
                                      const std::string& finishAction, const std::vector<std::string>& hidden) {
  ta::TimedAutomaton env;
  env.name = kEnvironmentName;
  env.locations.push_back({"s0", "s0", LocationKind::Normal, {}});
  env.initial = "s0";
  env.clocks = {"ck"};
  for (const auto& e : events) env.edges.push_back({"s0", "s0", {}, ta::SyncLabel{e, Direction::Receive}, {}});
  for (const auto& h : hidden) env.edges.push_back({"s0", "s0", {}, ta::SyncLabel{h, Direction::Receive}, {}});
  env.edges.push_back({"s0", "s0", {{{"start"}, ta::Rel::Eq, 0}}, ta::SyncLabel{startAction, Direction::Send},
                       {{"start", 1}}});
  env.edges.push_back({"s0", "s0", {}, ta::SyncLabel{finishAction, Direction::Receive}, {}});
  env.edges.push_back({"s0", "s0", {{{"ck"}, ta::Rel::Ge, 1}}, ta::SyncLabel{std::string(csp::kTock), Direction::Send},
                       {{"ck", 0}}});
  return env;
}

ta::TimedAutomaton buildSyncTA(const std::vector<SyncRequirement>& reqs) {
  ta::TimedAutomaton s;
  s.name = kSyncName;
  s.locations.push_back({"s0", "s0", LocationKind::Normal, {}});
  s.initial = "s0";
  int next = 1;
  for (const auto& r : reqs) {
    std::string c = "s" + std::to_string(next++);
    s.locations.push_back({c, c, LocationKind::Committed, {}});
    ta::Atom all{r.participants, ta::Rel::Eq, static_cast<int>(r.participants.size())};
    s.edges.push_back({"s0", c, {all}, ta::SyncLabel{r.event, Direction::Send}, {}});
    s.edges.push_back({c, "s0", {}, ta::SyncLabel{r.channel, Direction::Send}, {}});
  }
  return s;
}

}  // namespace tock2ta::translate
