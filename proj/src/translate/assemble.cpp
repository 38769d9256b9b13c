#include "tock2ta/csp/analysis.hpp"
#include "tock2ta/translate/translator.hpp"

namespace tock2ta::translate {

ta::NetworkModel assemble(const csp::CspSpec& spec, const AssembleOptions& options) {
  NameRegistry names;
  TranslationContext ctx;
  ctx.procName = spec.main;
  ctx.startAction = options.rootStart.value_or("startID" + spec.main);
  ctx.finishAction = kRootFinish;
  ctx.names = &names;
  Translation tr = transTA(spec.body(spec.main), spec.definitions, ctx);

  ta::NetworkModel net;
  net.automata = std::move(tr.automata);
  if (!tr.requirements.empty()) net.automata.push_back(buildSyncTA(tr.requirements));
  // Events only ever performed hidden travel on itau channels instead.
  csp::EventSet events;
  const csp::EventSet alphabet = csp::alphabet(spec);
  for (const auto& a : net.automata) {
    for (const auto& e : a.edges) {
      if (e.sync && e.sync->direction == ta::Direction::Send && alphabet.count(e.sync->channel)) {
        events.insert(e.sync->channel);
      }
    }
  }
  net.automata.push_back(buildEnvironmentTA(events, ctx.startAction, ctx.finishAction, tr.hiddenChannels));
  net.environmentIndex = net.automata.size() - 1;

  net.channels.push_back({std::string(csp::kTock), ta::ChannelMode::Broadcast, ta::ChannelKind::TockChannel});
  // No time may pass before the system has started.
  net.channels.push_back({ctx.startAction, ta::ChannelMode::UrgentBinary, ta::kindFromName(ctx.startAction)});
  net.channels.push_back({ctx.finishAction, ta::ChannelMode::Binary, ta::ChannelKind::Terminating});
  for (auto& c : tr.channels) net.channels.push_back(std::move(c));
  for (const auto& e : events) net.channels.push_back({e, ta::ChannelMode::Binary, ta::ChannelKind::UserEvent});

  net.intVars.emplace_back("start", 0);
  for (const auto& v : tr.variables) net.intVars.emplace_back(v, 0);
  return net;
}

}  // namespace tock2ta::translate
