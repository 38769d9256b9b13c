#include <fstream>

#include "tock2ta/xml/uppaal.hpp"

namespace tock2ta::xml {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string joinNames(const std::vector<std::string>& names, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

}  // namespace

std::string formatConjunction(const ta::Conjunction& c) {
  std::vector<std::string> parts;
  for (const auto& a : c) {
    std::string lhs = a.terms.size() == 1 ? a.terms[0] : "(" + joinNames(a.terms, " + ") + ")";
    parts.push_back(lhs + std::string(ta::relText(a.rel)) + std::to_string(a.constant));
  }
  return joinNames(parts, " && ");
}

std::string formatUpdates(const std::vector<ta::Update>& u) {
  std::vector<std::string> parts;
  for (const auto& x : u) parts.push_back(x.var + " = " + std::to_string(x.value));
  return joinNames(parts, ", ");
}

std::string emit(const ta::NetworkModel& net) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n";
  out += "<!DOCTYPE nta PUBLIC '-//Uppaal Team//DTD Flat System 1.1//EN' "
         "'http://www.it.uu.se/research/group/darts/uppaal/flat-1_2.dtd'>\n";
  out += "<nta>\n";

  out += "<!-- channel-kinds";
  for (const auto& c : net.channels) out += " " + c.name + ":" + std::string(ta::kindName(c.kind));
  if (net.environmentIndex < net.automata.size()) out += " environment:" + net.automata[net.environmentIndex].name;
  out += " -->\n";

  out += "  <declaration>";
  for (const auto& c : net.channels) out += std::string(ta::modeName(c.mode)) + " " + c.name + ";\n";
  for (const auto& [v, init] : net.intVars) out += "int " + v + " = " + std::to_string(init) + ";\n";
  for (const auto& c : net.globalClocks) out += "clock " + c + ";\n";
  out += "</declaration>\n";

  for (const auto& ta : net.automata) {
    out += "  <template>\n";
    out += "    <name>" + escape(ta.name) + "</name>\n";
    out += "    <declaration>";
    for (const auto& c : ta.clocks) out += "clock " + c + ";\n";
    out += "</declaration>\n";
    for (std::size_t i = 0; i < ta.locations.size(); ++i) {
      const auto& l = ta.locations[i];
      int x = static_cast<int>(i % 4) * 150;
      int y = static_cast<int>(i / 4) * 150;
      out += "    <location id=\"" + escape(ta.name + "_" + l.id) + "\" x=\"" + std::to_string(x) + "\" y=\"" +
             std::to_string(y) + "\">\n";
      out += "      <name x=\"" + std::to_string(x - 10) + "\" y=\"" + std::to_string(y - 30) + "\">" +
             escape(l.displayName) + "</name>\n";
      if (!l.invariant.empty()) {
        out += "      <label kind=\"invariant\" x=\"" + std::to_string(x - 10) + "\" y=\"" + std::to_string(y + 15) +
               "\">" + escape(formatConjunction(l.invariant)) + "</label>\n";
      }
      if (l.kind == ta::LocationKind::Urgent) out += "      <urgent/>\n";
      if (l.kind == ta::LocationKind::Committed) out += "      <committed/>\n";
      out += "    </location>\n";
    }
    out += "    <init ref=\"" + escape(ta.name + "_" + ta.initial) + "\"/>\n";
    for (const auto& e : ta.edges) {
      out += "    <transition>\n";
      out += "      <source ref=\"" + escape(ta.name + "_" + e.source) + "\"/>\n";
      out += "      <target ref=\"" + escape(ta.name + "_" + e.target) + "\"/>\n";
      if (!e.guard.empty()) out += "      <label kind=\"guard\">" + escape(formatConjunction(e.guard)) + "</label>\n";
      if (e.sync) {
        out += "      <label kind=\"synchronisation\">" + escape(e.sync->channel) +
               (e.sync->direction == ta::Direction::Send ? "!" : "?") + "</label>\n";
      }
      if (!e.updates.empty()) {
        out += "      <label kind=\"assignment\">" + escape(formatUpdates(e.updates)) + "</label>\n";
      }
      out += "    </transition>\n";
    }
    out += "  </template>\n";
  }

  std::vector<std::string> names;
  for (const auto& ta : net.automata) names.push_back(ta.name);
  out += "  <system>system " + joinNames(names, ", ") + ";</system>\n";
  out += "  <queries/>\n";
  out += "</nta>\n";
  return out;
}

void saveFile(const ta::NetworkModel& net, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw XmlError("cannot write " + path);
  f << emit(net);
}

}  // namespace tock2ta::xml
