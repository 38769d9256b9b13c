#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fstream>
#include <map>
#include <sstream>

#include "tock2ta/xml/uppaal.hpp"

namespace tock2ta::xml {

namespace {

namespace pt = boost::property_tree;

std::string trim(std::string s) {
  boost::algorithm::trim(s);
  return s;
}

bool isIdent(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

bool parseInt(const std::string& s, int& out) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  out = std::stoi(s);
  return true;
}

[[noreturn]] void unsupported(const std::string& text, const std::string& where) {
  throw XmlError("unsupported expression '" + text + "' in " + where);
}

ta::Conjunction parseConjunction(const std::string& text, const std::string& where) {
  ta::Conjunction out;
  std::vector<std::string> parts;
  for (std::size_t from = 0;;) {
    auto at = text.find("&&", from);
    parts.push_back(text.substr(from, at == std::string::npos ? std::string::npos : at - from));
    if (at == std::string::npos) break;
    from = at + 2;
  }
  for (auto part : parts) {
    part = trim(part);
    if (part.empty()) unsupported(text, where);
    static const std::pair<const char*, ta::Rel> rels[] = {
        {"<=", ta::Rel::Le}, {">=", ta::Rel::Ge}, {"==", ta::Rel::Eq}, {"<", ta::Rel::Lt}, {">", ta::Rel::Gt}};
    std::size_t pos = std::string::npos;
    ta::Rel rel = ta::Rel::Eq;
    std::size_t len = 0;
    for (const auto& [op, r] : rels) {
      auto p = part.find(op);
      if (p != std::string::npos) {
        pos = p;
        rel = r;
        len = std::string(op).size();
        break;
      }
    }
    if (pos == std::string::npos) unsupported(part, where);
    std::string lhs = trim(part.substr(0, pos));
    std::string rhs = trim(part.substr(pos + len));
    ta::Atom atom;
    atom.rel = rel;
    if (!parseInt(rhs, atom.constant)) unsupported(part, where);
    if (lhs.size() >= 2 && lhs.front() == '(' && lhs.back() == ')') lhs = lhs.substr(1, lhs.size() - 2);
    std::vector<std::string> terms;
    boost::algorithm::split(terms, lhs, boost::is_any_of("+"));
    for (auto& t : terms) {
      t = trim(t);
      if (!isIdent(t)) unsupported(part, where);
      atom.terms.push_back(t);
    }
    out.push_back(std::move(atom));
  }
  return out;
}

std::vector<ta::Update> parseUpdates(const std::string& text, const std::string& where) {
  std::vector<ta::Update> out;
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::is_any_of(","));
  for (auto part : parts) {
    part = trim(part);
    auto eq = part.find('=');
    if (eq == std::string::npos) unsupported(part, where);
    std::string lhs = part.substr(0, eq);
    if (!lhs.empty() && lhs.back() == ':') lhs.pop_back();
    lhs = trim(lhs);
    ta::Update u;
    u.var = lhs;
    if (!isIdent(lhs) || !parseInt(trim(part.substr(eq + 1)), u.value)) unsupported(part, where);
    out.push_back(u);
  }
  return out;
}

struct Declarations {
  std::vector<ta::ChannelDecl> channels;
  std::vector<std::pair<std::string, int>> ints;
  std::vector<std::string> clocks;
};

Declarations parseDeclarations(const std::string& text, const std::string& where) {
  Declarations d;
  std::vector<std::string> stmts;
  boost::algorithm::split(stmts, text, boost::is_any_of(";"));
  for (auto s : stmts) {
    s = trim(s);
    if (s.empty()) continue;
    std::vector<std::string> words;
    boost::algorithm::split(words, s, boost::is_any_of(" \t\r\n"), boost::token_compress_on);
    auto rest = [&](std::size_t from) {
      std::string r;
      for (std::size_t i = from; i < words.size(); ++i) r += words[i] + " ";
      return trim(r);
    };
    if (words.size() >= 2 && words[0] == "chan") {
      std::vector<std::string> names;
      boost::algorithm::split(names, rest(1), boost::is_any_of(","));
      for (auto& n : names) {
        n = trim(n);
        if (!isIdent(n)) unsupported(s, where);
        d.channels.push_back({n, ta::ChannelMode::Binary, ta::kindFromName(n)});
      }
    } else if (words.size() >= 3 && (words[0] == "broadcast" || words[0] == "urgent") && words[1] == "chan") {
      std::vector<std::string> names;
      boost::algorithm::split(names, rest(2), boost::is_any_of(","));
      auto mode = words[0] == "broadcast" ? ta::ChannelMode::Broadcast : ta::ChannelMode::UrgentBinary;
      for (auto& n : names) {
        n = trim(n);
        if (!isIdent(n)) unsupported(s, where);
        d.channels.push_back({n, mode, ta::kindFromName(n)});
      }
    } else if (words.size() >= 2 && words[0] == "int") {
      std::string body = rest(1);
      std::vector<std::string> items;
      boost::algorithm::split(items, body, boost::is_any_of(","));
      for (auto& item : items) {
        auto eq = item.find('=');
        std::string name = trim(item.substr(0, eq));
        int init = 0;
        if (!isIdent(name)) unsupported(s, where);
        if (eq != std::string::npos && !parseInt(trim(item.substr(eq + 1)), init)) unsupported(s, where);
        d.ints.emplace_back(name, init);
      }
    } else if (words.size() >= 2 && words[0] == "clock") {
      std::vector<std::string> names;
      boost::algorithm::split(names, rest(1), boost::is_any_of(","));
      for (auto& n : names) {
        n = trim(n);
        if (!isIdent(n)) unsupported(s, where);
        d.clocks.push_back(n);
      }
    } else {
      unsupported(s, where);
    }
  }
  return d;
}

std::string stripPrefix(const std::string& id, const std::string& tmpl) {
  std::string p = tmpl + "_";
  return id.rfind(p, 0) == 0 ? id.substr(p.size()) : id;
}

}  // namespace

ta::NetworkModel load(std::string_view document) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(document)};
    pt::read_xml(in, tree, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw XmlError(std::string("malformed XML: ") + e.what());
  }
  auto root = tree.get_child_optional("nta");
  if (!root) throw XmlError("malformed XML: missing root element nta");

  std::map<std::string, ta::ChannelKind> kinds;
  std::string envName;
  ta::NetworkModel net;
  std::vector<ta::TimedAutomaton> templates;
  std::vector<std::string> order;

  for (const auto& [tag, node] : *root) {
    if (tag == "<xmlcomment>") {
      std::istringstream words(node.data());
      std::string w;
      words >> w;
      if (w != "channel-kinds") continue;
      while (words >> w) {
        auto colon = w.rfind(':');
        if (colon == std::string::npos) continue;
        std::string key = w.substr(0, colon), value = w.substr(colon + 1);
        if (key == "environment") {
          envName = value;
        } else if (auto k = ta::kindFromText(value)) {
          kinds[key] = *k;
        }
      }
    } else if (tag == "declaration") {
      Declarations d = parseDeclarations(node.data(), "global declaration");
      net.channels = d.channels;
      net.intVars = d.ints;
      net.globalClocks = d.clocks;
    } else if (tag == "template") {
      ta::TimedAutomaton a;
      a.name = trim(node.get<std::string>("name", ""));
      const std::string where = "template " + a.name;
      if (node.get_child_optional("parameter")) unsupported(node.get<std::string>("parameter"), where);
      Declarations local = parseDeclarations(node.get<std::string>("declaration", ""), where);
      if (!local.channels.empty() || !local.ints.empty()) unsupported("local declaration", where);
      a.clocks = local.clocks;
      std::size_t edgeNo = 0;
      for (const auto& [ctag, child] : node) {
        if (ctag == "location") {
          ta::Location l;
          l.id = stripPrefix(child.get<std::string>("<xmlattr>.id"), a.name);
          l.displayName = trim(child.get<std::string>("name", l.id));
          for (const auto& [ltag, lchild] : child) {
            if (ltag == "label" && lchild.get<std::string>("<xmlattr>.kind", "") == "invariant") {
              l.invariant = parseConjunction(lchild.data(), where + " location " + l.id);
            } else if (ltag == "urgent") {
              l.kind = ta::LocationKind::Urgent;
            } else if (ltag == "committed") {
              l.kind = ta::LocationKind::Committed;
            }
          }
          a.locations.push_back(std::move(l));
        } else if (ctag == "init") {
          a.initial = stripPrefix(child.get<std::string>("<xmlattr>.ref"), a.name);
        } else if (ctag == "transition") {
          const std::string twhere = where + " transition " + std::to_string(edgeNo++);
          ta::Edge e;
          e.source = stripPrefix(child.get<std::string>("source.<xmlattr>.ref"), a.name);
          e.target = stripPrefix(child.get<std::string>("target.<xmlattr>.ref"), a.name);
          for (const auto& [ltag, label] : child) {
            if (ltag != "label") continue;
            std::string kind = label.get<std::string>("<xmlattr>.kind", "");
            std::string text = trim(label.data());
            if (kind == "guard") {
              e.guard = parseConjunction(text, twhere);
            } else if (kind == "synchronisation") {
              if (text.size() < 2 || (text.back() != '!' && text.back() != '?')) unsupported(text, twhere);
              std::string ch = trim(text.substr(0, text.size() - 1));
              if (!isIdent(ch)) unsupported(text, twhere);
              e.sync = ta::SyncLabel{ch, text.back() == '!' ? ta::Direction::Send : ta::Direction::Receive};
            } else if (kind == "assignment") {
              e.updates = parseUpdates(text, twhere);
            } else if (kind != "comments") {
              unsupported(kind + " " + text, twhere);
            }
          }
          a.edges.push_back(std::move(e));
        }
      }
      if (a.initial.empty()) throw XmlError(where + ": missing initial location");
      templates.push_back(std::move(a));
    } else if (tag == "system") {
      std::string text = trim(node.data());
      if (text.rfind("system", 0) != 0 || text.back() != ';') unsupported(text, "system declaration");
      std::vector<std::string> names;
      std::string list = text.substr(6, text.size() - 7);
      boost::algorithm::split(names, list, boost::is_any_of(","));
      for (auto& n : names) {
        n = trim(n);
        if (!isIdent(n)) unsupported(text, "system declaration");
        order.push_back(n);
      }
    }
  }

  if (order.empty()) {
    net.automata = std::move(templates);
  } else {
    for (const auto& n : order) {
      bool found = false;
      for (const auto& t : templates) {
        if (t.name == n) {
          net.automata.push_back(t);
          found = true;
        }
      }
      if (!found) throw XmlError("system instantiates unknown template " + n);
    }
  }

  for (auto& c : net.channels) {
    auto it = kinds.find(c.name);
    if (it != kinds.end()) c.kind = it->second;
  }
  if (envName.empty()) envName = "Env";
  net.environmentIndex = net.automata.empty() ? 0 : net.automata.size() - 1;
  for (std::size_t i = 0; i < net.automata.size(); ++i) {
    if (net.automata[i].name == envName) net.environmentIndex = i;
  }
  return net;
}

ta::NetworkModel loadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw XmlError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load(ss.str());
}

}  // namespace tock2ta::xml
