#include "tock2ta/csp/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "tock2ta/csp/analysis.hpp"

namespace tock2ta::csp {

namespace {

enum class Tok {
  Ident,
  Arrow,       // ->
  ExtChoice,   // []
  IntChoice,   // |~|
  Semi,        // ;
  ParOpen,     // [|
  ParClose,    // |]
  Interleave,  // |||
  Interrupt,   // /\  (backslash)
  Hide,        // \  (backslash)
  RenOpen,     // [[
  RenClose,    // ]]
  LArrow,      // <-
  LBrace,
  RBrace,
  Comma,
  LParen,
  RParen,
  Equals,
  End,
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Arrow: return "'->'";
    case Tok::ExtChoice: return "'[]'";
    case Tok::IntChoice: return "'|~|'";
    case Tok::Semi: return "';'";
    case Tok::ParOpen: return "'[|'";
    case Tok::ParClose: return "'|]'";
    case Tok::Interleave: return "'|||'";
    case Tok::Interrupt: return "'/\\'";
    case Tok::Hide: return "'\\'";
    case Tok::RenOpen: return "'[['";
    case Tok::RenClose: return "']]'";
    case Tok::LArrow: return "'<-'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view s) { return src.substr(i).starts_with(s); };

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (starts("--")) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourcePos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    static const std::pair<std::string_view, Tok> kSymbols[] = {
        {"|||", Tok::Interleave}, {"|~|", Tok::IntChoice}, {"->", Tok::Arrow},    {"[]", Tok::ExtChoice},
        {"[|", Tok::ParOpen},     {"|]", Tok::ParClose},   {"[[", Tok::RenOpen},  {"]]", Tok::RenClose},
        {"/\\", Tok::Interrupt},  {"<-", Tok::LArrow},     {"\\", Tok::Hide},     {";", Tok::Semi},
        {"{", Tok::LBrace},       {"}", Tok::RBrace},      {",", Tok::Comma},     {"(", Tok::LParen},
        {")", Tok::RParen},       {"=", Tok::Equals},
    };
    bool matched = false;
    for (const auto& [text, kind] : kSymbols) {
      if (starts(text)) {
        out.push_back({kind, std::string(text), pos});
        advance(text.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw SpecError(SpecError::Kind::Syntax, pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  CspSpec parseSpec() {
    CspSpec spec;
    while (peek().kind != Tok::End) {
      const Token& name = expect(Tok::Ident);
      if (name.text == "STOP" || name.text == "SKIP" || name.text == std::string(kTock)) {
        throw SpecError(SpecError::Kind::ReservedName, name.pos, "'" + name.text + "' cannot name a process");
      }
      expect(Tok::Equals);
      ProcPtr body = parseIntChoice();
      if (!spec.definitions.emplace(name.text, body).second) {
        throw SpecError(SpecError::Kind::Syntax, name.pos, "duplicate definition of " + name.text);
      }
      spec.order.push_back(name.text);
    }
    if (spec.order.empty()) {
      throw SpecError(SpecError::Kind::Syntax, peek().pos, "expected at least one definition");
    }
    spec.main = spec.definitions.count("MAIN") ? "MAIN" : spec.order.front();
    return spec;
  }

 private:
  const Token& peek(size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

  const Token& expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind) fail({kind});
    ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
    const Token& t = peek();
    std::string msg = "expected ";
    bool first = true;
    for (Tok k : expected) {
      if (!first) msg += " or ";
      msg += describe(k);
      first = false;
    }
    msg += ", found " + (t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'");
    throw SpecError(SpecError::Kind::Syntax, t.pos, msg);
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  template <typename Next, typename Build>
  ProcPtr leftAssoc(Tok op, Next next, Build build) {
    ProcPtr lhs = (this->*next)();
    while (peek().kind == op) {
      SourcePos at = peek().pos;
      ++pos_;
      ProcPtr rhs = (this->*next)();
      lhs = withPos(build(lhs, rhs), at);
    }
    return lhs;
  }

  static ProcPtr withPos(ProcPtr p, SourcePos at) {
    auto copy = std::make_shared<Process>(*p);
    copy->pos = at;
    return copy;
  }

  ProcPtr parseIntChoice() { return leftAssoc(Tok::IntChoice, &Parser::parseExtChoice, intChoice); }
  ProcPtr parseExtChoice() { return leftAssoc(Tok::ExtChoice, &Parser::parsePar, extChoice); }

  ProcPtr parsePar() {
    ProcPtr lhs = parseSeq();
    for (;;) {
      SourcePos at = peek().pos;
      if (accept(Tok::Interleave)) {
        lhs = withPos(interleave(lhs, parseSeq()), at);
      } else if (accept(Tok::ParOpen)) {
        EventSet sync = parseSet("synchronisation set");
        expect(Tok::ParClose);
        lhs = withPos(genPar(lhs, parseSeq(), std::move(sync)), at);
      } else {
        return lhs;
      }
    }
  }

  ProcPtr parseSeq() { return leftAssoc(Tok::Semi, &Parser::parseInterrupt, seq); }
  ProcPtr parseInterrupt() { return leftAssoc(Tok::Interrupt, &Parser::parsePrefix, interrupt); }

  ProcPtr parsePrefix() {
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::Arrow) {
      const Token& ev = peek();
      checkEvent(ev.text, ev.pos, true);
      pos_ += 2;
      return withPos(prefix(ev.text, parsePrefix()), ev.pos);
    }
    return parsePostfix();
  }

  ProcPtr parsePostfix() {
    ProcPtr p = parsePrimary();
    for (;;) {
      SourcePos at = peek().pos;
      if (accept(Tok::Hide)) {
        p = withPos(hide(p, parseSet("hidden set")), at);
      } else if (accept(Tok::RenOpen)) {
        p = withPos(rename(p, parseRenaming()), at);
      } else {
        return p;
      }
    }
  }

  ProcPtr parsePrimary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      ++pos_;
      ProcPtr inner = parseIntChoice();
      expect(Tok::RParen);
      return inner;
    }
    if (t.kind == Tok::Ident) {
      // An identifier followed by '=' opens the next definition.
      if (peek(1).kind == Tok::Equals) fail({Tok::Ident, Tok::LParen});
      ++pos_;
      if (t.text == "STOP") return withPos(stop(), t.pos);
      if (t.text == "SKIP") return withPos(skip(), t.pos);
      return withPos(ref(t.text), t.pos);
    }
    fail({Tok::Ident, Tok::LParen});
  }

  EventSet parseSet(const char* what) {
    expect(Tok::LBrace);
    EventSet out;
    if (accept(Tok::RBrace)) return out;
    do {
      const Token& ev = expect(Tok::Ident);
      if (ev.text == kTock) {
        throw SpecError(SpecError::Kind::TockInSet, ev.pos, std::string("tock may not appear in a ") + what);
      }
      checkEvent(ev.text, ev.pos, false);
      out.insert(ev.text);
    } while (accept(Tok::Comma));
    expect(Tok::RBrace);
    return out;
  }

  RenameMap parseRenaming() {
    RenameMap map;
    do {
      const Token& from = expect(Tok::Ident);
      expect(Tok::LArrow);
      const Token& to = expect(Tok::Ident);
      for (const Token* t : {&from, &to}) {
        if (t->text == kTock) {
          throw SpecError(SpecError::Kind::TockInSet, t->pos, "tock may not be renamed");
        }
        checkEvent(t->text, t->pos, false);
      }
      if (!map.emplace(from.text, to.text).second) {
        throw SpecError(SpecError::Kind::DuplicateRename, from.pos, "event " + from.text + " renamed twice");
      }
    } while (accept(Tok::Comma));
    expect(Tok::RenClose);
    return map;
  }

  static void checkEvent(const std::string& name, SourcePos pos, bool allowTock) {
    if (name == kTock) {
      if (allowTock) return;
    }
    if (name == "STOP" || name == "SKIP" || isReservedEventName(name)) {
      throw SpecError(SpecError::Kind::ReservedName, pos, "'" + name + "' is reserved and cannot be a user event");
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

CspSpec parse(std::string_view source) {
  Parser parser(lex(source));
  CspSpec spec = parser.parseSpec();
  checkSpec(spec);
  return spec;
}

CspSpec parseFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace tock2ta::csp
