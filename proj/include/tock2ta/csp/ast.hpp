#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tock2ta::csp {

/// Position of a token in the source text (1-based).
struct SourcePos {
  int line = 0;
  int column = 0;
};

inline constexpr std::string_view kTock = "tock";

enum class Op {
  Stop,
  Skip,
  Prefix,
  Seq,
  GenPar,
  Interleave,
  ExtChoice,
  IntChoice,
  Interrupt,
  Hide,
  Rename,
  Ref,
};

std::string_view opName(Op op);

struct Process;
using ProcPtr = std::shared_ptr<const Process>;
using EventSet = std::set<std::string>;
using RenameMap = std::map<std::string, std::string>;

/// One node of the tock-CSP abstract syntax. Nodes are immutable and shared.
///
/// `name` holds the event of a Prefix and the identifier of a Ref. `events`
/// is the synchronisation set of GenPar and the hidden set of Hide.
struct Process {
  Op op = Op::Stop;
  std::string name;
  ProcPtr left;
  ProcPtr right;
  EventSet events;
  RenameMap renaming;
  SourcePos pos;

  bool isBinary() const;
};

/// Structural equality; source positions are ignored.
bool operator==(const Process& a, const Process& b);
bool equal(const ProcPtr& a, const ProcPtr& b);

ProcPtr stop();
ProcPtr skip();
ProcPtr prefix(std::string event, ProcPtr cont);
ProcPtr seq(ProcPtr left, ProcPtr right);
ProcPtr genPar(ProcPtr left, ProcPtr right, EventSet sync);
ProcPtr interleave(ProcPtr left, ProcPtr right);
ProcPtr extChoice(ProcPtr left, ProcPtr right);
ProcPtr intChoice(ProcPtr left, ProcPtr right);
ProcPtr interrupt(ProcPtr left, ProcPtr right);
ProcPtr hide(ProcPtr body, EventSet hidden);
ProcPtr rename(ProcPtr body, RenameMap map);
ProcPtr ref(std::string name);

using Definitions = std::map<std::string, ProcPtr>;

/// A closed set of named process definitions with a distinguished main process.
struct CspSpec {
  Definitions definitions;
  std::string main;
  /// Definition names in source order; used by the printer.
  std::vector<std::string> order;

  const Process& body(const std::string& name) const;
};

bool operator==(const CspSpec& a, const CspSpec& b);

/// Builds a single-definition spec named `name`.
CspSpec singleton(std::string name, ProcPtr body);

/// Raised for every malformed or unsupported CspSpec.
class SpecError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnresolvedReference, UnguardedRecursion, ReservedName, TockInSet, DuplicateRename };
  SpecError(Kind kind, SourcePos pos, const std::string& message);
  Kind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

 private:
  Kind kind_;
  SourcePos pos_;
};

bool isValidIdentifier(std::string_view name);

/// True for names a user event may not take: tau, itau and the coordinating
/// prefixes/suffix reserved by the translator.
bool isReservedEventName(std::string_view name);

}  // namespace tock2ta::csp
