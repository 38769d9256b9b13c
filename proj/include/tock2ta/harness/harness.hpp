#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tock2ta/csp/ast.hpp"
#include "tock2ta/ta/model.hpp"
#include "tock2ta/trace.hpp"

namespace tock2ta::harness {

enum class Verdict { EqualAtStage1, AcceptedAtStage2, Mismatch };

std::string_view verdictName(Verdict v);

struct ComparisonReport {
  std::string id;
  std::size_t depth = 0;
  Verdict verdict = Verdict::Mismatch;
  std::vector<Trace> onlyCsp;  // bounded witness lists
  std::vector<Trace> onlyTa;
  double millis = 0;
};

/// Stage 1: exact set equality. Stage 2: the two sets agree once every
/// trace is reduced to its sorted multiset of events (interleaving order
/// ignored). Throws std::invalid_argument when the depths differ.
ComparisonReport compareTraces(const TraceSet& cspTraces, const TraceSet& taTraces, std::size_t maxWitnesses = 5);

struct CorpusEntry {
  std::string id;
  csp::CspSpec spec;
};

/// Small processes built from the atoms STOP, SKIP, x->STOP, tock->STOP and
/// x->SKIP under every operator, nested operator pairs and a few recursive
/// definitions. Deterministic; every entry has at most `maxStates`
/// reachable process states.
std::vector<CorpusEntry> generateCorpus(std::size_t maxStates = 5);

/// Both trace oracles at depth n, compared.
ComparisonReport checkSpec(const csp::CspSpec& spec, std::size_t n, const std::string& id = "");

/// The three example processes used throughout the documentation.
csp::CspSpec adsSpec();
csp::CspSpec peSpec();
csp::CspSpec piSpec();

struct ProofStep {
  std::size_t n = 0;
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ProofReport {
  bool ok = true;
  std::vector<ProofStep> steps;
};

/// Root start action used for the STOP network in the proof check.
inline constexpr const char* kStopStart = "startID0_0";

/// Checks, for every n <= maxN, that STOP has exactly the traces tock^l
/// (l <= n), that its translation records start then tocks, and that
/// erasing coordinating actions gives back the tock traces. `mutate` can
/// corrupt the network first (used to show that the check bites).
ProofReport proveStopBase(std::size_t maxN, const std::function<void(ta::NetworkModel&)>& mutate = {});

}  // namespace tock2ta::harness
