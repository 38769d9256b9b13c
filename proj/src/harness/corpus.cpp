#include <cstdio>

#include "tock2ta/csp/parser.hpp"
#include "tock2ta/harness/harness.hpp"
#include "tock2ta/semantics/lts.hpp"

namespace tock2ta::harness {

namespace {

using namespace csp;

std::vector<ProcPtr> atoms(const std::string& x) {
  return {stop(), skip(), prefix(x, stop()), prefix(std::string(kTock), stop()), prefix(x, skip())};
}

using Binary = ProcPtr (*)(ProcPtr, ProcPtr);

ProcPtr syncA(ProcPtr l, ProcPtr r) { return genPar(std::move(l), std::move(r), {"a"}); }

const std::vector<Binary>& operators() {
  static const std::vector<Binary> ops{
      [](ProcPtr l, ProcPtr r) { return seq(l, r); },
      syncA,
      [](ProcPtr l, ProcPtr r) { return interleave(l, r); },
      [](ProcPtr l, ProcPtr r) { return extChoice(l, r); },
      [](ProcPtr l, ProcPtr r) { return intChoice(l, r); },
      [](ProcPtr l, ProcPtr r) { return interrupt(l, r); },
  };
  return ops;
}

// Recursive definitions whose loops close through sequential contexts.
const char* const kRecursive[] = {
    "P = a -> P",
    "P = a -> tock -> P",
    "P = tock -> a -> P",
    "P = (a -> P) [] (b -> STOP)",
    "P = (a -> P) |~| (b -> SKIP)",
    "P = (a -> SKIP) ; P",
    "P = (a -> b -> P) \\ {a}",
    "P = a -> Q\nQ = b -> P",
    "P = ((a -> SKIP) [] (b -> SKIP)) ; P",
    "P = Q [|{a}|] R\nQ = a -> Q\nR = a -> b -> R",
    "P = Q ||| R\nQ = a -> tock -> Q\nR = b -> R",
    "P = (Q [] R) \\ {b}\nQ = a -> STOP\nR = b -> c -> STOP",
};

}  // namespace

std::vector<CorpusEntry> generateCorpus(std::size_t maxStates) {
  std::vector<ProcPtr> bodies;
  auto add = [&](ProcPtr p) {
    for (const auto& q : bodies) {
      if (equal(p, q)) return;
    }
    bodies.push_back(std::move(p));
  };

  std::vector<ProcPtr> left = atoms("a");
  std::vector<ProcPtr> right = atoms("a");
  for (const auto& p : atoms("b")) {
    bool dup = false;
    for (const auto& q : right) dup = dup || equal(p, q);
    if (!dup) right.push_back(p);
  }

  for (Binary op : operators()) {
    for (const auto& l : left) {
      for (const auto& r : right) add(op(l, r));
    }
  }
  for (const auto& x : left) {
    add(prefix("b", x));
    add(hide(x, {"a"}));
    add(rename(x, {{"a", "b"}}));
  }
  // Distinct operator pairs, the inner one on the left.
  for (std::size_t i = 0; i < operators().size(); ++i) {
    for (std::size_t j = 0; j < operators().size(); ++j) {
      if (i == j) continue;
      add(operators()[i](operators()[j](prefix("a", stop()), prefix("b", skip())), prefix("c", stop())));
    }
  }

  std::vector<CorpusEntry> out;
  auto keep = [&](CspSpec spec) {
    if (semantics::reachableStates(spec) > maxStates) return;
    char id[16];
    std::snprintf(id, sizeof id, "p%03zu", out.size() + 1);
    out.push_back({id, std::move(spec)});
  };
  for (const auto& b : bodies) keep(singleton("P", b));
  for (const char* src : kRecursive) keep(parse(src));
  return out;
}

}  // namespace tock2ta::harness
