#include <chrono>

#include "tock2ta/csp/parser.hpp"
#include "tock2ta/exec/executor.hpp"
#include "tock2ta/harness/harness.hpp"
#include "tock2ta/semantics/lts.hpp"
#include "tock2ta/translate/translator.hpp"

namespace tock2ta::harness {

ComparisonReport checkSpec(const csp::CspSpec& spec, std::size_t n, const std::string& id) {
  auto t0 = std::chrono::steady_clock::now();
  TraceSet cspSide = semantics::tracesTockCsp(spec, n);
  TraceSet taSide = exec::tracesTA(translate::assemble(spec), n);
  ComparisonReport r = compareTraces(cspSide, taSide);
  r.id = id.empty() ? spec.main : id;
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

csp::CspSpec adsSpec() {
  return csp::parse(
      "ADS = Controller [|{close}|] Lighting\n"
      "Controller = open -> tock -> close -> Controller\n"
      "Lighting = close -> offLight -> Lighting\n");
}

csp::CspSpec peSpec() { return csp::parse("Pe = (left->STOP)[](right->STOP)\n"); }

csp::CspSpec piSpec() { return csp::parse("Pi = (open->STOP)/\\(fire->close->STOP)\n"); }

}  // namespace tock2ta::harness
