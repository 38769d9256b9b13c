#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tock2ta/csp/parser.hpp"
#include "tock2ta/exec/executor.hpp"
#include "tock2ta/harness/harness.hpp"
#include "tock2ta/semantics/lts.hpp"
#include "tock2ta/translate/translator.hpp"
#include "tock2ta/xml/uppaal.hpp"

using namespace tock2ta;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

json toJson(const harness::ComparisonReport& r) {
  json w = json::array();
  for (const auto& t : r.onlyCsp) w.push_back({{"side", "csp"}, {"trace", t}});
  for (const auto& t : r.onlyTa) w.push_back({{"side", "ta"}, {"trace", t}});
  return {{"id", r.id}, {"depth", r.depth}, {"verdict", harness::verdictName(r.verdict)}, {"witnesses", w},
          {"millis", r.millis}};
}

void printReport(const harness::ComparisonReport& r) {
  std::cout << r.id << " depth=" << r.depth << " " << harness::verdictName(r.verdict) << " (" << r.millis
            << " ms)\n";
  for (const auto& t : r.onlyCsp) std::cout << "  only csp: " << formatTrace(t) << "\n";
  for (const auto& t : r.onlyTa) std::cout << "  only ta:  " << formatTrace(t) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tock-CSP to timed automata translator and trace checker"};
  app.require_subcommand(1);

  std::string input, output, outDir;
  std::size_t depth = 5, maxN = 20;
  bool keep = false, asJson = false;

  auto* translateCmd = app.add_subcommand("translate", "translate a .tcsp file into UPPAAL XML");
  translateCmd->add_option("input", input, "tock-CSP source")->required();
  translateCmd->add_option("-o,--output", output, "XML destination")->required();

  auto* tracesCmd = app.add_subcommand("traces", "enumerate bounded traces");
  tracesCmd->require_subcommand(1);
  auto* tracesCsp = tracesCmd->add_subcommand("csp", "traces of a tock-CSP spec");
  tracesCsp->add_option("input", input)->required();
  tracesCsp->add_option("--depth", depth);
  auto* tracesTa = tracesCmd->add_subcommand("ta", "traces of a UPPAAL network");
  tracesTa->add_option("input", input)->required();
  tracesTa->add_option("--depth", depth);
  tracesTa->add_flag("--keep-coordinating", keep, "do not erase coordinating actions");

  auto* checkCmd = app.add_subcommand("check", "compare CSP and TA traces of one spec");
  checkCmd->add_option("input", input)->required();
  checkCmd->add_option("--depth", depth);
  checkCmd->add_flag("--json", asJson);

  auto* corpusCmd = app.add_subcommand("corpus", "generated corpus");
  corpusCmd->require_subcommand(1);
  auto* corpusRun = corpusCmd->add_subcommand("run", "check every corpus spec");
  corpusRun->add_option("--depth", depth);
  corpusRun->add_option("--out", outDir, "write per-spec JSON reports here");

  auto* proveCmd = app.add_subcommand("prove-stop", "mechanised STOP base case");
  proveCmd->add_option("--max-n", maxN);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*translateCmd) {
      xml::saveFile(translate::assemble(csp::parseFile(input)), output);
      return kPass;
    }
    if (*tracesCsp) {
      std::cout << serialize(semantics::tracesTockCsp(csp::parseFile(input), depth));
      return kPass;
    }
    if (*tracesTa) {
      auto net = xml::loadFile(input);
      std::cout << serialize(keep ? exec::tracesTAPrime(net, depth) : exec::tracesTA(net, depth));
      return kPass;
    }
    if (*checkCmd) {
      auto report = harness::checkSpec(csp::parseFile(input), depth, std::filesystem::path(input).stem().string());
      if (asJson) {
        std::cout << toJson(report).dump(2) << "\n";
      } else {
        printReport(report);
      }
      return report.verdict == harness::Verdict::Mismatch ? kMismatch : kPass;
    }
    if (*corpusRun) {
      if (!outDir.empty()) std::filesystem::create_directories(outDir);
      auto corpus = harness::generateCorpus();
      std::size_t failed = 0;
      auto t0 = std::chrono::steady_clock::now();
      for (const auto& entry : corpus) {
        harness::ComparisonReport r;
        try {
          r = harness::checkSpec(entry.spec, depth, entry.id);
        } catch (const std::exception& e) {
          r.id = entry.id;
          r.depth = depth;
          std::cout << entry.id << " error: " << e.what() << "\n";
        }
        if (r.verdict == harness::Verdict::Mismatch) {
          ++failed;
          printReport(r);
          std::cout << "  spec: " << csp::print(entry.spec) << "\n";
        }
        if (!outDir.empty()) {
          std::ofstream(std::filesystem::path(outDir) / (entry.id + ".json")) << toJson(r).dump(2) << "\n";
        }
      }
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << corpus.size() - failed << "/" << corpus.size() << " passed at depth " << depth << " in " << secs
                << " s\n";
      return failed ? kMismatch : kPass;
    }
    if (*proveCmd) {
      auto report = harness::proveStopBase(maxN);
      for (const auto& s : report.steps) {
        std::cout << "n=" << s.n << " " << s.name << " " << (s.ok ? "ok" : "FAILED") << " " << s.detail << "\n";
      }
      std::cout << (report.ok ? "STOP base case holds" : "STOP base case FAILED") << "\n";
      return report.ok ? kPass : kMismatch;
    }
  } catch (const translate::NotImplemented& e) {
    std::cerr << "not supported: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
