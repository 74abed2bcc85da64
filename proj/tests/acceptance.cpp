// One PASS/FAIL line per acceptance criterion. Criteria 1 to 10 run the
// library checks at full bounds within their time budgets; criterion 11
// drives the command-line tool and its two mutation builds.
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "relcat/suite.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& command) {
  Run r;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  while (const std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_line(const std::string& out, const std::string& verdict, const std::string& id) {
  const std::string prefix = verdict + "  " + id + " ";
  std::size_t start = 0;
  while (start < out.size()) {
    if (out.compare(start, prefix.size(), prefix) == 0) return true;
    const std::size_t end = out.find('\n', start);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return false;
}

void print(int number, bool passed, const std::string& id, const std::string& detail) {
  std::cout << "criterion " << (number < 10 ? " " : "") << number << ": " << (passed ? "PASS" : "FAIL")
            << "  " << id << "  " << detail << std::endl;
}

}  // namespace

int main() {
  using namespace relcat;
  bool all = true;

  const SuiteReport report = run_paper_suite(SuiteOptions{});
  for (const Criterion& c : paper_criteria()) {
    const SuiteLine* line = report.find(c.id);
    const bool passed = line != nullptr && line->passed;
    all = all && passed;
    std::string detail = "budget " + std::to_string(static_cast<int>(c.budget)) + " s";
    if (line != nullptr) {
      detail += ", took " + std::to_string(line->seconds) + " s; " + line->detail;
    }
    print(c.number, passed, c.id, detail);
  }

  const std::string cli = RELCAT_CLI_PATH;
  const Run full = run(cli + " paper-suite");
  const Run coherence = run(std::string(RELCAT_MUTANT_COHERENCE_PATH) + " paper-suite --quick");
  const Run adjunction = run(std::string(RELCAT_MUTANT_ADJUNCTION_PATH) + " paper-suite --quick");
  const bool coherence_flips = coherence.code != 0 && has_line(coherence.out, "FAIL", "incoherent-monoid");
  const bool adjunction_flips = adjunction.code != 0 && has_line(adjunction.out, "FAIL", "weak-units");
  const bool eleven = full.code == 0 && coherence_flips && adjunction_flips;
  all = all && eleven;
  print(11, eleven, "paper-suite",
        "paper-suite exit " + std::to_string(full.code) + " (needs 0); inverted coherence flips incoherent-monoid: " +
            (coherence_flips ? "yes" : "no") + "; crippled adjunction flips weak-units: " +
            (adjunction_flips ? "yes" : "no"));
  if (full.code != 0) {
    std::cout << "  failing paper-suite lines:" << std::endl;
    std::size_t start = 0;
    while (start < full.out.size()) {
      const std::size_t end = full.out.find('\n', start);
      const std::string l = full.out.substr(start, end - start);
      if (l.rfind("FAIL", 0) == 0) std::cout << "    " << l.substr(0, 120) << std::endl;
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }

  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return all ? 0 : 1;
}
