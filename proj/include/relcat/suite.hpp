#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relcat/ternary.hpp"

namespace relcat {

struct SuiteLine {
  std::string id;
  std::string claim;
  bool passed = false;
  /// Reported for context; never affects the verdict.
  bool informational = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::vector<SuiteLine> lines;

  bool passed() const;
  const SuiteLine* find(std::string_view id) const;
};

struct SuiteOptions {
  std::size_t relational_bound = 3;
  std::size_t functional_bound = 4;
  std::size_t lift_bound = 3;
  std::size_t adjunction_bound = 3;
  std::size_t round_trip_bound = 3;
  std::size_t morphism_bound = 2;
  std::size_t lemma_bound = 3;

  /// Small bounds for smoke runs; the lemma-by-lemma lines stay the same.
  static SuiteOptions quick();
};

/// Violations of the relational monoid lemmas over a family of structures.
struct LemmaTally {
  std::uint64_t structures = 0;
  std::uint64_t violating = 0;
  std::map<std::string, std::uint64_t> by_law;
  std::optional<TernaryStructure> first;
  std::string first_law;

  void add(const TernaryStructure& s, const std::vector<std::string>& violated);
  std::string summary() const;
};

/// Laws of the source/target and coherence lemmas that fail on s, with
/// "unique-units" when ell or r is not well defined. Object-free
/// categories are also checked against the algebraic category laws.
std::vector<std::string> unit_lemma_violations(const TernaryStructure& s);

/// Relational monoids and object-free categories up to size_bound: every
/// lemma re-checked, plus the separating witnesses. Throws
/// SizeLimitExceeded above 4; size 4 is swept in functional mode only.
SuiteReport verify_lemma_suite(std::size_t size_bound);

struct Criterion {
  int number = 0;
  std::string id;
  std::string claim;
  /// Seconds allowed for the run.
  double budget = 0;
  std::function<std::vector<SuiteLine>(const SuiteOptions&)> run;
};

/// The checks behind paper-suite, in order. Each returns its verdict line
/// first, then informational lines.
const std::vector<Criterion>& paper_criteria();

/// Runs the criteria whose id is in `only` (all when empty), then the
/// lemma suite as "lemma:<law>" lines and every named example as
/// "example:<name>" lines. `only` may also name "lemma" or "example".
SuiteReport run_paper_suite(const SuiteOptions& options, const std::vector<std::string>& only = {});

}  // namespace relcat
