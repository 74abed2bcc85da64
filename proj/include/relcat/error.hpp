#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relcat {

using Element = std::uint32_t;

/// Concrete evidence that an axiom fails: the axiom's name, the elements
/// instantiating its quantifiers (in the order the axiom names them) and a
/// short human readable rendering.
struct Witness {
  std::string axiom;
  std::vector<Element> elements;
  std::string description;

  bool operator==(const Witness&) const = default;
};

/// Outcome of a decision procedure that carries a counterexample on failure.
/// Converts to `true` when the property holds.
template <class Counterexample>
struct Verdict {
  std::optional<Counterexample> counterexample;

  static Verdict pass() { return {}; }
  static Verdict fail(Counterexample c) { return {std::move(c)}; }

  bool holds() const { return !counterexample.has_value(); }
  explicit operator bool() const { return holds(); }
};

/// Per-law outcome of a battery of axiom checks.
struct LawResult {
  std::string law;
  std::optional<Witness> counterexample;

  bool holds() const { return !counterexample.has_value(); }
};

struct LawReport {
  std::vector<LawResult> results;

  bool all_hold() const {
    for (const auto& r : results) {
      if (!r.holds()) return false;
    }
    return true;
  }
  const LawResult* find(const std::string& law) const {
    for (const auto& r : results) {
      if (r.law == law) return &r;
    }
    return nullptr;
  }
  const LawResult* first_failure() const {
    for (const auto& r : results) {
      if (!r.holds()) return &r;
    }
    return nullptr;
  }
  void add(std::string law, std::optional<Witness> counterexample) {
    results.push_back({std::move(law), std::move(counterexample)});
  }
};

enum class ErrorKind {
  invalid_argument,
  carrier_too_large,
  size_limit_exceeded,
  not_weakly_functional,
  not_relational_monoid,
  not_partial_monoid,
  not_object_free_category,
  not_weak_coherent_partial_monoid,
  lr_axiom_violation,
  category_axiom_violation,
  categorical_semigroup_axiom_violation,
  parse_error,
};

const char* to_string(ErrorKind kind);

/// Single exception type of the library. Precondition failures carry the
/// witness of the axiom that blocked the operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::optional<Witness> witness = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::optional<Witness> witness_;
};

}  // namespace relcat
