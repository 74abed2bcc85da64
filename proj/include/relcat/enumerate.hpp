#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relcat/axioms.hpp"
#include "relcat/canonical.hpp"

namespace relcat {

inline constexpr std::size_t kMaxRelationalEnumeration = 6;
inline constexpr std::size_t kMaxFunctionalEnumeration = 5;

enum class EnumerationMode { count, witnesses, canonical_list };

enum class Strategy {
  /// Functional whenever the class or a requirement forces weak functionality.
  automatic,
  /// Partial operation tables only.
  functional,
  /// Arbitrary result sets per operand pair.
  relational,
};

struct EnumerationSpec {
  std::size_t size = 0;
  StructureClass target_class = StructureClass::any;
  EnumerationMode mode = EnumerationMode::canonical_list;
  /// Extra predicates, each optionally prefixed by "not-"; see
  /// requirement_names().
  std::vector<std::string> require;
  Strategy strategy = Strategy::automatic;
  /// Stop after this many representatives in witnesses mode.
  std::size_t witness_limit = 1;
};

/// Predicates accepted in EnumerationSpec::require, without the "not-" form.
const std::vector<std::string>& requirement_names();

/// Evaluates one requirement. Throws InvalidArgument for unknown names.
bool satisfies_requirement(const TernaryStructure& s, std::string_view requirement);

struct EnumerationResult {
  std::size_t count = 0;
  /// Empty in count mode, otherwise sorted by encoding.
  std::vector<CanonicalForm> forms;
};

/// One representative per isomorphism class. Throws SizeLimitExceeded past
/// the guard for the chosen strategy and InvalidArgument for unknown
/// requirements.
EnumerationResult enumerate(const EnumerationSpec& spec);

/// Streams representatives in encoding order; return false to stop early.
void enumerate(const EnumerationSpec& spec, const std::function<bool(const CanonicalForm&)>& visit);

std::size_t count_classes(std::size_t size, StructureClass c);

/// Visits every relationally associative structure on the carrier, all
/// labellings included, in search order. Functional restricts to partial
/// operations.
void for_each_associative(std::size_t size, bool functional,
                          const std::function<void(const TernaryStructure&)>& visit);

}  // namespace relcat
