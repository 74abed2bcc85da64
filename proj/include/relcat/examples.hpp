#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relcat/partial_algebra.hpp"
#include "relcat/ternary.hpp"
#include "relcat/zero.hpp"

namespace relcat {

/// Words over {a, b, ...} of length at most max_len, shortest first and
/// lexicographic within a length. Index 0 is the empty word.
std::vector<std::string> shuffle_words(std::size_t alphabet_size, std::size_t max_len);

/// All interleavings of y and z, sorted and without repeats.
std::vector<std::string> interleavings(const std::string& y, const std::string& z);

/// Shuffle on the words of shuffle_words: R^x_{yz} iff x interleaves y and z.
/// Throws InvalidArgument for an alphabet below 2 or max_len 0, and
/// CarrierTooLarge beyond 64 words.
TernaryStructure shuffle_bounded(std::size_t alphabet_size, std::size_t max_len);

/// e = 0, e' = 1 with R^e_{ee} and R^e'_{e'e'}.
TernaryStructure two_unit_monoid();

/// e = 0, a = 1 with R^e_{ee}, R^a_{ea}, R^a_{ae}.
TernaryStructure incoherent_monoid();

/// 1 = 0, a = 1 with 1 . 1 = 1 and 1 . a = a = a . 1.
PartialAlgebra a1_partial_monoid();

/// Partial functions on {0, ..., n-1}, composed by union when their domains
/// are disjoint. Element sum_i code_i (n+1)^i where code 0 leaves i
/// undefined and code c sends i to c - 1; the empty function is 0. n <= 3.
PartialAlgebra disjoint_partial_functions(std::size_t n);
std::vector<std::string> partial_function_labels(std::size_t n);

/// x = 0, zero = 1, x . x = x.
CategoricalSemigroup no_collapse_semigroup();

/// e = 0, e' = 1 and an arrow f = 2 from e to e'.
TernaryStructure single_arrow_category();

/// n units, each composable only with itself.
TernaryStructure discrete_units(std::size_t n);

using ExamplePayload = std::variant<TernaryStructure, PartialAlgebra, CategoricalSemigroup>;

struct NamedExample {
  std::string name;
  ExamplePayload payload;
  std::vector<std::string> labels;
  std::string description;
  /// Requirement names (see requirement_names()) with the expected answer.
  std::vector<std::pair<std::string, bool>> expected;
};

TernaryStructure ternary_form(const ExamplePayload& payload);

const std::vector<NamedExample>& named_examples();
/// Throws InvalidArgument for an unknown name.
const NamedExample& find_example(std::string_view name);

/// Expected entries that disagree with a fresh check, as "name=value".
std::vector<std::string> expectation_mismatches(const NamedExample& example);

}  // namespace relcat
