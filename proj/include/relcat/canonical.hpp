#pragma once

#include <array>
#include <cstdint>

#include "relcat/ternary.hpp"

namespace relcat {

inline constexpr std::size_t kMaxCanonicalCarrier = 6;

/// The size^3 triple bits of a structure as one bit string, position
/// result * size^2 + left * size + right. Position 0 is the most significant
/// bit of word 0, so array comparison is lexicographic string order.
using Encoding = std::array<std::uint64_t, 4>;

/// Throws SizeLimitExceeded above kMaxCanonicalCarrier.
Encoding encode(const TernaryStructure& s);

struct CanonicalForm {
  TernaryStructure structure;
  /// relabel(input, certificate) == structure.
  ElementMap certificate;
  Encoding encoding{};
};

/// The least encoding over all carrier permutations. Throws
/// SizeLimitExceeded above kMaxCanonicalCarrier.
CanonicalForm canonicalize(const TernaryStructure& s);

/// True when no permutation gives a smaller encoding.
bool is_canonical(const TernaryStructure& s);

/// Number of permutations fixing s.
std::size_t automorphism_count(const TernaryStructure& s);

bool isomorphic(const TernaryStructure& a, const TernaryStructure& b);

}  // namespace relcat
