#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "relcat/partial_algebra.hpp"
#include "relcat/ternary.hpp"

namespace relcat {

inline constexpr std::size_t kMaxLiftCarrier = 12;

/// The powerset of a finite carrier under the complex product
/// A . B = {x | R^x_{yz} for some y in A, z in B}. Subsets are bit masks.
class PowersetAlgebra {
 public:
  const TernaryStructure& base() const { return base_; }
  std::size_t base_size() const { return base_.size(); }
  std::size_t subset_count() const { return std::size_t{1} << base_.size(); }

  Mask product(Mask a, Mask b) const { return table_[(a << base_.size()) | b]; }
  /// The unit set E of the base relation, as a subset.
  Mask unit_set() const { return unit_set_; }

 private:
  friend PowersetAlgebra lift(const TernaryStructure& s);

  TernaryStructure base_;
  std::vector<std::uint16_t> table_;
  Mask unit_set_ = 0;
};

/// Throws CarrierTooLarge above kMaxLiftCarrier elements.
PowersetAlgebra lift(const TernaryStructure& s);

using SubsetTriple = std::array<Mask, 3>;

/// (A . B) . C = A . (B . C) over all subsets.
Verdict<SubsetTriple> is_associative(const PowersetAlgebra& p);
/// (A u B) . C = A . C u B . C and C . (A u B) = C . A u C . B, and the empty
/// set annihilates.
Verdict<SubsetTriple> preserves_unions(const PowersetAlgebra& p);
/// A within A', B within B' gives A . B within A' . B'.
Verdict<SubsetTriple> is_monotone(const PowersetAlgebra& p);
/// E . A = A = A . E for all A; the witness is the offending A.
Verdict<Mask> unit_set_is_identity(const PowersetAlgebra& p);

/// R^x_{yz} iff {x} within {y} . {z}, and the relation read back from the
/// atoms of the lift is S itself.
Verdict<Triple> check_eta_iso(const TernaryStructure& s);

struct ZeroSubsemigroupReport {
  /// singleton-products, subsemigroup-closure, eta0-isomorphism,
  /// units-are-weak-units.
  LawReport laws;
  /// Whether the image of eta0 has a two-sided identity.
  bool image_has_identity = false;
};

/// Singletons plus the empty set inside the lift of a partial monoid, and
/// the map eta0 from the zero adjunction onto them. Throws NotPartialMonoid.
ZeroSubsemigroupReport check_zero_subsemigroup(const PartialAlgebra& p);

inline constexpr std::size_t kMaxSweepCarrier = 3;

struct LiftSweep {
  std::size_t size = 0;
  std::uint64_t structures = 0;
  std::uint64_t eta_failures = 0;
  /// Relationally associative structures.
  std::uint64_t associative = 0;
  /// Structures whose complex product is associative on all subsets.
  std::uint64_t lift_associative = 0;
  std::uint64_t associativity_mismatches = 0;
  std::uint64_t partial_monoids = 0;
  std::uint64_t zero_subsemigroup_failures = 0;
  std::optional<TernaryStructure> first_failure;

  bool holds() const {
    return eta_failures == 0 && associativity_mismatches == 0 && zero_subsemigroup_failures == 0;
  }
};

/// Every relation on a carrier of at most kMaxSweepCarrier elements, all
/// labellings: eta, associativity of the lift against relational
/// associativity, and the zero subsemigroup for partial monoids.
LiftSweep sweep_lifts(std::size_t size);

}  // namespace relcat
