#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relcat/ternary.hpp"

namespace relcat {

/// An operand pair with zero results (for totality) or several.
struct FunctionalityFailure {
  Element left = 0;
  Element right = 0;
  Mask results = 0;
};

/// `result` lies in exactly one of (x y) z and x (y z).
struct AssociativityFailure {
  Element result = 0;
  Element x = 0;
  Element y = 0;
  Element z = 0;
  /// True when `result` is reachable through (x y) z only.
  bool left_bracketing = false;
};

/// R^v_{xy} and D^y_z hold but D^v_z does not.
struct CoherenceFailure {
  Element v = 0;
  Element x = 0;
  Element y = 0;
  Element z = 0;
};

struct MorphismFailure {
  enum class Kind { not_preserved, not_reflected };
  Kind kind = Kind::not_preserved;
  /// not_preserved: a source triple whose image is missing from the target.
  /// not_reflected: a target triple (f x, v, w) with no decomposition of x.
  Triple triple;
  /// The source element x for not_reflected failures.
  Element source = 0;
};

Witness to_witness(const FunctionalityFailure& f, bool totality);
Witness to_witness(const AssociativityFailure& f);
Witness to_witness(const CoherenceFailure& f);
Witness to_witness(const MorphismFailure& f);

Verdict<FunctionalityFailure> is_weakly_functional(const TernaryStructure& s);
/// Exactly one result per pair, i.e. a total operation.
Verdict<FunctionalityFailure> is_functional(const TernaryStructure& s);
Verdict<AssociativityFailure> is_rel_associative(const TernaryStructure& s);
Verdict<CoherenceFailure> is_coherent(const TernaryStructure& s);

struct UnitSets {
  Mask left = 0;
  Mask right = 0;

  Mask all() const { return left | right; }
  bool operator==(const UnitSets&) const = default;
};

UnitSets units(const TernaryStructure& s);

/// Relational monoid: relationally associative, and every x has a unit e in E
/// with R^x_{ex} and a unit e' in E with R^x_{xe'}. The second clause is the
/// strict reading of "e, e' in E with D^e_x and D^x_e'".
Verdict<Witness> check_relational_monoid(const TernaryStructure& s);

/// The unit clause exactly as worded in the definition: some unit is left
/// composable and some unit is right composable with every x.
bool satisfies_literal_unit_cover(const TernaryStructure& s);

enum class StructureClass {
  any,
  relational_semigroup,
  relational_monoid,
  coherent_relational_monoid,
  partial_semigroup,
  partial_monoid,
  object_free_category,
  semigroup,
  monoid,
};

std::string_view to_string(StructureClass c);
std::optional<StructureClass> parse_structure_class(std::string_view name);
const std::vector<StructureClass>& all_structure_classes();
/// True when membership already forces weak functionality.
bool implies_weakly_functional(StructureClass c);

struct Classification {
  bool weakly_functional = false;
  bool functional = false;
  /// D = X x X.
  bool total = false;
  bool rel_associative = false;
  bool coherent = false;
  bool unit_cover = false;

  bool relational_semigroup = false;
  bool relational_monoid = false;
  bool coherent_relational_monoid = false;
  bool partial_semigroup = false;
  bool partial_monoid = false;
  bool object_free_category = false;
  bool semigroup = false;
  bool monoid = false;

  UnitSets unit_sets;
  /// One witness per failed axiom.
  std::vector<Witness> failures;

  bool is(StructureClass c) const;
  const Witness* failure(std::string_view axiom) const;
};

Classification classify(const TernaryStructure& s);

/// Same answer as classify(s).is(c) without building witnesses.
bool belongs_to(const TernaryStructure& s, StructureClass c);

/// Homogeneous morphism (f, f, f) candidate.
struct MorphismWitness {
  ElementMap map;
  bool bounded = false;
};

/// R^x_{yz} implies R'^{f x}_{f y, f z}.
Verdict<MorphismFailure> check_morphism(const TernaryStructure& src, const TernaryStructure& dst,
                                        const ElementMap& f);
/// Morphism that also reflects decompositions of images.
Verdict<MorphismFailure> check_bounded_morphism(const TernaryStructure& src,
                                                const TernaryStructure& dst, const ElementMap& f);
Verdict<MorphismFailure> check(const TernaryStructure& src, const TernaryStructure& dst,
                               const MorphismWitness& w);

/// x -> second(first(x)).
ElementMap compose(const ElementMap& first, const ElementMap& second);

}  // namespace relcat
