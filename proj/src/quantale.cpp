#include "relcat/quantale.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "relcat/axioms.hpp"
#include "relcat/zero.hpp"
#include "relcat/partial_algebra.hpp"

namespace relcat {

namespace {

// Row of a singleton {y} is built from its value on B minus its lowest
// element, and the row of A from A minus its lowest element.
void fill_product_table(std::size_t n, const Mask* cells, std::uint16_t* table) {
  const std::size_t subsets = std::size_t{1} << n;
  std::array<std::uint16_t, kMaxLiftCarrier << kMaxLiftCarrier> single;
  for (Element y = 0; y < n; ++y) {
    single[y * subsets] = 0;
    for (std::size_t b = 1; b < subsets; ++b) {
      const auto z = static_cast<Element>(std::countr_zero(b));
      single[y * subsets + b] =
          static_cast<std::uint16_t>(single[y * subsets + (b & (b - 1))] | cells[y * n + z]);
    }
  }
  for (std::size_t b = 0; b < subsets; ++b) table[b] = 0;
  for (std::size_t a = 1; a < subsets; ++a) {
    const auto y = static_cast<Element>(std::countr_zero(a));
    const std::size_t rest = a & (a - 1);
    for (std::size_t b = 0; b < subsets; ++b) {
      table[(a << n) | b] =
          static_cast<std::uint16_t>(table[(rest << n) | b] | single[y * subsets + b]);
    }
  }
}

}  // namespace

PowersetAlgebra lift(const TernaryStructure& s) {
  const auto n = s.size();
  if (n > kMaxLiftCarrier) {
    throw Error(ErrorKind::carrier_too_large,
                "powerset lift limited to " + std::to_string(kMaxLiftCarrier) + " elements");
  }
  const std::size_t subsets = std::size_t{1} << n;
  PowersetAlgebra p;
  p.base_ = s;
  p.unit_set_ = units(s).all();
  p.table_.assign(subsets * subsets, 0);

  fill_product_table(n, s.cells().data(), p.table_.data());
  return p;
}

Verdict<SubsetTriple> is_associative(const PowersetAlgebra& p) {
  const Mask count = p.subset_count();
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = 0; b < count; ++b) {
      const Mask ab = p.product(a, b);
      for (Mask c = 0; c < count; ++c) {
        if (p.product(ab, c) != p.product(a, p.product(b, c))) {
          return Verdict<SubsetTriple>::fail({a, b, c});
        }
      }
    }
  }
  return {};
}

Verdict<SubsetTriple> preserves_unions(const PowersetAlgebra& p) {
  const Mask count = p.subset_count();
  for (Mask a = 0; a < count; ++a) {
    if (p.product(0, a) != 0 || p.product(a, 0) != 0) return Verdict<SubsetTriple>::fail({0, a, 0});
    for (Mask b = 0; b < count; ++b) {
      for (Mask c = 0; c < count; ++c) {
        if (p.product(a | b, c) != (p.product(a, c) | p.product(b, c)) ||
            p.product(c, a | b) != (p.product(c, a) | p.product(c, b))) {
          return Verdict<SubsetTriple>::fail({a, b, c});
        }
      }
    }
  }
  return {};
}

Verdict<SubsetTriple> is_monotone(const PowersetAlgebra& p) {
  const Mask count = p.subset_count();
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = 0; b < count; ++b) {
      const Mask ab = p.product(a, b);
      // Single-element growth of either argument suffices by transitivity.
      for (Element x = 0; x < p.base_size(); ++x) {
        if ((ab & ~p.product(a | bit(x), b)) != 0 || (ab & ~p.product(a, b | bit(x))) != 0) {
          return Verdict<SubsetTriple>::fail({a, b, bit(x)});
        }
      }
    }
  }
  return {};
}

Verdict<Mask> unit_set_is_identity(const PowersetAlgebra& p) {
  const Mask e = p.unit_set();
  for (Mask a = 0; a < p.subset_count(); ++a) {
    if (p.product(e, a) != a || p.product(a, e) != a) return Verdict<Mask>::fail(a);
  }
  return {};
}

Verdict<Triple> check_eta_iso(const TernaryStructure& s) {
  const PowersetAlgebra p = lift(s);
  const auto n = s.size();
  std::vector<Triple> atoms;
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      const Mask yz = p.product(bit(y), bit(z));
      for (Element x = 0; x < n; ++x) {
        const bool in_lift = ((yz >> x) & 1U) != 0;
        if (s.contains(x, y, z) != in_lift) return Verdict<Triple>::fail({x, y, z});
        if (in_lift) atoms.push_back({x, y, z});
      }
    }
  }
  if (TernaryStructure(n, atoms) != s) return Verdict<Triple>::fail({0, 0, 0});
  return {};
}

ZeroSubsemigroupReport check_zero_subsemigroup(const PartialAlgebra& alg) {
  const TernaryStructure base = from_partial_algebra(alg);
  if (!classify(base).partial_monoid) {
    throw Error(ErrorKind::not_partial_monoid, "zero subsemigroup needs a partial monoid");
  }
  const PowersetAlgebra p = lift(base);
  const auto n = static_cast<Element>(alg.size);
  ZeroSubsemigroupReport report;

  std::optional<Witness> singleton;
  for (Element x = 0; x < n && !singleton; ++x) {
    for (Element y = 0; y < n && !singleton; ++y) {
      const Mask expected = alg.defined(x, y) ? bit(alg.compose(x, y)) : Mask{0};
      if (p.product(bit(x), bit(y)) != expected) {
        singleton = Witness{"singleton-products", {x, y}, "{x.y} != {x}.{y}"};
      }
    }
  }
  report.laws.add("singleton-products", singleton);

  // eta0 sends x to {x} and the adjoined zero (index n) to the empty set.
  auto eta0 = [&](Element x) { return x == n ? Mask{0} : bit(x); };
  auto in_image = [&](Mask a) { return std::popcount(a) <= 1; };
  std::optional<Witness> closure;
  for (Element x = 0; x <= n && !closure; ++x) {
    for (Element y = 0; y <= n && !closure; ++y) {
      if (!in_image(p.product(eta0(x), eta0(y)))) {
        closure = Witness{"subsemigroup-closure", {x, y}, "product leaves singletons and empty set"};
      }
    }
  }
  report.laws.add("subsemigroup-closure", closure);

  const ZeroedStructure zeroed = adjoin_zero(base);
  const auto& r0 = zeroed.structure();
  std::optional<Witness> iso;
  Mask images = 0;
  for (Element x = 0; x <= n; ++x) {
    // eta0 is injective iff no two elements share an image; the empty set is
    // recorded at bit n.
    const Mask key = x == n ? bit(n) : eta0(x);
    if ((images & key) != 0) iso = Witness{"eta0-isomorphism", {x}, "eta0 not injective"};
    images |= key;
  }
  for (Element x = 0; x <= n && !iso; ++x) {
    for (Element y = 0; y <= n && !iso; ++y) {
      Mask image = 0;
      for_each_bit(r0.results(x, y), [&](Element v) { image |= eta0(v); });
      if (std::popcount(r0.results(x, y)) != 1 || image != p.product(eta0(x), eta0(y))) {
        iso = Witness{"eta0-isomorphism", {x, y}, "eta0(x .0 y) != eta0 x . eta0 y"};
      }
    }
  }
  report.laws.add("eta0-isomorphism", iso);

  // The image as a semigroup in its own right, indexed like X0.
  auto index_of = [&](Mask a) { return a == 0 ? n : static_cast<Element>(std::countr_zero(a)); };
  std::vector<Triple> image_triples;
  for (Element x = 0; x <= n; ++x) {
    for (Element y = 0; y <= n; ++y) {
      const Mask prod = p.product(eta0(x), eta0(y));
      if (in_image(prod)) image_triples.push_back({index_of(prod), x, y});
    }
  }
  std::optional<Witness> weak;
  try {
    const ZeroedStructure image(TernaryStructure(n + 1, image_triples), n);
    const Mask weak_units_image = weak_units(image).all();
    for (Element e : alg.units) {
      if (((weak_units_image >> e) & 1U) == 0 && !weak) {
        weak = Witness{"units-are-weak-units", {e}, "unit is not a weak unit of the image"};
      }
    }
    const Mask image_units = units(image.structure()).all();
    for_each_bit(image_units, [&](Element u) {
      bool two_sided = true;
      for (Element x = 0; x <= n; ++x) {
        two_sided = two_sided && image.structure().contains(x, u, x) &&
                    image.structure().contains(x, x, u);
      }
      report.image_has_identity = report.image_has_identity || two_sided;
    });
  } catch (const Error& e) {
    weak = Witness{"units-are-weak-units", {}, e.what()};
  }
  report.laws.add("units-are-weak-units", weak);
  return report;
}

LiftSweep sweep_lifts(std::size_t size) {
  if (size > kMaxSweepCarrier) {
    throw Error(ErrorKind::size_limit_exceeded,
                "lift sweep is limited to " + std::to_string(kMaxSweepCarrier) + " elements");
  }
  const std::size_t n = size;
  const std::size_t subsets = std::size_t{1} << n;
  const std::size_t cell_count = n * n;
  const Mask cell_mask = full_mask(n);
  const std::uint64_t total = std::uint64_t{1} << (n * n * n);
  LiftSweep sweep;
  sweep.size = n;
  std::vector<Mask> cells(cell_count);
  std::array<std::uint16_t, 1 << (2 * kMaxSweepCarrier)> table;
  // Singletons first, where a failure shows up soonest; the empty set last.
  std::vector<Mask> order(subsets);
  std::iota(order.begin(), order.end(), Mask{0});
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return (std::popcount(a) + 63) % 64 < (std::popcount(b) + 63) % 64;
  });
  auto note = [&](const TernaryStructure& s) {
    if (!sweep.first_failure) sweep.first_failure = s;
  };

  for (std::uint64_t code = 0; code < total; ++code) {
    bool weakly_functional = true;
    for (std::size_t i = 0; i < cell_count; ++i) {
      cells[i] = (code >> (i * n)) & cell_mask;
      weakly_functional = weakly_functional && std::popcount(cells[i]) <= 1;
    }
    const TernaryStructure s = TernaryStructure::from_cells(n, cells);
    fill_product_table(n, cells.data(), table.data());
    ++sweep.structures;

    bool eta = true;
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        eta = eta && table[(bit(y) << n) | bit(z)] == s.results(y, z);
      }
    }
    if (!eta) {
      ++sweep.eta_failures;
      note(s);
    }

    bool lift_associative = true;
    for (std::size_t i = 0; i < subsets && lift_associative; ++i) {
      const Mask a = order[i];
      for (std::size_t j = 0; j < subsets && lift_associative; ++j) {
        const Mask b = order[j];
        const Mask ab = table[(a << n) | b];
        for (std::size_t k = 0; k < subsets; ++k) {
          const Mask c = order[k];
          if (table[(ab << n) | c] != table[(a << n) | table[(b << n) | c]]) {
            lift_associative = false;
            break;
          }
        }
      }
    }
    const bool associative = static_cast<bool>(is_rel_associative(s));
    sweep.associative += associative;
    sweep.lift_associative += lift_associative;
    if (associative != lift_associative) {
      ++sweep.associativity_mismatches;
      note(s);
    }

    if (weakly_functional && associative && belongs_to(s, StructureClass::partial_monoid)) {
      ++sweep.partial_monoids;
      if (!check_zero_subsemigroup(to_partial_algebra(s)).laws.all_hold()) {
        ++sweep.zero_subsemigroup_failures;
        note(s);
      }
    }
  }
  return sweep;
}

}  // namespace relcat
