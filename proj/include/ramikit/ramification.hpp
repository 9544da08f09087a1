#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ramikit/coset_table.hpp"
#include "ramikit/finite_group.hpp"
#include "ramikit/linalg.hpp"
#include "ramikit/schreier.hpp"

namespace ramikit {

/// One U-conjugacy class of meridional inertia subgroups U ∩ g<m>g^-1 with g = t_c.
/// The subgroup is cyclic, generated by t_c m^e t_c^-1 where e is the length of the meridian
/// orbit through coset c.
struct InertiaDatum {
  std::size_t rep_coset = 0; // least coset of the orbit, 0-based
  std::size_t ramification_index = 0;
  Word generator_in_G;
  Word generator_in_U;
};

/// One datum per meridian orbit on cosets, ordered by representative.
std::vector<InertiaDatum> inertia_data(const CosetTable &table, const SchreierData &sd, const Word &m);

/// U's presentation with every inertia generator appended as a relator: presents U/M_U.
Presentation unramified_quotient(const SubgroupPresentation &upres,
                                 const std::vector<InertiaDatum> &inertia);

/// Orbit of <m, l> on cosets: one boundary torus of the cover.
struct BoundaryComponent {
  std::vector<std::size_t> cosets;
  std::vector<std::size_t> inertia; // indices into the inertia list
};

/// Throws LongitudeMissing when `longitude` is empty.
std::vector<BoundaryComponent> boundary_components(const CosetTable &table, const Word &m,
                                                   const std::optional<Word> &longitude,
                                                   const std::vector<InertiaDatum> &inertia);

struct RamificationReport {
  std::size_t index = 0;
  std::vector<InertiaDatum> inertia;
  Presentation quotient_presentation;
  AbelianInvariants h1_U;
  AbelianInvariants h1_quotient;
  std::optional<std::vector<BoundaryComponent>> boundary;

  std::optional<std::size_t> boundary_tori() const {
    if (!boundary)
      return std::nullopt;
    return boundary->size();
  }
  std::vector<std::size_t> ramification_indices() const; // sorted
};

struct Cover {
  CosetTable table;
  SchreierData schreier;
  SubgroupPresentation subgroup;
  RamificationReport report;
};

Cover analyze_cover(const KnotGroupData &knot, CosetTable table);
Cover ramify(const KnotGroupData &knot, const SubgroupSpec &spec,
             std::size_t max_cosets = kDefaultMaxCosets);

/// Homomorphism from a finitely presented group to Sym(degree), by generator images.
struct FiniteQuotient {
  std::size_t degree = 0;
  std::vector<Perm> images;

  Perm evaluate(const Word &w) const;
  /// Index of the first relator not sent to the identity.
  std::optional<std::size_t> first_unkilled(const Presentation &pres) const;
  bool kills(const Presentation &pres) const { return !first_unkilled(pres); }
};

/// q restricted to U: U-generator j goes to q(embedding[j]).
FiniteQuotient restrict_to_subgroup(const FiniteQuotient &q, const SubgroupPresentation &upres);

/// The image F = q(U) with its generators taken in U-generator order.
FiniteGroup image_group(const FiniteQuotient &q);

/// q(M_U) inside F = image_group(q): normal closure in F of the images of the inertia generators.
/// Throws RelatorNotKilled if q is not a homomorphism on U.
FiniteGroup::Subset quotient_image_of_ramification(const FiniteQuotient &q,
                                                   const SubgroupPresentation &upres,
                                                   const std::vector<InertiaDatum> &inertia,
                                                   const FiniteGroup &F);

struct FactoringResult {
  bool factors = false;
  /// The induced map on U/M_U (same generator images), when it exists.
  std::optional<FiniteQuotient> induced;
  /// Index of an inertia datum whose generator is not killed.
  std::optional<std::size_t> violating;
};

/// Whether phi (a homomorphism on U) factors through U/M_U.
FactoringResult factoring_check(const FiniteQuotient &phi, const SubgroupPresentation &upres,
                                const std::vector<InertiaDatum> &inertia);

} // namespace ramikit
