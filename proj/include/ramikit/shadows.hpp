#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramikit/coset_table.hpp"
#include "ramikit/finite_group.hpp"
#include "ramikit/ramification.hpp"

namespace ramikit {

enum class ShadowStatus { Ok, NotNormal, NotContainedInU, Failed };
const char *to_string(ShadowStatus s);

struct ShadowReport {
  ShadowStatus status = ShadowStatus::Ok;
  std::size_t quotient_order = 0; // |G/N|
  std::size_t image_of_U_order = 0;

  /// q(U ∩ g<m>g^-1) == q(U) ∩ q(g)<q(m)>q(g)^-1 for one g.
  struct Intersection {
    Word g;
    std::size_t ramification_index = 0;
    std::size_t lhs_order = 0;
    std::size_t rhs_order = 0;
    bool holds = false;
  };
  std::vector<Intersection> intersections;

  /// q(M_U) == normal closure in q(U) of all q(U) ∩ x<q(m)>x^-1, x in G/N.
  std::size_t ramification_order = 0;
  std::size_t family_closure_order = 0;
  bool ramification_holds = false;

  std::string detail;
  bool passed() const;
};

/// Finite shadows in F = G/N of the closure identities for inertia and ramification.
/// tableN must be the coset table of a normal subgroup N <= U; violations are reported as status.
ShadowReport closure_shadow_check(const KnotGroupData &knot, const CosetTable &tableU,
                                  const CosetTable &tableN, std::span<const Word> gs);
ShadowReport closure_shadow_check(const KnotGroupData &knot, const CosetTable &tableU,
                                  const CosetTable &tableN, const Word &g);

/// Whether the subgroup with this coset table is normal (its action is regular).
bool is_normal_table(const CosetTable &table);

/// Coset table of N = ker(q) ∩ core(U): the regular representation of the image of G acting on
/// q's points and on the cosets of U together. nullopt if that image has more than max_order
/// elements.
std::optional<CosetTable> intersection_kernel_table(const Presentation &pres, const FiniteQuotient &q,
                                                    const CosetTable &tableU, std::size_t max_order);

enum class TransportStatus { Ok, NotIsomorphism, MeridianClassNotPreserved, Failed };
const char *to_string(TransportStatus s);

struct TransportReport {
  TransportStatus status = TransportStatus::Ok;
  std::size_t group_order = 0;
  std::size_t subgroups_checked = 0;
  /// |V / ram(V)| for each subgroup V, in the order checked; equal on both sides when Ok.
  std::vector<std::size_t> unramified_orders;
  std::string detail;
  bool passed() const { return status == TransportStatus::Ok; }
};

/// Transport of inertia families and ramification closures along an isomorphism
/// iso: q(G) -> q2(G2) given by iso_images[i] = iso(q(x_i)), under the hypothesis
/// iso(<q(m)>) == y <q2(m2)> y^-1.
TransportReport inertia_transport_check(const FiniteQuotient &q, const Word &m,
                                        const FiniteQuotient &q2, const Word &m2,
                                        const std::vector<Perm> &iso_images, const Perm &y);

/// Some y with iso(<q(m)>) == y <q2(m2)> y^-1, if iso is an isomorphism and one exists.
std::optional<Perm> find_meridian_conjugator(const FiniteQuotient &q, const Word &m,
                                             const FiniteQuotient &q2, const Word &m2,
                                             const std::vector<Perm> &iso_images);

} // namespace ramikit
