#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramikit/linalg.hpp"
#include "ramikit/ramification.hpp"

namespace ramikit {

/// Subspace of Hom(group, F_p), vectors indexed by the presentation's generators.
struct FpSubspace {
  std::uint32_t p = 2;
  std::size_t ambient_dim = 0;
  std::vector<FpVector> basis;

  std::size_t dim() const { return basis.size(); }
};

/// dim H^1(group; F_p) = dim Hom(group, F_p).
std::size_t h1_dim(const Presentation &pres, std::uint32_t p);
FpSubspace h1_basis(const Presentation &pres, std::uint32_t p);

/// Classes of H^1(U; F_p) vanishing on every inertia generator.
FpSubspace unramified_subspace(const SubgroupPresentation &upres,
                               const std::vector<InertiaDatum> &inertia, std::uint32_t p);

struct CheckReport {
  std::uint32_t p = 2;
  std::size_t dim_h1_U = 0;
  std::size_t dim_unramified = 0;
  std::size_t dim_h1_quotient = 0;
  bool inflation_bijective = false;
  std::string note;
};

/// Inflation H^1(U/M_U; F_p) -> H^1(U; F_p) lands in the unramified subspace and is bijective onto
/// it. Both sides share generator labels, so inflation is the identity on coordinate vectors.
CheckReport inflation_check(const SubgroupPresentation &upres, const Presentation &quotient_pres,
                            const std::vector<InertiaDatum> &inertia, std::uint32_t p);

/// Text attached to every report: the profinite statement reduces to this discrete check.
extern const char *const kProfiniteNote;

} // namespace ramikit
