#include "ramikit/cohomology.hpp"

namespace ramikit {

const char *const kProfiniteNote =
    "for finitely generated U every homomorphism to F_p is continuous for the profinite topology, "
    "so continuous H^1 of the completion equals H^1(U; F_p) and closed inertia subgroups impose the "
    "same conditions as discrete ones; this discrete check therefore also covers the profinite "
    "statement (external identification, no separate computation)";

std::size_t h1_dim(const Presentation &pres, std::uint32_t p) {
  return pres.generator_count() - rank_mod_p(exponent_matrix(pres), p);
}

FpSubspace h1_basis(const Presentation &pres, std::uint32_t p) {
  return {p, pres.generator_count(), fp_nullspace(exponent_matrix(pres), p)};
}

namespace {

IntMatrix constraints(const SubgroupPresentation &upres, const std::vector<InertiaDatum> &inertia) {
  IntMatrix m = exponent_matrix(upres.presentation);
  const std::size_t g = upres.presentation.generator_count();
  IntMatrix out(m.rows() + inertia.size(), g);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < g; ++j)
      out(i, j) = m(i, j);
  for (std::size_t k = 0; k < inertia.size(); ++k) {
    const auto v = exponent_vector(inertia[k].generator_in_U, g);
    for (std::size_t j = 0; j < g; ++j)
      out(m.rows() + k, j) = v[j];
  }
  return out;
}

bool kills_all(const FpVector &v, const IntMatrix &m, std::uint32_t p) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      s += m(i, j) * v[j];
    if (reduce_mod(s, p) != 0)
      return false;
  }
  return true;
}

} // namespace

FpSubspace unramified_subspace(const SubgroupPresentation &upres,
                               const std::vector<InertiaDatum> &inertia, std::uint32_t p) {
  return {p, upres.presentation.generator_count(), fp_nullspace(constraints(upres, inertia), p)};
}

CheckReport inflation_check(const SubgroupPresentation &upres, const Presentation &quotient_pres,
                            const std::vector<InertiaDatum> &inertia, std::uint32_t p) {
  CheckReport r;
  r.p = p;
  r.note = kProfiniteNote;
  r.dim_h1_U = h1_dim(upres.presentation, p);
  const FpSubspace unram = unramified_subspace(upres, inertia, p);
  const FpSubspace quotient = h1_basis(quotient_pres, p);
  r.dim_unramified = unram.dim();
  r.dim_h1_quotient = quotient.dim();

  if (quotient_pres.generator_count() != upres.presentation.generator_count())
    return r;
  const IntMatrix cons = constraints(upres, inertia);
  bool lands = true;
  for (const auto &v : quotient.basis)
    lands = lands && kills_all(v, cons, p);
  const bool injective = rank_mod_p(quotient.basis, p) == quotient.dim();
  auto joined = unram.basis;
  joined.insert(joined.end(), quotient.basis.begin(), quotient.basis.end());
  const bool surjective = joined.empty() || rank_mod_p(joined, p) == quotient.dim();
  r.inflation_bijective = lands && injective && surjective && unram.dim() == quotient.dim();
  return r;
}

} // namespace ramikit
