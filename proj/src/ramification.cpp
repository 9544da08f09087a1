#include "ramikit/ramification.hpp"

#include <algorithm>

#include "ramikit/errors.hpp"

namespace ramikit {

std::vector<InertiaDatum> inertia_data(const CosetTable &table, const SchreierData &sd, const Word &m) {
  const Perm mp = word_permutation(table, m);
  std::vector<InertiaDatum> out;
  std::vector<bool> seen(table.index(), false);
  for (std::size_t c = 0; c < table.index(); ++c) {
    if (seen[c])
      continue;
    std::size_t e = 0;
    for (std::size_t d = c; !seen[d]; d = mp(d)) {
      seen[d] = true;
      ++e;
    }
    InertiaDatum datum;
    datum.rep_coset = c;
    datum.ramification_index = e;
    datum.generator_in_G = conjugate(sd.transversal[c], m.pow(static_cast<long>(e)));
    datum.generator_in_U = rewrite(table, sd, datum.generator_in_G);
    out.push_back(std::move(datum));
  }
  return out;
}

Presentation unramified_quotient(const SubgroupPresentation &upres,
                                 const std::vector<InertiaDatum> &inertia) {
  Presentation q = upres.presentation;
  for (const auto &d : inertia)
    q.relators.push_back(d.generator_in_U);
  q.normalize();
  return q;
}

std::vector<BoundaryComponent> boundary_components(const CosetTable &table, const Word &m,
                                                   const std::optional<Word> &longitude,
                                                   const std::vector<InertiaDatum> &inertia) {
  if (!longitude)
    throw LongitudeMissing();
  const std::vector<Perm> gens{word_permutation(table, m), word_permutation(table, *longitude)};
  std::vector<BoundaryComponent> out;
  for (auto &orbit : orbits(gens, table.index())) {
    BoundaryComponent comp;
    comp.cosets.assign(orbit.begin(), orbit.end());
    for (std::size_t i = 0; i < inertia.size(); ++i)
      if (std::binary_search(orbit.begin(), orbit.end(), inertia[i].rep_coset))
        comp.inertia.push_back(i);
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::size_t> RamificationReport::ramification_indices() const {
  std::vector<std::size_t> e;
  for (const auto &d : inertia)
    e.push_back(d.ramification_index);
  std::sort(e.begin(), e.end());
  return e;
}

Cover analyze_cover(const KnotGroupData &knot, CosetTable table) {
  Cover cover;
  cover.schreier = schreier_transversal(table);
  cover.subgroup = reidemeister_schreier(knot.presentation, table, cover.schreier);
  auto &r = cover.report;
  r.index = table.index();
  r.inertia = inertia_data(table, cover.schreier, knot.meridian);
  r.quotient_presentation = unramified_quotient(cover.subgroup, r.inertia);
  r.h1_U = abelianization(cover.subgroup.presentation);
  r.h1_quotient = abelianization(r.quotient_presentation);
  if (knot.longitude)
    r.boundary = boundary_components(table, knot.meridian, knot.longitude, r.inertia);
  cover.table = std::move(table);
  return cover;
}

Cover ramify(const KnotGroupData &knot, const SubgroupSpec &spec, std::size_t max_cosets) {
  return analyze_cover(knot, build_coset_table(knot, spec, max_cosets));
}

Perm FiniteQuotient::evaluate(const Word &w) const {
  std::vector<std::uint32_t> img(degree);
  for (std::uint32_t i = 0; i < degree; ++i) {
    std::uint32_t x = i;
    for (const auto &l : w) {
      const Perm &p = images.at(l.gen);
      if (l.sign > 0) {
        x = p(x);
      } else {
        const auto &v = p.images();
        x = static_cast<std::uint32_t>(std::find(v.begin(), v.end(), x) - v.begin());
      }
    }
    img[i] = x;
  }
  return Perm(std::move(img));
}

std::optional<std::size_t> FiniteQuotient::first_unkilled(const Presentation &pres) const {
  for (std::size_t i = 0; i < pres.relators.size(); ++i)
    if (!evaluate(pres.relators[i]).is_identity())
      return i;
  return std::nullopt;
}

FiniteQuotient restrict_to_subgroup(const FiniteQuotient &q, const SubgroupPresentation &upres) {
  FiniteQuotient r;
  r.degree = q.degree;
  for (const auto &e : upres.embedding)
    r.images.push_back(q.evaluate(e));
  return r;
}

FiniteGroup image_group(const FiniteQuotient &q) {
  if (q.images.empty())
    return FiniteGroup({Perm(q.degree)});
  return FiniteGroup(q.images);
}

FiniteGroup::Subset quotient_image_of_ramification(const FiniteQuotient &q,
                                                   const SubgroupPresentation &upres,
                                                   const std::vector<InertiaDatum> &inertia,
                                                   const FiniteGroup &F) {
  if (auto bad = q.first_unkilled(upres.presentation))
    throw RelatorNotKilled("relator " +
                           format_word(upres.presentation.relators[*bad], upres.presentation.generators) +
                           " is not killed by the quotient map");
  std::vector<FiniteGroup::Element> images;
  for (const auto &d : inertia)
    images.push_back(F.evaluate(d.generator_in_U));
  return F.normal_closure(images);
}

FactoringResult factoring_check(const FiniteQuotient &phi, const SubgroupPresentation &upres,
                                const std::vector<InertiaDatum> &inertia) {
  FactoringResult result;
  for (std::size_t i = 0; i < inertia.size(); ++i)
    if (!phi.evaluate(inertia[i].generator_in_U).is_identity()) {
      result.violating = i;
      return result;
    }
  // phi kills U's relators and every inertia generator, hence the whole quotient presentation
  if (!phi.kills(unramified_quotient(upres, inertia)))
    return result;
  result.factors = true;
  result.induced = phi;
  return result;
}

} // namespace ramikit
