#include "ramikit/shadows.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ramikit {

const char *to_string(ShadowStatus s) {
  switch (s) {
  case ShadowStatus::Ok:
    return "ok";
  case ShadowStatus::NotNormal:
    return "NotNormal";
  case ShadowStatus::NotContainedInU:
    return "NotContainedInU";
  case ShadowStatus::Failed:
    return "failed";
  }
  return "?";
}

const char *to_string(TransportStatus s) {
  switch (s) {
  case TransportStatus::Ok:
    return "ok";
  case TransportStatus::NotIsomorphism:
    return "NotIsomorphism";
  case TransportStatus::MeridianClassNotPreserved:
    return "MeridianClassNotPreserved";
  case TransportStatus::Failed:
    return "failed";
  }
  return "?";
}

bool ShadowReport::passed() const {
  if (status != ShadowStatus::Ok || !ramification_holds)
    return false;
  return std::all_of(intersections.begin(), intersections.end(),
                     [](const Intersection &i) { return i.holds; });
}

namespace {

struct SpanningTree {
  std::vector<std::size_t> order;               // BFS order from coset 0
  std::vector<std::pair<std::size_t, std::size_t>> parent; // (parent coset, column)
};

SpanningTree spanning_tree(const CosetTable &t) {
  SpanningTree tree;
  tree.parent.assign(t.index(), {0, 0});
  std::vector<bool> seen(t.index(), false);
  tree.order.push_back(0);
  seen[0] = true;
  for (std::size_t k = 0; k < tree.order.size(); ++k)
    for (std::size_t x = 0; x < t.column_count(); ++x) {
      const std::size_t d = t.act(tree.order[k], x);
      if (!seen[d]) {
        seen[d] = true;
        tree.parent[d] = {tree.order[k], x};
        tree.order.push_back(d);
      }
    }
  return tree;
}

std::size_t meridian_orbit_length(const CosetTable &t, std::size_t c, const Word &m) {
  std::size_t e = 1;
  for (std::size_t d = trace(t, c, m); d != c; d = trace(t, d, m))
    ++e;
  return e;
}

} // namespace

bool is_normal_table(const CosetTable &table) {
  const SpanningTree tree = spanning_tree(table);
  if (tree.order.size() != table.index())
    return false;
  std::vector<std::size_t> psi(table.index());
  for (std::size_t c = 0; c < table.index(); ++c) {
    // psi sends N t_d to N t_c t_d; it is a graph automorphism iff Stab(c) == Stab(0)
    psi[0] = c;
    for (std::size_t k = 1; k < tree.order.size(); ++k) {
      const std::size_t d = tree.order[k];
      psi[d] = table.act(psi[tree.parent[d].first], tree.parent[d].second);
    }
    for (std::size_t d = 0; d < table.index(); ++d)
      for (std::size_t x = 0; x < table.column_count(); x += 2)
        if (psi[table.act(d, x)] != table.act(psi[d], x))
          return false;
  }
  return true;
}

ShadowReport closure_shadow_check(const KnotGroupData &knot, const CosetTable &tableU,
                                  const CosetTable &tableN, std::span<const Word> gs) {
  ShadowReport report;
  report.quotient_order = tableN.index();
  if (!is_normal_table(tableN)) {
    report.status = ShadowStatus::NotNormal;
    report.detail = "the subgroup N is not normal in G";
    return report;
  }
  // N <= U iff N t_d -> U t_d is a well-defined map of coset spaces
  const SpanningTree tree = spanning_tree(tableN);
  std::vector<std::size_t> phi(tableN.index(), 0);
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    const std::size_t d = tree.order[k];
    phi[d] = tableU.act(phi[tree.parent[d].first], tree.parent[d].second);
  }
  for (std::size_t d = 0; d < tableN.index(); ++d)
    for (std::size_t x = 0; x < tableN.column_count(); ++x)
      if (phi[tableN.act(d, x)] != tableU.act(phi[d], x)) {
        report.status = ShadowStatus::NotContainedInU;
        report.detail = "N is not contained in U; the intersection identity is skipped";
        return report;
      }

  const FiniteGroup F = FiniteGroup::from_regular_action(tableN);
  FiniteGroup::Subset qU = F.empty_subset();
  for (std::size_t d = 0; d < tableN.index(); ++d)
    qU[d] = phi[d] == 0;
  report.image_of_U_order = FiniteGroup::size(qU);
  const auto qm = F.evaluate(knot.meridian);
  const auto cyc_m = F.cyclic_subgroup(qm);

  for (const auto &g : gs) {
    ShadowReport::Intersection item;
    item.g = free_reduce(g);
    item.ramification_index = meridian_orbit_length(tableU, trace(tableU, 0, g), knot.meridian);
    const auto qg = F.evaluate(g);
    const auto lhs =
        F.cyclic_subgroup(F.conjugate_by(F.power(qm, static_cast<long>(item.ramification_index)), qg));
    const auto rhs = FiniteGroup::intersection(qU, F.conjugate(cyc_m, qg));
    item.lhs_order = FiniteGroup::size(lhs);
    item.rhs_order = FiniteGroup::size(rhs);
    item.holds = lhs == rhs;
    report.intersections.push_back(std::move(item));
  }

  const SchreierData sd = schreier_transversal(tableU);
  std::vector<FiniteGroup::Element> ambient;
  for (const auto &[c, i] : sd.edges)
    ambient.push_back(F.evaluate(schreier_element(sd, tableU, c, i)));
  std::vector<FiniteGroup::Element> inertia_images;
  for (const auto &d : inertia_data(tableU, sd, knot.meridian))
    inertia_images.push_back(F.evaluate(d.generator_in_G));
  const auto ram = F.normal_closure(inertia_images, ambient);

  FiniteGroup::Subset family = F.empty_subset();
  for (FiniteGroup::Element x = 0; x < F.order(); ++x) {
    const auto piece = FiniteGroup::intersection(qU, F.conjugate(cyc_m, x));
    for (std::size_t i = 0; i < piece.size(); ++i)
      if (piece[i])
        family[i] = true;
  }
  const auto family_elements = FiniteGroup::elements(family);
  const auto family_closure = F.normal_closure(family_elements, ambient);
  report.ramification_order = FiniteGroup::size(ram);
  report.family_closure_order = FiniteGroup::size(family_closure);
  report.ramification_holds = ram == family_closure;
  if (!report.passed())
    report.status = ShadowStatus::Failed;
  return report;
}

ShadowReport closure_shadow_check(const KnotGroupData &knot, const CosetTable &tableU,
                                  const CosetTable &tableN, const Word &g) {
  return closure_shadow_check(knot, tableU, tableN, std::span<const Word>(&g, 1));
}

std::optional<CosetTable> intersection_kernel_table(const Presentation &pres, const FiniteQuotient &q,
                                                    const CosetTable &tableU, std::size_t max_order) {
  const std::size_t k = q.degree, n = tableU.index();
  std::vector<Perm> combined;
  for (std::size_t i = 0; i < pres.generator_count(); ++i) {
    std::vector<std::uint32_t> img(k + n);
    for (std::size_t p = 0; p < k; ++p)
      img[p] = q.images[i](p);
    for (std::size_t c = 0; c < n; ++c)
      img[k + c] = static_cast<std::uint32_t>(k + tableU.act(c, 2 * i));
    combined.emplace_back(std::move(img));
  }
  std::optional<FiniteGroup> H;
  try {
    H.emplace(std::move(combined), max_order);
  } catch (const std::length_error &) {
    return std::nullopt;
  }
  std::vector<std::vector<std::uint32_t>> rows(H->right_table().begin(), H->right_table().end());
  PermRep spec;
  for (std::size_t i = 0; i < pres.generator_count(); ++i) {
    std::vector<std::uint32_t> img(rows.size());
    for (std::size_t e = 0; e < rows.size(); ++e)
      img[e] = rows[e][2 * i];
    spec.images.emplace_back(std::move(img));
  }
  return CosetTable(pres.generator_count(), std::move(rows), std::move(spec));
}

namespace {

struct Iso {
  std::vector<FiniteGroup::Element> map; // F element -> F2 element
  std::string problem;
};

Iso build_iso(const FiniteGroup &F, const FiniteGroup &F2, const std::vector<Perm> &iso_images) {
  Iso iso;
  if (iso_images.size() != F.generator_count()) {
    iso.problem = "wrong number of generator images";
    return iso;
  }
  std::vector<FiniteGroup::Element> gen_images;
  for (const auto &p : iso_images) {
    if (p.degree() != F2.perm(0).degree()) {
      iso.problem = "generator image has the wrong degree";
      return iso;
    }
    const auto e = F2.find(p);
    if (!e) {
      iso.problem = "generator image " + p.to_cycles() + " is outside the target group";
      return iso;
    }
    gen_images.push_back(*e);
  }
  auto column_image = [&](std::size_t x) {
    const auto g = gen_images[x / 2];
    return x % 2 ? F2.inverse(g) : g;
  };
  iso.map.assign(F.order(), 0);
  for (FiniteGroup::Element e = 1; e < F.order(); ++e) {
    FiniteGroup::Element v = FiniteGroup::identity();
    for (const auto &l : F.word(e))
      v = F2.multiply(v, column_image(l.column()));
    iso.map[e] = v;
  }
  // homomorphism: compatible with every edge of the Cayley graph
  for (FiniteGroup::Element e = 0; e < F.order(); ++e)
    for (std::size_t x = 0; x < 2 * F.generator_count(); ++x)
      if (iso.map[F.right_table()[e][x]] != F2.multiply(iso.map[e], column_image(x))) {
        iso.problem = "generator images do not define a homomorphism";
        return iso;
      }
  if (F.order() != F2.order()) {
    iso.problem = "groups have different orders";
    return iso;
  }
  std::vector<bool> hit(F2.order(), false);
  for (auto v : iso.map) {
    if (hit[v]) {
      iso.problem = "homomorphism is not injective";
      return iso;
    }
    hit[v] = true;
  }
  return iso;
}

// V ∩ x<c>x^-1 for every x, indexed by x.
std::vector<FiniteGroup::Subset> inertia_family(const FiniteGroup &F, const FiniteGroup::Subset &V,
                                                const FiniteGroup::Subset &cyc) {
  std::vector<FiniteGroup::Subset> fam;
  fam.reserve(F.order());
  for (FiniteGroup::Element x = 0; x < F.order(); ++x)
    fam.push_back(FiniteGroup::intersection(V, F.conjugate(cyc, x)));
  return fam;
}

FiniteGroup::Subset ramification_closure(const FiniteGroup &F, const FiniteGroup::Subset &V,
                                         const std::vector<FiniteGroup::Subset> &family) {
  FiniteGroup::Subset un = F.empty_subset();
  for (const auto &s : family)
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i])
        un[i] = true;
  const auto elems = FiniteGroup::elements(un);
  const auto ambient = FiniteGroup::elements(V);
  return F.normal_closure(elems, ambient);
}

} // namespace

TransportReport inertia_transport_check(const FiniteQuotient &q, const Word &m,
                                        const FiniteQuotient &q2, const Word &m2,
                                        const std::vector<Perm> &iso_images, const Perm &y) {
  TransportReport report;
  const FiniteGroup F = image_group(q);
  const FiniteGroup F2 = image_group(q2);
  report.group_order = F.order();
  const Iso iso = build_iso(F, F2, iso_images);
  if (!iso.problem.empty()) {
    report.status = TransportStatus::NotIsomorphism;
    report.detail = iso.problem;
    return report;
  }
  const auto ye = F2.find(y);
  if (!ye) {
    report.status = TransportStatus::MeridianClassNotPreserved;
    report.detail = "conjugator " + y.to_cycles() + " is outside the target group";
    return report;
  }
  const auto cyc = F.cyclic_subgroup(F.evaluate(m));
  const auto cyc2 = F2.cyclic_subgroup(F2.evaluate(m2));
  if (F.image(cyc, iso.map) != F2.conjugate(cyc2, *ye)) {
    report.status = TransportStatus::MeridianClassNotPreserved;
    report.detail = "the isomorphism does not carry <q(m)> to a conjugate y<q2(m2)>y^-1";
    return report;
  }

  for (const auto &V : F.all_subgroups()) {
    ++report.subgroups_checked;
    const auto V2 = F.image(V, iso.map);
    const auto fam = inertia_family(F, V, cyc);
    const auto fam2 = inertia_family(F2, V2, cyc2);
    std::set<FiniteGroup::Subset> mapped, target(fam2.begin(), fam2.end());
    for (FiniteGroup::Element x = 0; x < F.order(); ++x) {
      const auto shifted = F2.multiply(iso.map[x], *ye);
      const auto img = F.image(fam[x], iso.map);
      if (img != fam2[shifted]) {
        report.status = TransportStatus::Failed;
        report.detail = "inertia subgroup at x = " + std::to_string(x) + " is not transported";
        return report;
      }
      mapped.insert(img);
    }
    if (mapped != target) {
      report.status = TransportStatus::Failed;
      report.detail = "inertia families differ as sets";
      return report;
    }
    const auto ram = ramification_closure(F, V, fam);
    const auto ram2 = ramification_closure(F2, V2, fam2);
    if (F.image(ram, iso.map) != ram2) {
      report.status = TransportStatus::Failed;
      report.detail = "ramification closure is not transported";
      return report;
    }
    const std::size_t quotient = FiniteGroup::size(V) / FiniteGroup::size(ram);
    if (quotient != FiniteGroup::size(V2) / FiniteGroup::size(ram2)) {
      report.status = TransportStatus::Failed;
      report.detail = "unramified quotients have different orders";
      return report;
    }
    report.unramified_orders.push_back(quotient);
  }
  return report;
}

std::optional<Perm> find_meridian_conjugator(const FiniteQuotient &q, const Word &m,
                                             const FiniteQuotient &q2, const Word &m2,
                                             const std::vector<Perm> &iso_images) {
  const FiniteGroup F = image_group(q);
  const FiniteGroup F2 = image_group(q2);
  const Iso iso = build_iso(F, F2, iso_images);
  if (!iso.problem.empty())
    return std::nullopt;
  const auto target = F.image(F.cyclic_subgroup(F.evaluate(m)), iso.map);
  const auto cyc2 = F2.cyclic_subgroup(F2.evaluate(m2));
  for (FiniteGroup::Element y = 0; y < F2.order(); ++y)
    if (F2.conjugate(cyc2, y) == target)
      return F2.perm(y);
  return std::nullopt;
}

} // namespace ramikit
