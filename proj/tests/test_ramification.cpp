#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ramikit/errors.hpp"
#include "ramikit/ramification.hpp"

using namespace ramikit;

namespace {

PermRep s3_rep() {
  return PermRep{{Perm::from_cycles("(1 2)", 3), Perm::from_cycles("(2 3)", 3)}, 0};
}

FiniteQuotient cyclic_character(const std::vector<long> &values, std::uint32_t p) {
  FiniteQuotient q{p, {}};
  for (long v : values) {
    std::vector<std::uint32_t> img(p);
    for (std::uint32_t i = 0; i < p; ++i)
      img[i] = static_cast<std::uint32_t>((i + ((v % p) + p) % p) % p);
    q.images.emplace_back(std::move(img));
  }
  return q;
}

} // namespace

TEST_CASE("inertia of the trivial cover") {
  const auto k = fixtures::trefoil();
  const auto c = ramify(k, CyclicCover{1});
  REQUIRE(c.report.inertia.size() == 1);
  CHECK(c.report.inertia[0].rep_coset == 0);
  CHECK(c.report.inertia[0].ramification_index == 1);
  CHECK(c.report.inertia[0].generator_in_G == Word{{0, 1}});
  // <a,b | abaBAB, a> collapses
  CHECK(c.report.h1_quotient.is_trivial());
  CHECK(todd_coxeter(c.report.quotient_presentation, {}).index() == 1);
  CHECK(c.report.quotient_presentation.relators.size() == 2);
}

TEST_CASE("inertia of the trefoil double cover") {
  const auto k = fixtures::trefoil();
  const auto c = ramify(k, CyclicCover{2});
  REQUIRE(c.report.inertia.size() == 1);
  CHECK(c.report.inertia[0].ramification_index == 2);
  CHECK(c.report.inertia[0].generator_in_G == fixtures::w(k, "aa"));
  CHECK(c.report.h1_quotient.to_string() == "Z/3");
  CHECK(oracle::cyclotomic_norm({1, -1, 1}, 2) == 3);
}

TEST_CASE("trefoil triple cyclic cover: Z/2 + Z/2") {
  const auto c = ramify(fixtures::trefoil(), CyclicCover{3});
  CHECK(c.report.h1_quotient.to_string() == "Z/2 + Z/2");
  CHECK(oracle::cyclotomic_norm({1, -1, 1}, 3) == 4);
}

TEST_CASE("figure-eight double cover: Z/5") {
  const auto c = ramify(fixtures::figure_eight(), CyclicCover{2});
  CHECK(c.report.h1_quotient.to_string() == "Z/5");
  CHECK(oracle::cyclotomic_norm({1, -3, 1}, 2) == 5);
}

TEST_CASE("property: branched cyclic cover homology order matches the Alexander polynomial") {
  // |H_1| is the cyclotomic norm when it is nonzero; zero norm means infinite homology
  struct Case {
    KnotGroupData knot;
    std::vector<long> delta;
  };
  for (const auto &[k, delta] : {Case{fixtures::trefoil(), {1, -1, 1}}, Case{fixtures::figure_eight(), {1, -3, 1}}})
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto c = ramify(k, CyclicCover{n});
      const Integer norm = oracle::cyclotomic_norm(delta, n);
      if (norm == 0) {
        CHECK(c.report.h1_quotient.free_rank > 0);
      } else {
        REQUIRE(c.report.h1_quotient.order());
        CHECK(*c.report.h1_quotient.order() == norm);
      }
      // independent invariant factors of the quotient's exponent matrix
      const IntMatrix m = exponent_matrix(c.report.quotient_presentation);
      oracle::Matrix om(m.rows(), std::vector<mpz_class>(m.cols()));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          om[i][j] = m(i, j);
      std::vector<Integer> tors;
      for (const auto &d : oracle::invariant_factors(om))
        if (d > 1)
          tors.push_back(d);
      CHECK(tors == c.report.h1_quotient.torsion);
    }
}

TEST_CASE("index-3 permutation cover has inertia indices 2 and 1") {
  const auto k = fixtures::trefoil();
  const auto c = ramify(k, s3_rep());
  REQUIRE(c.report.inertia.size() == 2);
  CHECK(c.report.inertia[0].rep_coset == 0);
  CHECK(c.report.inertia[0].ramification_index == 2);
  CHECK(c.report.inertia[1].rep_coset == 2);
  CHECK(c.report.inertia[1].ramification_index == 1);
  // oracle: orbits of (1 2) on {1,2,3}
  CHECK(oracle::orbit_count({Perm::from_cycles("(1 2)", 3)}, 3) == 2);
}

TEST_CASE("boundary components") {
  const auto k = fixtures::trefoil();
  CHECK(ramify(k, CyclicCover{1}).report.boundary_tori() == 1u);
  CHECK(ramify(k, CyclicCover{2}).report.boundary_tori() == 1u);
  const auto c = ramify(k, s3_rep());
  const std::vector<Perm> mp{word_permutation(c.table, k.meridian),
                             word_permutation(c.table, *k.longitude)};
  CHECK(c.report.boundary_tori() == oracle::orbit_count(mp, 3));
  std::size_t covered = 0;
  for (const auto &comp : *c.report.boundary)
    covered += comp.inertia.size();
  CHECK(covered == c.report.inertia.size());

  const auto fig8 = fixtures::figure_eight();
  const auto f = ramify(fig8, CyclicCover{2});
  CHECK_FALSE(f.report.boundary_tori());
  CHECK_THROWS_AS(boundary_components(f.table, fig8.meridian, std::nullopt, f.report.inertia),
                  LongitudeMissing);
}

TEST_CASE("property: orbit partition and inertia cyclicity on every cover") {
  for (const auto &k : {fixtures::trefoil(), fixtures::figure_eight()}) {
    auto tables = low_index_subgroups(k.presentation, 5);
    for (std::size_t n = 1; n <= 6; ++n)
      tables.push_back(build_coset_table(k, CyclicCover{n}));
    const auto degrees = *meridian_degrees(k);
    for (auto &t : tables) {
      const bool cyclic = std::holds_alternative<CyclicCover>(t.spec());
      const auto c = analyze_cover(k, t);
      std::size_t sum = 0;
      for (const auto &d : c.report.inertia) {
        sum += d.ramification_index;
        CHECK(trace(c.table, d.rep_coset, k.meridian.pow(static_cast<long>(d.ramification_index))) == d.rep_coset);
        for (std::size_t e = 1; e < d.ramification_index; ++e)
          CHECK(trace(c.table, d.rep_coset, k.meridian.pow(static_cast<long>(e))) != d.rep_coset);
        CHECK(trace(c.table, 0, d.generator_in_G) == 0);
        long deg = 0;
        for (const auto &l : d.generator_in_G)
          deg += l.sign * degrees[l.gen];
        CHECK(deg == static_cast<long>(d.ramification_index));
        CHECK(embed(c.subgroup, d.generator_in_U) == d.generator_in_G);
      }
      CHECK(sum == c.report.index);
      if (cyclic) {
        REQUIRE(c.report.inertia.size() == 1);
        CHECK(c.report.inertia[0].ramification_index == c.report.index);
      }
      CHECK(c.report.quotient_presentation.relators.size() <=
            c.subgroup.presentation.relators.size() + c.report.inertia.size());
    }
  }
}

TEST_CASE("normal closure image: S_3 quotient of the trefoil group") {
  const auto k = fixtures::trefoil();
  const auto c = ramify(k, CyclicCover{1});
  const FiniteQuotient q{3, {Perm::from_cycles("(1 2)", 3), Perm::from_cycles("(2 3)", 3)}};
  const auto qU = restrict_to_subgroup(q, c.subgroup);
  const FiniteGroup F = image_group(qU);
  CHECK(F.order() == 6);
  const auto image = quotient_image_of_ramification(qU, c.subgroup, c.report.inertia, F);
  CHECK(FiniteGroup::size(image) == 6);
}

TEST_CASE("normal closure image of trivial inertia images is trivial") {
  const auto k = fixtures::trefoil();
  const auto c = ramify(k, CyclicCover{2});
  const auto q = restrict_to_subgroup(FiniteQuotient{1, {Perm(1), Perm(1)}}, c.subgroup);
  const FiniteGroup F = image_group(q);
  CHECK(FiniteGroup::size(quotient_image_of_ramification(q, c.subgroup, c.report.inertia, F)) == 1);
}

TEST_CASE("quotient image requires a homomorphism") {
  const auto k = fixtures::trefoil();
  const auto c = ramify(k, CyclicCover{1});
  const FiniteQuotient bogus{3, {Perm::from_cycles("(1 2)", 3), Perm::from_cycles("(1 2 3)", 3)}};
  CHECK_THROWS_AS(quotient_image_of_ramification(bogus, c.subgroup, c.report.inertia, image_group(bogus)),
                  RelatorNotKilled);
}

TEST_CASE("double cover: characters to Z/3 and the inertia image") {
  const auto k = fixtures::trefoil();
  const auto c = ramify(k, CyclicCover{2});
  const AbelianizationMap ab(c.subgroup.presentation);
  REQUIRE(ab.invariants().to_string() == "Z + Z/3");
  // the torsion coordinate is a homomorphism U -> Z/3
  std::vector<long> values;
  for (std::size_t j = 0; j < c.subgroup.presentation.generator_count(); ++j) {
    std::vector<long> unit(c.subgroup.presentation.generator_count(), 0);
    unit[j] = 1;
    values.push_back(ab.image(unit).torsion.at(0).get_si());
  }
  const auto q = cyclic_character(values, 3);
  REQUIRE(q.kills(c.subgroup.presentation));
  const Integer t = ab.image(c.report.inertia[0].generator_in_U).torsion.at(0);
  const FiniteGroup F = image_group(q);
  CHECK(F.order() == 3);
  const auto img = quotient_image_of_ramification(q, c.subgroup, c.report.inertia, F);
  CHECK(FiniteGroup::size(img) == (t == 0 ? 1u : 3u));

  // a character killing the inertia generator factors through U/M_U and is onto Z/3
  bool found = false;
  for (long s = 0; s < 3 && !found; ++s)
    for (long u = 0; u < 3 && !found; ++u) {
      // characters of Z + Z/3 into Z/3: free coordinate * s + torsion coordinate * u
      std::vector<long> vals;
      for (std::size_t j = 0; j < c.subgroup.presentation.generator_count(); ++j) {
        std::vector<long> unit(c.subgroup.presentation.generator_count(), 0);
        unit[j] = 1;
        const auto im = ab.image(unit);
        vals.push_back(im.free.at(0).get_si() * s + im.torsion.at(0).get_si() * u);
      }
      const auto phi = cyclic_character(vals, 3);
      const auto res = factoring_check(phi, c.subgroup, c.report.inertia);
      if (res.factors && image_group(phi).order() == 3) {
        found = true;
        REQUIRE(res.induced);
        CHECK(res.induced->kills(c.report.quotient_presentation));
      }
    }
  CHECK(found);
}

TEST_CASE("factoring check examples") {
  const auto k = fixtures::trefoil();
  const auto c = ramify(k, CyclicCover{1});
  const auto trivial = restrict_to_subgroup(FiniteQuotient{2, {Perm(2), Perm(2)}}, c.subgroup);
  const auto r1 = factoring_check(trivial, c.subgroup, c.report.inertia);
  CHECK(r1.factors);
  REQUIRE(r1.induced);
  CHECK(r1.induced->images == trivial.images);

  const auto mod2 = restrict_to_subgroup(FiniteQuotient{2, {Perm::from_cycles("(1 2)", 2), Perm::from_cycles("(1 2)", 2)}}, c.subgroup);
  const auto r2 = factoring_check(mod2, c.subgroup, c.report.inertia);
  CHECK_FALSE(r2.factors);
  REQUIRE(r2.violating);
  CHECK(c.report.inertia[*r2.violating].ramification_index == 1);
}

TEST_CASE("property: factoring biconditional against all small homomorphisms") {
  for (const auto &k : {fixtures::trefoil(), fixtures::figure_eight()})
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto c = ramify(k, CyclicCover{n});
      const auto homs = oracle::homomorphisms_to_symmetric(c.subgroup.presentation.generator_count(),
                                                           c.subgroup.presentation.relators, 3);
      for (const auto &tuple : homs) {
        const FiniteQuotient phi{3, tuple};
        bool all_killed = true;
        for (const auto &d : c.report.inertia)
          all_killed = all_killed && phi.evaluate(d.generator_in_U).is_identity();
        const auto res = factoring_check(phi, c.subgroup, c.report.inertia);
        CHECK(res.factors == all_killed);
        // independent witness: the map kills the quotient presentation iff it factors
        CHECK(phi.kills(c.report.quotient_presentation) == all_killed);
      }
    }
}
