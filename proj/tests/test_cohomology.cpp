#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ramikit/cohomology.hpp"
#include "ramikit/errors.hpp"

using namespace ramikit;

namespace {

// dim Hom(A, F_p) for A = Z^r + sum Z/d_i: r plus the number of d_i divisible by p.
std::size_t hom_dim(const AbelianInvariants &inv, std::uint32_t p) {
  std::size_t d = inv.free_rank;
  for (const auto &t : inv.torsion)
    if (mpz_divisible_ui_p(t.get_mpz_t(), p))
      ++d;
  return d;
}

// Brute force: count assignments of generators to F_p killing every relator and inertia vector.
std::size_t count_characters(const Presentation &pres, const std::vector<Word> &extra, std::uint32_t p) {
  const std::size_t g = pres.generator_count();
  std::vector<std::uint32_t> v(g, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    auto check = [&](const Word &w) {
      long s = 0;
      for (const auto &l : w)
        s += l.sign * static_cast<long>(v[l.gen]);
      if (((s % static_cast<long>(p)) + p) % p != 0)
        ok = false;
    };
    for (const auto &r : pres.relators)
      check(r);
    for (const auto &w : extra)
      check(w);
    count += ok;
    std::size_t k = 0;
    while (k < g && ++v[k] == p)
      v[k++] = 0;
    if (k == g)
      break;
  }
  return count;
}

std::size_t log_p(std::size_t n, std::uint32_t p) {
  std::size_t d = 0;
  while (n > 1) {
    n /= p;
    ++d;
  }
  return d;
}

} // namespace

TEST_CASE("h1 dimensions") {
  const auto k = fixtures::trefoil();
  CHECK(h1_dim(k.presentation, 5) == 1);
  const auto trivial = parse_presentation("gens: a b\nrel: abaBAB\nrel: a", {Validation::Advisory});
  for (std::uint32_t p : {2U, 3U, 5U, 7U})
    CHECK(h1_dim(trivial.presentation, p) == 0);
  const auto c = ramify(k, CyclicCover{2});
  CHECK(h1_dim(c.subgroup.presentation, 3) == 2);
  CHECK_THROWS_AS(h1_dim(k.presentation, 6), NotPrime);
}

TEST_CASE("unramified subspace examples") {
  const auto k = fixtures::trefoil();
  const auto g = ramify(k, CyclicCover{1});
  CHECK(unramified_subspace(g.subgroup, g.report.inertia, 3).dim() == 0);
  const auto c = ramify(k, CyclicCover{2});
  CHECK(unramified_subspace(c.subgroup, c.report.inertia, 3).dim() == 1);
  CHECK(unramified_subspace(c.subgroup, c.report.inertia, 5).dim() == 0);
  CHECK(hom_dim(c.report.h1_quotient, 3) == 1);
  CHECK(hom_dim(c.report.h1_quotient, 5) == 0);
  CHECK_THROWS_AS(unramified_subspace(c.subgroup, c.report.inertia, 9), NotPrime);
}

TEST_CASE("inflation check examples") {
  const auto k = fixtures::trefoil();
  const auto g = ramify(k, CyclicCover{1});
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    const auto r = inflation_check(g.subgroup, g.report.quotient_presentation, g.report.inertia, p);
    CHECK(r.dim_unramified == 0);
    CHECK(r.dim_h1_quotient == 0);
    CHECK(r.inflation_bijective);
    CHECK_FALSE(r.note.empty());
  }
  const auto c = ramify(k, CyclicCover{2});
  const auto r = inflation_check(c.subgroup, c.report.quotient_presentation, c.report.inertia, 3);
  CHECK(r.dim_h1_U == 2);
  CHECK(r.dim_unramified == 1);
  CHECK(r.dim_h1_quotient == 1);
  CHECK(r.inflation_bijective);

  const auto fig8 = ramify(fixtures::figure_eight(), CyclicCover{2});
  const auto r5 = inflation_check(fig8.subgroup, fig8.report.quotient_presentation, fig8.report.inertia, 5);
  CHECK(r5.dim_unramified == 1);
  CHECK(r5.dim_h1_quotient == 1);
  CHECK(r5.inflation_bijective);
  CHECK(oracle::cyclotomic_norm({1, -3, 1}, 2) == 5);
}

TEST_CASE("inflation check detects a mismatched quotient") {
  const auto k = fixtures::trefoil();
  const auto c = ramify(k, CyclicCover{2});
  // dropping the inertia relator leaves H^1(U) itself, which is larger than the unramified part
  const auto r = inflation_check(c.subgroup, c.subgroup.presentation, c.report.inertia, 3);
  CHECK(r.dim_h1_quotient == 2);
  CHECK_FALSE(r.inflation_bijective);
}

TEST_CASE("property: unramified cohomology equals cohomology of U/M_U on every small cover") {
  for (const auto &k : {fixtures::trefoil(), fixtures::figure_eight()}) {
    auto tables = low_index_subgroups(k.presentation, 4);
    for (std::size_t n = 1; n <= 5; ++n)
      tables.push_back(build_coset_table(k, CyclicCover{n}));
    for (auto &t : tables) {
      const auto c = analyze_cover(k, t);
      std::vector<Word> inertia_words;
      for (const auto &d : c.report.inertia)
        inertia_words.push_back(d.generator_in_U);
      for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
        const auto unram = unramified_subspace(c.subgroup, c.report.inertia, p);
        const auto r = inflation_check(c.subgroup, c.report.quotient_presentation, c.report.inertia, p);
        CHECK(r.inflation_bijective);
        CHECK(r.dim_unramified == r.dim_h1_quotient);
        CHECK(r.dim_h1_quotient == hom_dim(c.report.h1_quotient, p));
        CHECK(r.dim_h1_U == hom_dim(c.report.h1_U, p));
        // brute-force character count when small enough
        if (c.subgroup.presentation.generator_count() <= 5 && p <= 5) {
          CHECK(log_p(count_characters(c.subgroup.presentation, inertia_words, p), p) == unram.dim());
          CHECK(log_p(count_characters(c.subgroup.presentation, {}, p), p) == r.dim_h1_U);
        }
        // basis vectors kill inertia and lie in H^1 (containment by rank)
        for (const auto &v : unram.basis)
          for (const auto &w : inertia_words)
            CHECK(dot_mod(v, exponent_vector(w, unram.ambient_dim), p) == 0);
        auto joined = h1_basis(c.subgroup.presentation, p).basis;
        const std::size_t h1 = joined.size();
        joined.insert(joined.end(), unram.basis.begin(), unram.basis.end());
        CHECK(rank_mod_p(joined, p) == h1);
      }
    }
  }
}
