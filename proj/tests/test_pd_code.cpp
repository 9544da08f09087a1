#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ramikit/errors.hpp"
#include "ramikit/pd_code.hpp"
#include "ramikit/ramification.hpp"
#include "ramikit/validation.hpp"

using namespace ramikit;

namespace {

const char *const kTrefoilPd = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
const char *const kFigureEightPd = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";

Perm evaluate(const std::vector<Perm> &images, const Word &w) {
  Perm p(images.front().degree());
  for (const auto &l : w)
    p = p * (l.sign > 0 ? images[l.gen] : images[l.gen].inverse());
  return p;
}

// (homomorphisms, those killing the longitude) into S_degree
std::pair<std::size_t, std::size_t> peripheral_counts(const KnotGroupData &k, std::size_t degree) {
  const auto homs = oracle::homomorphisms_to_symmetric(k.presentation.generator_count(),
                                                       k.presentation.relators, degree);
  std::size_t killed = 0;
  for (const auto &h : homs)
    killed += evaluate(h, *k.longitude).is_identity();
  return {homs.size(), killed};
}

} // namespace

TEST_CASE("trefoil diagram") {
  const auto k = wirtinger_from_pd(parse_pd_code(kTrefoilPd));
  CHECK(k.presentation.generator_count() == 3);
  CHECK(k.presentation.relators.size() == 3);
  CHECK(k.presentation.generators[0] == "x1");
  CHECK(k.meridian == Word{{0, 1}});
  CHECK(validate_knot_group(k).passed());

  const auto dropped = wirtinger_from_pd(parse_pd_code(kTrefoilPd), {.drop_redundant_relator = true});
  CHECK(dropped.presentation.relators.size() == 2);
  CHECK(validate_knot_group(dropped).passed());
}

TEST_CASE("longitude commutes with the meridian in every finite image") {
  for (const char *text : {kTrefoilPd, kFigureEightPd}) {
    const auto k = wirtinger_from_pd(parse_pd_code(text), {.drop_redundant_relator = true});
    REQUIRE(k.longitude);
    for (const auto &h : oracle::homomorphisms_to_symmetric(k.presentation.generator_count(),
                                                            k.presentation.relators, 4)) {
      const Perm m = evaluate(h, k.meridian), l = evaluate(h, *k.longitude);
      CHECK(m * l == l * m);
    }
  }
}

TEST_CASE("peripheral data matches the hand-written trefoil") {
  const auto pd = wirtinger_from_pd(parse_pd_code(kTrefoilPd), {.drop_redundant_relator = true});
  const auto hand = fixtures::trefoil();
  for (std::size_t degree : {3U, 4U})
    CHECK(peripheral_counts(pd, degree) == peripheral_counts(hand, degree));
  // in S_5 some images keep the longitude nontrivial, so the comparison has teeth
  const auto [homs, killed] = peripheral_counts(hand, 5);
  CHECK(killed < homs);
  CHECK(peripheral_counts(pd, 5) == std::pair{homs, killed});
}

TEST_CASE("branched cyclic covers follow the Alexander polynomial") {
  struct Case {
    const char *pd;
    std::vector<long> delta;
  };
  for (const auto &c : {Case{kTrefoilPd, {1, -1, 1}}, Case{kFigureEightPd, {1, -3, 1}}}) {
    const auto k = wirtinger_from_pd(parse_pd_code(c.pd));
    CHECK(validate_knot_group(k).passed());
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto h = ramify(k, CyclicCover{n}).report.h1_quotient;
      const mpz_class norm = oracle::cyclotomic_norm(c.delta, n);
      if (norm == 0) {
        CHECK(!h.order());
      } else {
        REQUIRE(h.order());
        CHECK(*h.order() == norm);
      }
    }
  }
}

TEST_CASE("figure-eight diagram has writhe zero") {
  const auto k = wirtinger_from_pd(parse_pd_code(kFigureEightPd), {.drop_redundant_relator = true});
  CHECK(k.presentation.generator_count() == 4);
  CHECK(k.presentation.relators.size() == 3);
  // zero writhe: no meridian correction, and the traversal word alone has total degree 0
  Word traversal = *k.longitude;
  long total = 0;
  for (long e : exponent_vector(traversal, 4))
    total += e;
  CHECK(total == 0);
  CHECK(validate_knot_group(k).passed());
}

TEST_CASE("degenerate and malformed codes") {
  const auto unknot = wirtinger_from_pd(parse_pd_code("[[1,2,2,1]]"));
  CHECK(unknot.presentation.generator_count() == 1);
  CHECK(validate_knot_group(unknot).passed());

  CHECK_THROWS_AS(parse_pd_code("[[1,2,3]]"), PdCodeError);
  CHECK_THROWS_AS(parse_pd_code("not a list"), PdCodeError);
  CHECK_THROWS_AS(wirtinger_from_pd(parse_pd_code("[]")), PdCodeError);
  // label 6 once, label 5 three times
  CHECK_THROWS_AS(wirtinger_from_pd(parse_pd_code("[[1,4,2,5],[3,5,4,1],[5,2,6,3]]")), PdCodeError);
  // under-strand does not advance
  CHECK_THROWS_AS(wirtinger_from_pd(parse_pd_code("[[1,4,3,5],[2,6,4,1],[5,2,6,3]]")), PdCodeError);
  // Hopf link
  CHECK_THROWS_AS(wirtinger_from_pd(parse_pd_code("[[1,3,2,4],[3,1,4,2]]")), PdCodeError);
}
