#include "ramikit/harness.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ramikit/cohomology.hpp"
#include "ramikit/errors.hpp"
#include "ramikit/shadows.hpp"

namespace ramikit {

namespace {

std::vector<Perm> symmetric_group(std::size_t degree) {
  std::vector<Perm> all;
  std::vector<std::uint32_t> p(degree);
  std::iota(p.begin(), p.end(), 0U);
  do
    all.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return all;
}

// One permutation per cycle type, cycles on consecutive points, longest first.
std::vector<Perm> class_representatives(std::size_t degree) {
  std::vector<Perm> reps;
  std::vector<std::size_t> parts;
  auto emit = [&] {
    std::vector<std::uint32_t> img(degree);
    std::uint32_t start = 0;
    for (std::size_t len : parts) {
      for (std::uint32_t i = 0; i < len; ++i)
        img[start + i] = start + (i + 1) % static_cast<std::uint32_t>(len);
      start += static_cast<std::uint32_t>(len);
    }
    reps.emplace_back(std::move(img));
  };
  auto rec = [&](auto &&self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  rec(rec, degree, degree);
  return reps;
}

Perm conjugate_perm(const Perm &p, const Perm &s) { return s.inverse() * p * s; }

Word random_word(std::mt19937_64 &rng, std::size_t generators, std::size_t max_len) {
  Word w;
  if (generators == 0)
    return w;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    w.push_reduced({static_cast<std::uint32_t>(rng() % generators),
                    static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
  return w;
}

std::string join(const std::vector<std::size_t> &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::size_t fp_dim_from_invariants(const AbelianInvariants &a, std::uint32_t p) {
  std::size_t d = a.free_rank;
  for (const auto &t : a.torsion)
    if (mpz_divisible_ui_p(t.get_mpz_t(), p))
      ++d;
  return d;
}

} // namespace

HomomorphismSearch homomorphism_search(const Presentation &pres, std::size_t degree,
                                       std::size_t budget) {
  HomomorphismSearch out;
  const std::size_t gens = pres.generator_count();
  if (degree == 0)
    throw std::invalid_argument("degree must be positive");
  if (degree == 1) {
    out.quotients.push_back({1, std::vector<Perm>(gens, Perm(1))});
    out.tuples_examined = 1;
    return out;
  }
  if (gens == 0)
    return out;

  const auto all = symmetric_group(degree);
  std::vector<std::vector<std::uint32_t>> fwd, inv;
  for (const auto &p : all) {
    fwd.push_back(p.images());
    inv.push_back(p.inverse().images());
  }
  std::set<std::vector<Perm>> found;

  for (const Perm &rep : class_representatives(degree)) {
    std::vector<Perm> centralizer;
    for (const auto &s : all)
      if (conjugate_perm(rep, s) == rep)
        centralizer.push_back(s);
    const std::size_t rep_index =
        static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), rep) - all.begin());

    std::vector<std::size_t> idx(gens, 0);
    idx[0] = rep_index;
    for (;;) {
      if (++out.tuples_examined > budget) {
        out.exhausted = false;
        break;
      }
      bool ok = true;
      for (const auto &r : pres.relators) {
        for (std::uint32_t x0 = 0; x0 < degree && ok; ++x0) {
          std::uint32_t x = x0;
          for (const auto &l : r)
            x = l.sign > 0 ? fwd[idx[l.gen]][x] : inv[idx[l.gen]][x];
          ok = x == x0;
        }
        if (!ok)
          break;
      }
      if (ok) {
        bool fixed_point = false;
        for (std::uint32_t x = 0; x < degree && !fixed_point; ++x) {
          fixed_point = true;
          for (std::size_t g = 0; g < gens; ++g)
            if (fwd[idx[g]][x] != x)
              fixed_point = false;
        }
        if (!fixed_point) {
          std::optional<std::vector<Perm>> best;
          for (const auto &s : centralizer) {
            std::vector<Perm> t;
            for (std::size_t g = 0; g < gens; ++g)
              t.push_back(conjugate_perm(all[idx[g]], s));
            if (!best || t < *best)
              best = std::move(t);
          }
          found.insert(std::move(*best));
        }
      }
      std::size_t k = 1;
      while (k < gens && ++idx[k] == all.size())
        idx[k++] = 0;
      if (k == gens)
        break;
    }
    if (!out.exhausted)
      break;
  }
  for (const auto &t : found)
    out.quotients.push_back({degree, t});
  return out;
}

Census build_census(const KnotGroupData &knot, const CensusOptions &options) {
  if (options.max_index == 0)
    throw std::invalid_argument("max_index must be at least 1");
  if (options.max_sym_degree < 1 || options.max_sym_degree > 7)
    throw std::invalid_argument("max_sym_degree must be in 1..7");

  Census c;
  c.knot = knot;
  std::vector<std::size_t> per_index(options.max_index + 1, 0);
  try {
    for (auto &table : low_index_subgroups(knot.presentation, options.max_index)) {
      const std::size_t n = table.index();
      c.covers.push_back({"low-index:" + std::to_string(n) + "." + std::to_string(++per_index[n]),
                          analyze_cover(knot, std::move(table))});
    }
  } catch (const CosetLimitExceeded &e) {
    c.partial = true;
    c.warnings.push_back(std::string("low-index search: ") + e.what());
  }
  for (std::size_t n = 1; n <= options.max_index; ++n) {
    try {
      c.covers.push_back({"cyclic:" + std::to_string(n), ramify(knot, CyclicCover{n}, options.max_cosets)});
    } catch (const CosetLimitExceeded &e) {
      c.partial = true;
      c.warnings.push_back("cyclic cover " + std::to_string(n) + ": " + e.what());
    } catch (const InvalidSubgroupSpec &e) {
      c.warnings.push_back("cyclic cover " + std::to_string(n) + ": " + e.what());
    }
  }
  for (std::size_t k = 1; k <= options.max_sym_degree; ++k) {
    auto s = homomorphism_search(knot.presentation, k, options.search_budget);
    if (!s.exhausted) {
      c.partial = true;
      c.warnings.push_back("homomorphism search into Sym(" + std::to_string(k) + ") stopped after " +
                           std::to_string(options.search_budget) + " tuples");
    }
    for (auto &q : s.quotients)
      c.quotient_pool.push_back(std::move(q));
  }
  return c;
}

bool SuiteReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.passed(); });
}

const SuiteResult *SuiteReport::find(const std::string &name) const {
  for (const auto &s : suites)
    if (s.name == name)
      return &s;
  return nullptr;
}

FiniteQuotient cyclic_character(const FpVector &values, std::uint32_t p) {
  FiniteQuotient q{p, {}};
  for (auto v : values) {
    std::vector<std::uint32_t> img(p);
    for (std::uint32_t i = 0; i < p; ++i)
      img[i] = (i + v % p) % p;
    q.images.emplace_back(std::move(img));
  }
  return q;
}

std::vector<FiniteGroup::Subset> normal_subgroups(const FiniteGroup &F) {
  auto classes = F.conjugacy_classes();
  std::vector<FiniteGroup::Subset> out;
  // the identity class is {0}; every normal subgroup contains it
  std::erase_if(classes, [](const auto &cls) { return cls.size() == 1 && cls[0] == 0; });
  if (classes.size() > 20) {
    const auto gens = F.generators();
    for (auto &s : F.all_subgroups())
      if (F.is_normal_in(s, gens))
        out.push_back(std::move(s));
    return out;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << classes.size()); ++mask) {
    FiniteGroup::Subset s = F.singleton_identity();
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (mask >> i & 1U)
        for (auto e : classes[i])
          s[e] = true;
    if (F.is_subgroup(s))
      out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return FiniteGroup::size(a) < FiniteGroup::size(b);
  });
  return out;
}

std::vector<std::vector<Perm>> conjugation_automorphisms(const FiniteQuotient &q) {
  const FiniteGroup F = image_group(q);
  std::set<std::vector<Perm>> found;
  for (const auto &s : symmetric_group(q.degree)) {
    std::vector<Perm> images;
    bool inside = true;
    for (const auto &g : q.images) {
      images.push_back(conjugate_perm(g, s));
      if (!F.find(images.back()))
        inside = false;
    }
    if (inside)
      found.insert(std::move(images));
  }
  return {found.begin(), found.end()};
}

namespace {

struct Runner {
  const Census &census;
  const SuiteOptions &opt;
  std::vector<SuiteResult> suites;

  SuiteResult &add(const char *name, const char *theorem) {
    suites.push_back({name, theorem, 0, 0, {}, {}});
    return suites.back();
  }

  std::mt19937_64 rng_for(std::uint64_t salt) const {
    return std::mt19937_64(opt.seed * 0x9E3779B97F4A7C15ULL + salt);
  }

  const Word &meridian() const { return census.knot.meridian; }

  void orbit_partition() {
    auto &s = add(suite::kOrbitPartition, "meridian orbits partition the cosets of U");
    for (const auto &cc : census.covers) {
      const auto &table = cc.cover.table;
      const auto &inertia = cc.cover.report.inertia;
      ++s.checked;
      std::size_t total = 0;
      std::vector<int> owner(table.index(), -1);
      for (std::size_t i = 0; i < inertia.size(); ++i) {
        const auto &d = inertia[i];
        total += d.ramification_index;
        std::ostringstream who;
        who << "datum " << i << " (coset " << d.rep_coset + 1 << ", e=" << d.ramification_index << ")";
        if (d.ramification_index == 0 || d.rep_coset >= table.index()) {
          s.failures.push_back({cc.label, {}, {}, who.str() + ": malformed"});
          continue;
        }
        std::size_t c = d.rep_coset;
        for (std::size_t k = 0; k < d.ramification_index; ++k) {
          if (k > 0 && c == d.rep_coset) {
            s.failures.push_back({cc.label, {}, {}, who.str() + ": orbit closes after " + std::to_string(k)});
            break;
          }
          if (owner[c] >= 0 && owner[c] != static_cast<int>(i))
            s.failures.push_back({cc.label, {}, {}, who.str() + ": coset " + std::to_string(c + 1) +
                                                        " already in datum " + std::to_string(owner[c])});
          owner[c] = static_cast<int>(i);
          c = trace(table, c, meridian());
        }
        if (c != d.rep_coset)
          s.failures.push_back({cc.label, {}, {}, who.str() + ": m^e does not fix the coset"});
        if (trace(table, 0, d.generator_in_G) != 0)
          s.failures.push_back({cc.label, {}, {}, who.str() + ": inertia generator not in U"});
      }
      if (total != table.index())
        s.failures.push_back({cc.label, {}, {}, "sum of ramification indices " + std::to_string(total) +
                                                    " != index " + std::to_string(table.index())});
      if (std::find(owner.begin(), owner.end(), -1) != owner.end())
        s.failures.push_back({cc.label, {}, {}, "some coset lies in no meridian orbit"});
    }
  }

  void cyclic_inertia() {
    auto &s = add(suite::kCyclicInertia, "cyclic covers have one inertia class with e = n");
    for (const auto &cc : census.covers) {
      const auto *cyc = std::get_if<CyclicCover>(&cc.cover.table.spec());
      if (!cyc)
        continue;
      ++s.checked;
      const auto e = cc.cover.report.ramification_indices();
      if (e != std::vector<std::size_t>{cyc->degree})
        s.failures.push_back({cc.label, {}, {}, "ramification indices [" + join(e) + "]"});
    }
  }

  void deficiency() {
    auto &s = add(suite::kDeficiency, "rewriting scales Euler characteristic by the index");
    const long g = static_cast<long>(census.knot.presentation.generator_count());
    const long r = static_cast<long>(census.knot.presentation.relators.size());
    for (const auto &cc : census.covers) {
      ++s.checked;
      const auto &sp = cc.cover.subgroup;
      const long n = static_cast<long>(sp.index);
      const long ug = static_cast<long>(sp.presentation.generator_count());
      const long ur = static_cast<long>(sp.raw_relator_count);
      std::ostringstream msg;
      if (ug != n * (g - 1) + 1)
        msg << "generators " << ug << " != " << n * (g - 1) + 1 << "; ";
      if (ur != n * r)
        msg << "relators " << ur << " != " << n * r << "; ";
      if (static_cast<long>(sp.presentation.relators.size()) > ur)
        msg << "more relators than rewrites; ";
      if (g == 2 && r == 1 && ug - ur != 1)
        msg << "deficiency " << ug - ur << " != 1; ";
      if (!msg.str().empty())
        s.failures.push_back({cc.label, {}, {}, msg.str()});
    }
  }

  void rewrite_consistency() {
    auto &s = add(suite::kRewriteConsistency, "rewriting inverts the Schreier embedding");
    auto rng = rng_for(4);
    const std::size_t gens = census.knot.presentation.generator_count();
    for (const auto &cc : census.covers) {
      const auto &cv = cc.cover;
      const auto &sp = cv.subgroup;
      for (std::size_t j = 0; j < sp.embedding.size(); ++j) {
        ++s.checked;
        const Word back = rewrite(cv.table, cv.schreier, sp.embedding[j]);
        if (back != Word{{static_cast<std::uint32_t>(j), 1}})
          s.failures.push_back({cc.label, {}, {}, "generator " + sp.presentation.generators[j] +
                                                      " does not rewrite to itself"});
      }
      for (std::size_t i = 0; i < opt.random_words; ++i) {
        ++s.checked;
        const Word w = random_word(rng, gens, 12);
        const Word u = w * cv.schreier.transversal[trace(cv.table, 0, w)].inverse();
        if (embed(sp, rewrite(cv.table, cv.schreier, u)) != free_reduce(u))
          s.failures.push_back({cc.label, {}, {}, "embed(rewrite(w)) != w for w = " +
                                                      format_word(u, census.knot.presentation.generators)});
        const Word uw = random_word(rng, sp.embedding.size(), 6);
        if (rewrite(cv.table, cv.schreier, embed(sp, uw)) != free_reduce(uw))
          s.failures.push_back({cc.label, {}, {}, "rewrite(embed(u)) != u for u = " +
                                                      format_word(uw, sp.presentation.generators)});
      }
    }
  }

  void universal_property() {
    auto &s = add(suite::kUniversalProperty, "universal property of U/M_U");
    auto rng = rng_for(5);
    for (const auto &cc : census.covers) {
      const auto &cv = cc.cover;
      const auto &inertia = cv.report.inertia;
      for (std::size_t qi = 0; qi < census.quotient_pool.size(); ++qi) {
        const auto &q = census.quotient_pool[qi];
        ++s.checked;
        bool all_trivial = true;
        for (const auto &d : inertia)
          all_trivial = all_trivial && q.evaluate(d.generator_in_G).is_identity();
        const auto phi = restrict_to_subgroup(q, cv.subgroup);
        const auto r = factoring_check(phi, cv.subgroup, inertia);
        if (r.factors != all_trivial)
          s.failures.push_back({cc.label, qi, {}, r.factors ? "factors although inertia survives"
                                                            : "does not factor although inertia dies"});
        else if (r.factors && (!r.induced || !r.induced->kills(cv.report.quotient_presentation)))
          s.failures.push_back({cc.label, qi, {}, "induced map does not respect U/M_U"});
        else if (!r.factors &&
                 (!r.violating || q.evaluate(inertia.at(*r.violating).generator_in_G).is_identity()))
          s.failures.push_back({cc.label, qi, {}, "witness datum is not violating"});
      }
      for (auto p : opt.primes) {
        const auto basis = h1_basis(cv.subgroup.presentation, p);
        const std::size_t ngen = cv.subgroup.presentation.generator_count();
        for (std::size_t t = 0; t < opt.random_characters; ++t) {
          ++s.checked;
          FpVector v(ngen, 0);
          for (const auto &b : basis.basis) {
            const std::uint32_t coeff = static_cast<std::uint32_t>(rng() % p);
            for (std::size_t j = 0; j < ngen; ++j)
              v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t{coeff} * b[j]) % p);
          }
          bool kills = true;
          for (const auto &d : inertia) {
            long dot = 0;
            const auto ev = exponent_vector(d.generator_in_U, ngen);
            for (std::size_t j = 0; j < ngen; ++j)
              dot = (dot + ev[j] * static_cast<long>(v[j])) % static_cast<long>(p);
            kills = kills && dot == 0;
          }
          const auto phi = cyclic_character(v, p);
          const auto r = factoring_check(phi, cv.subgroup, inertia);
          if (r.factors != kills)
            s.failures.push_back({cc.label, {}, p, "character disagrees with inertia pairing"});
        }
      }
    }
  }

  void ramification_image() {
    auto &s = add(suite::kRamificationImage, "image of M_U is the least normal subgroup killing inertia");
    for (const auto &cc : census.covers) {
      const auto &cv = cc.cover;
      for (std::size_t qi = 0; qi < census.quotient_pool.size(); ++qi) {
        ++s.checked;
        const auto phi = restrict_to_subgroup(census.quotient_pool[qi], cv.subgroup);
        const FiniteGroup F = image_group(phi);
        const auto direct = quotient_image_of_ramification(phi, cv.subgroup, cv.report.inertia, F);
        std::vector<FiniteGroup::Element> targets;
        for (const auto &d : cv.report.inertia)
          targets.push_back(*F.find(phi.evaluate(d.generator_in_U)));
        FiniteGroup::Subset least = F.whole();
        for (const auto &n : normal_subgroups(F))
          if (std::all_of(targets.begin(), targets.end(), [&](auto e) { return n[e]; }))
            least = FiniteGroup::intersection(least, n);
        if (direct != least)
          s.failures.push_back({cc.label, qi, {}, "normal closure has order " +
                                                      std::to_string(FiniteGroup::size(direct)) +
                                                      ", least normal subgroup has order " +
                                                      std::to_string(FiniteGroup::size(least))});
      }
    }
  }

  void inflation() {
    auto &s = add(suite::kInflation, "unramified mod-p classes inflate bijectively from U/M_U");
    for (const auto &cc : census.covers) {
      const auto &cv = cc.cover;
      for (auto p : opt.primes) {
        ++s.checked;
        const auto r = inflation_check(cv.subgroup, cv.report.quotient_presentation, cv.report.inertia, p);
        std::ostringstream msg;
        if (!r.inflation_bijective)
          msg << "inflation not bijective; ";
        if (r.dim_unramified != r.dim_h1_quotient)
          msg << "unramified " << r.dim_unramified << " != quotient " << r.dim_h1_quotient << "; ";
        if (r.dim_h1_quotient != fp_dim_from_invariants(cv.report.h1_quotient, p))
          msg << "quotient dimension disagrees with Smith form; ";
        if (r.dim_h1_U != fp_dim_from_invariants(cv.report.h1_U, p))
          msg << "H1(U) dimension disagrees with Smith form; ";
        const std::size_t ngen = cv.subgroup.presentation.generator_count();
        for (const auto &b : unramified_subspace(cv.subgroup, cv.report.inertia, p).basis)
          for (const auto &d : cv.report.inertia) {
            const auto ev = exponent_vector(d.generator_in_U, ngen);
            long dot = 0;
            for (std::size_t j = 0; j < ngen; ++j)
              dot = (dot + ev[j] * static_cast<long>(b[j])) % static_cast<long>(p);
            if (dot != 0)
              msg << "basis vector does not kill inertia; ";
          }
        if (!msg.str().empty())
          s.failures.push_back({cc.label, {}, p, msg.str()});
      }
    }
  }

  void profinite() {
    const SuiteResult &inf = suites.back();
    auto &s = add(suite::kProfinite, "continuous unramified classes of the profinite completion");
    s.checked = inf.checked;
    s.note = kProfiniteNote;
    if (!inf.passed())
      s.failures.push_back({"", {}, {}, "depends on the inflation suite, which failed"});
  }

  void closure_shadows() {
    auto &s = add(suite::kClosureShadows, "closures of inertia intersections and of ramification in G/N");
    auto rng = rng_for(9);
    for (const auto &cc : census.covers) {
      const auto &cv = cc.cover;
      for (std::size_t qi = 0; qi < census.quotient_pool.size(); ++qi) {
        const auto tableN = intersection_kernel_table(census.knot.presentation, census.quotient_pool[qi],
                                                      cv.table, opt.max_shadow_order);
        if (!tableN) {
          ++s.skipped;
          continue;
        }
        ++s.checked;
        std::vector<Word> gs(cv.schreier.transversal.begin(), cv.schreier.transversal.end());
        while (gs.size() < opt.min_shadow_representatives)
          gs.push_back(random_word(rng, census.knot.presentation.generator_count(), 8));
        const auto r = closure_shadow_check(census.knot, cv.table, *tableN, gs);
        if (!r.passed())
          s.failures.push_back({cc.label, qi, {}, std::string(to_string(r.status)) + ": " + r.detail});
      }
    }
    if (s.skipped)
      s.note = std::to_string(s.skipped) + " pairs skipped: |G/N| above " +
               std::to_string(opt.max_shadow_order);
  }

  void transport() {
    auto &s = add(suite::kTransport, "meridian-preserving isomorphisms transport inertia families");
    auto rng = rng_for(10);
    std::size_t preserving = 0, rejected = 0;
    for (std::size_t qi = 0; qi < census.quotient_pool.size(); ++qi) {
      const auto &q = census.quotient_pool[qi];
      if (image_group(q).order() > opt.max_transport_order) {
        ++s.skipped;
        continue;
      }
      auto autos = conjugation_automorphisms(q);
      std::shuffle(autos.begin(), autos.end(), rng);
      if (autos.size() > opt.transport_samples)
        autos.resize(opt.transport_samples);
      for (const auto &iso : autos) {
        ++s.checked;
        if (auto y = find_meridian_conjugator(q, meridian(), q, meridian(), iso)) {
          ++preserving;
          const auto r = inertia_transport_check(q, meridian(), q, meridian(), iso, *y);
          if (!r.passed())
            s.failures.push_back({"", qi, {}, std::string(to_string(r.status)) + ": " + r.detail});
        } else {
          ++rejected;
          const auto r = inertia_transport_check(q, meridian(), q, meridian(), iso, Perm(q.degree));
          if (r.status != TransportStatus::MeridianClassNotPreserved)
            s.failures.push_back({"", qi, {}, std::string("non-preserving automorphism gave ") +
                                                  to_string(r.status)});
        }
      }
    }
    s.note = std::to_string(preserving) + " preserving, " + std::to_string(rejected) + " rejected";
    if (s.skipped)
      s.note += ", " + std::to_string(s.skipped) + " images above order " +
                std::to_string(opt.max_transport_order) + " skipped";
  }
};

} // namespace

SuiteReport run_suites(const Census &census, const SuiteOptions &options) {
  for (auto p : options.primes)
    require_prime(p);
  Runner run{census, options, {}};
  run.suites.reserve(10);
  run.orbit_partition();
  run.cyclic_inertia();
  run.deficiency();
  run.rewrite_consistency();
  run.universal_property();
  run.ramification_image();
  run.inflation();
  run.profinite();
  run.closure_shadows();
  run.transport();
  return {census.knot.label, census.covers.size(), census.quotient_pool.size(), std::move(run.suites)};
}

SuiteResult run_suite(const Census &census, const std::string &name, const SuiteOptions &options) {
  for (auto p : options.primes)
    require_prime(p);
  Runner run{census, options, {}};
  run.suites.reserve(2);
  if (name == suite::kOrbitPartition)
    run.orbit_partition();
  else if (name == suite::kCyclicInertia)
    run.cyclic_inertia();
  else if (name == suite::kDeficiency)
    run.deficiency();
  else if (name == suite::kRewriteConsistency)
    run.rewrite_consistency();
  else if (name == suite::kUniversalProperty)
    run.universal_property();
  else if (name == suite::kRamificationImage)
    run.ramification_image();
  else if (name == suite::kInflation)
    run.inflation();
  else if (name == suite::kProfinite) {
    run.inflation();
    run.profinite();
  } else if (name == suite::kClosureShadows)
    run.closure_shadows();
  else if (name == suite::kTransport)
    run.transport();
  else
    throw std::invalid_argument("unknown suite " + name);
  return std::move(run.suites.back());
}

} // namespace ramikit
