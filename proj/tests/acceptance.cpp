// Runs the ten acceptance criteria and prints one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "ramikit/harness.hpp"
#include "ramikit/linalg.hpp"
#include "ramikit/report.hpp"
#include "ramikit/shadows.hpp"

using namespace ramikit;

namespace {

const char *const kTrefoil = "label: trefoil\ngens: a b\nrel: abaBAB\nmeridian: a\nlongitude: baabAAAA\n";
const char *const kFigureEight = "label: fig8\ngens: a b\nrel: AbaBabABaB\nmeridian: a\n";
// 5_1, the (2,5) torus knot
const char *const kCinquefoil = "label: 5_1\ngens: a b\nrel: ababaBABAB\nmeridian: a\n";

KnotGroupData knot(const char *text) { return parse_presentation(text); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Exact comparison of the quotient's invariants against the expected torsion, the determinantal
// divisors of its exponent matrix, and the cyclotomic norm of the Alexander polynomial.
Outcome branched_homology(const KnotGroupData &k, std::size_t n, const std::vector<long> &expected,
                          const std::vector<long> &delta) {
  const auto cover = ramify(k, CyclicCover{n});
  const auto &h = cover.report.h1_quotient;
  std::vector<long> got;
  for (const auto &t : h.torsion)
    got.push_back(t.get_si());

  const auto m = exponent_matrix(cover.report.quotient_presentation);
  oracle::Matrix rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.emplace_back();
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows.back().push_back(m(i, j));
  }
  std::vector<long> from_oracle;
  std::size_t zero_factors = 0;
  for (const auto &d : oracle::invariant_factors(rows))
    if (d == 0)
      ++zero_factors;
    else if (d != 1)
      from_oracle.push_back(d.get_si());
  const std::size_t oracle_free = m.cols() - (oracle::invariant_factors(rows).size() - zero_factors);

  const mpz_class norm = oracle::cyclotomic_norm(delta, n);
  const auto order = h.order();
  std::ostringstream d;
  d << k.label << " n=" << n << ": " << h.to_string() << ", |Delta| product " << norm;
  const bool ok = h.free_rank == 0 && got == expected && from_oracle == expected && oracle_free == 0 &&
                  order && *order == norm;
  return {ok, d.str()};
}

Census census_for(const char *text, std::size_t max_index, std::size_t max_sym) {
  return build_census(knot(text), {.max_index = max_index, .max_sym_degree = max_sym});
}

Outcome suite_over(const std::vector<const Census *> &censuses, const std::string &name,
                   const SuiteOptions &opt, std::size_t *checked_out = nullptr) {
  Outcome o{true, ""};
  std::size_t checked = 0, skipped = 0;
  for (const auto *c : censuses) {
    if (c->partial) {
      o.pass = false;
      o.detail += c->knot.label + " census partial; ";
    }
    const auto r = run_suite(*c, name, opt);
    checked += r.checked;
    skipped += r.skipped;
    for (const auto &f : r.failures) {
      o.pass = false;
      o.detail += c->knot.label + " " + f.cover + ": " + f.detail + "; ";
    }
    if (!r.note.empty() && name != suite::kProfinite)
      o.detail += c->knot.label + ": " + r.note + "; ";
  }
  o.detail = std::to_string(checked) + " checks, " + std::to_string(skipped) + " skipped; " + o.detail;
  while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';'))
    o.detail.pop_back();
  if (checked_out)
    *checked_out = checked;
  return o;
}

std::string run_cli(const std::string &args) {
  std::string out;
  FILE *p = popen((std::string(RAMIKIT_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!p)
    return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(p);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
    out += "<exit " + std::to_string(WEXITSTATUS(status)) + ">";
  return out;
}

} // namespace

int main() {
  const auto trefoil = knot(kTrefoil);
  const auto fig8 = knot(kFigureEight);

  struct Criterion {
    int number;
    std::string title;
    double limit_seconds; // 0: none
    std::function<Outcome()> run;
  };

  // built lazily by the first criterion that needs them, timed there
  std::optional<Census> tre4, fig4;
  auto censuses = [&] {
    if (!tre4)
      tre4 = census_for(kTrefoil, 4, 5);
    if (!fig4)
      fig4 = census_for(kFigureEight, 4, 5);
    return std::vector<const Census *>{&*tre4, &*fig4};
  };

  std::vector<Criterion> criteria{
      {1, "trivial cover collapse", 1.0,
       [&] {
         Outcome o{true, ""};
         for (const auto *k : {&trefoil, &fig8}) {
           const auto cover = ramify(*k, CyclicCover{1});
           const auto idx = todd_coxeter(cover.report.quotient_presentation, {}).index();
           o.pass = o.pass && idx == 1;
           o.detail += (o.detail.empty() ? "" : "; ") + k->label + ": " + std::to_string(idx) + " coset(s)";
         }
         return o;
       }},
      {2, "branched-cover homology of the trefoil", 5.0,
       [&] {
         const auto a = branched_homology(trefoil, 2, {3}, {1, -1, 1});
         const auto b = branched_homology(trefoil, 3, {2, 2}, {1, -1, 1});
         return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
       }},
      {3, "branched-cover homology of the figure-eight", 5.0,
       [&] { return branched_homology(fig8, 2, {5}, {1, -3, 1}); }},
      {4, "unramified classes equal classes of U/M_U, p in {2,3,5,7}", 30.0,
       [&] {
         return suite_over(censuses(), suite::kInflation, {.primes = {2, 3, 5, 7}});
       }},
      {5, "image of M_U is the least normal subgroup killing inertia", 60.0,
       [&] { return suite_over(censuses(), suite::kRamificationImage, {.primes = {2}}); }},
      {6, "universal property of U/M_U", 0.0,
       [&] { return suite_over(censuses(), suite::kUniversalProperty, {.primes = {2, 3, 5, 7}}); }},
      {7, "closure shadows in G/N, |G/N| <= 2000, >= 10 representatives", 120.0,
       [&] {
         std::size_t checked = 0;
         auto o = suite_over(censuses(), suite::kClosureShadows,
                             {.primes = {2}, .max_shadow_order = 2000, .min_shadow_representatives = 10},
                             &checked);
         o.pass = o.pass && checked > 0;
         return o;
       }},
      {8, "meridian-preserving isomorphisms transport inertia and ramification", 0.0,
       [&] {
         Outcome o{true, ""};
         // S_3 image of the trefoil: every automorphism is inner and preserves the meridian class
         const FiniteQuotient s3{3, {Perm::from_cycles("(1 2)", 3), Perm::from_cycles("(2 3)", 3)}};
         std::size_t passed = 0;
         const auto s3_autos = conjugation_automorphisms(s3);
         for (const auto &iso : s3_autos) {
           const auto y = find_meridian_conjugator(s3, trefoil.meridian, s3, trefoil.meridian, iso);
           if (!y) {
             o.pass = false;
             continue;
           }
           passed += inertia_transport_check(s3, trefoil.meridian, s3, trefoil.meridian, iso, *y).passed();
         }
         o.pass = o.pass && s3_autos.size() == 6 && passed == 6;
         o.detail = "S_3: " + std::to_string(passed) + "/" + std::to_string(s3_autos.size()) + " pass; ";

         // the trefoil has no Klein-four image: abelianization Z, and none turns up in Sym(4)
         bool klein_image = !abelianization(trefoil.presentation).is_infinite_cyclic();
         for (const auto &q : homomorphism_search(trefoil.presentation, 4, 1'000'000).quotients) {
           const auto F = image_group(q);
           bool exponent_two = F.order() == 4;
           for (FiniteGroup::Element e = 0; e < F.order() && exponent_two; ++e)
             exponent_two = F.multiply(e, e) == FiniteGroup::identity();
           klein_image = klein_image || exponent_two;
         }
         o.detail += klein_image ? "trefoil has a Klein-four image; " : "trefoil has no Klein-four image; ";

         // Klein-four image of Z^2 = <a,b | abAB> with meridian a
         const Word a{{0, 1}};
         const FiniteQuotient v4{4, {Perm::from_cycles("(1 2)(3 4)", 4), Perm::from_cycles("(1 3)(2 4)", 4)}};
         std::size_t preserving = 0, preserving_ok = 0, rejected = 0;
         const auto v4_autos = conjugation_automorphisms(v4);
         for (const auto &iso : v4_autos) {
           if (auto y = find_meridian_conjugator(v4, a, v4, a, iso)) {
             ++preserving;
             preserving_ok += inertia_transport_check(v4, a, v4, a, iso, *y).passed();
           } else {
             rejected += inertia_transport_check(v4, a, v4, a, iso, Perm(4)).status ==
                         TransportStatus::MeridianClassNotPreserved;
           }
         }
         o.pass = o.pass && !klein_image && v4_autos.size() == 6 && preserving == 2 &&
                  preserving_ok == 2 && rejected == 4;
         o.detail += "Klein-four image of Z^2 used instead: " + std::to_string(preserving_ok) + "/" +
                     std::to_string(preserving) + " preserving pass, " + std::to_string(rejected) +
                     " non-preserving rejected";
         return o;
       }},
      {9, "orbit partition, cyclic inertia, deficiency", 0.0,
       [&] {
         auto all = censuses();
         const auto five = census_for(kCinquefoil, 4, 1);
         all.push_back(&five);
         Outcome o{true, ""};
         for (const char *name : {suite::kOrbitPartition, suite::kCyclicInertia, suite::kDeficiency}) {
           auto r = suite_over(all, name, {.primes = {2}});
           o.pass = o.pass && r.pass;
           o.detail += (o.detail.empty() ? "" : " | ") + std::string(name) + ": " + r.detail;
         }
         return o;
       }},
      {10, "verify is byte-identical across runs", 0.0,
       [&] {
         const SuiteOptions opt{.primes = {2, 3, 5}, .seed = 7};
         const auto a = to_json(run_suites(census_for(kTrefoil, 3, 4), opt)).dump();
         const auto b = to_json(run_suites(census_for(kTrefoil, 3, 4), opt)).dump();
         const std::string args =
             std::string("verify ") + RAMIKIT_DATA + "/trefoil.knot --max-index 3 --max-sym 4 -p 2,3,5 --seed 7";
         const auto c1 = run_cli(args), c2 = run_cli(args);
         const bool cli_ok = c1 == c2 && c1.find("<exit") == std::string::npos && !c1.empty();
         return Outcome{a == b && cli_ok, std::string("library ") + (a == b ? "identical" : "differs") +
                                               ", cli " + (cli_ok ? "identical" : "differs or failed")};
       }},
  };

  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0.0 || secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.number << ": " << c.title
              << " (" << std::fixed << std::setprecision(2) << secs << " s";
    if (c.limit_seconds > 0)
      std::cout << ", limit " << c.limit_seconds << " s";
    std::cout << ") " << o.detail << (in_time ? "" : " [over time limit]") << "\n";
  }
  std::cout << (failures ? "FAILED: " + std::to_string(failures) + " criteria" : std::string("all criteria pass"))
            << "\n";
  return failures ? 1 : 0;
}
