#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramikit/linalg.hpp"
#include "ramikit/ramification.hpp"

namespace ramikit {

struct CensusCover {
  std::string label; // "low-index:<index>.<k>" or "cyclic:<n>"
  Cover cover;
};

struct Census {
  KnotGroupData knot;
  std::vector<CensusCover> covers;
  std::vector<FiniteQuotient> quotient_pool;
  bool partial = false;
  std::vector<std::string> warnings;
};

struct CensusOptions {
  std::size_t max_index = 1;
  std::size_t max_sym_degree = 1;
  std::size_t max_cosets = kDefaultMaxCosets;
  /// Generator-image tuples examined per degree before the search gives up.
  std::size_t search_budget = 20'000'000;
};

struct HomomorphismSearch {
  std::vector<FiniteQuotient> quotients; // canonical representatives, lexicographic order
  bool exhausted = true;                 // false if the budget ran out
  std::size_t tuples_examined = 0;
};

/// Every homomorphism to Sym(degree) up to simultaneous conjugation, skipping those whose image
/// has a common fixed point (they already occur in lower degree). Degree 1 gives the trivial map.
HomomorphismSearch homomorphism_search(const Presentation &pres, std::size_t degree,
                                       std::size_t budget);

/// Low-index covers of index <= max_index, then CyclicCover(n) for n <= max_index; the quotient
/// pool collects homomorphism_search for degrees 1..max_sym_degree.
/// Throws std::invalid_argument if max_index == 0 or max_sym_degree is outside 1..7.
Census build_census(const KnotGroupData &knot, const CensusOptions &options);

struct SuiteFailure {
  std::string cover; // empty when not tied to a cover
  std::optional<std::size_t> quotient;
  std::optional<std::uint32_t> prime;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::string theorem;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<SuiteFailure> failures;
  std::string note;

  bool passed() const { return failures.empty(); }
  const char *status() const { return passed() ? "pass" : "fail"; }
};

struct SuiteReport {
  std::string knot;
  std::size_t covers = 0;
  std::size_t quotients = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
  const SuiteResult *find(const std::string &name) const;
};

struct SuiteOptions {
  std::vector<std::uint32_t> primes{2, 3};
  std::uint64_t seed = 0;
  /// Closure shadows only run where |G/N| stays below this.
  std::size_t max_shadow_order = 2000;
  std::size_t min_shadow_representatives = 10;
  /// Transport only runs on images of at most this order.
  std::size_t max_transport_order = 120;
  std::size_t transport_samples = 8;
  std::size_t random_characters = 4;
  std::size_t random_words = 20;
};

/// Every suite appears in the report, in a fixed order. Deterministic for fixed inputs.
SuiteReport run_suites(const Census &census, const SuiteOptions &options);

/// One suite by name (see namespace suite). Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const Census &census, const std::string &name, const SuiteOptions &options);

namespace suite {
inline constexpr const char *kOrbitPartition = "orbit_partition";
inline constexpr const char *kCyclicInertia = "cyclic_inertia";
inline constexpr const char *kDeficiency = "deficiency";
inline constexpr const char *kRewriteConsistency = "rewrite_consistency";
inline constexpr const char *kUniversalProperty = "universal_property";
inline constexpr const char *kRamificationImage = "ramification_image";
inline constexpr const char *kInflation = "inflation";
inline constexpr const char *kProfinite = "profinite_unramified";
inline constexpr const char *kClosureShadows = "closure_shadows";
inline constexpr const char *kTransport = "transport";
} // namespace suite

/// Character to Z/p, realized as translations of {0..p-1}: generator j acts as x -> x + values[j].
FiniteQuotient cyclic_character(const FpVector &values, std::uint32_t p);

/// Normal subgroups of F, by unions of conjugacy classes.
std::vector<FiniteGroup::Subset> normal_subgroups(const FiniteGroup &F);

/// Automorphisms of q(G) induced by conjugation in Sym(degree), as generator images; distinct.
std::vector<std::vector<Perm>> conjugation_automorphisms(const FiniteQuotient &q);

} // namespace ramikit
