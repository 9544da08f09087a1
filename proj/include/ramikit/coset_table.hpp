#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ramikit/perm.hpp"
#include "ramikit/presentation.hpp"

namespace ramikit {

struct GeneratorWords {
  std::vector<Word> words;
  friend bool operator==(const GeneratorWords &, const GeneratorWords &) = default;
};

/// Kernel of G -> Z/degree given by meridian degree.
struct CyclicCover {
  std::size_t degree = 1;
  friend bool operator==(const CyclicCover &, const CyclicCover &) = default;
};

/// Stabilizer of `point` (0-based) under a transitive action given by generator images.
struct PermRep {
  std::vector<Perm> images;
  std::size_t point = 0;
  friend bool operator==(const PermRep &, const PermRep &) = default;
};

using SubgroupSpec = std::variant<GeneratorWords, CyclicCover, PermRep>;

std::string describe(const SubgroupSpec &spec, const std::vector<std::string> &generators);

/// Complete right action of the generators on the cosets of a subgroup U.
/// Cosets are 0-based here; coset 0 is U. Column 2i is generator i, column 2i+1 its inverse.
class CosetTable {
public:
  CosetTable() = default;
  /// rows[c][column]; throws std::invalid_argument unless every column is a permutation.
  CosetTable(std::size_t generator_count, std::vector<std::vector<std::uint32_t>> rows,
             SubgroupSpec spec);

  std::size_t index() const { return rows_.size(); }
  std::size_t generator_count() const { return generator_count_; }
  std::size_t column_count() const { return 2 * generator_count_; }

  std::uint32_t act(std::size_t coset, std::size_t column) const { return rows_[coset][column]; }
  std::uint32_t act(std::size_t coset, Letter l) const { return rows_[coset][l.column()]; }
  const std::vector<std::vector<std::uint32_t>> &rows() const { return rows_; }
  const SubgroupSpec &spec() const { return spec_; }

  friend bool operator==(const CosetTable &a, const CosetTable &b) {
    return a.generator_count_ == b.generator_count_ && a.rows_ == b.rows_;
  }

private:
  std::size_t generator_count_ = 0;
  std::vector<std::vector<std::uint32_t>> rows_;
  SubgroupSpec spec_;
};

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// kDefaultMaxCosets unless RAMIKIT_MAX_COSETS holds a positive integer.
std::size_t default_max_cosets();

/// HLT enumeration with coincidence processing. The result is in BFS standard form.
/// Throws CosetLimitExceeded when more than `max_cosets` cosets are alive at once.
CosetTable todd_coxeter(const Presentation &pres, std::span<const Word> subgroup_generators,
                        std::size_t max_cosets = kDefaultMaxCosets);

/// Throws InvalidSubgroupSpec (or IncompatiblePermRep) for unusable specs.
CosetTable build_coset_table(const KnotGroupData &knot, const SubgroupSpec &spec,
                             std::size_t max_cosets = kDefaultMaxCosets);

/// Homomorphism G -> Z sending the meridian to 1, as generator degrees; nullopt if none exists
/// (free rank of the abelianization is not 1 or the meridian does not map to a generator of Z).
std::optional<std::vector<long>> meridian_degrees(const KnotGroupData &knot);

std::size_t trace(const CosetTable &table, std::size_t start, const Word &w);

/// Generator i acts as the permutation c -> act(c, 2i).
std::vector<Perm> generator_permutations(const CosetTable &table);
Perm word_permutation(const CosetTable &table, const Word &w);

/// Relabels cosets in breadth-first order from `base`, columns scanned in order.
CosetTable standardize(const CosetTable &table, std::size_t base = 0);

/// One table per conjugacy class of subgroups of index <= max_index, sorted by index, each in
/// standard form with spec PermRep(table action, point 0).
std::vector<CosetTable> low_index_subgroups(const Presentation &pres, std::size_t max_index);

/// Description of the first violated table invariant, or nullopt.
std::optional<std::string> check_table(const CosetTable &table, const Presentation &pres,
                                       std::span<const Word> subgroup_generators = {});

} // namespace ramikit
