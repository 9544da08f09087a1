#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ramikit/perm.hpp"
#include "ramikit/word.hpp"

namespace ramikit {

class CosetTable;

/// Finite group given by its right Cayley graph on a generating set. Elements are indices in
/// breadth-first order from the identity (index 0). Brute force throughout: meant for groups of
/// a few thousand elements.
class FiniteGroup {
public:
  using Element = std::uint32_t;
  using Subset = std::vector<bool>;

  /// Closure of permutation generators. Throws std::length_error above `max_order` elements.
  explicit FiniteGroup(std::vector<Perm> generators, std::size_t max_order = 100'000);

  /// G/N from the coset table of a normal subgroup N: coset c is the element N t_c.
  /// The caller guarantees normality.
  static FiniteGroup from_regular_action(const CosetTable &table);

  std::size_t order() const { return words_.size(); }
  std::size_t generator_count() const { return ncols_ / 2; }
  static constexpr Element identity() { return 0; }

  Element generator(std::size_t i) const { return right_[0][2 * i]; }
  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const { return inverse_[a]; }
  Element conjugate_by(Element x, Element g) const; // g x g^-1
  Element power(Element a, long n) const;
  /// Image of a word in the generators.
  Element evaluate(const Word &w) const;
  const Word &word(Element e) const { return words_[e]; }

  /// Only for groups built from permutations.
  std::optional<Element> find(const Perm &p) const;
  const Perm &perm(Element e) const { return perms_.at(e); }

  Subset empty_subset() const { return Subset(order(), false); }
  Subset singleton_identity() const;
  Subset whole() const { return Subset(order(), true); }
  static std::size_t size(const Subset &s);
  static std::vector<Element> elements(const Subset &s);
  static Subset intersection(const Subset &a, const Subset &b);
  static bool contains(const Subset &big, const Subset &small);

  Subset subgroup_generated(std::span<const Element> generators) const;
  Subset cyclic_subgroup(Element x) const;
  /// Normal closure of `elements` inside the subgroup generated by `ambient_generators`.
  Subset normal_closure(std::span<const Element> elements,
                        std::span<const Element> ambient_generators) const;
  /// Normal closure in the whole group.
  Subset normal_closure(std::span<const Element> elements) const;
  Subset conjugate(const Subset &s, Element g) const; // g S g^-1
  Subset image(const Subset &s, const std::vector<Element> &map) const;

  bool is_subgroup(const Subset &s) const;
  bool is_normal_in(const Subset &s, std::span<const Element> ambient_generators) const;

  std::vector<std::vector<Element>> conjugacy_classes() const;
  /// Every subgroup, found as joins of cyclic subgroups; sorted by size.
  std::vector<Subset> all_subgroups() const;

  std::vector<Element> generators() const;
  /// right_table()[e][column] = e * letter(column).
  const std::vector<std::vector<Element>> &right_table() const { return right_; }

private:
  FiniteGroup() = default;
  void finish();

  std::size_t ncols_ = 0;
  std::vector<std::vector<Element>> right_; // right_[e][column] = e * letter
  std::vector<Word> words_;
  std::vector<Element> inverse_;
  std::vector<Perm> perms_;
  std::unordered_map<Perm, Element, Perm::Hash> lookup_;
};

} // namespace ramikit
