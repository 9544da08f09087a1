#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ramikit/coset_table.hpp"
#include "ramikit/presentation.hpp"

namespace ramikit {

struct SchreierData {
  /// transversal[c] is the shortlex-least reduced word taking coset 0 to coset c.
  std::vector<Word> transversal;
  /// u_generator[c][i]: U-generator index of t_c * x_i * t_{c.x_i}^-1, or -1 on tree edges.
  std::vector<std::vector<long>> u_generator;
  /// (coset, G-generator) of each U-generator.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t u_generator_count() const { return edges.size(); }
};

struct SubgroupPresentation {
  Presentation presentation;
  /// embedding[j] is U-generator j as a reduced word in G.
  std::vector<Word> embedding;
  std::size_t index = 0;
  /// index * (number of G-generators): Schreier generators counting the trivial ones.
  std::size_t schreier_generator_count = 0;
  /// index * (number of G-relators), before empty rewrites are dropped.
  std::size_t raw_relator_count = 0;
};

SchreierData schreier_transversal(const CosetTable &table);

/// The Schreier element t_c * x * t_{c.x}^-1 for G-generator `gen`.
Word schreier_element(const SchreierData &sd, const CosetTable &table, std::size_t coset,
                      std::size_t gen);

/// U-generators are named <generator>_<coset, 1-based>.
SubgroupPresentation reidemeister_schreier(const Presentation &pres, const CosetTable &table,
                                           const SchreierData &sd);

/// Reidemeister rewriting of a word read from `start`; ends wherever the word leads.
Word rewrite_from(const CosetTable &table, const SchreierData &sd, std::size_t start, const Word &w);

/// Rewrites w in U into U-generators. Throws NotInSubgroup when w does not fix coset 0.
Word rewrite(const CosetTable &table, const SchreierData &sd, const Word &w);

/// Replaces each U-generator by its embedding; result reduced.
Word embed(const SubgroupPresentation &sp, const Word &u_word);

/// Presentation file text plus one `embed: <gen> = <G-word>` line per generator.
std::string format_subgroup_presentation(const SubgroupPresentation &sp,
                                         const std::vector<std::string> &g_generators);

} // namespace ramikit
