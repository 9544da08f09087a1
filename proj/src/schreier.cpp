#include "ramikit/schreier.hpp"

#include "ramikit/errors.hpp"

namespace ramikit {

SchreierData schreier_transversal(const CosetTable &table) {
  const std::size_t n = table.index();
  SchreierData sd;
  sd.transversal.assign(n, Word{});
  std::vector<bool> seen(n, false);
  // parent edge of each coset as (parent coset, column)
  std::vector<std::pair<std::size_t, std::size_t>> parent(n, {0, 0});
  std::vector<std::size_t> order{0};
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t c = order[k];
    for (std::size_t x = 0; x < table.column_count(); ++x) {
      const std::size_t d = table.act(c, x);
      if (seen[d])
        continue;
      seen[d] = true;
      parent[d] = {c, x};
      Word t = sd.transversal[c];
      t.push_back(Letter::from_column(x));
      sd.transversal[d] = std::move(t);
      order.push_back(d);
    }
  }
  if (order.size() != n)
    throw std::invalid_argument("coset table is not transitive");

  auto is_tree_edge = [&](std::size_t c, std::size_t x) {
    const std::size_t d = table.act(c, x);
    return (d != 0 && parent[d] == std::pair{c, x}) ||
           (c != 0 && parent[c] == std::pair{d, inverse_column(x)});
  };
  sd.u_generator.assign(n, std::vector<long>(table.generator_count(), -1));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < table.generator_count(); ++i)
      if (!is_tree_edge(c, 2 * i)) {
        sd.u_generator[c][i] = static_cast<long>(sd.edges.size());
        sd.edges.emplace_back(c, i);
      }
  return sd;
}

Word schreier_element(const SchreierData &sd, const CosetTable &table, std::size_t coset,
                      std::size_t gen) {
  Word w = sd.transversal[coset];
  w.push_back(Letter{static_cast<std::uint32_t>(gen), 1});
  return free_reduce(w * sd.transversal[table.act(coset, 2 * gen)].inverse());
}

Word rewrite_from(const CosetTable &table, const SchreierData &sd, std::size_t start, const Word &w) {
  Word out;
  std::size_t c = start;
  for (const auto &l : w) {
    if (l.sign > 0) {
      const long u = sd.u_generator[c][l.gen];
      if (u >= 0)
        out.push_reduced(Letter{static_cast<std::uint32_t>(u), 1});
      c = table.act(c, l);
    } else {
      const std::size_t d = table.act(c, l);
      const long u = sd.u_generator[d][l.gen];
      if (u >= 0)
        out.push_reduced(Letter{static_cast<std::uint32_t>(u), -1});
      c = d;
    }
  }
  return out;
}

Word rewrite(const CosetTable &table, const SchreierData &sd, const Word &w) {
  if (trace(table, 0, w) != 0)
    throw NotInSubgroup("word does not lie in the subgroup (it moves coset 1 to coset " +
                        std::to_string(trace(table, 0, w) + 1) + ")");
  return rewrite_from(table, sd, 0, w);
}

SubgroupPresentation reidemeister_schreier(const Presentation &pres, const CosetTable &table,
                                           const SchreierData &sd) {
  SubgroupPresentation sp;
  sp.index = table.index();
  sp.schreier_generator_count = table.index() * pres.generator_count();
  sp.raw_relator_count = table.index() * pres.relators.size();
  for (const auto &[c, i] : sd.edges) {
    sp.presentation.generators.push_back(pres.generators[i] + "_" + std::to_string(c + 1));
    sp.embedding.push_back(schreier_element(sd, table, c, i));
  }
  for (const auto &r : pres.relators)
    for (std::size_t c = 0; c < table.index(); ++c) {
      Word u = cyclically_reduce(rewrite_from(table, sd, c, r));
      if (!u.empty())
        sp.presentation.relators.push_back(std::move(u));
    }
  return sp;
}

Word embed(const SubgroupPresentation &sp, const Word &u_word) {
  Word out;
  for (const auto &l : u_word) {
    const Word &e = sp.embedding.at(l.gen);
    if (l.sign > 0)
      for (const auto &x : e)
        out.push_reduced(x);
    else
      for (auto it = e.letters().rbegin(); it != e.letters().rend(); ++it)
        out.push_reduced(it->inverse());
  }
  return out;
}

std::string format_subgroup_presentation(const SubgroupPresentation &sp,
                                         const std::vector<std::string> &g_generators) {
  std::string out = format_presentation(sp.presentation);
  for (std::size_t j = 0; j < sp.embedding.size(); ++j)
    out += "embed: " + sp.presentation.generators[j] + " = " +
           format_word(sp.embedding[j], g_generators) + "\n";
  return out;
}

} // namespace ramikit
