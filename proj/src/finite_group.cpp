#include "ramikit/finite_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ramikit/coset_table.hpp"

namespace ramikit {

FiniteGroup::FiniteGroup(std::vector<Perm> generators, std::size_t max_order) {
  if (generators.empty())
    throw std::invalid_argument("finite group needs at least one generator");
  const std::size_t degree = generators.front().degree();
  ncols_ = 2 * generators.size();
  std::vector<Perm> cols;
  for (const auto &g : generators) {
    cols.push_back(g);
    cols.push_back(g.inverse());
  }
  perms_.push_back(Perm(degree));
  words_.emplace_back();
  lookup_.emplace(perms_[0], 0);
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    std::vector<Element> row(ncols_);
    for (std::size_t x = 0; x < ncols_; ++x) {
      Perm p = perms_[k] * cols[x];
      auto [it, inserted] = lookup_.emplace(p, static_cast<Element>(perms_.size()));
      if (inserted) {
        if (perms_.size() >= max_order)
          throw std::length_error("finite group larger than " + std::to_string(max_order));
        Word w = words_[k];
        w.push_back(Letter::from_column(x));
        words_.push_back(std::move(w));
        perms_.push_back(std::move(p));
      }
      row[x] = it->second;
    }
    right_.push_back(std::move(row));
  }
  finish();
}

FiniteGroup FiniteGroup::from_regular_action(const CosetTable &table) {
  FiniteGroup g;
  g.ncols_ = table.column_count();
  g.right_.resize(table.index());
  for (std::size_t c = 0; c < table.index(); ++c)
    g.right_[c].assign(table.rows()[c].begin(), table.rows()[c].end());
  // words by BFS so that element e is reached from the identity by words_[e]
  g.words_.assign(table.index(), Word{});
  std::vector<bool> seen(table.index(), false);
  std::vector<Element> order{0};
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t x = 0; x < g.ncols_; ++x) {
      const Element d = g.right_[order[k]][x];
      if (!seen[d]) {
        seen[d] = true;
        g.words_[d] = g.words_[order[k]];
        g.words_[d].push_back(Letter::from_column(x));
        order.push_back(d);
      }
    }
  if (order.size() != table.index())
    throw std::invalid_argument("coset table is not transitive");
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  inverse_.assign(order(), 0);
  for (Element e = 0; e < order(); ++e)
    inverse_[e] = evaluate(words_[e].inverse());
}

FiniteGroup::Element FiniteGroup::multiply(Element a, Element b) const {
  for (const auto &l : words_[b])
    a = right_[a][l.column()];
  return a;
}

FiniteGroup::Element FiniteGroup::conjugate_by(Element x, Element g) const {
  return multiply(multiply(g, x), inverse_[g]);
}

FiniteGroup::Element FiniteGroup::power(Element a, long n) const {
  if (n < 0)
    return power(inverse_[a], -n);
  Element r = identity();
  for (long i = 0; i < n; ++i)
    r = multiply(r, a);
  return r;
}

FiniteGroup::Element FiniteGroup::evaluate(const Word &w) const {
  Element e = identity();
  for (const auto &l : w) {
    if (l.column() >= ncols_)
      throw std::out_of_range("word uses a generator outside the group");
    e = right_[e][l.column()];
  }
  return e;
}

std::optional<FiniteGroup::Element> FiniteGroup::find(const Perm &p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

FiniteGroup::Subset FiniteGroup::singleton_identity() const {
  Subset s = empty_subset();
  s[0] = true;
  return s;
}

std::size_t FiniteGroup::size(const Subset &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

std::vector<FiniteGroup::Element> FiniteGroup::elements(const Subset &s) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i])
      out.push_back(static_cast<Element>(i));
  return out;
}

FiniteGroup::Subset FiniteGroup::intersection(const Subset &a, const Subset &b) {
  Subset out(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] && b[i];
  return out;
}

bool FiniteGroup::contains(const Subset &big, const Subset &small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (small[i] && !big[i])
      return false;
  return true;
}

FiniteGroup::Subset FiniteGroup::subgroup_generated(std::span<const Element> generators) const {
  Subset s = singleton_identity();
  std::vector<Element> queue{identity()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Element g : generators) {
      const Element y = multiply(queue[k], g);
      if (!s[y]) {
        s[y] = true;
        queue.push_back(y);
      }
    }
  return s;
}

FiniteGroup::Subset FiniteGroup::cyclic_subgroup(Element x) const {
  const Element gens[] = {x};
  return subgroup_generated(gens);
}

FiniteGroup::Subset FiniteGroup::normal_closure(std::span<const Element> elements,
                                                std::span<const Element> ambient_generators) const {
  std::vector<Element> gens(elements.begin(), elements.end());
  Subset closure = subgroup_generated(gens);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Element h : ambient_generators) {
      const Element c = conjugate_by(gens[k], h);
      if (!closure[c]) {
        gens.push_back(c);
        closure = subgroup_generated(gens);
      }
    }
  return closure;
}

FiniteGroup::Subset FiniteGroup::normal_closure(std::span<const Element> elements) const {
  const auto gens = generators();
  return normal_closure(elements, gens);
}

FiniteGroup::Subset FiniteGroup::conjugate(const Subset &s, Element g) const {
  Subset out = empty_subset();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i])
      out[conjugate_by(static_cast<Element>(i), g)] = true;
  return out;
}

FiniteGroup::Subset FiniteGroup::image(const Subset &s, const std::vector<Element> &map) const {
  Subset out = empty_subset();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i])
      out[map[i]] = true;
  return out;
}

bool FiniteGroup::is_subgroup(const Subset &s) const {
  if (!s[0])
    return false;
  const auto elems = elements(s);
  for (Element a : elems)
    for (Element b : elems)
      if (!s[multiply(a, b)])
        return false;
  return true;
}

bool FiniteGroup::is_normal_in(const Subset &s, std::span<const Element> ambient_generators) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i])
      for (Element h : ambient_generators)
        if (!s[conjugate_by(static_cast<Element>(i), h)])
          return false;
  return true;
}

std::vector<std::vector<FiniteGroup::Element>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<Element>> out;
  std::vector<bool> done(order(), false);
  const auto gens = generators();
  for (Element e = 0; e < order(); ++e) {
    if (done[e])
      continue;
    std::vector<Element> cls{e};
    done[e] = true;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (Element g : gens) {
        const Element c = conjugate_by(cls[k], g);
        if (!done[c]) {
          done[c] = true;
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<FiniteGroup::Subset> FiniteGroup::all_subgroups() const {
  // cyclic subgroups, each with a single generator
  std::map<Subset, std::vector<Element>> found;
  std::vector<std::pair<Subset, Element>> cyclic;
  for (Element e = 0; e < order(); ++e) {
    Subset c = cyclic_subgroup(e);
    if (found.emplace(c, std::vector<Element>{e}).second)
      cyclic.emplace_back(std::move(c), e);
  }
  std::vector<std::pair<Subset, std::vector<Element>>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::pair<Subset, std::vector<Element>>> next;
    for (const auto &[s, gens] : frontier)
      for (const auto &[c, x] : cyclic) {
        if (s[x])
          continue;
        std::vector<Element> g2 = gens;
        g2.push_back(x);
        Subset j = subgroup_generated(g2);
        if (found.emplace(j, g2).second)
          next.emplace_back(std::move(j), std::move(g2));
      }
    frontier = std::move(next);
  }
  std::vector<Subset> out;
  for (auto &[s, g] : found)
    out.push_back(s);
  std::stable_sort(out.begin(), out.end(),
                   [](const Subset &a, const Subset &b) { return size(a) < size(b); });
  return out;
}

std::vector<FiniteGroup::Element> FiniteGroup::generators() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < generator_count(); ++i)
    out.push_back(generator(i));
  return out;
}

} // namespace ramikit
