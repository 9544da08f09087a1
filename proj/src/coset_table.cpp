#include "ramikit/coset_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "ramikit/errors.hpp"
#include "ramikit/linalg.hpp"

namespace ramikit {

std::string describe(const SubgroupSpec &spec, const std::vector<std::string> &generators) {
  if (const auto *c = std::get_if<CyclicCover>(&spec))
    return "cyclic " + std::to_string(c->degree);
  if (const auto *p = std::get_if<PermRep>(&spec)) {
    std::string out = "perm ";
    for (std::size_t i = 0; i < p->images.size(); ++i) {
      if (i)
        out += ';';
      out += (i < generators.size() ? generators[i] : "?") + "=" + p->images[i].to_cycles();
    }
    return out + " point " + std::to_string(p->point + 1);
  }
  const auto &g = std::get<GeneratorWords>(spec);
  std::string out = "gens ";
  for (std::size_t i = 0; i < g.words.size(); ++i)
    out += (i ? "," : "") + format_word(g.words[i], generators);
  return out;
}

CosetTable::CosetTable(std::size_t generator_count, std::vector<std::vector<std::uint32_t>> rows,
                       SubgroupSpec spec)
    : generator_count_(generator_count), rows_(std::move(rows)), spec_(std::move(spec)) {
  const std::size_t n = rows_.size();
  if (n == 0)
    throw std::invalid_argument("coset table needs at least one coset");
  for (const auto &row : rows_)
    if (row.size() != 2 * generator_count_)
      throw std::invalid_argument("coset table row has wrong width");
  for (std::size_t col = 0; col < 2 * generator_count_; ++col) {
    std::vector<bool> hit(n, false);
    for (std::size_t c = 0; c < n; ++c) {
      const auto t = rows_[c][col];
      if (t >= n || hit[t])
        throw std::invalid_argument("coset table column is not a permutation");
      hit[t] = true;
      if (rows_[t][inverse_column(col)] != c)
        throw std::invalid_argument("coset table inverse columns disagree");
    }
  }
}

std::size_t default_max_cosets() {
  if (const char *env = std::getenv("RAMIKIT_MAX_COSETS")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return kDefaultMaxCosets;
}

namespace {

std::vector<std::size_t> columns_of(const Word &w) {
  std::vector<std::size_t> cols;
  cols.reserve(w.size());
  for (const auto &l : w)
    cols.push_back(l.column());
  return cols;
}

class Enumerator {
public:
  Enumerator(std::size_t columns, std::size_t max_cosets) : ncols_(columns), max_(max_cosets) {
    if (max_ == 0)
      throw CosetLimitExceeded(max_);
    parent_.push_back(0);
    table_.assign(ncols_, -1);
    live_ = 1;
  }

  std::int64_t &entry(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  std::size_t allocated() const { return parent_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == c; }

  void define(std::size_t c, std::size_t x) {
    if (live_ >= max_)
      throw CosetLimitExceeded(max_);
    const std::size_t id = parent_.size();
    parent_.push_back(id);
    table_.resize(table_.size() + ncols_, -1);
    entry(c, x) = static_cast<std::int64_t>(id);
    entry(id, inverse_column(x)) = static_cast<std::int64_t>(c);
    ++live_;
  }

  std::size_t find(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root)
      root = parent_[root];
    while (parent_[c] != root) {
      const std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void scan_and_fill(std::size_t alpha, const std::vector<std::size_t> &w) {
    if (w.empty())
      return;
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size(); // exclusive upper end of the unscanned part
    for (;;) {
      while (i < j && entry(f, w[i]) >= 0) {
        f = static_cast<std::size_t>(entry(f, w[i]));
        ++i;
      }
      if (i == j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j > i && entry(b, inverse_column(w[j - 1])) >= 0) {
        b = static_cast<std::size_t>(entry(b, inverse_column(w[j - 1])));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = static_cast<std::int64_t>(b);
        entry(b, inverse_column(w[i])) = static_cast<std::int64_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t g = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < ncols_; ++x) {
        if (entry(g, x) < 0)
          continue;
        const auto d = static_cast<std::size_t>(entry(g, x));
        entry(d, inverse_column(x)) = -1;
        const std::size_t mu = find(g);
        const std::size_t nu = find(d);
        if (entry(mu, x) >= 0) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)), queue);
        } else if (entry(nu, inverse_column(x)) >= 0) {
          merge(mu, static_cast<std::size_t>(entry(nu, inverse_column(x))), queue);
        } else {
          entry(mu, x) = static_cast<std::int64_t>(nu);
          entry(nu, inverse_column(x)) = static_cast<std::int64_t>(mu);
        }
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> compact() {
    std::vector<std::int64_t> label(parent_.size(), -1);
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (alive(c))
        label[c] = static_cast<std::int64_t>(n++);
    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(ncols_));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c))
        continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        const auto t = entry(c, x);
        if (t < 0)
          throw std::logic_error("enumeration finished with an undefined entry");
        rows[label[c]][x] = static_cast<std::uint32_t>(label[find(static_cast<std::size_t>(t))]);
      }
    }
    return rows;
  }

private:
  void merge(std::size_t k, std::size_t l, std::deque<std::size_t> &queue) {
    k = find(k);
    l = find(l);
    if (k == l)
      return;
    if (k > l)
      std::swap(k, l);
    parent_[l] = k;
    --live_;
    queue.push_back(l);
  }

  std::size_t ncols_;
  std::size_t max_;
  std::vector<std::size_t> parent_;
  std::vector<std::int64_t> table_;
  std::size_t live_ = 0;
};

Perm images_word(const std::vector<Perm> &images, std::size_t degree, const Word &w) {
  std::vector<Perm> inverses;
  inverses.reserve(images.size());
  for (const auto &p : images)
    inverses.push_back(p.inverse());
  Perm out(degree);
  for (const auto &l : w)
    out = out * (l.sign > 0 ? images[l.gen] : inverses[l.gen]);
  return out;
}

CosetTable table_from_perm_rep(const Presentation &pres, const PermRep &spec) {
  const std::size_t g = pres.generator_count();
  if (spec.images.size() != g)
    throw InvalidSubgroupSpec("permutation spec assigns " + std::to_string(spec.images.size()) +
                              " images for " + std::to_string(g) + " generators");
  const std::size_t k = g ? spec.images.front().degree() : 1;
  for (const auto &p : spec.images)
    if (p.degree() != k)
      throw InvalidSubgroupSpec("permutation images have different degrees");
  if (k == 0 || spec.point >= k)
    throw InvalidSubgroupSpec("base point outside 1.." + std::to_string(k));
  for (const auto &r : pres.relators)
    if (!images_word(spec.images, k, r).is_identity())
      throw IncompatiblePermRep("relator " + format_word(r, pres.generators) +
                                " does not map to the identity");
  if (!is_transitive(spec.images, k))
    throw InvalidSubgroupSpec("permutation action is not transitive");

  // keep the caller's labels, except that the base point becomes coset 0
  auto lab = [&](std::size_t p) -> std::uint32_t {
    if (p == spec.point)
      return 0;
    if (p == 0)
      return static_cast<std::uint32_t>(spec.point);
    return static_cast<std::uint32_t>(p);
  };
  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(2 * g));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t i = 0; i < g; ++i) {
      rows[lab(p)][2 * i] = lab(spec.images[i](p));
      rows[lab(spec.images[i](p))][2 * i + 1] = lab(p);
    }
  return CosetTable(g, std::move(rows), spec);
}

} // namespace

CosetTable todd_coxeter(const Presentation &pres, std::span<const Word> subgroup_generators,
                        std::size_t max_cosets) {
  const std::size_t ncols = 2 * pres.generator_count();
  std::vector<std::vector<std::size_t>> rels;
  for (const auto &r : pres.relators)
    rels.push_back(columns_of(free_reduce(r)));
  std::vector<Word> gens_reduced;
  for (const auto &w : subgroup_generators) {
    if (w.max_generator() >= pres.generator_count() && !w.empty())
      throw InvalidSubgroupSpec("subgroup generator uses an undeclared generator");
    gens_reduced.push_back(free_reduce(w));
  }

  Enumerator e(ncols, max_cosets);
  for (const auto &w : gens_reduced)
    e.scan_and_fill(0, columns_of(w));
  for (std::size_t a = 0; a < e.allocated(); ++a) {
    for (const auto &r : rels) {
      if (!e.alive(a))
        break;
      e.scan_and_fill(a, r);
    }
    if (!e.alive(a))
      continue;
    for (std::size_t x = 0; x < ncols; ++x)
      if (e.entry(a, x) < 0)
        e.define(a, x);
  }
  CosetTable raw(pres.generator_count(), e.compact(), GeneratorWords{gens_reduced});
  return standardize(raw, 0);
}

std::optional<std::vector<long>> meridian_degrees(const KnotGroupData &knot) {
  const auto &pres = knot.presentation;
  const AbelianizationMap ab(pres);
  if (ab.invariants().free_rank != 1)
    return std::nullopt;
  const Integer m = ab.image(knot.meridian).free.front();
  if (abs(m) != 1)
    return std::nullopt;
  std::vector<long> degrees(pres.generator_count());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::vector<long> unit(pres.generator_count(), 0);
    unit[i] = 1;
    const Integer d = ab.image(unit).free.front() * m;
    if (!d.fits_slong_p())
      throw std::overflow_error("generator degree out of range");
    degrees[i] = d.get_si();
  }
  return degrees;
}

CosetTable build_coset_table(const KnotGroupData &knot, const SubgroupSpec &spec,
                             std::size_t max_cosets) {
  const auto &pres = knot.presentation;
  if (const auto *c = std::get_if<CyclicCover>(&spec)) {
    if (c->degree < 1)
      throw InvalidSubgroupSpec("cyclic cover degree must be at least 1");
    if (c->degree > max_cosets)
      throw CosetLimitExceeded(max_cosets);
    const auto degrees = meridian_degrees(knot);
    if (!degrees)
      throw InvalidSubgroupSpec(
          "cyclic cover needs an abelianization of free rank 1 with the meridian mapping to a generator");
    const long n = static_cast<long>(c->degree);
    std::vector<std::vector<std::uint32_t>> rows(c->degree,
                                                 std::vector<std::uint32_t>(2 * pres.generator_count()));
    for (long k = 0; k < n; ++k)
      for (std::size_t i = 0; i < degrees->size(); ++i) {
        const long d = ((*degrees)[i] % n + n) % n;
        rows[k][2 * i] = static_cast<std::uint32_t>((k + d) % n);
        rows[k][2 * i + 1] = static_cast<std::uint32_t>((k - d + n) % n);
      }
    return CosetTable(pres.generator_count(), std::move(rows), spec);
  }
  if (const auto *p = std::get_if<PermRep>(&spec))
    return table_from_perm_rep(pres, *p);
  const auto &words = std::get<GeneratorWords>(spec).words;
  for (const auto &w : words)
    for (const auto &l : w)
      if (l.gen >= pres.generator_count())
        throw InvalidSubgroupSpec("subgroup generator uses an undeclared generator");
  CosetTable t = todd_coxeter(pres, words, max_cosets);
  return CosetTable(t.generator_count(), t.rows(), spec);
}

std::size_t trace(const CosetTable &table, std::size_t start, const Word &w) {
  std::size_t c = start;
  for (const auto &l : w)
    c = table.act(c, l);
  return c;
}

std::vector<Perm> generator_permutations(const CosetTable &table) {
  std::vector<Perm> out;
  for (std::size_t i = 0; i < table.generator_count(); ++i) {
    std::vector<std::uint32_t> img(table.index());
    for (std::size_t c = 0; c < table.index(); ++c)
      img[c] = table.act(c, 2 * i);
    out.emplace_back(std::move(img));
  }
  return out;
}

Perm word_permutation(const CosetTable &table, const Word &w) {
  std::vector<std::uint32_t> img(table.index());
  for (std::size_t c = 0; c < table.index(); ++c)
    img[c] = static_cast<std::uint32_t>(trace(table, c, w));
  return Perm(std::move(img));
}

namespace {

std::vector<std::uint32_t> bfs_labels(const std::vector<std::vector<std::uint32_t>> &rows,
                                      std::size_t ncols, std::size_t base) {
  const std::uint32_t unset = ~0U;
  std::vector<std::uint32_t> label(rows.size(), unset);
  std::vector<std::size_t> order{base};
  label[base] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t x = 0; x < ncols; ++x) {
      const auto t = rows[order[k]][x];
      if (label[t] == unset) {
        label[t] = static_cast<std::uint32_t>(order.size());
        order.push_back(t);
      }
    }
  if (order.size() != rows.size())
    throw std::invalid_argument("coset table is not transitive");
  return label;
}

} // namespace

CosetTable standardize(const CosetTable &table, std::size_t base) {
  const auto label = bfs_labels(table.rows(), table.column_count(), base);
  std::vector<std::vector<std::uint32_t>> rows(table.index());
  for (std::size_t c = 0; c < table.index(); ++c) {
    auto &row = rows[label[c]];
    row.resize(table.column_count());
    for (std::size_t x = 0; x < table.column_count(); ++x)
      row[x] = label[table.act(c, x)];
  }
  return CosetTable(table.generator_count(), std::move(rows), table.spec());
}

namespace {

class LowIndexSearch {
public:
  LowIndexSearch(const Presentation &pres, std::size_t max_index)
      : g_(pres.generator_count()), ncols_(2 * g_), max_(max_index) {
    for (const auto &r : pres.relators)
      rels_.push_back(columns_of(r));
  }

  std::vector<std::vector<std::vector<std::uint32_t>>> run() {
    std::vector<std::int32_t> table(max_ * ncols_, -1);
    search(table, 1);
    return std::move(found_);
  }

private:
  using Table = std::vector<std::int32_t>;

  std::int32_t &at(Table &t, std::size_t c, std::size_t x) const { return t[c * ncols_ + x]; }

  // Scans every relator from every coset, adding forced entries. False on contradiction.
  bool deduce(Table &t, std::size_t n) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a)
        for (const auto &r : rels_) {
          std::size_t f = a, b = a, i = 0, j = r.size();
          while (i < j && at(t, f, r[i]) >= 0)
            f = static_cast<std::size_t>(at(t, f, r[i++]));
          if (i == j) {
            if (f != b)
              return false;
            continue;
          }
          while (j > i && at(t, b, inverse_column(r[j - 1])) >= 0) {
            b = static_cast<std::size_t>(at(t, b, inverse_column(r[j - 1])));
            --j;
          }
          if (j == i)
            return false;
          if (j == i + 1) {
            const std::size_t x = r[i];
            if (at(t, f, x) >= 0 || at(t, b, inverse_column(x)) >= 0)
              return false;
            at(t, f, x) = static_cast<std::int32_t>(b);
            at(t, b, inverse_column(x)) = static_cast<std::int32_t>(f);
            changed = true;
          }
        }
    }
    return true;
  }

  std::vector<std::vector<std::uint32_t>> to_rows(const Table &t, std::size_t n) const {
    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(ncols_));
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t x = 0; x < ncols_; ++x)
        rows[c][x] = static_cast<std::uint32_t>(t[c * ncols_ + x]);
    return rows;
  }

  // A complete table is kept only when no other base point gives a smaller standard form.
  bool is_canonical(const std::vector<std::vector<std::uint32_t>> &rows) const {
    for (std::size_t base = 1; base < rows.size(); ++base) {
      const auto label = bfs_labels(rows, ncols_, base);
      std::vector<std::size_t> inv(rows.size());
      for (std::size_t c = 0; c < rows.size(); ++c)
        inv[label[c]] = c;
      for (std::size_t c = 0; c < rows.size(); ++c) {
        bool decided = false;
        for (std::size_t x = 0; x < ncols_; ++x) {
          const auto other = label[rows[inv[c]][x]];
          if (other < rows[c][x])
            return false;
          if (other > rows[c][x]) {
            decided = true;
            break;
          }
        }
        if (decided)
          break;
      }
    }
    return true;
  }

  void search(Table &t, std::size_t n) {
    std::size_t c = 0, x = 0;
    bool open = false;
    for (c = 0; c < n && !open; ++c)
      for (x = 0; x < ncols_; ++x)
        if (at(t, c, x) < 0) {
          open = true;
          break;
        }
    if (!open) {
      auto rows = to_rows(t, n);
      if (is_canonical(rows))
        found_.push_back(std::move(rows));
      return;
    }
    --c; // loop incremented past the open row
    const std::size_t limit = n < max_ ? n + 1 : n;
    for (std::size_t target = 0; target < limit; ++target) {
      if (target < n && at(t, target, inverse_column(x)) >= 0)
        continue;
      Table next = t;
      at(next, c, x) = static_cast<std::int32_t>(target);
      at(next, target, inverse_column(x)) = static_cast<std::int32_t>(c);
      const std::size_t m = target == n ? n + 1 : n;
      if (deduce(next, m))
        search(next, m);
    }
  }

  std::size_t g_;
  std::size_t ncols_;
  std::size_t max_;
  std::vector<std::vector<std::size_t>> rels_;
  std::vector<std::vector<std::vector<std::uint32_t>>> found_;
};

} // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation &pres, std::size_t max_index) {
  if (max_index < 1)
    throw std::invalid_argument("max_index must be at least 1");
  auto found = LowIndexSearch(pres, max_index).run();
  std::stable_sort(found.begin(), found.end(),
                   [](const auto &a, const auto &b) { return a.size() < b.size(); });
  std::vector<CosetTable> out;
  out.reserve(found.size());
  for (auto &rows : found) {
    PermRep spec;
    for (std::size_t i = 0; i < pres.generator_count(); ++i) {
      std::vector<std::uint32_t> img(rows.size());
      for (std::size_t c = 0; c < rows.size(); ++c)
        img[c] = rows[c][2 * i];
      spec.images.emplace_back(std::move(img));
    }
    out.emplace_back(pres.generator_count(), std::move(rows), std::move(spec));
  }
  return out;
}

std::optional<std::string> check_table(const CosetTable &table, const Presentation &pres,
                                       std::span<const Word> subgroup_generators) {
  if (table.generator_count() != pres.generator_count())
    return "table width does not match the presentation";
  for (std::size_t x = 0; x < table.column_count(); ++x) {
    std::vector<bool> hit(table.index(), false);
    for (std::size_t c = 0; c < table.index(); ++c) {
      const auto t = table.act(c, x);
      if (t >= table.index() || hit[t])
        return "column " + std::to_string(x) + " is not a permutation";
      hit[t] = true;
    }
  }
  for (const auto &r : pres.relators)
    for (std::size_t c = 0; c < table.index(); ++c)
      if (trace(table, c, r) != c)
        return "relator " + format_word(r, pres.generators) + " does not close at coset " +
               std::to_string(c + 1);
  for (const auto &w : subgroup_generators)
    if (trace(table, 0, w) != 0)
      return "subgroup generator " + format_word(w, pres.generators) + " does not fix coset 1";
  return std::nullopt;
}

} // namespace ramikit
