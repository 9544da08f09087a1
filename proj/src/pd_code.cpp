#include "ramikit/pd_code.hpp"

#include <map>
#include <numeric>

#include <json.hpp>

#include "ramikit/errors.hpp"

namespace ramikit {

PdCode parse_pd_code(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw PdCodeError(std::string("PD code is not a nested list: ") + e.what());
  }
  if (!j.is_array())
    throw PdCodeError("PD code must be a list of crossings");
  PdCode pd;
  for (const auto &c : j) {
    if (!c.is_array() || c.size() != 4)
      throw PdCodeError("every crossing needs exactly four strand labels");
    std::array<long, 4> x{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!c[i].is_number_integer())
        throw PdCodeError("strand labels must be integers");
      x[i] = c[i].get<long>();
    }
    pd.crossings.push_back(x);
  }
  return pd;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace

KnotGroupData wirtinger_from_pd(const PdCode &pd, const WirtingerOptions &options) {
  const std::size_t n = pd.crossings.size();
  if (n == 0)
    throw PdCodeError("PD code has no crossings");
  const long strands = static_cast<long>(2 * n);

  std::vector<int> seen(2 * n + 1, 0);
  for (const auto &c : pd.crossings)
    for (long s : c) {
      if (s < 1 || s > strands)
        throw PdCodeError("strand label " + std::to_string(s) + " outside 1.." + std::to_string(strands));
      ++seen[s];
    }
  for (long s = 1; s <= strands; ++s)
    if (seen[s] != 2)
      throw PdCodeError("strand label " + std::to_string(s) + " occurs " + std::to_string(seen[s]) +
                        " times, expected 2");

  auto succ = [&](long s) { return s % strands + 1; };
  // labels as 0-based indices into union-find structures
  UnionFind component(2 * n), arc(2 * n);
  std::vector<int> sign(n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto [i, j, k, l] = pd.crossings[c];
    if (k != succ(i))
      throw PdCodeError("crossing " + std::to_string(c + 1) + ": under-strand " + std::to_string(i) +
                        " is not followed by " + std::to_string(k));
    if (l == succ(j))
      sign[c] = 1;
    else if (j == succ(l))
      sign[c] = -1;
    else
      throw PdCodeError("crossing " + std::to_string(c + 1) + ": over-strands " + std::to_string(j) +
                        " and " + std::to_string(l) + " are not consecutive");
    component.unite(i - 1, k - 1);
    component.unite(j - 1, l - 1);
    arc.unite(j - 1, l - 1);
  }
  for (std::size_t s = 1; s < 2 * n; ++s)
    if (component.find(s) != component.find(0))
      throw PdCodeError("PD code describes a link with more than one component");

  // number arcs in order of first appearance along the knot
  std::vector<std::uint32_t> arc_of(2 * n);
  std::map<std::size_t, std::uint32_t> arc_index;
  for (std::size_t s = 0; s < 2 * n; ++s) {
    auto [it, inserted] = arc_index.try_emplace(arc.find(s), static_cast<std::uint32_t>(arc_index.size()));
    arc_of[s] = it->second;
  }
  const std::size_t arcs = arc_index.size();

  KnotGroupData data;
  data.label = "pd";
  for (std::size_t a = 0; a < arcs; ++a)
    data.presentation.generators.push_back("x" + std::to_string(a + 1));

  // under-crossing met when leaving strand s, as (over arc, sign)
  std::vector<std::pair<std::uint32_t, int>> passage(2 * n);
  std::vector<bool> under(2 * n, false);
  for (std::size_t c = 0; c < n; ++c) {
    const auto [i, j, k, l] = pd.crossings[c];
    const Letter over{arc_of[j - 1], static_cast<std::int8_t>(sign[c])};
    Word rel{over, Letter{arc_of[i - 1], 1}, over.inverse(), Letter{arc_of[k - 1], -1}};
    passage[i - 1] = {arc_of[j - 1], sign[c]};
    under[i - 1] = true;
    if (!(options.drop_redundant_relator && c + 1 == n))
      data.presentation.relators.push_back(std::move(rel));
  }
  data.presentation.normalize();
  data.meridian = Word{Letter{arc_of[0], 1}};

  // the meridian of the arc reached after t passages is L_t^-1 m L_t
  Word longitude;
  long writhe = 0;
  for (std::size_t s = 0; s < 2 * n; ++s) {
    if (!under[s])
      continue;
    const auto [o, e] = passage[s];
    longitude.push_reduced(Letter{o, static_cast<std::int8_t>(-e)});
    writhe += e;
  }
  data.longitude = longitude * data.meridian.pow(writhe);
  return data;
}

} // namespace ramikit
