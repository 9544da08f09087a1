#include "ramikit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "ramikit/errors.hpp"

namespace ramikit {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0U);
}

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0U);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto bad = [&](const std::string &why) -> InvalidSubgroupSpec {
    return InvalidSubgroupSpec("bad cycle notation '" + std::string(text) + "': " + why);
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(')
      throw bad("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ',')
        ++i, skip();
      if (i >= text.size())
        throw bad("missing ')'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i || i - start > 9)
        throw bad("expected a point");
      const unsigned long pt = std::stoul(std::string(text.substr(start, i - start)));
      if (pt < 1 || pt > degree)
        throw bad("point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      if (used[pt - 1])
        throw bad("point " + std::to_string(pt) + " repeated");
      used[pt - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(pt - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip();
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t Perm::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm operator*(const Perm &a, const Perm &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch");
  Perm out;
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i)
    out.images_[i] = b.images_[a.images_[i]];
  return out;
}

std::size_t Perm::Hash::operator()(const Perm &p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images_) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Perm> &gens, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree, false);
  for (std::uint32_t s = 0; s < degree; ++s) {
    if (seen[s])
      continue;
    std::vector<std::uint32_t> orbit{s};
    seen[s] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto &g : gens) {
        const auto y = g(orbit[k]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const std::vector<Perm> &gens, std::size_t degree) {
  return degree == 0 || orbits(gens, degree).size() == 1;
}

} // namespace ramikit
