#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ramikit {

/// Permutation of {0..n-1}. Products compose left to right: (p * q)(i) == q(p(i)).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<std::uint32_t> images);

  /// Parses cycle notation over 1-based points, e.g. "(1 2)(3 4)" or "()".
  static Perm from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t> &images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// 1-based cycle notation without fixed points; "()" for the identity.
  std::string to_cycles() const;
  std::size_t order() const;

  friend Perm operator*(const Perm &a, const Perm &b);
  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

  struct Hash {
    std::size_t operator()(const Perm &p) const noexcept;
  };

private:
  std::vector<std::uint32_t> images_;
};

/// Whether the group generated by `gens` acts transitively on {0..degree-1}.
bool is_transitive(const std::vector<Perm> &gens, std::size_t degree);

/// Orbits of the group generated by `gens`, each sorted, ordered by least point.
std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Perm> &gens, std::size_t degree);

} // namespace ramikit
