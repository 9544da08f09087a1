#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ramikit {

/// A generator or its inverse.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }

  /// Coset-table column: 2*gen for the generator, 2*gen+1 for its inverse.
  std::size_t column() const { return 2 * std::size_t{gen} + (sign < 0 ? 1 : 0); }
  static Letter from_column(std::size_t column) {
    return {static_cast<std::uint32_t>(column / 2), static_cast<std::int8_t>(column % 2 ? -1 : 1)};
  }

  friend bool operator==(const Letter &, const Letter &) = default;
  friend auto operator<=>(const Letter &a, const Letter &b) {
    if (auto c = a.gen <=> b.gen; c != 0)
      return c;
    return b.sign <=> a.sign; // x before X
  }
};

inline std::size_t inverse_column(std::size_t column) { return column ^ 1U; }

/// Word over a signed generator alphabet. Not automatically reduced.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  /// gen^exponent
  static Word power_of(std::uint32_t gen, long exponent);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter &operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  /// Appends and cancels against the tail, keeping a reduced word reduced.
  void push_reduced(Letter l);
  void append(const Word &other) { letters_.insert(letters_.end(), other.begin(), other.end()); }

  Word inverse() const;
  Word pow(long n) const;
  bool is_reduced() const;
  std::uint32_t max_generator() const;

  friend bool operator==(const Word &, const Word &) = default;
  friend auto operator<=>(const Word &a, const Word &b) {
    if (auto c = a.size() <=> b.size(); c != 0)
      return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word &w);
Word cyclically_reduce(const Word &w);

/// Reduced product.
Word operator*(const Word &a, const Word &b);

/// g * w * g^-1, reduced.
Word conjugate(const Word &g, const Word &w);

/// Exponent sum of each generator; entries beyond the word's generators are zero.
std::vector<long> exponent_vector(const Word &w, std::size_t generator_count);

} // namespace ramikit
