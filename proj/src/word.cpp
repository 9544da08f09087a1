#include "ramikit/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace ramikit {

Word Word::power_of(std::uint32_t gen, long exponent) {
  Word w;
  const Letter l{gen, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  for (long i = 0; i < std::labs(exponent); ++i)
    w.push_back(l);
  return w;
}

void Word::push_reduced(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverse())
    letters_.pop_back();
  else
    letters_.push_back(l);
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::pow(long n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < std::labs(n); ++i)
    for (const auto &l : base)
      out.push_reduced(l);
  return out;
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == letters_[i - 1].inverse())
      return false;
  return true;
}

std::uint32_t Word::max_generator() const {
  std::uint32_t m = 0;
  for (const auto &l : letters_)
    m = std::max(m, l.gen);
  return m;
}

Word free_reduce(const Word &w) {
  Word out;
  for (const auto &l : w)
    out.push_reduced(l);
  return out;
}

Word cyclically_reduce(const Word &w) {
  const Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.begin() + static_cast<std::ptrdiff_t>(lo),
                                  r.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word operator*(const Word &a, const Word &b) {
  Word out = free_reduce(a);
  for (const auto &l : b)
    out.push_reduced(l);
  return out;
}

Word conjugate(const Word &g, const Word &w) { return g * w * g.inverse(); }

std::vector<long> exponent_vector(const Word &w, std::size_t generator_count) {
  std::vector<long> v(generator_count, 0);
  for (const auto &l : w)
    if (l.gen < generator_count)
      v[l.gen] += l.sign;
  return v;
}

} // namespace ramikit
