#include "ramikit/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "ramikit/errors.hpp"
#include "ramikit/presentation.hpp"

namespace ramikit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("ragged matrix literal");
    for (long v : r)
      data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

void IntMatrix::append_row(const std::vector<long> &row) {
  if (rows_ == 0 && cols_ == 0)
    cols_ = row.size();
  if (row.size() != cols_)
    throw std::invalid_argument("row length mismatch");
  for (long v : row)
    data_.emplace_back(v);
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (factor == 0)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0)
      (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (factor == 0)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0)
      (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = -(*this)(r, c);
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0)
    return 1;
  IntMatrix a = *this;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0)
        ++swap;
      if (swap == n)
        return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool operator==(const IntMatrix &a, const IntMatrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Integer &d) { return d != 0; }));
}

namespace {

// Smallest nonzero |entry| in the lower-right block starting at (t, t).
bool find_min_pivot(const IntMatrix &a, std::size_t t, std::size_t &row, std::size_t &col) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0)
        continue;
      if (!found || abs(a(i, j)) < best) {
        best = abs(a(i, j));
        row = i;
        col = j;
        found = true;
      }
    }
  return found;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix &m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  auto move_pivot = [&](std::size_t t, std::size_t r, std::size_t c) {
    a.swap_rows(t, r);
    left.swap_rows(t, r);
    a.swap_cols(t, c);
    right.swap_cols(t, c);
  };

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_min_pivot(a, t, pr, pc))
      break;
    move_pivot(t, pr, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0)
          continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (a(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0)
          continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (a(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        // a remainder is now smaller than the pivot; bring the smallest one in
        std::size_t br = t, bc = t;
        Integer best = abs(a(t, t));
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < best) {
            best = abs(a(i, t));
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < best) {
            best = abs(a(t, j));
            br = t;
            bc = j;
          }
        move_pivot(t, br, bc);
        continue;
      }
      // row and column clear; enforce divisibility of the remaining block
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithForm out;
  out.diagonal.reserve(n);
  for (std::size_t t = 0; t < n; ++t)
    out.diagonal.push_back(a(t, t));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::optional<Integer> AbelianInvariants::order() const {
  if (free_rank > 0)
    return std::nullopt;
  return torsion_order();
}

Integer AbelianInvariants::torsion_order() const {
  Integer o = 1;
  for (const auto &d : torsion)
    o *= d;
  return o;
}

std::string AbelianInvariants::to_string() const {
  std::string out;
  auto add = [&](const std::string &s) {
    if (!out.empty())
      out += " + ";
    out += s;
  };
  for (std::size_t i = 0; i < free_rank; ++i)
    add("Z");
  for (const auto &d : torsion)
    add("Z/" + d.get_str());
  return out.empty() ? "0" : out;
}

AbelianInvariants cokernel_invariants(const SmithForm &snf, std::size_t cols) {
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (const auto &d : snf.diagonal) {
    if (d == 0)
      continue;
    ++rank;
    if (d > 1)
      inv.torsion.push_back(d);
  }
  inv.free_rank = cols - rank;
  return inv;
}

IntMatrix exponent_matrix(const Presentation &pres) {
  const std::size_t g = pres.generators.size();
  IntMatrix m(pres.relators.size(), g);
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    const auto v = exponent_vector(pres.relators[r], g);
    for (std::size_t c = 0; c < g; ++c)
      m(r, c) = v[c];
  }
  return m;
}

AbelianInvariants abelianization(const Presentation &pres) {
  return cokernel_invariants(smith_normal_form(exponent_matrix(pres)), pres.generators.size());
}

AbelianizationMap::AbelianizationMap(const Presentation &pres)
    : generator_count_(pres.generators.size()), snf_(smith_normal_form(exponent_matrix(pres))),
      invariants_(cokernel_invariants(snf_, generator_count_)) {
  for (std::size_t j = 0; j < generator_count_; ++j) {
    if (j < snf_.diagonal.size() && snf_.diagonal[j] != 0) {
      if (snf_.diagonal[j] > 1)
        torsion_coords_.push_back(j);
    } else {
      free_coords_.push_back(j);
    }
  }
}

bool AbelianizationMap::Image::is_zero() const {
  auto zero = [](const Integer &x) { return x == 0; };
  return std::all_of(torsion.begin(), torsion.end(), zero) &&
         std::all_of(free.begin(), free.end(), zero);
}

AbelianizationMap::Image AbelianizationMap::image(const Word &w) const {
  return image(exponent_vector(w, generator_count_));
}

AbelianizationMap::Image AbelianizationMap::image(const std::vector<long> &exponents) const {
  // The cokernel coordinate of a row vector v is v * right.
  auto coordinate = [&](std::size_t j) {
    Integer s = 0;
    for (std::size_t i = 0; i < generator_count_; ++i)
      if (exponents[i] != 0)
        s += exponents[i] * snf_.right(i, j);
    return s;
  };
  Image img;
  for (std::size_t j : torsion_coords_) {
    Integer c = coordinate(j);
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), snf_.diagonal[j].get_mpz_t());
    img.torsion.push_back(c);
  }
  for (std::size_t j : free_coords_)
    img.free.push_back(coordinate(j));
  return img;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p))
    throw NotPrime(p);
}

std::uint32_t reduce_mod(const Integer &x, std::uint32_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t dot_mod(const FpVector &v, const std::vector<long> &w, std::uint32_t p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < v.size() && i < w.size(); ++i) {
    const long wi = ((w[i] % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
    s = (s + std::uint64_t{v[i]} * static_cast<std::uint64_t>(wi)) % p;
  }
  return static_cast<std::uint32_t>(s);
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_mod_p(std::vector<FpVector> &rows, std::size_t cols, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0)
      ++sel;
    if (sel == rows.size())
      continue;
    std::swap(rows[r], rows[sel]);
    const std::uint64_t inv = inverse_mod(rows[r][c], p);
    for (auto &x : rows[r])
      x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k)
        rows[i][k] = static_cast<std::uint32_t>((rows[i][k] + (p - f) * rows[r][k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<FpVector> reduce_rows(const IntMatrix &m, std::uint32_t p) {
  std::vector<FpVector> rows(m.rows(), FpVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = reduce_mod(m(i, j), p);
  return rows;
}

} // namespace

std::size_t rank_mod_p(const IntMatrix &m, std::uint32_t p) {
  require_prime(p);
  auto rows = reduce_rows(m, p);
  return rref_mod_p(rows, m.cols(), p).size();
}

std::size_t rank_mod_p(const std::vector<FpVector> &rows, std::uint32_t p) {
  require_prime(p);
  if (rows.empty())
    return 0;
  auto copy = rows;
  for (auto &r : copy)
    for (auto &x : r)
      x %= p;
  return rref_mod_p(copy, rows.front().size(), p).size();
}

std::vector<FpVector> fp_nullspace(const IntMatrix &m, std::uint32_t p) {
  require_prime(p);
  const std::size_t n = m.cols();
  auto rows = reduce_rows(m, p);
  const auto pivots = rref_mod_p(rows, n, p);

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots)
    is_pivot[c] = true;

  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    FpVector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = (p - rows[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace ramikit
