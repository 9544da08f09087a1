#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ramikit/word.hpp"

namespace ramikit {

struct Presentation;

using Integer = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<long> &row);
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  void negate_row(std::size_t r);

  /// Fraction-free (Bareiss) determinant; square matrices only.
  Integer determinant() const;

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend bool operator==(const IntMatrix &a, const IntMatrix &b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// left * M * right == diag(diagonal) with d_1 | d_2 | ... and zeros last.
struct SmithForm {
  std::vector<Integer> diagonal; // min(rows, cols) entries, non-negative
  IntMatrix left;
  IntMatrix right;

  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix &m);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion; // each > 1, divisibility chain

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  /// Group order, or nullopt when infinite.
  std::optional<Integer> order() const;
  /// Product of torsion coefficients (1 when torsion-free).
  Integer torsion_order() const;
  /// "0", "Z", "Z + Z/3", "Z/2 + Z/2", ...
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants &, const AbelianInvariants &) = default;
};

/// Cokernel of the row space of an integer matrix with `cols` columns.
AbelianInvariants cokernel_invariants(const SmithForm &snf, std::size_t cols);

/// Rows: relators; columns: generators; entries: exponent sums.
IntMatrix exponent_matrix(const Presentation &pres);

AbelianInvariants abelianization(const Presentation &pres);

/// Coordinates of words in the abelianization, in the basis produced by the Smith form.
class AbelianizationMap {
public:
  explicit AbelianizationMap(const Presentation &pres);

  const AbelianInvariants &invariants() const { return invariants_; }

  struct Image {
    std::vector<Integer> torsion; // reduced into [0, d_i)
    std::vector<Integer> free;

    bool is_zero() const;
    friend bool operator==(const Image &, const Image &) = default;
  };

  Image image(const Word &w) const;
  Image image(const std::vector<long> &exponents) const;

private:
  std::size_t generator_count_;
  SmithForm snf_;
  AbelianInvariants invariants_;
  std::vector<std::size_t> torsion_coords_;
  std::vector<std::size_t> free_coords_;
};

// Linear algebra over F_p.

using FpVector = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);
/// Throws NotPrime.
void require_prime(std::uint64_t p);

std::size_t rank_mod_p(const IntMatrix &m, std::uint32_t p);
std::size_t rank_mod_p(const std::vector<FpVector> &rows, std::uint32_t p);

/// Basis of { v in F_p^cols : m * v == 0 }, in reduced echelon form.
std::vector<FpVector> fp_nullspace(const IntMatrix &m, std::uint32_t p);

std::uint32_t reduce_mod(const Integer &x, std::uint32_t p);
std::uint32_t dot_mod(const FpVector &v, const std::vector<long> &w, std::uint32_t p);

} // namespace ramikit
