#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace rbchar {

using IntVector = std::vector<mpz_class>;

/// Row echelon basis of a sublattice of Z^dim, built incrementally.
///
/// The pivot of a row is its highest nonzero index, so with index = degree a
/// row's pivot is its initial term. Pivots are positive and at most one row
/// has a given pivot. After reduce() every entry sitting in another row's
/// pivot column lies in [0, pivot), which makes the basis canonical (Hermite
/// normal form).
///
/// With a nonzero modulus n the lattice always contains n·e_j for every j;
/// it then represents a submodule of (Z/n)^dim and entries outside pivot
/// positions are kept in [0, n).
class HermiteBasis {
 public:
  explicit HermiteBasis(std::size_t dim, mpz_class modulus = 0);

  std::size_t dim() const { return rows_.size(); }
  const mpz_class& modulus() const { return modulus_; }

  /// Adds v to the generating set. Returns true iff the lattice grew.
  bool insert(IntVector v);
  void reduce();

  bool has_pivot(std::size_t col) const { return rows_[col].has_value(); }
  /// Row whose pivot is col; has_pivot(col) must hold.
  const IntVector& row(std::size_t col) const { return *rows_[col]; }
  const mpz_class& pivot_entry(std::size_t col) const { return (*rows_[col])[col]; }
  std::vector<std::size_t> pivots() const;
  std::size_t rank() const;

  /// Top-down exact division by the pivot rows; the result is zero iff v
  /// lies in the lattice.
  IntVector remainder(IntVector v) const;
  /// Same over Q: the result is zero iff v lies in the rational span.
  std::vector<mpq_class> remainder(std::vector<mpq_class> v) const;

  bool contains(const IntVector& v) const;

 private:
  void normalize(IntVector& v, std::optional<std::size_t> keep) const;

  mpz_class modulus_;
  std::vector<std::optional<IntVector>> rows_;
};

/// Highest index with a nonzero entry.
std::optional<std::size_t> leading_index(const IntVector& v);
std::optional<std::size_t> leading_index(const std::vector<mpq_class>& v);

}  // namespace rbchar
