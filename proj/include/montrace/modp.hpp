#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace montrace {

/// Arithmetic in F_p. The modulus is validated once at construction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);  // throws std::invalid_argument if composite

  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Dense row space in reduced row echelon form; rows are inserted one at a
/// time. Used for image spans and monomial-support checks.
class DenseSpan {
 public:
  DenseSpan(const PrimeField& f, std::size_t ncols);
  /// Reduces the row against the span; absorbs it if independent.
  /// Returns true when the rank grew.
  bool insert(std::vector<std::uint64_t> row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
  /// Columns touched by any row of the span.
  std::vector<std::size_t> support() const;

 private:
  const PrimeField& f_;
  std::size_t ncols_;
  std::vector<std::vector<std::uint64_t>> rows_;  // kept reduced, sorted by pivot
  std::vector<int> pivot_row_;                    // per column, -1 if none
};

/// Sparse kernel solver for systems whose rows have very few entries (the hom
/// relation systems have at most two). Columns are unknowns.
class SparseKernelSolver {
 public:
  SparseKernelSolver(const PrimeField& f, std::size_t ncols);
  void add_row(std::vector<std::pair<std::size_t, std::uint64_t>> row);
  /// Kernel basis vectors, dense over the unknowns, deterministic order
  /// (one vector per free column, ascending).
  std::vector<std::vector<std::uint64_t>> kernel_basis();

 private:
  using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;  // sorted by col
  void reduce(Row& row) const;
  void normalize(Row& row) const;

  const PrimeField& f_;
  std::size_t ncols_;
  std::vector<Row> pivots_;                  // pivot rows, fully reduced
  std::vector<int> pivot_of_col_;            // column -> pivot row index or -1
  std::vector<std::vector<int>> occurs_in_;  // column -> pivot rows touching it
};

}  // namespace montrace
