#include "montrace/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace montrace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit integers.
  std::uint64_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t acc = 1;
    a %= n;
    while (e) {
      if (e & 1) acc = mulmod(acc, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return acc;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t acc = 1;
  a %= p_;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::invalid_argument("inverse of zero");
  return pow(a, p_ - 2);
}

DenseSpan::DenseSpan(const PrimeField& f, std::size_t ncols)
    : f_(f), ncols_(ncols), pivot_row_(ncols, -1) {}

bool DenseSpan::insert(std::vector<std::uint64_t> row) {
  if (row.size() != ncols_) throw std::invalid_argument("row width mismatch");
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (row[c] == 0) continue;
    int pr = pivot_row_[c];
    if (pr < 0) {
      std::uint64_t s = f_.inv(row[c]);
      for (auto& x : row) x = f_.mul(x, s);
      // eliminate this column from the existing rows
      for (auto& other : rows_) {
        std::uint64_t coef = other[c];
        if (coef == 0) continue;
        for (std::size_t k = 0; k < ncols_; ++k)
          other[k] = f_.sub(other[k], f_.mul(coef, row[k]));
      }
      pivot_row_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    std::uint64_t coef = row[c];
    const auto& prow = rows_[static_cast<std::size_t>(pr)];
    for (std::size_t k = 0; k < ncols_; ++k)
      row[k] = f_.sub(row[k], f_.mul(coef, prow[k]));
  }
  return false;
}

std::vector<std::size_t> DenseSpan::support() const {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < ncols_; ++c) {
    bool touched = false;
    for (const auto& row : rows_)
      if (row[c] != 0) {
        touched = true;
        break;
      }
    if (touched) cols.push_back(c);
  }
  return cols;
}

SparseKernelSolver::SparseKernelSolver(const PrimeField& f, std::size_t ncols)
    : f_(f), ncols_(ncols), pivot_of_col_(ncols, -1), occurs_in_(ncols) {}

void SparseKernelSolver::normalize(Row& row) const {
  std::sort(row.begin(), row.end());
  Row out;
  for (auto& [c, v] : row) {
    std::uint64_t val = v % f_.modulus();
    if (!out.empty() && out.back().first == c)
      out.back().second = f_.add(out.back().second, val);
    else
      out.emplace_back(c, val);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second == 0; }),
            out.end());
  row = std::move(out);
}

void SparseKernelSolver::reduce(Row& row) const {
  // Eliminate every pivot column occurring in the row. Pivot rows are fully
  // reduced, so one pass per occurrence suffices; new occurrences introduced
  // by the subtraction are free columns only.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < row.size(); ++k) {
      int pr = pivot_of_col_[row[k].first];
      if (pr < 0) continue;
      std::uint64_t coef = row[k].second;
      Row combined = row;
      for (const auto& [c, v] : pivots_[static_cast<std::size_t>(pr)])
        combined.emplace_back(c, f_.neg(f_.mul(coef, v)));
      normalize(combined);
      row = std::move(combined);
      changed = true;
      break;
    }
  }
}

void SparseKernelSolver::add_row(Row row) {
  normalize(row);
  reduce(row);
  if (row.empty()) return;
  // normalize the leading coefficient to 1
  std::uint64_t s = f_.inv(row.front().second);
  for (auto& [c, v] : row) v = f_.mul(v, s);
  std::size_t pcol = row.front().first;
  int new_index = static_cast<int>(pivots_.size());
  // eliminate pcol from the existing pivot rows that touch it
  for (int pr : occurs_in_[pcol]) {
    Row& target = pivots_[static_cast<std::size_t>(pr)];
    auto it = std::lower_bound(target.begin(), target.end(),
                               std::make_pair(pcol, std::uint64_t{0}));
    if (it == target.end() || it->first != pcol) continue;
    std::uint64_t coef = it->second;
    Row combined = target;
    for (const auto& [c, v] : row) combined.emplace_back(c, f_.neg(f_.mul(coef, v)));
    normalize(combined);
    // refresh occurrence lists for the columns gained
    for (const auto& [c, v] : combined) {
      bool had = std::binary_search(
          target.begin(), target.end(), std::make_pair(c, std::uint64_t{0}),
          [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!had) occurs_in_[c].push_back(pr);
    }
    target = std::move(combined);
  }
  occurs_in_[pcol].clear();
  for (const auto& [c, v] : row) occurs_in_[c].push_back(new_index);
  pivot_of_col_[pcol] = new_index;
  pivots_.push_back(std::move(row));
}

std::vector<std::vector<std::uint64_t>> SparseKernelSolver::kernel_basis() {
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (pivot_of_col_[c] >= 0) continue;
    std::vector<std::uint64_t> vec(ncols_, 0);
    vec[c] = 1;
    for (const Row& prow : pivots_) {
      auto it = std::lower_bound(prow.begin(), prow.end(),
                                 std::make_pair(c, std::uint64_t{0}));
      if (it != prow.end() && it->first == c)
        vec[prow.front().first] = f_.neg(it->second);
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace montrace
