#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liebi/rational.hpp"

namespace liebi {

// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector sparse_from_dense(const std::vector<Rational>& dense);
std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t dim);

class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

  // Accumulates into (r, c); an entry that cancels to zero is erased.
  void add(std::size_t r, std::size_t c, const Rational& v);
  void set(std::size_t r, std::size_t c, const Rational& v);
  Rational get(std::size_t r, std::size_t c) const;

  // Grows the row count; existing entries are untouched.
  void resize_rows(std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const { return entries_; }

  std::vector<SparseVector> row_vectors() const;
  SparseVector multiply(const SparseVector& x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

// A linear subspace of Q^ambient held in reduced row-echelon form (leading
// entry 1, pivot columns cleared elsewhere, rows ordered by pivot). Two equal
// subspaces always have identical bases.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}
  // Span of arbitrary (possibly dependent) vectors.
  static SubspaceBasis span(std::size_t ambient, std::vector<SparseVector> vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<SparseVector>& vectors() const { return vectors_; }
  std::vector<std::vector<Rational>> dense() const;
  bool contains(const SparseVector& v) const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  std::size_t ambient_;
  std::vector<SparseVector> vectors_;
};

std::size_t rank(const SparseMatrix& m);
SubspaceBasis nullspace(const SparseMatrix& m);

struct Solution {
  std::vector<Rational> particular;  // free variables set to zero
  SubspaceBasis kernel;
};

// nullopt means the system is inconsistent.
std::optional<Solution> solve(const SparseMatrix& m, const std::vector<Rational>& rhs);

enum class SubspaceRelation { equal, a_in_b, b_in_a, incomparable };

// Throws std::invalid_argument on ambient dimension mismatch.
SubspaceRelation subspace_relation(const SubspaceBasis& a, const SubspaceBasis& b);
const char* to_string(SubspaceRelation r);

}  // namespace liebi
