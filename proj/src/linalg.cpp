#include "liebi/linalg.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace liebi {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class Pivoting {
  sparsity,  // fewest nonzeros in row, then column
  leading,   // smallest leading column; yields reduced row-echelon form
};

struct Echelon {
  std::vector<SparseVector> rows;  // rows[i] has coefficient 1 at pivots[i]
  std::vector<std::size_t> pivots;
  bool inconsistent = false;
};

// s - f * r
SparseVector axpy(const SparseVector& s, const Rational& f, const SparseVector& r) {
  SparseVector out;
  out.reserve(s.size() + r.size());
  auto i = s.begin();
  auto j = r.begin();
  while (i != s.end() || j != r.end()) {
    if (j == r.end() || (i != s.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == s.end() || j->first < i->first) {
      out.emplace_back(j->first, -(f * j->second));
      ++j;
    } else {
      Rational v = i->second - f * j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* find_entry(const SparseVector& v, std::size_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it == v.end() || it->first != idx) return nullptr;
  return &it->second;
}

// Gauss-Jordan elimination. Columns >= pivotable are never chosen as pivots
// (used for an augmented right-hand side). A row left with entries only in
// those columns marks the system inconsistent.
Echelon eliminate(std::vector<SparseVector> rows, std::size_t ncols, std::size_t pivotable,
                  Pivoting mode) {
  const std::size_t nrows = rows.size();
  std::vector<std::set<std::size_t>> occ(ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[r]) occ[c].insert(r);

  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::set<Key> queue;
  std::vector<Key> key_of(nrows);
  std::vector<char> queued(nrows, 0);
  Echelon out;
  std::vector<std::size_t> pivot_rows;

  auto pivotable_count = [&](const SparseVector& v) {
    return static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), pivotable,
                         [](const auto& e, std::size_t k) { return e.first < k; }) -
        v.begin());
  };
  auto enqueue = [&](std::size_t r) {
    const std::size_t k = pivotable_count(rows[r]);
    if (k == 0) {
      if (!rows[r].empty()) out.inconsistent = true;
      return;
    }
    key_of[r] = mode == Pivoting::sparsity ? Key{k, r, 0} : Key{rows[r].front().first, k, r};
    queue.insert(key_of[r]);
    queued[r] = 1;
  };
  for (std::size_t r = 0; r < nrows; ++r) enqueue(r);

  while (!queue.empty()) {
    const Key top = *queue.begin();
    queue.erase(queue.begin());
    const std::size_t r = mode == Pivoting::sparsity ? std::get<1>(top) : std::get<2>(top);
    queued[r] = 0;

    std::size_t col = npos;
    if (mode == Pivoting::leading) {
      col = rows[r].front().first;
    } else {
      std::size_t best = npos;
      for (const auto& [c, v] : rows[r]) {
        if (c >= pivotable) break;
        if (occ[c].size() < best) {
          best = occ[c].size();
          col = c;
        }
      }
    }

    SparseVector& prow = rows[r];
    const Rational inv = Rational(1) / *find_entry(prow, col);
    if (inv != Rational(1))
      for (auto& [c, v] : prow) v *= inv;

    const std::vector<std::size_t> targets(occ[col].begin(), occ[col].end());
    for (std::size_t s : targets) {
      if (s == r) continue;
      const Rational f = *find_entry(rows[s], col);
      rows[s] = axpy(rows[s], f, prow);
      for (const auto& [c, v] : prow) {
        if (find_entry(rows[s], c))
          occ[c].insert(s);
        else
          occ[c].erase(s);
      }
      if (queued[s]) {
        queue.erase(key_of[s]);
        queued[s] = 0;
        enqueue(s);
      }
    }
    // The pivot row leaves the active set; its columns stay indexed so later
    // pivots clear them too (full reduction).
    out.pivots.push_back(col);
    pivot_rows.push_back(r);
  }

  out.rows.reserve(pivot_rows.size());
  for (std::size_t r : pivot_rows) out.rows.push_back(std::move(rows[r]));
  return out;
}

}  // namespace

SparseVector sparse_from_dense(const std::vector<Rational>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
  return out;
}

std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t dim) {
  std::vector<Rational> out(dim);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  SparseMatrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dense[r][c]);
  }
  return m;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index");
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index");
  if (v.is_zero())
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseMatrix::resize_rows(std::size_t rows) {
  if (rows < rows_) throw std::invalid_argument("cannot shrink sparse matrix");
  rows_ = rows;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> out(rows_);
  for (const auto& [rc, v] : entries_) out[rc.first].emplace_back(rc.second, v);
  return out;
}

SparseVector SparseMatrix::multiply(const SparseVector& x) const {
  std::vector<Rational> acc(rows_);
  for (const auto& [rc, v] : entries_)
    if (const Rational* xi = find_entry(x, rc.second)) acc[rc.first] += v * *xi;
  return sparse_from_dense(acc);
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient, std::vector<SparseVector> vectors) {
  for (const auto& v : vectors)
    if (!v.empty() && v.back().first >= ambient)
      throw std::invalid_argument("vector outside ambient space");
  Echelon e = eliminate(std::move(vectors), ambient, ambient, Pivoting::leading);
  std::vector<std::size_t> order(e.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return e.pivots[a] < e.pivots[b]; });
  SubspaceBasis out(ambient);
  out.vectors_.reserve(order.size());
  for (std::size_t i : order) out.vectors_.push_back(std::move(e.rows[i]));
  return out;
}

std::vector<std::vector<Rational>> SubspaceBasis::dense() const {
  std::vector<std::vector<Rational>> out;
  out.reserve(vectors_.size());
  for (const auto& v : vectors_) out.push_back(dense_from_sparse(v, ambient_));
  return out;
}

bool SubspaceBasis::contains(const SparseVector& v) const {
  SparseVector rest = v;
  for (const auto& b : vectors_) {
    if (rest.empty()) break;
    const std::size_t pivot = b.front().first;
    if (const Rational* f = find_entry(rest, pivot)) rest = axpy(rest, Rational(*f), b);
  }
  return rest.empty();
}

std::size_t rank(const SparseMatrix& m) {
  return eliminate(m.row_vectors(), m.cols(), m.cols(), Pivoting::sparsity).pivots.size();
}

namespace {

SubspaceBasis kernel_of(const Echelon& e, std::size_t cols) {
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<SparseVector> free_vecs(cols);
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_vecs[c].emplace_back(c, Rational(1));
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    for (const auto& [c, v] : e.rows[i])
      if (c < cols && c != e.pivots[i]) free_vecs[c].emplace_back(e.pivots[i], -v);
  std::vector<SparseVector> gens;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    auto& v = free_vecs[c];
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span(cols, std::move(gens));
}

}  // namespace

SubspaceBasis nullspace(const SparseMatrix& m) {
  const Echelon e = eliminate(m.row_vectors(), m.cols(), m.cols(), Pivoting::sparsity);
  return kernel_of(e, m.cols());
}

std::optional<Solution> solve(const SparseMatrix& m, const std::vector<Rational>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length does not match row count");
  auto rows = m.row_vectors();
  const std::size_t n = m.cols();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!rhs[r].is_zero()) rows[r].emplace_back(n, rhs[r]);
  const Echelon e = eliminate(std::move(rows), n + 1, n, Pivoting::sparsity);
  if (e.inconsistent) return std::nullopt;
  Solution sol{std::vector<Rational>(n), kernel_of(e, n)};
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    if (const Rational* b = find_entry(e.rows[i], n)) sol.particular[e.pivots[i]] = *b;
  return sol;
}

SubspaceRelation subspace_relation(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<SparseVector> both = a.vectors();
  both.insert(both.end(), b.vectors().begin(), b.vectors().end());
  const std::size_t joint = SubspaceBasis::span(a.ambient(), std::move(both)).dim();
  const bool a_in_b = joint == b.dim();
  const bool b_in_a = joint == a.dim();
  if (a_in_b && b_in_a) return SubspaceRelation::equal;
  if (a_in_b) return SubspaceRelation::a_in_b;
  if (b_in_a) return SubspaceRelation::b_in_a;
  return SubspaceRelation::incomparable;
}

const char* to_string(SubspaceRelation r) {
  switch (r) {
    case SubspaceRelation::equal: return "equal";
    case SubspaceRelation::a_in_b: return "a_in_b";
    case SubspaceRelation::b_in_a: return "b_in_a";
    case SubspaceRelation::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace liebi
