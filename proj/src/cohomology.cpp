#include "liebi/cohomology.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <tuple>

#include "liebi/bialgebra.hpp"

namespace liebi {

namespace {

// Collects sparse rows keyed by an arbitrary ordered key.
template <typename RowKey>
class ConstraintBuilder {
 public:
  void add(const RowKey& row, std::size_t col, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = rows_.try_emplace(row, rows_.size());
    entries_.emplace_back(it->second, col, v);
  }

  SparseMatrix matrix(std::size_t cols) const {
    SparseMatrix m(rows_.size(), cols);
    for (const auto& [r, c, v] : entries_) m.add(r, c, v);
    return m;
  }

 private:
  std::map<RowKey, std::size_t> rows_;
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries_;
};

template <typename Key>
std::map<Key, std::size_t> index_of(const std::vector<Key>& keys) {
  std::map<Key, std::size_t> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out.emplace(keys[i], i);
  return out;
}

TensorElement act(const LieAlgebra& alg, BasisVector x, const PureTensor& t) {
  return diag_action(alg, x, pure(t));
}

std::vector<BasisVector> degree_zero_basis(const FamilyTable& families) {
  std::vector<BasisVector> out;
  for (std::size_t f = 0; f < families.size(); ++f)
    if (!families[static_cast<FamilyId>(f)].half_integer)
      out.push_back({static_cast<FamilyId>(f), 0});
  return out;
}

struct L1Identity {
  FamilyId a;
  FamilyId b;
  int a_shift;  // first coefficient is n + a_shift
  int b_shift;  // second coefficient is n + b_shift, subtracted
};

// L_1·(A⊗B) with A at index n (n - 1/2 for Y) and B at the negated index.
constexpr std::array<L1Identity, 10> kL1Identities{{
    {esv::kN, esv::kN, 0, 0},
    {esv::kM, esv::kN, 0, 0},
    {esv::kN, esv::kM, 0, 0},
    {esv::kM, esv::kM, 0, 0},
    {esv::kL, esv::kN, -1, 0},
    {esv::kN, esv::kL, 0, 1},
    {esv::kL, esv::kM, -1, 0},
    {esv::kM, esv::kL, 0, 1},
    {esv::kL, esv::kL, -1, 1},
    {esv::kY, esv::kY, -1, 0},
}};

}  // namespace

L1Report l1_identity_suite(const LieAlgebra& alg, int n_min, int n_max) {
  L1Report rep;
  for (int n = n_min; n <= n_max; ++n) {
    for (std::size_t id = 0; id < kL1Identities.size(); ++id) {
      const auto& e = kL1Identities[id];
      const int offset = e.a == esv::kY ? -1 : 0;
      const BasisVector a{e.a, 2 * n + offset};
      const BasisVector b{e.b, -2 * n - offset};
      TensorElement expected(2);
      expected.add({{a.family, a.twice_index + 2}, b}, Rational(n + e.a_shift));
      expected.add({a, {b.family, b.twice_index + 2}}, -Rational(n + e.b_shift));
      TensorElement actual = act(alg, esv::L(1), {a, b});
      ++rep.checked;
      if (actual != expected && !rep.mismatch) {
        rep.pass = false;
        rep.mismatch = L1Mismatch{static_cast<int>(id) + 1, n, std::move(expected),
                                  std::move(actual)};
      }
    }
  }
  return rep;
}

SubspaceBasis joint_kernel(const LieAlgebra& alg, std::size_t order, int w, HalfDegree total,
                           const GeneratorSet& gens) {
  const auto cols = tensor_basis_window(alg.families(), order, w, total);
  ConstraintBuilder<std::pair<std::size_t, PureTensor>> sys;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (const auto& [key, c] : act(alg, gens[g], cols[j]).terms()) sys.add({g, key}, j, c);
  return nullspace(sys.matrix(cols.size()));
}

SaturationReport skew_saturation_check(const LieAlgebra& alg, int w, const GeneratorSet& gens,
                                       int margin) {
  int reach = 0;
  for (const auto& g : gens) reach = std::max(reach, std::abs(g.twice_index));
  if (margin < reach) throw PreconditionError("margin is smaller than the generator degrees");
  if (margin > w) throw PreconditionError("margin exceeds the window");
  SaturationReport rep;
  rep.window = w;
  rep.margin = margin;
  const int interior = w - margin;
  for (int total = -2 * w; total <= 2 * w; ++total) {
    const auto cols = tensor_basis_window(alg.families(), 2, w, {total});
    if (cols.empty()) continue;
    std::size_t diagonal = 0;
    for (const auto& k : cols) diagonal += k[0] == k[1];
    rep.skew_dim += (cols.size() - diagonal) / 2;

    ConstraintBuilder<std::pair<std::size_t, PureTensor>> sys;
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const TensorElement image = act(alg, gens[g], cols[j]);
        for (const auto& [key, c] : (image + twist(image)).terms()) sys.add({g, key}, j, c);
      }
    const SubspaceBasis s = nullspace(sys.matrix(cols.size()));
    rep.solution_dim += s.dim();
    for (const auto& vec : s.vectors()) {
      TensorElement restricted(2);
      for (const auto& [j, c] : vec) {
        const auto& k = cols[j];
        if (std::abs(k[0].twice_index) <= interior && std::abs(k[1].twice_index) <= interior)
          restricted.add(k, c);
      }
      if (!is_skew(restricted) && !rep.witness) {
        rep.pass = false;
        rep.witness = std::move(restricted);
      }
    }
  }
  return rep;
}

const char* to_string(CochainVerdict v) {
  return v == CochainVerdict::trivial ? "trivial" : "nontrivial";
}

std::vector<PureTensor> bidegree_piece(const FamilyTable& families, int twice_p, int twice_q) {
  std::vector<PureTensor> out;
  for (std::size_t a = 0; a < families.size(); ++a)
    for (std::size_t b = 0; b < families.size(); ++b) {
      const BasisVector x{static_cast<FamilyId>(a), twice_p};
      const BasisVector y{static_cast<FamilyId>(b), twice_q};
      if (families.valid(x) && families.valid(y)) out.push_back({x, y});
    }
  return out;
}

bool degree_zero_preserves_piece(const LieAlgebra& alg, int twice_p, int twice_q) {
  for (const auto& z : degree_zero_basis(alg.families()))
    for (const auto& t : bidegree_piece(alg.families(), twice_p, twice_q))
      for (const auto& [key, c] : act(alg, z, t).terms())
        if (key[0].twice_index != twice_p || key[1].twice_index != twice_q) return false;
  return true;
}

namespace {

void require_invariant(const LieAlgebra& alg, int twice_p, int twice_q) {
  if (!degree_zero_preserves_piece(alg, twice_p, twice_q))
    throw PreconditionError("degree-zero action does not preserve the (" +
                            HalfDegree{twice_p}.str() + ", " + HalfDegree{twice_q}.str() +
                            ") piece");
}

}  // namespace

CochainReport h1_l0_piece(const LieAlgebra& alg, int twice_p, int twice_q) {
  require_invariant(alg, twice_p, twice_q);
  const auto zero = degree_zero_basis(alg.families());
  const auto piece = bidegree_piece(alg.families(), twice_p, twice_q);
  const auto piece_index = index_of(piece);
  const auto zero_index = index_of(zero);
  const std::size_t k = piece.size();
  const std::size_t ambient = zero.size() * k;

  // D(z_a) = Σ_j x[a*k + j] piece_j; constraints D([z_a,z_b]) - z_a·D(z_b) + z_b·D(z_a) = 0.
  ConstraintBuilder<std::tuple<std::size_t, std::size_t, PureTensor>> sys;
  for (std::size_t a = 0; a < zero.size(); ++a)
    for (std::size_t b = a + 1; b < zero.size(); ++b) {
      const AlgebraElement ab = alg.bracket(zero[a], zero[b]);
      for (const auto& [z, c] : ab.terms()) {
        const auto zi = zero_index.find(z);
        if (zi == zero_index.end())
          throw PreconditionError("degree-zero part is not closed under the bracket");
        for (std::size_t j = 0; j < k; ++j) sys.add({a, b, piece[j]}, zi->second * k + j, c);
      }
      for (std::size_t j = 0; j < k; ++j) {
        for (const auto& [key, c] : act(alg, zero[a], piece[j]).terms())
          sys.add({a, b, key}, b * k + j, -c);
        for (const auto& [key, c] : act(alg, zero[b], piece[j]).terms())
          sys.add({a, b, key}, a * k + j, c);
      }
    }
  const SubspaceBasis cocycles = nullspace(sys.matrix(ambient));

  std::vector<SparseVector> inner;
  for (const auto& v : piece) {
    std::map<std::size_t, Rational> coords;
    for (std::size_t i = 0; i < zero.size(); ++i)
      for (const auto& [key, c] : act(alg, zero[i], v).terms())
        coords[i * k + piece_index.at(key)] += c;
    SparseVector sv;
    for (auto& [idx, c] : coords)
      if (!c.is_zero()) sv.emplace_back(idx, c);
    inner.push_back(std::move(sv));
  }
  const SubspaceBasis coboundaries = SubspaceBasis::span(ambient, std::move(inner));

  CochainReport rep;
  rep.description = "H1 of the degree-zero subalgebra in the (" + HalfDegree{twice_p}.str() +
                    ", " + HalfDegree{twice_q}.str() + ") piece";
  rep.window = std::max(std::abs(twice_p), std::abs(twice_q));
  rep.cocycle_dim = cocycles.dim();
  rep.coboundary_dim = coboundaries.dim();
  rep.relation = subspace_relation(cocycles, coboundaries);
  rep.verdict = rep.relation == SubspaceRelation::equal ? CochainVerdict::trivial
                                                        : CochainVerdict::nontrivial;
  for (const auto& v : cocycles.vectors())
    if (!coboundaries.contains(v)) {
      rep.witness = v;
      break;
    }
  return rep;
}

std::size_t hom_l0_check(const LieAlgebra& alg, std::pair<int, int> twice_a,
                         std::pair<int, int> twice_b) {
  require_invariant(alg, twice_a.first, twice_a.second);
  require_invariant(alg, twice_b.first, twice_b.second);
  const auto zero = degree_zero_basis(alg.families());
  const auto pa = bidegree_piece(alg.families(), twice_a.first, twice_a.second);
  const auto pb = bidegree_piece(alg.families(), twice_b.first, twice_b.second);
  const auto ia = index_of(pa);
  const auto ib = index_of(pb);
  const std::size_t ka = pa.size();
  const std::size_t unknowns = pb.size() * ka;  // f[i*ka + j]: coefficient of pb_i in f(pa_j)

  // f(z·pa_j) - z·f(pa_j) = 0
  ConstraintBuilder<std::tuple<std::size_t, std::size_t, std::size_t>> sys;
  for (std::size_t z = 0; z < zero.size(); ++z)
    for (std::size_t j = 0; j < ka; ++j) {
      for (const auto& [key, c] : act(alg, zero[z], pa[j]).terms()) {
        const std::size_t l = ia.at(key);
        for (std::size_t i = 0; i < pb.size(); ++i) sys.add({z, j, i}, i * ka + l, c);
      }
      for (std::size_t i = 0; i < pb.size(); ++i)
        for (const auto& [key, c] : act(alg, zero[z], pb[i]).terms())
          sys.add({z, j, ib.at(key)}, i * ka + j, -c);
    }
  return unknowns - rank(sys.matrix(unknowns));
}

TensorElement derivation_defect(const LieAlgebra& alg, const Assignment& d, BasisVector a,
                                BasisVector b) {
  auto value = [&](BasisVector x) {
    auto it = d.find(x);
    return it == d.end() ? TensorElement(2) : it->second;
  };
  TensorElement out(2);
  for (const auto& [c, k] : alg.bracket(a, b).terms()) out.add(value(c), k);
  out -= diag_action(alg, a, value(b));
  out += diag_action(alg, b, value(a));
  return out;
}

Assignment inner_derivation(const LieAlgebra& alg, const TensorElement& v,
                            const std::vector<BasisVector>& domain) {
  Assignment out;
  for (const auto& b : domain) {
    TensorElement image = diag_action(alg, b, v);
    if (!image.is_zero()) out.emplace(b, std::move(image));
  }
  return out;
}

Assignment DerivationSystem::assignment(const SparseVector& x) const {
  Assignment out;
  for (const auto& [j, c] : x) {
    const auto& [b, key] = unknowns[j];
    out.try_emplace(b, 2).first->second.add(key, c);
  }
  return out;
}

DerivationSystem degree_zero_derivations(const LieAlgebra& alg, int w) {
  DerivationSystem sys;
  sys.domain = alg.basis_window(w);
  std::map<BasisVector, std::map<PureTensor, std::size_t>> column;
  for (const auto& b : sys.domain)
    for (auto& key : tensor_basis_window(alg.families(), 2, w, b.degree())) {
      column[b].emplace(key, sys.unknowns.size());
      sys.unknowns.emplace_back(b, std::move(key));
    }

  ConstraintBuilder<std::pair<std::size_t, PureTensor>> rows;
  for (std::size_t ia = 0; ia < sys.domain.size(); ++ia)
    for (std::size_t ib = ia + 1; ib < sys.domain.size(); ++ib) {
      const BasisVector a = sys.domain[ia];
      const BasisVector b = sys.domain[ib];
      const AlgebraElement ab = alg.bracket(a, b);
      if (!ab.is_zero() && std::abs(a.twice_index + b.twice_index) > w) continue;
      const std::size_t p = sys.pairs.size();
      sys.pairs.emplace_back(a, b);
      for (const auto& [c, k] : ab.terms())
        for (const auto& [key, j] : column[c]) rows.add({p, key}, j, k);
      for (const auto& [key, j] : column[b])
        for (const auto& [out, k] : act(alg, a, key).terms()) rows.add({p, out}, j, -k);
      for (const auto& [key, j] : column[a])
        for (const auto& [out, k] : act(alg, b, key).terms()) rows.add({p, out}, j, k);
    }
  sys.solutions = nullspace(rows.matrix(sys.unknowns.size()));
  return sys;
}

CochainReport degree_zero_derivation_evidence(const LieAlgebra& alg, int w, int margin) {
  if (margin < 2) throw PreconditionError("margin must be at least 2");
  if (margin > w) throw PreconditionError("margin exceeds the window");
  const int interior = w - margin;
  const DerivationSystem sys = degree_zero_derivations(alg, w);

  std::vector<BasisVector> domain;
  for (const auto& b : sys.domain)
    if (std::abs(b.twice_index) <= interior) domain.push_back(b);

  // Restricted maps live in coordinates (b, key) for interior b, indexed on first use.
  std::map<std::pair<BasisVector, PureTensor>, std::size_t> coord;
  auto flatten = [&](const Assignment& d) {
    std::map<std::size_t, Rational> v;
    for (const auto& b : domain) {
      auto it = d.find(b);
      if (it == d.end()) continue;
      for (const auto& [key, c] : it->second.terms())
        v[coord.try_emplace({b, key}, coord.size()).first->second] += c;
    }
    return v;
  };
  std::vector<std::map<std::size_t, Rational>> solutions, inner;
  for (const auto& x : sys.solutions.vectors()) solutions.push_back(flatten(sys.assignment(x)));
  for (const auto& key : tensor_basis_window(alg.families(), 2, w, {0}))
    inner.push_back(flatten(inner_derivation(alg, pure(key), domain)));

  auto to_sparse = [](const std::vector<std::map<std::size_t, Rational>>& maps) {
    std::vector<SparseVector> out;
    for (const auto& m : maps) {
      SparseVector v;
      for (const auto& [i, c] : m)
        if (!c.is_zero()) v.emplace_back(i, c);
      out.push_back(std::move(v));
    }
    return out;
  };
  const SubspaceBasis sol = SubspaceBasis::span(coord.size(), to_sparse(solutions));
  const SubspaceBasis inn = SubspaceBasis::span(coord.size(), to_sparse(inner));

  CochainReport rep;
  rep.description = "degree-zero derivations vs inner derivations, window " + std::to_string(w) +
                    ", interior " + std::to_string(interior);
  rep.window = w;
  rep.cocycle_dim = sol.dim();
  rep.coboundary_dim = inn.dim();
  rep.relation = subspace_relation(sol, inn);
  const bool contained =
      rep.relation == SubspaceRelation::equal || rep.relation == SubspaceRelation::a_in_b;
  rep.verdict = contained ? CochainVerdict::trivial : CochainVerdict::nontrivial;
  for (const auto& v : sol.vectors())
    if (!inn.contains(v)) {
      rep.witness = v;
      break;
    }
  return rep;
}

std::map<HalfDegree, WindowDerivation> homogeneous_components(const WindowDerivation& d) {
  std::map<HalfDegree, WindowDerivation> out;
  for (const auto& [b, value] : d.assignment)
    for (const auto& [deg, part] : tensor_degree_decompose(value)) {
      if (part.is_zero()) continue;
      const HalfDegree alpha{deg.twice - b.twice_index};
      auto& comp = out[alpha];
      comp.window = d.window;
      comp.degree_shift = alpha;
      comp.assignment.try_emplace(b, 2).first->second.add(part);
    }
  return out;
}

}  // namespace liebi
