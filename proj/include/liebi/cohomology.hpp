#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liebi/linalg.hpp"
#include "liebi/tensor.hpp"

namespace liebi {

// One of the ten closed-form L_1 actions on degree-0 pairs, evaluated at n.
struct L1Mismatch {
  int identity = 0;  // 1-based position in the list
  int n = 0;
  TensorElement expected{2};
  TensorElement actual{2};
};

struct L1Report {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<L1Mismatch> mismatch;  // first one found
};

// Recomputes L_1·(A_n⊗B_-n) through diag_action and compares it with the
// closed form a(n) A_{n+1}⊗B_{-n} - b(n) A_n⊗B_{1-n} for each listed (A, B).
// Requires the algebra to be the extended Schrödinger-Virasoro family table.
L1Report l1_identity_suite(const LieAlgebra& alg, int n_min, int n_max);

// Tensors supported on tensor_basis_window(order, w, total) that every
// generator annihilates. Vectors are coordinates in that enumeration order.
SubspaceBasis joint_kernel(const LieAlgebra& alg, std::size_t order, int w, HalfDegree total,
                           const GeneratorSet& gens);

struct SaturationReport {
  bool pass = true;
  int window = 0;
  int margin = 0;
  std::size_t solution_dim = 0;  // dim S on the full window
  std::size_t skew_dim = 0;      // dim of the skew subspace on the full window
  std::optional<TensorElement> witness;  // interior restriction that is not skew
};

// S = {v on window w : (Id+τ)(g·v) = 0 for all g}; checks that each element of
// S, restricted to factors with |twice_index| <= w - margin, is skew.
// Throws PreconditionError if margin < max |twice_index| of gens or margin > w.
SaturationReport skew_saturation_check(const LieAlgebra& alg, int w, const GeneratorSet& gens,
                                       int margin);

enum class CochainVerdict { trivial, nontrivial };
const char* to_string(CochainVerdict v);

struct CochainReport {
  std::string description;
  int window = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  SubspaceRelation relation = SubspaceRelation::equal;
  CochainVerdict verdict = CochainVerdict::trivial;
  std::optional<SparseVector> witness;  // cocycle outside the coboundaries
};

// Pure tensors A_p⊗B_q with the exact factor degrees (p, q), given doubled.
std::vector<PureTensor> bidegree_piece(const FamilyTable& families, int twice_p, int twice_q);

// Whether every degree-zero basis vector maps the (p, q) piece into itself.
bool degree_zero_preserves_piece(const LieAlgebra& alg, int twice_p, int twice_q);

// Derivations and inner derivations from the degree-zero subalgebra into the
// (p, q) piece. Throws PreconditionError if the piece is not invariant.
CochainReport h1_l0_piece(const LieAlgebra& alg, int twice_p, int twice_q);

// Dimension of degree-zero-equivariant linear maps from piece a to piece b.
std::size_t hom_l0_check(const LieAlgebra& alg, std::pair<int, int> twice_a,
                         std::pair<int, int> twice_b);

// Assignment b -> D(b) of 2-tensors to basis vectors.
using Assignment = std::map<BasisVector, TensorElement>;

struct WindowDerivation {
  int window = 0;
  HalfDegree degree_shift;
  Assignment assignment;
};

// D([a,b]) - a·D(b) + b·D(a); zero for a derivation.
TensorElement derivation_defect(const LieAlgebra& alg, const Assignment& d, BasisVector a,
                                BasisVector b);

// b -> b·v for each listed b.
Assignment inner_derivation(const LieAlgebra& alg, const TensorElement& v,
                            const std::vector<BasisVector>& domain);

struct DerivationSystem {
  std::vector<BasisVector> domain;                 // window basis
  std::vector<std::pair<BasisVector, PureTensor>> unknowns;  // (b, key of D(b))
  std::vector<std::pair<BasisVector, BasisVector>> pairs;    // constraint pairs
  SubspaceBasis solutions{0};

  Assignment assignment(const SparseVector& x) const;
};

// Degree-zero derivations with D(b) supported on the window, constrained by
// every pair a < b whose bracket stays in the window.
DerivationSystem degree_zero_derivations(const LieAlgebra& alg, int w);

// Compares degree-zero window derivations with inner derivations b -> b·v,
// v in the degree-0 window, after restricting both to |twice_index| <= w - m.
// Throws PreconditionError if m < 2 or m > w.
CochainReport degree_zero_derivation_evidence(const LieAlgebra& alg, int w, int margin);

// Splits each D(b) by deg(value) - deg(b). The parts sum to d; zero parts are
// dropped, so the zero assignment gives an empty map.
std::map<HalfDegree, WindowDerivation> homogeneous_components(const WindowDerivation& d);

}  // namespace liebi
