#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "liebi/checks.hpp"
#include "liebi/cohomology.hpp"
#include "liebi/dsl.hpp"

using namespace liebi;
using namespace liebi::esv;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

const EsvAlgebra alg;

Outcome jacobi() {
  // 35^3 triples is the window |twice_index| <= 8, which contains the <= 6 window.
  const JacobiReport r = validate_jacobi(alg, 8);
  return {r.pass && r.triples_checked == 35u * 35u * 35u,
          std::to_string(r.triples_checked) + " triples"};
}

Outcome grading() {
  std::size_t pairs = 0;
  const auto basis = alg.basis_window(8);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      ++pairs;
      const AlgebraElement ab = alg.bracket(a, b);
      for (const auto& [c, k] : ab.terms())
        if (c.degree() != a.degree() + b.degree() || !families().valid(c))
          return {false, families().name(a) + ", " + families().name(b)};
    }
  return {true, std::to_string(pairs) + " pairs"};
}

Outcome taft_cybe() {
  std::size_t pairs = 0;
  for (int t = -6; t <= 6; ++t) {
    std::vector<std::pair<BasisVector, BasisVector>> cands;
    if (t % 2 == 0) {
      cands = {{L(0), {kM, t}}, {N(0), {kM, t}}};
      if (t != 0) cands.push_back({L(0), {kN, t}});
    } else {
      cands = {{L(0), Y2(t)}};
    }
    for (const auto& [a, b] : cands) {
      if (!taft_ratio(alg, element(a), element(b))) continue;
      ++pairs;
      if (!cybe_c(alg, taft_r(alg, element(a), element(b))).is_zero())
        return {false, families().name(a) + ", " + families().name(b)};
    }
  }
  return {pairs >= 20, std::to_string(pairs) + " pairs"};
}

Outcome taft_identity() {
  std::mt19937_64 rng(0);
  std::size_t cases = 0;
  for (int s = 0; s < 100; ++s) {
    const RMatrix r = random_skew_r(alg, rng, 6, 4);
    for (const auto& x : generators()) {
      ++cases;
      if (!taft_identity_defect(alg, r, element(x)).is_zero())
        return {false, "sample " + std::to_string(s) + ", x = " + families().name(x)};
    }
  }
  return {true, std::to_string(cases) + " cases"};
}

Outcome compat() {
  std::mt19937_64 rng(0);
  std::size_t cases = 0;
  for (int s = 0; s < 50; ++s) {
    const RMatrix r = random_r(alg, rng, 6, 4);
    for (const auto& x : generators())
      for (const auto& y : generators()) {
        ++cases;
        if (!compat_defect(alg, r, element(x), element(y)).is_zero())
          return {false, "sample " + std::to_string(s)};
      }
  }
  return {true, std::to_string(cases) + " cases"};
}

Outcome coalgebra_axiom() {
  std::mt19937_64 rng(1);
  std::vector<RMatrix> rs{taft_r(alg, element(L(0)), element(M(3))),
                          taft_r(alg, element(L(0)), element(Y2(1)))};
  for (int s = 0; s < 50; ++s) rs.push_back(random_skew_r(alg, rng, 6, 4));
  std::size_t cases = 0;
  for (const auto& r : rs)
    for (const auto& x : alg.basis_window(4)) {
      ++cases;
      if (!is_skew(delta_r(alg, r, element(x)))) return {false, families().name(x)};
    }
  return {true, std::to_string(cases) + " cases"};
}

Outcome joint_kernels() {
  const std::size_t d2 = joint_kernel(alg, 2, 6, {0}, generators()).dim();
  const std::size_t d3 = joint_kernel(alg, 3, 4, {0}, generators()).dim();
  return {d2 == 0 && d3 == 0,
          "order 2 dim " + std::to_string(d2) + ", order 3 dim " + std::to_string(d3)};
}

Outcome saturation() {
  const GeneratorSet gens{L(0), L(1), L(-1), M(0), M(1), N(0)};
  std::string detail;
  bool ok = true;
  for (int w : {4, 6, 8}) {
    const SaturationReport r = skew_saturation_check(alg, w, gens, 2);
    ok = ok && r.pass;
    detail += (detail.empty() ? "" : ", ") + std::string("w=") + std::to_string(w) + " dim S " +
              std::to_string(r.solution_dim);
  }
  return {ok, detail};
}

Outcome h1_pieces() {
  std::size_t pieces = 0;
  for (int p = -6; p <= 6; ++p)
    for (int q = -6; q <= 6; ++q) {
      if (p + q == 0) continue;
      ++pieces;
      const CochainReport r = h1_l0_piece(alg, p, q);
      if (r.cocycle_dim != r.coboundary_dim || r.relation != SubspaceRelation::equal)
        return {false, "piece (" + HalfDegree{p}.str() + ", " + HalfDegree{q}.str() + ")"};
    }
  return {true, std::to_string(pieces) + " pieces"};
}

Outcome hom_pieces() {
  std::size_t pairs = 0;
  for (int p = -6; p <= 6; ++p)
    for (int q = -6; q <= 6; ++q)
      for (int p2 = -6; p2 <= 6; ++p2)
        for (int q2 = -6; q2 <= 6; ++q2) {
          if (p + q == p2 + q2) continue;
          ++pairs;
          if (hom_l0_check(alg, {p, q}, {p2, q2}) != 0) return {false, "nonzero Hom"};
        }
  return {true, std::to_string(pairs) + " piece pairs"};
}

Outcome l1_identities() {
  const L1Report r = l1_identity_suite(alg, -10, 10);
  return {r.pass && r.checked == 210, std::to_string(r.checked) + " identities"};
}

Outcome derivation_evidence() {
  CheckConfig cfg;
  cfg.check = "der-evidence";
  cfg.window = 6;
  cfg.margin = 2;
  const Report r = run_check(cfg);
  const bool contained = r.details["verdict"] == "trivial";
  return {r.status == Status::evidence && contained,
          std::string("status ") + to_string(r.status) + ", solutions " +
              r.details["cocycle_dim"].dump() + " in inner " + r.details["coboundary_dim"].dump()};
}

Outcome dsl_fidelity() {
  const AlgebraSpec spec = builtin_esv();
  if (!(parse_spec(print_spec(spec)) == spec)) return {false, "round trip differs"};
  const BracketRuleSet compiled = compile_spec(spec);
  std::size_t pairs = 0;
  const auto basis = alg.basis_window(8);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      ++pairs;
      if (compiled.bracket(a, b) != alg.bracket(a, b))
        return {false, families().name(a) + ", " + families().name(b)};
    }
  return {true, std::to_string(pairs) + " pairs, round trip exact"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "jacobi identity on window basis triples", 60, jacobi},
      {2, "grading additivity on window-8 pairs", 0, grading},
      {3, "Taft r-matrices solve CYBE", 0, taft_cybe},
      {4, "co-Jacobi equals x·c(r) for seeded skew r", 60, taft_identity},
      {5, "cobracket compatibility for seeded r", 0, compat},
      {6, "coboundary image is skew", 0, coalgebra_axiom},
      {7, "joint kernel at degree 0 is trivial", 300, joint_kernels},
      {8, "skew saturation on windows 4, 6, 8", 0, saturation},
      {9, "H1 of the degree-zero subalgebra vanishes on pieces", 0, h1_pieces},
      {10, "no equivariant maps between pieces of distinct degree", 0, hom_pieces},
      {11, "L1 identity list for n in [-10, 10]", 0, l1_identities},
      {12, "degree-zero derivations are inner on the interior window", 0, derivation_evidence},
      {13, "compiled builtin definition matches native bracket", 0, dsl_fidelity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += ", over time limit";
    }
    failed += !o.pass;
    std::printf("%s [%2d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
