#include "liebi/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "liebi/cohomology.hpp"
#include "liebi/dsl.hpp"

namespace liebi {

namespace {

constexpr int kTaftIdentitySamples = 100;
constexpr int kCompatSamples = 50;
constexpr int kMybeSamples = 20;
constexpr int kL1Range = 10;

std::string name(const LieAlgebra& alg, BasisVector b) { return alg.families().name(b); }

Json names(const LieAlgebra& alg, const std::vector<BasisVector>& bs) {
  Json out = Json::array();
  for (const auto& b : bs) out.push_back(name(alg, b));
  return out;
}

void require_esv(const LieAlgebra& alg, const std::string& check) {
  if (!(alg.families() == esv::families()))
    throw ConfigError("check '" + check + "' needs the L, M, N, Y family table");
}

void fail(Report& rep, Json witness) {
  rep.status = Status::fail;
  rep.witness = std::move(witness);
}

void check_jacobi(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  const JacobiReport j = validate_jacobi(alg, cfg.window);
  rep.details["triples_checked"] = j.triples_checked;
  if (!j.pass) {
    const auto& t = *j.witness;
    fail(rep, {{"triple", names(alg, {t[0], t[1], t[2]})},
               {"defect", to_string(j.defect, alg.families())}});
  }
}

void check_grading(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  const auto basis = alg.basis_window(cfg.window);
  std::size_t pairs = 0;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      ++pairs;
      const AlgebraElement ab = alg.bracket(a, b);
      for (const auto& [c, k] : ab.terms())
        if (c.twice_index != a.twice_index + b.twice_index || !alg.families().valid(c)) {
          rep.details["pairs_checked"] = pairs;
          fail(rep, {{"pair", names(alg, {a, b})}, {"bracket", to_string(ab, alg.families())}});
          return;
        }
    }
  rep.details["pairs_checked"] = pairs;
}

std::vector<std::pair<BasisVector, BasisVector>> taft_candidates(int w) {
  using namespace esv;
  std::vector<std::pair<BasisVector, BasisVector>> out;
  for (int t = -w; t <= w; ++t) {
    if (t % 2 == 0) {
      out.emplace_back(L(0), BasisVector{kM, t});
      out.emplace_back(N(0), BasisVector{kM, t});
      if (t != 0) out.emplace_back(L(0), BasisVector{kN, t});
    } else {
      out.emplace_back(L(0), Y2(t));
    }
  }
  return out;
}

void check_cybe_taft(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  require_esv(alg, cfg.check);
  std::size_t verified = 0, skipped = 0;
  for (const auto& [a, b] : taft_candidates(cfg.window)) {
    if (!taft_ratio(alg, element(a), element(b))) {
      ++skipped;
      continue;
    }
    ++verified;
    const TensorElement c = cybe_c(alg, taft_r(alg, element(a), element(b)));
    if (!c.is_zero() && !rep.witness)
      fail(rep, {{"pair", names(alg, {a, b})}, {"c(r)", to_string(c, alg.families())}});
  }
  rep.details["pairs_verified"] = verified;
  rep.details["pairs_skipped_precondition"] = skipped;
}

void check_taft_identity(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  require_esv(alg, cfg.check);
  std::mt19937_64 rng(cfg.seed);
  const auto gens = esv::generators();
  std::size_t cases = 0;
  for (int s = 0; s < kTaftIdentitySamples; ++s) {
    const RMatrix r = random_skew_r(alg, rng, cfg.window);
    for (const auto& x : gens) {
      ++cases;
      const TensorElement d = taft_identity_defect(alg, r, element(x));
      if (!d.is_zero() && !rep.witness)
        fail(rep, {{"sample", s},
                   {"r", to_string(r, alg.families())},
                   {"x", name(alg, x)},
                   {"defect", to_string(d, alg.families())}});
    }
  }
  rep.details["samples"] = kTaftIdentitySamples;
  rep.details["cases"] = cases;
  rep.details["generators"] = names(alg, gens);
}

void check_compat(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  require_esv(alg, cfg.check);
  std::mt19937_64 rng(cfg.seed);
  const auto gens = esv::generators();
  std::size_t cases = 0;
  for (int s = 0; s < kCompatSamples; ++s) {
    const RMatrix r = random_r(alg, rng, cfg.window);
    for (const auto& x : gens)
      for (const auto& y : gens) {
        ++cases;
        const TensorElement d = compat_defect(alg, r, element(x), element(y));
        if (!d.is_zero() && !rep.witness)
          fail(rep, {{"sample", s},
                     {"r", to_string(r, alg.families())},
                     {"x", name(alg, x)},
                     {"y", name(alg, y)},
                     {"defect", to_string(d, alg.families())}});
      }
  }
  // Im Δ_r lies in the skew tensors whenever r is skew.
  std::size_t axiom_cases = 0;
  const auto basis = alg.basis_window(cfg.window);
  for (int s = 0; s < kCompatSamples; ++s) {
    const RMatrix r = random_skew_r(alg, rng, cfg.window);
    for (const auto& x : basis) {
      ++axiom_cases;
      const TensorElement d = delta_r(alg, r, element(x));
      if (!is_skew(d) && !rep.witness)
        fail(rep, {{"r", to_string(r, alg.families())},
                   {"x", name(alg, x)},
                   {"delta", to_string(d, alg.families())}});
    }
  }
  rep.details["samples"] = kCompatSamples;
  rep.details["compat_cases"] = cases;
  rep.details["coalgebra_axiom_cases"] = axiom_cases;
}

void check_mybe(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  require_esv(alg, cfg.check);
  std::mt19937_64 rng(cfg.seed);
  std::vector<RMatrix> rs;
  for (const auto& [a, b] : taft_candidates(cfg.window))
    if (taft_ratio(alg, element(a), element(b))) rs.push_back(taft_r(alg, element(a), element(b)));
  for (int s = 0; s < kMybeSamples; ++s) rs.push_back(random_skew_r(alg, rng, cfg.window));
  const auto basis = alg.basis_window(cfg.window);
  std::size_t holds = 0;
  for (const auto& r : rs) {
    const bool mybe = mybe_check(alg, r, esv::generators());
    bool oracle = true;
    for (const auto& x : basis)
      if (!co_jacobi_defect(alg, r, element(x)).is_zero()) {
        oracle = false;
        break;
      }
    holds += mybe;
    if (mybe != oracle && !rep.witness)
      fail(rep, {{"r", to_string(r, alg.families())}, {"mybe", mybe}, {"co_jacobi", oracle}});
  }
  rep.details["r_checked"] = rs.size();
  rep.details["mybe_true"] = holds;
  rep.details["reduction"] = "x·c(r) = 0 on the generators " +
                             names(alg, esv::generators()).dump() +
                             " implies it on the subalgebra they generate";
}

void check_l1(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  require_esv(alg, cfg.check);
  const L1Report l1 = l1_identity_suite(alg, -kL1Range, kL1Range);
  rep.details["n_range"] = Json::array({-kL1Range, kL1Range});
  rep.details["identities_checked"] = l1.checked;
  if (!l1.pass) {
    const auto& m = *l1.mismatch;
    fail(rep, {{"identity", m.identity},
               {"n", m.n},
               {"expected", to_string(m.expected, alg.families())},
               {"actual", to_string(m.actual, alg.families())}});
  }
}

void check_joint_kernel(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  require_esv(alg, cfg.check);
  using namespace esv;
  const GeneratorSet proof{L(0), M(0), N(0), M(1), L(1), L(-1)};
  const int w3 = std::min(cfg.window, 4);
  struct Case {
    std::string label;
    std::size_t order;
    int w;
    GeneratorSet gens;
  };
  const std::vector<Case> cases{{"order2_generators", 2, cfg.window, generators()},
                                {"order2_l0_subalgebra", 2, cfg.window, proof},
                                {"order3_generators", 3, w3, generators()}};
  rep.status = Status::evidence;
  for (const auto& c : cases) {
    const auto cols = tensor_basis_window(alg.families(), c.order, c.w, {0});
    const SubspaceBasis k = joint_kernel(alg, c.order, c.w, {0}, c.gens);
    rep.details[c.label] = {{"window", c.w}, {"unknowns", cols.size()}, {"kernel_dim", k.dim()}};
    if (k.dim() != 0 && !rep.witness) {
      TensorElement t(c.order);
      for (const auto& [j, v] : k.vectors().front()) t.add(cols[j], v);
      fail(rep, {{"case", c.label}, {"kernel_vector", to_string(t, alg.families())}});
    }
  }
}

void check_skew_saturation(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  require_esv(alg, cfg.check);
  using namespace esv;
  const GeneratorSet gens{L(0), L(1), L(-1), M(0), M(1), N(0)};
  const SaturationReport s = skew_saturation_check(alg, cfg.window, gens, cfg.margin);
  rep.status = Status::evidence;
  rep.details["generators"] = names(alg, gens);
  rep.details["solution_dim"] = s.solution_dim;
  rep.details["skew_dim"] = s.skew_dim;
  rep.details["interior_window"] = cfg.window - cfg.margin;
  if (!s.pass) fail(rep, {{"interior_restriction", to_string(*s.witness, alg.families())}});
}

Json cochain_json(const CochainReport& c) {
  return {{"cocycle_dim", c.cocycle_dim},
          {"coboundary_dim", c.coboundary_dim},
          {"relation", to_string(c.relation)},
          {"verdict", to_string(c.verdict)}};
}

void check_h1(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  std::size_t pieces = 0, trivial = 0;
  Json zero_total = Json::array();
  for (int p = -cfg.window; p <= cfg.window; ++p)
    for (int q = -cfg.window; q <= cfg.window; ++q) {
      if (bidegree_piece(alg.families(), p, q).empty()) continue;
      if (!degree_zero_preserves_piece(alg, p, q)) {
        if (!rep.witness) fail(rep, {{"piece", {p, q}}, {"reason", "piece not invariant"}});
        continue;
      }
      const CochainReport c = h1_l0_piece(alg, p, q);
      if (p + q == 0) {
        Json z = cochain_json(c);
        z["piece"] = {HalfDegree{p}.str(), HalfDegree{q}.str()};
        zero_total.push_back(std::move(z));
        continue;
      }
      ++pieces;
      if (c.verdict == CochainVerdict::trivial) {
        ++trivial;
      } else if (!rep.witness) {
        Json w = cochain_json(c);
        w["piece"] = {HalfDegree{p}.str(), HalfDegree{q}.str()};
        fail(rep, std::move(w));
      }
    }
  rep.details["pieces_checked"] = pieces;
  rep.details["pieces_trivial"] = trivial;
  rep.details["total_degree_zero_pieces"] = std::move(zero_total);
}

void check_hom(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  std::vector<std::pair<int, int>> pieces;
  for (int p = -cfg.window; p <= cfg.window; ++p)
    for (int q = -cfg.window; q <= cfg.window; ++q)
      if (!bidegree_piece(alg.families(), p, q).empty() && degree_zero_preserves_piece(alg, p, q))
        pieces.emplace_back(p, q);
  std::size_t pairs = 0;
  for (const auto& a : pieces)
    for (const auto& b : pieces) {
      if (a.first + a.second == b.first + b.second) continue;
      ++pairs;
      const std::size_t dim = hom_l0_check(alg, a, b);
      if (dim != 0 && !rep.witness)
        fail(rep, {{"from", {HalfDegree{a.first}.str(), HalfDegree{a.second}.str()}},
                   {"to", {HalfDegree{b.first}.str(), HalfDegree{b.second}.str()}},
                   {"dim", dim}});
    }
  rep.details["pieces"] = pieces.size();
  rep.details["pairs_checked"] = pairs;
}

void check_der(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  const CochainReport c = degree_zero_derivation_evidence(alg, cfg.window, cfg.margin);
  rep.status = Status::evidence;
  rep.details = cochain_json(c);
  rep.details["interior_window"] = cfg.window - cfg.margin;
  rep.details["note"] = "window evidence; finiteness of the homogeneous decomposition is not encoded";
  if (c.verdict != CochainVerdict::trivial) {
    Json w = Json::array();
    for (const auto& [i, v] : *c.witness) w.push_back({i, v.str()});
    fail(rep, {{"solution_outside_inner", std::move(w)}});
  }
}

void check_dsl(const LieAlgebra& alg, const CheckConfig& cfg, Report& rep) {
  const bool builtin = cfg.algebra == "builtin:esv";
  const AlgebraSpec spec = builtin ? builtin_esv() : parse_spec_file(cfg.algebra);
  const std::string printed = print_spec(spec);
  const AlgebraSpec reparsed = parse_spec(printed);
  rep.details["rules"] = spec.rules.size();
  if (!(reparsed == spec)) {
    fail(rep, {{"reason", "parse(print(spec)) differs"}, {"printed", printed}});
    return;
  }
  const BracketRuleSet compiled = compile_spec(spec);
  const auto basis = alg.basis_window(cfg.window);
  std::size_t pairs = 0;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      ++pairs;
      const AlgebraElement x = compiled.bracket(a, b);
      const AlgebraElement y = alg.bracket(a, b);
      if (x != y && !rep.witness)
        fail(rep, {{"pair", names(alg, {a, b})},
                   {"compiled", to_string(x, alg.families())},
                   {"reference", to_string(y, alg.families())}});
    }
  rep.details["pairs_compared"] = pairs;
}

using CheckFn = std::function<void(const LieAlgebra&, const CheckConfig&, Report&)>;

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> r{
      {"jacobi", check_jacobi},
      {"grading", check_grading},
      {"cybe-taft", check_cybe_taft},
      {"taft-identity", check_taft_identity},
      {"compat", check_compat},
      {"mybe", check_mybe},
      {"l1-identities", check_l1},
      {"joint-kernel", check_joint_kernel},
      {"skew-saturation", check_skew_saturation},
      {"h1-l0", check_h1},
      {"hom-l0", check_hom},
      {"der-evidence", check_der},
      {"dsl-roundtrip", check_dsl},
  };
  return r;
}

BasisVector pick(const std::vector<BasisVector>& basis, std::mt19937_64& rng) {
  return basis[rng() % basis.size()];
}

Rational pick_coefficient(std::mt19937_64& rng) {
  const long c = static_cast<long>(rng() % 6);  // 0..5 -> -3..-1, 1..3
  return Rational(c < 3 ? c - 3 : c - 2);
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::evidence: return "evidence";
  }
  return "?";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "jacobi", "grading", "cybe-taft", "taft-identity", "compat", "mybe", "l1-identities",
      "joint-kernel", "skew-saturation", "h1-l0", "hom-l0", "der-evidence", "dsl-roundtrip"};
  return names;
}

std::unique_ptr<LieAlgebra> load_algebra(const std::string& source) {
  if (source == "builtin:esv") return std::make_unique<EsvAlgebra>();
  if (source.rfind("builtin:", 0) == 0) throw ConfigError("unknown builtin algebra '" + source + "'");
  try {
    return std::make_unique<BracketRuleSet>(compile_spec(parse_spec_file(source)));
  } catch (const ParseError& e) {
    throw ConfigError(source + ": " + e.what());
  } catch (const CompileError& e) {
    throw ConfigError(source + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
}

RMatrix random_skew_r(const LieAlgebra& alg, std::mt19937_64& rng, int w, int max_pairs) {
  const auto basis = alg.basis_window(w);
  if (basis.size() < 2) throw PreconditionError("window too small for a skew r-matrix");
  RMatrix r(2);
  const int pairs = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_pairs));
  for (int i = 0; i < pairs; ++i) {
    const BasisVector a = pick(basis, rng);
    BasisVector b = pick(basis, rng);
    while (b == a) b = pick(basis, rng);
    const Rational c = pick_coefficient(rng);
    r.add({a, b}, c);
    r.add({b, a}, -c);
  }
  return r;
}

RMatrix random_r(const LieAlgebra& alg, std::mt19937_64& rng, int w, int max_terms) {
  const auto basis = alg.basis_window(w);
  RMatrix r(2);
  const int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
  for (int i = 0; i < terms; ++i) {
    const BasisVector a = pick(basis, rng);
    const BasisVector b = pick(basis, rng);
    r.add({a, b}, pick_coefficient(rng));
  }
  return r;
}

Report run_check(const CheckConfig& cfg) {
  const auto it = registry().find(cfg.check);
  if (it == registry().end()) throw ConfigError("unknown check '" + cfg.check + "'");
  if (cfg.margin < 0 || cfg.window < cfg.margin)
    throw ConfigError("need window >= margin >= 0");
  const auto alg = load_algebra(cfg.algebra);
  Report rep;
  rep.check = cfg.check;
  rep.config = cfg;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(*alg, cfg, rep);
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

Json report_json(const Report& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["config"] = {{"algebra", r.config.algebra},
                 {"window", r.config.window},
                 {"margin", r.config.margin},
                 {"seed", r.config.seed}};
  j["details"] = r.details;
  if (r.witness) j["witness"] = *r.witness;
  if (r.config.timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string format_report(const Report& r, Format fmt) {
  if (fmt == Format::json) return report_json(r).dump() + "\n";
  std::ostringstream out;
  out << "check: " << r.check << "\n";
  out << "status: " << to_string(r.status) << "\n";
  out << "config: algebra=" << r.config.algebra << " window=" << r.config.window
      << " margin=" << r.config.margin << " seed=" << r.config.seed << "\n";
  for (const auto& [k, v] : r.details.items()) out << "  " << k << ": " << scalar(v) << "\n";
  if (r.witness) {
    out << "witness:";
    if (r.witness->is_object())
      for (const auto& [k, v] : r.witness->items()) out << " " << k << "=" << scalar(v);
    else
      out << " " << scalar(*r.witness);
    out << "\n";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.wall_seconds);
  out << "wall time: " << buf << " s\n";
  return out.str();
}

int exit_code(const Report& r) { return r.status == Status::fail ? 1 : 0; }

}  // namespace liebi
