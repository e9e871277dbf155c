#include "affschur/suites.hpp"

#include <algorithm>
#include <random>

#include "affschur/drinfeld.hpp"
#include "affschur/errors.hpp"
#include "affschur/hecke.hpp"
#include "affschur/schur_functor.hpp"
#include "affschur/serialize.hpp"
#include "affschur/tensor_space.hpp"

namespace affschur {

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Json SuiteResult::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j{{"name", c.name}, {"pass", c.pass}, {"count", c.count}};
    if (!c.pass) j["counterexample"] = c.counterexample;
    list.push_back(std::move(j));
  }
  return Json{{"suite", suite}, {"pass", pass()}, {"checks", std::move(list)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hecke-relations", "bimodule",          "rogawski", "factorization",
      "bijection",       "central-character", "gfunctor"};
  return names;
}

std::vector<FieldElem> default_bijection_grid(const Param& param) {
  std::vector<FieldElem> out;
  for (int q : {2, 3, 5})
    for (int k = -2; k <= 2; ++k) out.push_back(scaled_v_power(q, k, param));
  return out;
}

std::vector<FieldElem> default_schur_grid(const Param& param) {
  return {scaled_v_power(2, 0, param), scaled_v_power(3, 1, param), scaled_v_power(5, -1, param)};
}

std::vector<FieldElem> generic_centers(int count, const Param& param) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (count > static_cast<int>(std::size(primes))) throw ResourceError("too many generic centers");
  std::vector<FieldElem> out;
  for (int k = 0; k < count; ++k) {
    int e = (k % 2 == 0) ? k / 2 + 1 : -(k / 2 + 1);
    out.push_back(scaled_v_power(primes[k], e, param));
  }
  return out;
}

namespace {

void check_sizes(const SuiteConfig& c) {
  if (c.n < 1) throw DomainError("n must be at least 1");
  if (c.r < 0) throw DomainError("r must be non-negative");
  if (c.N < c.n) throw DomainError("N must be at least n");
  if (c.tmax < 0) throw DomainError("tmax must be non-negative");
}

std::pair<int, int> window_of(const SuiteConfig& c) {
  auto w = c.window.value_or(std::make_pair(-c.n, 2 * c.n));
  if (w.second < w.first) throw DomainError("empty window");
  double tuples = 1;
  for (int k = 0; k < c.r; ++k) tuples *= (w.second - w.first + 1);
  if (tuples > static_cast<double>(kMaxWindowTuples))
    throw ResourceError("window holds more than " + std::to_string(kMaxWindowTuples) + " tuples");
  return w;
}

std::vector<FieldElem> dedupe(std::vector<FieldElem> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<FieldElem> grid_or(const SuiteConfig& c, std::vector<FieldElem> fallback) {
  return dedupe(c.grid.empty() ? std::move(fallback) : c.grid);
}

// Records a failure payload once; later failures only bump the count.
void fail(CheckResult& check, Json payload) {
  if (check.pass) check.counterexample = std::move(payload);
  check.pass = false;
}

Json relation_payload(const RelationViolation& v) {
  return Json{{"relation", v.relation}, {"tuple", to_json(v.tuple)}};
}

void schur_bounds(const SuiteConfig& c, int n) {
  if (c.r > limits::kMaxSchurRank)
    throw ResourceError("Schur suites need r <= " + std::to_string(limits::kMaxSchurRank));
  if (n > limits::kMaxSchurWindow)
    throw ResourceError("Schur suites need n <= " + std::to_string(limits::kMaxSchurWindow));
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult suite_hecke_relations(const SuiteConfig& c) {
  check_sizes(c);
  if (c.r > limits::kMaxHeckeRank)
    throw ResourceError("Hecke suites need r <= " + std::to_string(limits::kMaxHeckeRank));
  SuiteResult out{"hecke-relations", {}};
  auto [lo, hi] = window_of(c);

  CheckResult tensor{"tensor space relations", true, 0, nullptr};
  TensorSpace space(c.n, c.r, c.param);
  auto violations = hecke_relation_violations(space, lo, hi, &tensor.count);
  if (!violations.empty()) fail(tensor, relation_payload(violations.front()));
  out.checks.push_back(std::move(tensor));

  // Quadratic, braid and commuting relations as left multiplication on H(r).
  CheckResult finite{"finite Hecke relations", true, 0, nullptr};
  FiniteHecke h(c.r, c.param);
  FieldElem v2 = c.param.v2();
  for (const auto& w : h.basis()) {
    FiniteHeckeElem tw = h.T(w);
    auto L = [&](int i, const FiniteHeckeElem& x) { return h.mul_simple_left(i, x); };
    for (int i = 1; i < c.r; ++i) {
      ++finite.count;
      if (L(i, L(i, tw)) != (v2 - FieldElem(1)) * L(i, tw) + v2 * tw)
        fail(finite, Json{{"relation", "quadratic"}, {"i", i}, {"w", w.to_string()}});
      if (i + 1 < c.r) {
        ++finite.count;
        if (L(i, L(i + 1, L(i, tw))) != L(i + 1, L(i, L(i + 1, tw))))
          fail(finite, Json{{"relation", "braid"}, {"i", i}, {"w", w.to_string()}});
      }
      for (int j = i + 2; j < c.r; ++j) {
        ++finite.count;
        if (L(i, L(j, tw)) != L(j, L(i, tw)))
          fail(finite, Json{{"relation", "commuting"}, {"i", i}, {"j", j}, {"w", w.to_string()}});
      }
    }
  }
  out.checks.push_back(std::move(finite));

  CheckResult bern{"mixed relations in the affine Hecke algebra", true, 0, nullptr};
  CheckResult assoc{"affine multiplication associativity", true, 0, nullptr};
  if (c.r >= 1 && c.r <= 4) {
    AffineHecke a(c.r, c.param);
    for (int i = 1; i < c.r; ++i) {
      ++bern.count;
      if (a.mul(a.mul(a.T(i), a.X(i)), a.T(i)) != v2 * a.X(i + 1))
        fail(bern, Json{{"relation", "T_i X_i T_i = v^2 X_{i+1}"}, {"i", i}});
      ++bern.count;
      AffineHeckeElem rhs = a.mul(a.T(i), a.X(i)) + (v2 - FieldElem(1)) * a.X(i + 1);
      if (a.mul(a.X(i + 1), a.T(i)) != rhs)
        fail(bern, Json{{"relation", "X_{i+1} T_i = T_i X_i + (v^2-1) X_{i+1}"}, {"i", i}});
      for (int j = 1; j <= c.r; ++j) {
        if (j == i || j == i + 1) continue;
        ++bern.count;
        if (a.mul(a.X(j), a.T(i)) != a.mul(a.T(i), a.X(j)))
          fail(bern, Json{{"relation", "X_j T_i = T_i X_j"}, {"i", i}, {"j", j}});
      }
    }
    for (int j = 1; j <= c.r; ++j) {
      for (int k = 1; k <= c.r; ++k) {
        ++bern.count;
        if (a.mul(a.X(j), a.X(k)) != a.mul(a.X(k), a.X(j)))
          fail(bern, Json{{"relation", "X_j X_k = X_k X_j"}, {"j", j}, {"k", k}});
      }
      ++bern.count;
      if (a.mul(a.X(j), a.X(j, -1)) != a.one())
        fail(bern, Json{{"relation", "X_j X_j^-1 = 1"}, {"j", j}});
    }

    std::mt19937_64 rng(c.seed);
    auto perms = all_permutations(c.r);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> exponent(-2, 2);
    auto monomial = [&]() {
      std::vector<int> lambda(c.r);
      for (int& x : lambda) x = exponent(rng);
      AffineHeckeElem m(c.r);
      m.add_term(perms[pick(rng)], lambda, FieldElem(1));
      return m;
    };
    for (int trial = 0; trial < 20; ++trial) {
      AffineHeckeElem x = monomial(), y = monomial(), z = monomial();
      ++assoc.count;
      if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z)))
        fail(assoc, Json{{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}});
    }
  }
  out.checks.push_back(std::move(bern));
  out.checks.push_back(std::move(assoc));
  return out;
}

SuiteResult suite_bimodule(const SuiteConfig& c) {
  check_sizes(c);
  if (c.r > limits::kMaxHeckeRank)
    throw ResourceError("Hecke suites need r <= " + std::to_string(limits::kMaxHeckeRank));
  SuiteResult out{"bimodule", {}};
  auto [lo, hi] = window_of(c);
  TensorSpace space(c.n, c.r, c.param);

  CheckResult comm{"quantum and Hecke actions commute", true, 0, nullptr};
  CommutationReport rep = commutation_witness(space, lo, hi, 2);
  comm.count = rep.checked;
  if (!rep.violations.empty()) {
    const auto& v = rep.violations.front();
    fail(comm, Json{{"tuple", to_json(v.tuple)}, {"u", v.u.to_string()}, {"h", v.h.to_string()}});
  }
  out.checks.push_back(std::move(comm));

  CheckResult qgl{"quantum group relations", true, 0, nullptr};
  auto violations = quantum_relation_violations(space, lo, hi, 2, &qgl.count);
  if (!violations.empty()) fail(qgl, relation_payload(violations.front()));
  out.checks.push_back(std::move(qgl));
  return out;
}

SuiteResult suite_rogawski(const SuiteConfig& c) {
  check_sizes(c);
  SuiteResult out{"rogawski", {}};
  FiniteHecke h(c.r, c.param);
  CheckResult eq{"I_mu = J_mu", true, 0, nullptr};
  CheckResult sign{"T_i y_mu = -y_mu", true, 0, nullptr};
  for (const auto& lam : partitions(c.r)) {
    Composition mu = lam.as_composition();
    ++eq.count;
    SubspaceBasis I = h.ideal_I(mu);
    SubspaceBasis J = h.ideal_J(mu);
    if (!(I == J))
      fail(eq, Json{{"mu", to_json(mu)}, {"dim_I", I.dim()}, {"dim_J", J.dim()}});
    FiniteHeckeElem y = h.y_mu(mu);
    for (int i = 1; i < c.r; ++i) {
      if (!simple_in_young(mu, i)) continue;
      ++sign.count;
      if (h.mul_simple_left(i, y) != FieldElem(-1) * y) fail(sign, Json{{"mu", to_json(mu)}, {"i", i}});
    }
  }
  out.checks.push_back(std::move(eq));
  out.checks.push_back(std::move(sign));
  return out;
}

SuiteResult suite_factorization(const SuiteConfig& c) {
  check_sizes(c);
  schur_bounds(c, c.n);
  SuiteResult out{"factorization", {}};

  CheckResult law{"dimension and vanishing law", true, 0, nullptr};
  CheckResult closed{"Schur image closed under the quantum action", true, 0, nullptr};
  for (const auto& s : enumerate_multisegments(c.r, 0, grid_or(c, default_schur_grid(c.param)))) {
    SchurModule w(c.n, s, c.param, c.tmax);
    Composition mu = s.wp().as_composition();
    long expected = expected_schur_dimension(c.n, mu);
    ++law.count;
    if (static_cast<long>(w.dim()) != expected)
      fail(law, Json{{"multisegment", to_json(s)}, {"dimension", w.dim()}, {"expected", expected}});
    ++closed.count;
    if (!w.closed())
      fail(closed, Json{{"multisegment", to_json(s)}, {"generator", w.unclosed().front().to_string()}});
  }
  out.checks.push_back(std::move(law));
  out.checks.push_back(std::move(closed));

  CheckResult fact{"tensor factorization", true, 0, nullptr};
  for (const auto& lam : partitions(c.r)) {
    ++fact.count;
    FactorizationReport rep = factorization_check(c.n, lam.as_composition(), c.param);
    if (!rep.pass)
      fail(fact, Json{{"mu", to_json(rep.mu)},
                      {"lhs_dim", rep.lhs_dim},
                      {"rhs_dim", rep.rhs_dim},
                      {"expected", rep.expected_dim},
                      {"subspace_equal", rep.subspace_equal}});
  }
  out.checks.push_back(std::move(fact));
  return out;
}

SuiteResult suite_bijection(const SuiteConfig& c) {
  check_sizes(c);
  SuiteResult out{"bijection", {}};
  const Param& p = c.param;
  auto grid = grid_or(c, default_bijection_grid(p));

  CheckResult dom{"pa is dominant with degrees mu'", true, 0, nullptr};
  CheckResult fwd{"pa_inverse after pa", true, 0, nullptr};
  CheckResult bwd{"pa after pa_inverse", true, 0, nullptr};
  for (const auto& s : enumerate_multisegments(c.r, c.n, grid)) {
    DominantTuple q = pa(c.n, c.r, s, p);
    Partition dual = dual_partition(s.wp());
    std::vector<int> expected = dual.parts;
    expected.resize(c.n, 0);
    ++dom.count;
    if (!is_dominant(q, p) || q.degrees() != expected || q.total_degree() != c.r)
      fail(dom, Json{{"multisegment", to_json(s)}, {"tuple", to_json(q)}});
    Multisegment back = pa_inverse(c.n, c.r, q, p);
    ++fwd.count;
    if (!(back == s))
      fail(fwd, Json{{"multisegment", to_json(s)}, {"image", to_json(back)}});
    ++bwd.count;
    if (!(pa(c.n, c.r, back, p) == q)) fail(bwd, Json{{"tuple", to_json(q)}});
  }
  out.checks.push_back(std::move(dom));
  out.checks.push_back(std::move(fwd));
  out.checks.push_back(std::move(bwd));

  // Q_1 = (1 - cu)^{r-1}, Q_n = 1 - cu and all others 1: the last ratio has a pole.
  CheckResult rej{"non-dominant tuples rejected", true, 0, nullptr};
  if (c.n >= 2 && c.r >= 1) {
    for (const auto& center : grid) {
      std::vector<std::vector<FieldElem>> roots(c.n);
      roots[0].assign(c.r - 1, center);
      roots[c.n - 1].assign(1, center);
      DominantTuple q(roots);
      bool rejected = false;
      try {
        pa_inverse(c.n, c.r, q, p);
      } catch (const DomainError&) {
        rejected = true;
      }
      ++rej.count;
      if (is_dominant(q, p) || !rejected) fail(rej, Json{{"tuple", to_json(q)}});
    }
  }
  out.checks.push_back(std::move(rej));
  return out;
}

SuiteResult suite_central_character(const SuiteConfig& c) {
  check_sizes(c);
  schur_bounds(c, c.n);
  SuiteResult out{"central-character", {}};
  CheckResult hw{"highest weight space is a line", true, 0, nullptr};
  CheckResult kw{"K eigenvalues give mu'", true, 0, nullptr};
  CheckResult cc{"central character matches the Drinfeld product", true, 0, nullptr};
  auto centers = generic_centers(c.r, c.param);
  for (const auto& lam : partitions(c.r, c.n)) {
    std::vector<Segment> segs;
    for (std::size_t k = 0; k < lam.parts.size(); ++k) segs.push_back({centers[k], lam.parts[k]});
    Multisegment s(std::move(segs));
    SchurModule w(c.n, s, c.param, c.tmax);
    PseudoHWReport rep = product_drinfeld_check(w, s, c.tmax);
    Json where{{"multisegment", to_json(s)}, {"weight", to_json(rep.weight)}};
    ++hw.count;
    if (rep.hw_dim != 1 || weight_space(w, rep.weight).dim() != 1) {
      Json payload = where;
      payload["hw_dim"] = rep.hw_dim;
      fail(hw, payload);
    }
    ++kw.count;
    if (!rep.k_matches) {
      Json payload = where;
      payload["k_exponents"] = rep.k_exponents;
      fail(kw, payload);
    }
    ++cc.count;
    if (!rep.match) {
      Json payload = where;
      payload["central_series"] = to_json(rep.central_series);
      payload["expected_product"] = to_json(rep.expected_product);
      fail(cc, payload);
    }
  }
  out.checks.push_back(std::move(hw));
  out.checks.push_back(std::move(kw));
  out.checks.push_back(std::move(cc));
  return out;
}

SuiteResult suite_gfunctor(const SuiteConfig& c) {
  check_sizes(c);
  schur_bounds(c, c.N);
  SuiteResult out{"gfunctor", {}};
  const Param& p = c.param;
  auto grid = grid_or(c, default_schur_grid(p));

  CheckResult tl{"pa_N = tilde(pa_n)", true, 0, nullptr};
  for (const auto& s : enumerate_multisegments(c.r, c.n, grid)) {
    ++tl.count;
    if (!(pa(c.N, c.r, s, p) == tilde(pa(c.n, c.r, s, p), c.N)))
      fail(tl, Json{{"multisegment", to_json(s)}});
  }
  out.checks.push_back(std::move(tl));

  CheckResult proj{"e is an idempotent module map on F_N", true, 0, nullptr};
  CheckResult dims{"weight dimensions of eF_N equal those of F_n", true, 0, nullptr};
  for (const auto& s : enumerate_multisegments(c.r, c.N, grid)) {
    SchurModule big(c.N, s, p, c.tmax);
    GProjection g = g_projection(c.N, c.n, big);
    ++proj.count;
    if (!g.idempotent || !g.contained || !g.commutes)
      fail(proj, Json{{"multisegment", to_json(s)}, {"failures", g.failures}});

    std::map<Composition, int> small_weights;
    bool same_space = g.reencoded.dim() == 0;
    if (s.is_in_Srn(c.n)) {
      SchurModule small(c.n, s, p, c.tmax);
      small_weights = weight_dimension_report(small);
      same_space = g.reencoded == small.basis();
    }
    ++dims.count;
    if (g.weights != small_weights || !same_space) {
      Json lhs = Json::array(), rhs = Json::array();
      for (const auto& [k, d] : g.weights) lhs.push_back(Json{{"weight", to_json(k)}, {"dim", d}});
      for (const auto& [k, d] : small_weights) rhs.push_back(Json{{"weight", to_json(k)}, {"dim", d}});
      fail(dims, Json{{"multisegment", to_json(s)}, {"projected", lhs}, {"small", rhs}});
    }
  }
  out.checks.push_back(std::move(proj));
  out.checks.push_back(std::move(dims));
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "hecke-relations") return suite_hecke_relations(config);
  if (name == "bimodule") return suite_bimodule(config);
  if (name == "rogawski") return suite_rogawski(config);
  if (name == "factorization") return suite_factorization(config);
  if (name == "bijection") return suite_bijection(config);
  if (name == "central-character") return suite_central_character(config);
  if (name == "gfunctor") return suite_gfunctor(config);
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace affschur
