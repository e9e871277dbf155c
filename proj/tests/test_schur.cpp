#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "affschur/drinfeld.hpp"
#include "affschur/errors.hpp"
#include "affschur/hecke.hpp"
#include "affschur/schur_functor.hpp"

using namespace affschur;
using testing::fe;
using testing::gen;
using testing::vp;

namespace {

Multisegment ms(std::initializer_list<std::pair<const char*, int>> segs) {
  std::vector<Segment> out;
  for (const auto& [c, k] : segs) out.push_back({fe(c), k});
  return Multisegment(std::move(out));
}

SparseVec coords(const SchurModule& w, const TensorVector& tv) {
  std::vector<SparseVec::Entry> e;
  for (const auto& [i, c] : tv.terms()) {
    auto it = std::find(w.ambient().begin(), w.ambient().end(), i);
    REQUIRE(it != w.ambient().end());
    e.emplace_back(static_cast<std::size_t>(it - w.ambient().begin()), c);
  }
  std::sort(e.begin(), e.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return SparseVec::from_entries(std::move(e));
}

TensorVector times_T(const TensorSpace& sp, TensorVector x, const Permutation& w) {
  for (int i : w.reduced_word()) x = sp.h_act(x, HGenerator::T(i));
  return x;
}

// omega . h for h a finite Hecke element
TensorVector times_h(const TensorSpace& sp, const TensorVector& x, const FiniteHeckeElem& h) {
  TensorVector out;
  for (const auto& [w, c] : h.terms()) out += c * times_T(sp, x, w);
  return out;
}

// z_t^+ applied to sum_j c_j omega_j (x) bar y_mu inside Omega^{(x) r} (x) M_a,
// rewritten as an element of Omega_n^{(x) r} (x) bar 1 through
// omega_{j + n lambda} (x) m = omega_j (x) X^{-lambda} m and omega_j (x) T_w = omega_j T_w (x) 1.
TensorVector z_plus_oracle(int n, const Composition& mu, const std::vector<FieldElem>& a,
                           const TensorVector& x, int t) {
  int r = static_cast<int>(a.size());
  TensorSpace sp(n, r, gen());
  AffineHecke alg(r, gen());
  EvalModule module(alg, a);
  FiniteHeckeElem y = alg.finite().y_mu(mu);
  TensorVector out;
  TensorVector moved = sp.u_act(x, UGenerator::ZPlus(t));
  for (const auto& [i, c] : moved.terms()) {
    IndexTuple j = i;
    FiniteHeckeElem m = y;
    for (int k = 0; k < r; ++k) {
      int q = (i[k] - 1 - (((i[k] - 1) % n) + n) % n) / n;
      j[k] = i[k] - n * q;  // i_k = j_k + n q with 1 <= j_k <= n
      m = module.act_X(k + 1, -q, m);
    }
    out += c * times_h(sp, TensorVector::basis(j), m);
  }
  return out;
}

}  // namespace

TEST_CASE("reduced words reproduce the permutation") {
  for (int r = 1; r <= 4; ++r)
    for (const auto& w : all_permutations(r)) CHECK(Permutation::from_word(w.reduced_word(), r) == w);
}

TEST_CASE("dimensions of the Schur images") {
  CHECK(SchurModule(2, ms({{"2", 2}}), gen()).dim() == 1);
  CHECK(SchurModule(2, ms({{"2", 3}}), gen()).dim() == 0);
  CHECK(SchurModule(2, ms({{"2", 1}, {"3*v", 1}}), gen()).dim() == 4);
  CHECK(SchurModule(3, ms({{"2", 2}, {"3*v", 1}}), gen()).dim() == 9);
  CHECK(SchurModule(3, ms({{"2", 3}}), gen()).dim() == 1);
  CHECK(expected_schur_dimension(2, Composition{{2, 1}}) == 2);
  CHECK(expected_schur_dimension(2, Composition{{3, 1}}) == 0);
  CHECK(expected_schur_dimension(4, Composition{{}}) == 1);
  CHECK_THROWS_AS(SchurModule(2, ms({{"2", 5}}), gen()), ResourceError);
}

TEST_CASE("spanning vector for a single segment of length two") {
  SchurModule w(2, ms({{"2", 2}}), gen());
  TensorVector expect = TensorVector::basis({1, 2}) - vp(-1) * TensorVector::basis({2, 1});
  REQUIRE(w.dim() == 1);
  CHECK(w.basis().contains(coords(w, expect)));
  // omega_(1,1) y = 0 and omega_(2,1) y = -v^{-1}(omega_(1,2) - v^{-1} omega_(2,1))
  FiniteHecke h(2, gen());
  FiniteHeckeElem y = h.y_mu(Composition{{2}});
  CHECK(times_h(w.space(), TensorVector::basis({1, 1}), y).is_zero());
  CHECK(times_h(w.space(), TensorVector::basis({2, 1}), y) == -vp(-1) * expect);
  CHECK(tensor_power_image(2, Composition{{2}}, gen()) == w.basis());
}

TEST_CASE("the image is closed under all generators") {
  for (const auto& s : {ms({{"2", 2}}), ms({{"2", 1}, {"3*v", 1}}), ms({{"2", 2}, {"3/v", 1}}),
                        ms({{"5", 1}, {"2", 1}, {"3*v", 1}})}) {
    SchurModule w(2, s, gen());
    CHECK(w.closed());
    for (const auto& g : w.generators()) CHECK(w.matrix(g).size() == w.dim());
  }
  SchurModule w3(3, ms({{"2", 2}, {"3*v", 1}}), gen());
  CHECK(w3.closed());
}

TEST_CASE("weight reports") {
  SchurModule one(2, ms({{"2", 2}}), gen());
  CHECK(weight_dimension_report(one) == std::map<Composition, int>{{Composition{{1, 1}}, 1}});
  SchurModule two(2, ms({{"2", 1}, {"3*v", 1}}), gen());
  CHECK(weight_dimension_report(two) == std::map<Composition, int>{{Composition{{2, 0}}, 1},
                                                                  {Composition{{1, 1}}, 2},
                                                                  {Composition{{0, 2}}, 1}});
  SchurModule empty(2, ms({{"2", 3}}), gen());
  CHECK(weight_dimension_report(empty).empty());
  for (const auto& s : {ms({{"2", 2}, {"3/v", 1}}), ms({{"2", 1}, {"3", 1}, {"5", 1}})}) {
    SchurModule w(3, s, gen());
    int total = 0;
    for (const auto& [lam, d] : weight_dimension_report(w)) total += d;
    CHECK(total == static_cast<int>(w.dim()));
  }
}

TEST_CASE("highest weight vectors") {
  SchurModule one(2, ms({{"2", 2}}), gen());
  CHECK(highest_weight_vectors(one, Composition{{1, 1}}).dim() == 1);
  CHECK(highest_weight_vectors(one, Composition{{2, 0}}).dim() == 0);
  SchurModule two(2, ms({{"2", 1}, {"3*v", 1}}), gen());
  SubspaceBasis hw = highest_weight_vectors(two, Composition{{2, 0}});
  REQUIRE(hw.dim() == 1);
  CHECK(hw.contains(coords(two, TensorVector::basis({1, 1}))));
}

TEST_CASE("maximal weight is the dual partition") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& s : {ms({{"2", 2}, {"3/v", 1}}), ms({{"2", 1}, {"3*v", 1}, {"5/v", 1}}),
                          ms({{"2", 2}, {"3*v", 2}})}) {
      if (!s.is_in_Srn(n)) continue;
      SchurModule w(n, s, gen());
      Partition dual = dual_partition(s.wp());
      Composition top{dual.parts};
      top.parts.resize(n, 0);
      auto report = weight_dimension_report(w);
      CHECK(report[top] == 1);
      // every weight is dominated by the dual partition
      for (const auto& [lam, d] : report) {
        int a = 0, b = 0;
        for (int i = 0; i < n; ++i) {
          a += lam.parts[i];
          b += top.parts[i];
          CHECK(a <= b);
        }
      }
    }
}

TEST_CASE("eigenvalue rejects non-eigenvectors") {
  SchurModule two(2, ms({{"2", 1}, {"3*v", 1}}), gen());
  SparseVec mixed = coords(two, TensorVector::basis({1, 1}) + TensorVector::basis({1, 2}));
  CHECK_THROWS_AS(eigenvalue(two, UGenerator::K(1), mixed), DomainError);
  CHECK(eigenvalue(two, UGenerator::K(1), coords(two, TensorVector::basis({1, 1}))) == vp(2));
}

TEST_CASE("central character against an independent evaluation-module computation") {
  FieldElem a = fe("2");
  {
    Multisegment s = ms({{"2", 2}});
    SchurModule w(2, s, gen());
    const auto& params = w.parameters();
    // the spanning vector is -v omega_(2,1) y
    TensorVector x = -vp(1) * TensorVector::basis({2, 1});
    TensorVector image = times_h(w.space(), x, FiniteHecke(2, gen()).y_mu(Composition{{2}}));
    FieldElem zeta1 = a * (vp(1) + vp(-1));
    CHECK(z_plus_oracle(2, Composition{{2}}, params, x, 1) == zeta1 * image);
    auto cc = central_character(w, coords(w, image), 2);
    CHECK(cc.zeta[0] == zeta1);
    CHECK(cc.series.coeff(1) == -zeta1);
    auto rep = product_drinfeld_check(w, s, 2);
    CHECK(rep.match);
    CHECK(rep.expected_product == (UPoly::linear_factor(a * vp(1)) * UPoly::linear_factor(a * vp(-1))));
  }
  {
    Multisegment s = ms({{"2", 1}, {"3*v", 1}});
    SchurModule w(2, s, gen());
    const auto& params = w.parameters();
    TensorVector x = TensorVector::basis({1, 1});
    FieldElem zeta1 = fe("2") + fe("3*v");
    CHECK(z_plus_oracle(2, Composition{{1, 1}}, params, x, 1) == zeta1 * x);
    FieldElem zeta2 = fe("4") + fe("9*v^2");
    CHECK(z_plus_oracle(2, Composition{{1, 1}}, params, x, 2) == zeta2 * x);
    auto cc = central_character(w, coords(w, x), 2);
    CHECK(cc.zeta == std::vector<FieldElem>{zeta1, zeta2});
  }
  {
    Multisegment s = ms({{"5/v", 2}, {"3*v", 1}});
    SchurModule w(3, s, gen());
    auto rep = product_drinfeld_check(w, s, 2);
    const auto& params = w.parameters();
    CHECK(rep.hw_dim == 1);
    CHECK(rep.match);
    CHECK(rep.zeta[0] == params[0] + params[1] + params[2]);
  }
  SchurModule zero(2, Multisegment(), gen());
  CHECK(zero.dim() == 1);
  auto cc = central_character(zero, zero.basis().rows().front(), 3);
  CHECK(cc.series == UPoly::constant(FieldElem(1)));
}

TEST_CASE("exp of the negative log series is the product of linear factors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 1 + trial % 4;
    std::vector<FieldElem> roots;
    for (int i = 0; i < k; ++i) roots.push_back(testing::random_elem(rng) + FieldElem(i + 1));
    int m = 5;
    std::vector<FieldElem> p(m);
    for (int t = 1; t <= m; ++t)
      for (const auto& a : roots) p[t - 1] += a.pow(t);
    UPoly prod = UPoly::constant(FieldElem(1));
    for (const auto& a : roots) prod = prod * UPoly::linear_factor(a);
    CHECK(exp_neg_log_series(p, m) == prod.truncated(m));
  }
}

TEST_CASE("product of the Q-series equals exp of the central series") {
  // Q_i(u) = exp(-sum_t g_{i,t} (v u)^t / [t]); theta_t = -(1/[t]) sum_i g_{i,t};
  // z_t = -t v^t theta_t. Then prod_i Q_i(u) = exp(-sum_t z_t u^t / t).
  std::mt19937_64 rng(12);
  const Param& p = gen();
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + trial % 3, m = 4;
    std::vector<std::vector<FieldElem>> g(n, std::vector<FieldElem>(m));
    for (auto& row : g)
      for (auto& x : row) x = testing::random_elem(rng);
    UPoly lhs = UPoly::constant(FieldElem(1));
    for (int i = 0; i < n; ++i) {
      std::vector<FieldElem> c(m);
      for (int t = 1; t <= m; ++t)
        c[t - 1] = FieldElem(t) * g[i][t - 1] * p.v_pow(t) / quantum_integer(t, p);
      lhs = (lhs * exp_neg_log_series(c, m)).truncated(m);
    }
    std::vector<FieldElem> z(m);
    for (int t = 1; t <= m; ++t) {
      FieldElem sum;
      for (int i = 0; i < n; ++i) sum += g[i][t - 1];
      FieldElem theta = -sum / quantum_integer(t, p);
      z[t - 1] = -FieldElem(t) * p.v_pow(t) * theta;
    }
    CHECK(lhs == exp_neg_log_series(z, m));
  }
}

TEST_CASE("factorization examples") {
  auto a = factorization_check(2, Composition{{2, 1}}, gen());
  CHECK(a.lhs_dim == 2);
  CHECK(a.factor_dims == std::vector<std::size_t>{1, 2});
  CHECK(a.pass);
  auto b = factorization_check(2, Composition{{1, 1}}, gen());
  CHECK(b.lhs_dim == 4);
  CHECK(b.pass);
  auto c = factorization_check(2, Composition{{3, 1}}, gen());
  CHECK(c.lhs_dim == 0);
  CHECK(c.expected_dim == 0);
  CHECK(c.pass);
  for (const auto& mu : compositions(2, 3)) CHECK(factorization_check(3, mu, gen()).pass);
  SubspaceBasis a1 = tensor_power_image(2, Composition{{1}}, gen());
  CHECK(kronecker(a1, a1).dim() == 4);
}
