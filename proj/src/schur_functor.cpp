#include "affschur/schur_functor.hpp"

#include <algorithm>

#include "affschur/drinfeld.hpp"
#include "affschur/errors.hpp"
#include "affschur/hecke.hpp"

namespace affschur {

namespace {

void check_bounds(int n, int r) {
  if (r > limits::kMaxSchurRank)
    throw ResourceError("Schur image rank " + std::to_string(r) + " exceeds the bound " +
                        std::to_string(limits::kMaxSchurRank));
  if (n > limits::kMaxSchurWindow)
    throw ResourceError("Schur image window " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(limits::kMaxSchurWindow));
}

int pow_int(int base, int e) {
  int out = 1;
  while (e-- > 0) out *= base;
  return out;
}

// omega_j . T_w for w given by a reduced word.
TensorVector right_act_word(const TensorSpace& sp, const IndexTuple& j,
                            const std::vector<int>& word) {
  TensorVector t = TensorVector::basis(j);
  for (int i : word) t = sp.h_act(t, HGenerator::T(i));
  return t;
}

SparseVec window_coords(const TensorVector& tv, int n) {
  std::vector<SparseVec::Entry> entries;
  entries.reserve(tv.terms().size());
  for (const auto& [i, c] : tv.terms()) {
    if (!in_window(i, n)) throw DomainError("tensor leaves the finite window");
    entries.emplace_back(window_rank(i, n), c);
  }
  return SparseVec::from_entries(std::move(entries));
}

}  // namespace

long expected_schur_dimension(int n, const Composition& mu) {
  long d = 1;
  for (int m : mu.parts) {
    if (m > n) return 0;
    d *= binomial(n, m);
  }
  return d;
}

SubspaceBasis tensor_power_image(int n, const Composition& mu, const Param& param) {
  int r = mu.r();
  check_bounds(n, r);
  TensorSpace sp(n, r, param);
  FiniteHecke hecke(r, param);
  FiniteHeckeElem y = hecke.y_mu(mu);
  std::vector<std::pair<std::vector<int>, FieldElem>> terms;
  for (const auto& [w, c] : y.terms()) terms.emplace_back(w.reduced_word(), c);

  auto window = finite_window(n, r);
  SubspaceBasis out(window.size());
  for (const auto& j : window) {
    TensorVector image;
    for (const auto& [word, c] : terms) image += c * right_act_word(sp, j, word);
    out.insert(window_coords(image, n));
  }
  return out;
}

SubspaceBasis kronecker(const SubspaceBasis& a, const SubspaceBasis& b) {
  std::size_t nb = b.ambient_dim();
  SubspaceBasis out(a.ambient_dim() * nb);
  for (const auto& x : a.rows()) {
    for (const auto& y : b.rows()) {
      std::vector<SparseVec::Entry> entries;
      for (const auto& [i, c] : x.entries())
        for (const auto& [k, d] : y.entries()) entries.emplace_back(i * nb + k, c * d);
      out.insert(SparseVec::from_entries(std::move(entries)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SchurModule

SchurModule::SchurModule(int n, const Multisegment& s, const Param& param, int max_loop)
    : SchurModule(n, s.wp().as_composition(), juxtapose(s, param), param, max_loop) {}

SchurModule::SchurModule(int n, Composition mu, std::vector<FieldElem> a, const Param& param,
                         int max_loop)
    : space_((check_bounds(n, mu.r()), n), mu.r(), param),
      mu_(std::move(mu)),
      a_(std::move(a)),
      max_loop_(max_loop) {
  if (static_cast<int>(a_.size()) != mu_.r())
    throw DomainError("parameter tuple length differs from |mu|");
  for (const auto& x : a_)
    if (x.is_zero()) throw DomainError("evaluation parameters must be nonzero");
  if (max_loop < 0) throw DomainError("loop bound must be non-negative");
  build();
}

FieldElem SchurModule::a_power(int t, int e) const { return a_[t].pow(e); }

SparseVec SchurModule::reduce(const TensorVector& tv) const {
  int n = this->n();
  std::vector<SparseVec::Entry> entries;
  entries.reserve(tv.terms().size());
  for (const auto& [i, c] : tv.terms()) {
    IndexTuple j(i.size());
    FieldElem coef = c;
    for (size_t t = 0; t < i.size(); ++t) {
      j[t] = residue(i[t], n);
      int lambda = (i[t] - j[t]) / n;
      if (lambda != 0) coef *= a_power(static_cast<int>(t), -lambda);
    }
    entries.emplace_back(window_rank(j, n), coef);
  }
  return SparseVec::from_entries(std::move(entries));
}

TensorVector SchurModule::to_tensor(const SparseVec& x) const {
  TensorVector t;
  for (const auto& [k, c] : x.entries()) t.add_term(ambient_.at(k), c);
  return t;
}

SparseVec SchurModule::act(UGenerator g, const SparseVec& x) const {
  return reduce(space_.u_act(to_tensor(x), g));
}

void SchurModule::build() {
  ambient_ = finite_window(n(), r());
  basis_ = tensor_power_image(n(), mu_, param());
  generators_ = space_.quantum_generators(max_loop_);
  for (const auto& g : generators_) {
    ActionMatrix m;
    m.reserve(basis_.dim());
    bool ok = true;
    for (const auto& row : basis_.rows()) {
      SparseVec image = act(g, row);
      if (!basis_.contains(image)) {
        ok = false;
        break;
      }
      m.push_back(basis_.coordinates(image));
    }
    if (ok)
      matrices_.emplace(g, std::move(m));
    else
      unclosed_.push_back(g);
  }
}

// ---------------------------------------------------------------------------
// Weights, highest weight vectors, central character

SparseVec weight_component(const SchurModule& w, const SparseVec& x, const Composition& lambda) {
  std::vector<SparseVec::Entry> entries;
  for (const auto& [k, c] : x.entries())
    if (residue_weight(w.ambient()[k], w.n()) == lambda) entries.emplace_back(k, c);
  return SparseVec::from_entries(std::move(entries));
}

SubspaceBasis weight_space(const SchurModule& w, const Composition& lambda) {
  SubspaceBasis out(w.ambient().size());
  for (const auto& row : w.basis().rows()) out.insert(weight_component(w, row, lambda));
  return out;
}

std::map<Composition, int> weight_dimension_report(const SchurModule& w) {
  std::map<Composition, int> out;
  if (w.dim() == 0) return out;
  for (const auto& lambda : compositions(w.n(), w.r())) {
    int d = static_cast<int>(weight_space(w, lambda).dim());
    if (d > 0) out.emplace(lambda, d);
  }
  return out;
}

SubspaceBasis highest_weight_vectors(const SchurModule& w, const Composition& lambda) {
  std::size_t dim = w.ambient().size();
  SubspaceBasis ws = weight_space(w, lambda);
  SubspaceBasis out(dim);
  if (ws.dim() == 0) return out;
  std::vector<SparseVec> images;
  for (const auto& b : ws.rows()) {
    SparseVec stacked;
    for (int i = 1; i < w.n(); ++i)
      stacked = stacked + w.act(UGenerator::E(i), b).shifted(static_cast<std::size_t>(i - 1) * dim);
    images.push_back(std::move(stacked));
  }
  std::size_t image_dim = dim * static_cast<std::size_t>(std::max(1, w.n() - 1));
  for (const auto& c : kernel(images, image_dim)) {
    SparseVec v;
    for (const auto& [k, x] : c.entries()) v.axpy(x, ws.rows()[k]);
    out.insert(v);
  }
  return out;
}

FieldElem eigenvalue(const SchurModule& w, UGenerator g, const SparseVec& x) {
  if (x.is_zero()) throw DomainError("eigenvalue of the zero vector");
  SparseVec image = w.act(g, x);
  FieldElem lambda = image.at(x.leading_index()) / x.leading_value();
  SparseVec expected = x;
  expected.scale(lambda);
  if (image != expected)
    throw DomainError("vector is not an eigenvector of " + g.to_string());
  return lambda;
}

UPoly exp_neg_log_series(const std::vector<FieldElem>& power_sums, int m) {
  // f = exp(g) with g_k = -c_k / k, so k g_k = -c_k and m f_m = sum_k k g_k f_{m-k}.
  std::vector<FieldElem> f(m + 1);
  f[0] = FieldElem(1);
  for (int j = 1; j <= m; ++j) {
    FieldElem acc;
    for (int k = 1; k <= j && k <= static_cast<int>(power_sums.size()); ++k)
      acc -= power_sums[k - 1] * f[j - k];
    f[j] = acc / FieldElem(j);
  }
  return UPoly(std::move(f));
}

CentralCharacter central_character(const SchurModule& w, const SparseVec& vec, int tmax) {
  if (tmax < 0) throw DomainError("tmax must be non-negative");
  CentralCharacter out;
  for (int t = 1; t <= tmax; ++t) out.zeta.push_back(eigenvalue(w, UGenerator::ZPlus(t), vec));
  out.series = exp_neg_log_series(out.zeta, tmax);
  return out;
}

PseudoHWReport product_drinfeld_check(const SchurModule& w, const Multisegment& s, int tmax) {
  PseudoHWReport rep;
  int n = w.n();
  Partition dual = dual_partition(s.wp());
  if (static_cast<int>(dual.parts.size()) > n)
    throw DomainError("dual partition has more than n parts");
  rep.weight.parts = dual.parts;
  rep.weight.parts.resize(n, 0);
  rep.expected_product = drinfeld_product(pa(n, s.total_length(), s, w.param())).truncated(tmax);
  if (w.dim() == 0) return rep;

  SubspaceBasis hw = highest_weight_vectors(w, rep.weight);
  rep.hw_dim = static_cast<int>(hw.dim());
  if (hw.dim() == 0) return rep;
  const SparseVec& vec = hw.rows().front();

  rep.k_matches = true;
  for (int i = 1; i <= n; ++i) {
    FieldElem k = eigenvalue(w, UGenerator::K(i), vec);
    int e = 0;
    bool found = false;
    for (int cand = -w.r(); cand <= w.r() && !found; ++cand) {
      if (k == w.param().v_pow(cand)) {
        e = cand;
        found = true;
      }
    }
    rep.k_exponents.push_back(found ? e : -1000);
    if (!found || e != rep.weight.parts[i - 1]) rep.k_matches = false;
  }

  CentralCharacter cc = central_character(w, vec, tmax);
  rep.zeta = cc.zeta;
  rep.central_series = cc.series;
  rep.match = rep.central_series == rep.expected_product;
  return rep;
}

FactorizationReport factorization_check(int n, const Composition& mu, const Param& param) {
  FactorizationReport rep;
  rep.mu = mu;
  SubspaceBasis lhs = tensor_power_image(n, mu, param);
  rep.lhs_dim = lhs.dim();
  SubspaceBasis rhs(1);
  rhs.insert(SparseVec::from_entries({{0, FieldElem(1)}}));
  std::size_t prod = 1;
  for (int m : mu.parts) {
    SubspaceBasis factor = tensor_power_image(n, Composition{{m}}, param);
    rep.factor_dims.push_back(factor.dim());
    prod *= factor.dim();
    rhs = kronecker(rhs, factor);
  }
  rep.rhs_dim = prod;
  rep.expected_dim = expected_schur_dimension(n, mu);
  rep.subspace_equal = lhs == rhs;
  rep.pass = rep.subspace_equal && rep.lhs_dim == rep.rhs_dim &&
             static_cast<long>(rep.lhs_dim) == rep.expected_dim &&
             lhs.ambient_dim() == static_cast<std::size_t>(pow_int(n, mu.r()));
  return rep;
}

FactorizationReport factorization_check(int n, const Multisegment& s, const Param& param) {
  return factorization_check(n, s.wp().as_composition(), param);
}

}  // namespace affschur
