#include "affschur/hecke.hpp"

#include <sstream>

#include "affschur/errors.hpp"

namespace affschur {

namespace {

std::string vec_text(const std::vector<int>& v) {
  std::ostringstream out;
  out << '[';
  for (size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
  out << ']';
  return out.str();
}

template <class Map, class Key>
void add_into(Map& terms, const Key& key, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteHeckeElem

FieldElem FiniteHeckeElem::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FieldElem() : it->second;
}

void FiniteHeckeElem::add_term(const Permutation& w, const FieldElem& c) {
  add_into(terms_, w, c);
}

FiniteHeckeElem& FiniteHeckeElem::operator+=(const FiniteHeckeElem& o) {
  if (r_ == 0) r_ = o.r_;
  for (const auto& [w, c] : o.terms_) add_into(terms_, w, c);
  return *this;
}

FiniteHeckeElem& FiniteHeckeElem::operator-=(const FiniteHeckeElem& o) {
  if (r_ == 0) r_ = o.r_;
  for (const auto& [w, c] : o.terms_) add_into(terms_, w, -c);
  return *this;
}

FiniteHeckeElem operator*(const FieldElem& c, const FiniteHeckeElem& h) {
  FiniteHeckeElem out(h.r_);
  if (c.is_zero()) return out;
  for (const auto& [w, x] : h.terms_) out.terms_.emplace(w, c * x);
  return out;
}

std::string FiniteHeckeElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") * T" + w.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// AffineHeckeElem

FieldElem AffineHeckeElem::coeff(const Permutation& w, const std::vector<int>& lambda) const {
  auto it = terms_.find(AffineKey{w, lambda});
  return it == terms_.end() ? FieldElem() : it->second;
}

void AffineHeckeElem::add_term(const Permutation& w, const std::vector<int>& lambda,
                               const FieldElem& c) {
  add_into(terms_, AffineKey{w, lambda}, c);
}

AffineHeckeElem& AffineHeckeElem::operator+=(const AffineHeckeElem& o) {
  if (r_ == 0) r_ = o.r_;
  for (const auto& [k, c] : o.terms_) add_into(terms_, k, c);
  return *this;
}

AffineHeckeElem& AffineHeckeElem::operator-=(const AffineHeckeElem& o) {
  if (r_ == 0) r_ = o.r_;
  for (const auto& [k, c] : o.terms_) add_into(terms_, k, -c);
  return *this;
}

AffineHeckeElem operator*(const FieldElem& c, const AffineHeckeElem& h) {
  AffineHeckeElem out(h.r_);
  if (c.is_zero()) return out;
  for (const auto& [k, x] : h.terms_) out.terms_.emplace(k, c * x);
  return out;
}

std::string AffineHeckeElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") * T" + k.w.to_string() + " * X" + vec_text(k.lambda);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FiniteHecke

FiniteHecke::FiniteHecke(int r, Param param) : r_(r), param_(std::move(param)) {
  if (r < 0) throw DomainError("Hecke algebra rank must be non-negative");
  if (r > limits::kMaxHeckeRank)
    throw ResourceError("Hecke algebra rank " + std::to_string(r) + " exceeds the bound " +
                        std::to_string(limits::kMaxHeckeRank));
  basis_ = all_permutations(r);
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

FiniteHeckeElem FiniteHecke::one() const { return T(Permutation::identity(r_)); }

FiniteHeckeElem FiniteHecke::T(int i) const {
  if (i < 1 || i >= r_) throw DomainError("T_i index out of range");
  return T(Permutation::simple(i, r_));
}

FiniteHeckeElem FiniteHecke::T(const Permutation& w) const {
  FiniteHeckeElem h(r_);
  h.add_term(w, FieldElem(1));
  return h;
}

FiniteHeckeElem FiniteHecke::T_inverse(int i) const {
  FieldElem vm2 = param_.v_inv() * param_.v_inv();
  return vm2 * T(i) + (vm2 - FieldElem(1)) * one();
}

FiniteHeckeElem FiniteHecke::mul_simple_right(const FiniteHeckeElem& h, int i) const {
  // T_w T_i = T_{w s_i} if w(i) < w(i+1), else (v^2-1) T_w + v^2 T_{w s_i}.
  FiniteHeckeElem out(r_);
  FieldElem q = param_.v2();
  FieldElem qm1 = q - FieldElem(1);
  for (const auto& [w, c] : h.terms()) {
    Permutation ws = w.times_simple_right(i);
    if (w.right_ascent(i)) {
      out.add_term(ws, c);
    } else {
      out.add_term(w, qm1 * c);
      out.add_term(ws, q * c);
    }
  }
  return out;
}

FiniteHeckeElem FiniteHecke::mul_simple_left(int i, const FiniteHeckeElem& h) const {
  FiniteHeckeElem out(r_);
  FieldElem q = param_.v2();
  FieldElem qm1 = q - FieldElem(1);
  for (const auto& [w, c] : h.terms()) {
    Permutation sw = w.times_simple_left(i);
    if (w.left_ascent(i)) {
      out.add_term(sw, c);
    } else {
      out.add_term(w, qm1 * c);
      out.add_term(sw, q * c);
    }
  }
  return out;
}

FiniteHeckeElem FiniteHecke::mul(const FiniteHeckeElem& a, const FiniteHeckeElem& b) const {
  FiniteHeckeElem out(r_);
  for (const auto& [u, c] : b.terms()) {
    FiniteHeckeElem prod = a;
    for (int i : u.reduced_word()) prod = mul_simple_right(prod, i);
    out += c * prod;
  }
  return out;
}

FiniteHeckeElem FiniteHecke::y_mu(const Composition& mu) const {
  if (mu.r() != r_) throw DomainError("composition does not sum to the Hecke rank");
  FiniteHeckeElem y(r_);
  FieldElem base = -param_.v_inv() * param_.v_inv();  // (-v^2)^{-1}
  for (const auto& w : young_subgroup(mu)) y.add_term(w, base.pow(w.length()));
  return y;
}

FiniteHeckeElem FiniteHecke::c_element(int i) const {
  return param_.v_inv() * T(i) - param_.v() * one();
}

SparseVec FiniteHecke::coords(const FiniteHeckeElem& h) const {
  std::vector<SparseVec::Entry> e;
  e.reserve(h.terms().size());
  for (const auto& [w, c] : h.terms()) e.emplace_back(index_of(w), c);
  return SparseVec::from_entries(std::move(e));
}

FiniteHeckeElem FiniteHecke::from_coords(const SparseVec& c) const {
  FiniteHeckeElem h(r_);
  for (const auto& [k, x] : c.entries()) h.add_term(basis_.at(k), x);
  return h;
}

SubspaceBasis FiniteHecke::ideal_I(const Composition& mu) const {
  FiniteHeckeElem y = y_mu(mu);
  SubspaceBasis b(basis_.size());
  for (const auto& w : basis_) b.insert(coords(mul(T(w), y)));
  return b;
}

SubspaceBasis FiniteHecke::ideal_J(const Composition& mu) const {
  if (mu.r() != r_) throw DomainError("composition does not sum to the Hecke rank");
  SubspaceBasis whole(basis_.size());
  for (const auto& w : basis_) whole.insert(coords(T(w)));
  SubspaceBasis acc = whole;
  for (int i = 1; i < r_; ++i) {
    if (!simple_in_young(mu, i)) continue;
    FiniteHeckeElem c = c_element(i);
    SubspaceBasis left_ideal(basis_.size());
    for (const auto& w : basis_) left_ideal.insert(coords(mul(T(w), c)));
    acc = intersect(acc, left_ideal);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// AffineHecke

std::vector<std::pair<std::vector<int>, int>> bernstein_divided_difference(
    const std::vector<int>& lambda, int i) {
  std::vector<std::pair<std::vector<int>, int>> out;
  int a = lambda[i - 1];
  int b = lambda[i];
  if (a > b) {
    for (int k = 0; k < a - b; ++k) {
      std::vector<int> m = lambda;
      m[i - 1] = b + k;
      m[i] = a - k;
      out.emplace_back(std::move(m), -1);
    }
  } else if (a < b) {
    for (int k = 0; k < b - a; ++k) {
      std::vector<int> m = lambda;
      m[i - 1] = a + k;
      m[i] = b - k;
      out.emplace_back(std::move(m), 1);
    }
  }
  return out;
}

AffineHecke::AffineHecke(int r, Param param) : finite_(r, std::move(param)) {}

AffineHeckeElem AffineHecke::one() const { return X_monomial(std::vector<int>(rank(), 0)); }

AffineHeckeElem AffineHecke::T(int i) const { return embed(finite_.T(i)); }

AffineHeckeElem AffineHecke::T_inverse(int i) const { return embed(finite_.T_inverse(i)); }

AffineHeckeElem AffineHecke::X(int j, int power) const {
  if (j < 1 || j > rank()) throw DomainError("X_j index out of range");
  std::vector<int> lambda(rank(), 0);
  lambda[j - 1] = power;
  return X_monomial(lambda);
}

AffineHeckeElem AffineHecke::X_monomial(const std::vector<int>& lambda) const {
  if (static_cast<int>(lambda.size()) != rank()) throw DomainError("X exponent of wrong length");
  AffineHeckeElem h(rank());
  h.add_term(Permutation::identity(rank()), lambda, FieldElem(1));
  return h;
}

AffineHeckeElem AffineHecke::embed(const FiniteHeckeElem& f) const {
  AffineHeckeElem h(rank());
  std::vector<int> zero(rank(), 0);
  for (const auto& [w, c] : f.terms()) h.add_term(w, zero, c);
  return h;
}

AffineHeckeElem AffineHecke::x_monomial_times_T(const std::vector<int>& lambda, int i) const {
  if (i < 1 || i >= rank()) throw DomainError("T_i index out of range");
  AffineHeckeElem out(rank());
  std::vector<int> swapped = lambda;
  std::swap(swapped[i - 1], swapped[i]);
  out.add_term(Permutation::simple(i, rank()), swapped, FieldElem(1));
  FieldElem qm1 = param().v2() - FieldElem(1);
  Permutation e = Permutation::identity(rank());
  for (const auto& [m, sign] : bernstein_divided_difference(lambda, i))
    out.add_term(e, m, sign > 0 ? qm1 : -qm1);
  return out;
}

AffineHeckeElem AffineHecke::mul_simple_right(const AffineHeckeElem& h, int i) const {
  // T_w X^k T_i = T_w (X^k T_i), then T_w T_u by the finite rule.
  AffineHeckeElem out(rank());
  for (const auto& [key, c] : h.terms()) {
    AffineHeckeElem moved = x_monomial_times_T(key.lambda, i);
    for (const auto& [k2, c2] : moved.terms()) {
      FiniteHeckeElem tw = finite_.mul(finite_.T(key.w), finite_.T(k2.w));
      for (const auto& [u, c3] : tw.terms()) out.add_term(u, k2.lambda, c * c2 * c3);
    }
  }
  return out;
}

AffineHeckeElem AffineHecke::mul(const AffineHeckeElem& a, const AffineHeckeElem& b) const {
  AffineHeckeElem out(rank());
  for (const auto& [kb, cb] : b.terms()) {
    // a * T_u: push each T_i of a reduced word of u through a's X-parts.
    AffineHeckeElem prod = a;
    for (int i : kb.w.reduced_word()) prod = mul_simple_right(prod, i);
    for (const auto& [k, c] : prod.terms()) {
      std::vector<int> lam = k.lambda;
      for (size_t t = 0; t < lam.size(); ++t) lam[t] += kb.lambda[t];
      out.add_term(k.w, lam, c * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// EvalModule

EvalModule::EvalModule(AffineHecke algebra, std::vector<FieldElem> a)
    : algebra_(std::move(algebra)), a_(std::move(a)) {
  if (static_cast<int>(a_.size()) != algebra_.rank())
    throw DomainError("evaluation parameters must have one entry per X_j");
  for (const auto& x : a_)
    if (x.is_zero()) throw DomainError("evaluation parameters must be nonzero");
}

FieldElem EvalModule::evaluate_monomial(const std::vector<int>& lambda) const {
  FieldElem c(1);
  for (size_t t = 0; t < lambda.size(); ++t)
    if (lambda[t] != 0) c *= a_[t].pow(lambda[t]);
  return c;
}

FiniteHeckeElem EvalModule::image(const AffineHeckeElem& h) const {
  FiniteHeckeElem out(algebra_.rank());
  for (const auto& [k, c] : h.terms()) out.add_term(k.w, c * evaluate_monomial(k.lambda));
  return out;
}

FiniteHeckeElem EvalModule::act(const AffineHeckeElem& g, const FiniteHeckeElem& m) const {
  return image(algebra_.mul(g, algebra_.embed(m)));
}

FiniteHeckeElem EvalModule::act_T(int i, const FiniteHeckeElem& m) const {
  return algebra_.finite().mul_simple_left(i, m);
}

FiniteHeckeElem EvalModule::act_X(int j, int power, const FiniteHeckeElem& m) const {
  return act(algebra_.X(j, power), m);
}

}  // namespace affschur
