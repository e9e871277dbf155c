#include "affschur/tensor_space.hpp"

#include <functional>
#include <sstream>

#include "affschur/errors.hpp"

namespace affschur {

// ---------------------------------------------------------------------------
// TensorVector

TensorVector TensorVector::basis(const IndexTuple& i) {
  TensorVector t;
  t.terms_.emplace(i, FieldElem(1));
  return t;
}

FieldElem TensorVector::coeff(const IndexTuple& i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? FieldElem() : it->second;
}

void TensorVector::add_term(const IndexTuple& i, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

TensorVector operator*(const FieldElem& c, const TensorVector& t) {
  TensorVector out;
  if (c.is_zero()) return out;
  for (const auto& [i, x] : t.terms_) out.terms_.emplace(i, c * x);
  return out;
}

std::string TensorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ") * w(";
    for (size_t k = 0; k < i.size(); ++k) out << (k ? "," : "") << i[k];
    out << ')';
  }
  return out.str();
}

std::string UGenerator::to_string() const {
  switch (kind) {
    case UKind::E: return "E" + std::to_string(index);
    case UKind::F: return "F" + std::to_string(index);
    case UKind::K: return "K" + std::to_string(index);
    case UKind::KInv: return "K" + std::to_string(index) + "^-1";
    case UKind::ZPlus: return "z" + std::to_string(index) + "+";
    case UKind::ZMinus: return "z" + std::to_string(index) + "-";
  }
  return "?";
}

std::string HGenerator::to_string() const {
  switch (kind) {
    case HKind::T: return "T" + std::to_string(index);
    case HKind::X: return "X" + std::to_string(index);
    case HKind::XInv: return "X" + std::to_string(index) + "^-1";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// TensorSpace

TensorSpace::TensorSpace(int n, int r, Param param) : n_(n), r_(r), param_(std::move(param)) {
  if (n < 1) throw DomainError("tensor space needs n >= 1");
  if (r < 0) throw DomainError("tensor space needs r >= 0");
  if (r >= 2) hecke_.emplace(r, param_);
}

void TensorSpace::check_generator(UGenerator g) const {
  bool ok = (g.kind == UKind::ZPlus || g.kind == UKind::ZMinus) ? g.index >= 1
                                                                 : g.index >= 1 && g.index <= n_;
  if (!ok) throw DomainError("quantum generator " + g.to_string() + " out of range");
}

void TensorSpace::check_generator(HGenerator g) const {
  bool ok = g.kind == HKind::T ? g.index >= 1 && g.index < r_ : g.index >= 1 && g.index <= r_;
  if (!ok) throw DomainError("Hecke generator " + g.to_string() + " out of range");
}

std::vector<HGenerator> TensorSpace::hecke_generators() const {
  std::vector<HGenerator> out;
  for (int k = 1; k < r_; ++k) out.push_back(HGenerator::T(k));
  for (int t = 1; t <= r_; ++t) {
    out.push_back(HGenerator::X(t));
    out.push_back(HGenerator::XInv(t));
  }
  return out;
}

std::vector<UGenerator> TensorSpace::quantum_generators(int max_loop) const {
  std::vector<UGenerator> out;
  for (int i = 1; i <= n_; ++i) out.push_back(UGenerator::E(i));
  for (int i = 1; i <= n_; ++i) out.push_back(UGenerator::F(i));
  for (int i = 1; i <= n_; ++i) {
    out.push_back(UGenerator::K(i));
    out.push_back(UGenerator::KInv(i));
  }
  for (int s = 1; s <= max_loop; ++s) {
    out.push_back(UGenerator::ZPlus(s));
    out.push_back(UGenerator::ZMinus(s));
  }
  return out;
}

TensorVector TensorSpace::T_on_window(const IndexTuple& j, int k) const {
  TensorVector out;
  int a = j[k - 1];
  int b = j[k];
  if (a == b) {
    out.add_term(j, param_.v2());
    return out;
  }
  IndexTuple swapped = j;
  std::swap(swapped[k - 1], swapped[k]);
  out.add_term(swapped, param_.v());
  if (b < a) out.add_term(j, param_.v2() - FieldElem(1));
  return out;
}

TensorVector TensorSpace::T_on_basis(const IndexTuple& i, int k) const {
  if (in_window(i, n_)) return T_on_window(i, k);
  // omega_i = omega_j . X^{-lambda} with i = j + n lambda.
  IndexTuple j(i.size());
  std::vector<int> neg_lambda(i.size());
  for (size_t t = 0; t < i.size(); ++t) {
    j[t] = residue(i[t], n_);
    neg_lambda[t] = -(i[t] - j[t]) / n_;
  }
  TensorVector out;
  AffineHeckeElem rewritten = hecke_->x_monomial_times_T(neg_lambda, k);
  for (const auto& [key, c] : rewritten.terms()) {
    TensorVector part = key.w.is_identity() ? TensorVector::basis(j) : T_on_window(j, k);
    for (const auto& [idx, x] : part.terms()) {
      IndexTuple shifted = idx;
      for (size_t t = 0; t < shifted.size(); ++t) shifted[t] -= n_ * key.lambda[t];
      out.add_term(shifted, c * x);
    }
  }
  return out;
}

TensorVector TensorSpace::h_act(const TensorVector& tv, HGenerator g) const {
  check_generator(g);
  TensorVector out;
  for (const auto& [i, c] : tv.terms()) {
    if (static_cast<int>(i.size()) != r_) throw DomainError("tensor of the wrong rank");
    if (g.kind == HKind::T) {
      out += c * T_on_basis(i, g.index);
    } else {
      IndexTuple s = i;
      s[g.index - 1] += g.kind == HKind::XInv ? n_ : -n_;
      out.add_term(s, c);
    }
  }
  return out;
}

std::optional<std::pair<FieldElem, int>> TensorSpace::local_action(const LocalOp& op,
                                                                   int s) const {
  int rs = residue(s, n_);
  auto delta = [&](int i) { return residue(i, n_) == rs ? 1 : 0; };
  switch (op.kind) {
    case LocalKind::Id: return std::make_pair(FieldElem(1), s);
    case LocalKind::E:
      if (delta(op.index + 1)) return std::make_pair(FieldElem(1), s - 1);
      return std::nullopt;
    case LocalKind::F:
      if (delta(op.index)) return std::make_pair(FieldElem(1), s + 1);
      return std::nullopt;
    case LocalKind::K: return std::make_pair(param_.v_pow(delta(op.index)), s);
    case LocalKind::KInv: return std::make_pair(param_.v_pow(-delta(op.index)), s);
    case LocalKind::KTilde:
      return std::make_pair(param_.v_pow(delta(op.index) - delta(op.index + 1)), s);
    case LocalKind::KTildeInv:
      return std::make_pair(param_.v_pow(delta(op.index + 1) - delta(op.index)), s);
    case LocalKind::ZPlus: return std::make_pair(FieldElem(1), s - op.index * n_);
    case LocalKind::ZMinus: return std::make_pair(FieldElem(1), s + op.index * n_);
  }
  return std::nullopt;
}

std::vector<OperatorWord> TensorSpace::coproduct_words(UGenerator g) const {
  check_generator(g);
  std::vector<OperatorWord> words;
  int i = g.index;
  switch (g.kind) {
    case UKind::E:
      // Delta(E) = E (x) K~ + 1 (x) E
      for (int k = 0; k < r_; ++k) {
        OperatorWord w(r_);
        w[k] = {LocalKind::E, i};
        for (int t = k + 1; t < r_; ++t) w[t] = {LocalKind::KTilde, i};
        words.push_back(std::move(w));
      }
      break;
    case UKind::F:
      // Delta(F) = F (x) 1 + K~^{-1} (x) F
      for (int k = 0; k < r_; ++k) {
        OperatorWord w(r_);
        for (int t = 0; t < k; ++t) w[t] = {LocalKind::KTildeInv, i};
        w[k] = {LocalKind::F, i};
        words.push_back(std::move(w));
      }
      break;
    case UKind::K:
    case UKind::KInv:
      words.emplace_back(r_, LocalOp{g.kind == UKind::K ? LocalKind::K : LocalKind::KInv, i});
      break;
    case UKind::ZPlus:
    case UKind::ZMinus:
      for (int k = 0; k < r_; ++k) {
        OperatorWord w(r_);
        w[k] = {g.kind == UKind::ZPlus ? LocalKind::ZPlus : LocalKind::ZMinus, i};
        words.push_back(std::move(w));
      }
      break;
  }
  return words;
}

TensorVector TensorSpace::u_act(const TensorVector& tv, UGenerator g) const {
  auto words = coproduct_words(g);
  TensorVector out;
  for (const auto& [i, c] : tv.terms()) {
    if (static_cast<int>(i.size()) != r_) throw DomainError("tensor of the wrong rank");
    for (const auto& word : words) {
      FieldElem coef = c;
      IndexTuple j = i;
      bool alive = true;
      for (int t = 0; t < r_ && alive; ++t) {
        auto res = local_action(word[t], i[t]);
        if (!res) {
          alive = false;
        } else {
          if (!res->first.is_one()) coef *= res->first;
          j[t] = res->second;
        }
      }
      if (alive) out.add_term(j, coef);
    }
  }
  return out;
}

Composition weight_of(const IndexTuple& i, int n) { return residue_weight(i, n); }

std::vector<IndexTuple> window_tuples(int r, int lo, int hi) {
  std::vector<IndexTuple> out;
  if (hi < lo) return out;
  IndexTuple cur(r, lo);
  for (;;) {
    out.push_back(cur);
    int k = r - 1;
    while (k >= 0 && cur[k] == hi) cur[k--] = lo;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

CommutationReport commutation_witness(const TensorSpace& space, int lo, int hi, int max_loop) {
  CommutationReport report;
  auto us = space.quantum_generators(max_loop);
  auto hs = space.hecke_generators();
  for (const auto& i : window_tuples(space.r(), lo, hi)) {
    TensorVector w = TensorVector::basis(i);
    std::vector<TensorVector> uw;
    uw.reserve(us.size());
    for (const auto& u : us) uw.push_back(space.u_act(w, u));
    for (const auto& h : hs) {
      TensorVector wh = space.h_act(w, h);
      for (size_t a = 0; a < us.size(); ++a) {
        ++report.checked;
        if (space.u_act(wh, us[a]) != space.h_act(uw[a], h))
          report.violations.push_back({i, us[a], h});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Relation suites

namespace {

// Applies Hecke generators left to right (right action).
TensorVector apply_h(const TensorSpace& sp, TensorVector w, std::initializer_list<HGenerator> gs) {
  for (const auto& g : gs) w = sp.h_act(w, g);
  return w;
}

// Applies quantum generators right to left (left action of the product).
TensorVector apply_u(const TensorSpace& sp, TensorVector w, const std::vector<UGenerator>& gs) {
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) w = sp.u_act(w, *it);
  return w;
}

}  // namespace

std::vector<RelationViolation> hecke_relation_violations(const TensorSpace& sp, int lo, int hi,
                                                         std::size_t* checked) {
  std::vector<RelationViolation> out;
  std::size_t count = 0;
  const Param& p = sp.param();
  int r = sp.r();
  auto T = HGenerator::T;
  auto X = HGenerator::X;
  auto Xi = HGenerator::XInv;
  for (const auto& i : window_tuples(r, lo, hi)) {
    TensorVector w = TensorVector::basis(i);
    auto check = [&](bool ok, const std::string& name) {
      ++count;
      if (!ok) out.push_back({name, i});
    };
    for (int k = 1; k < r; ++k) {
      TensorVector wt = sp.h_act(w, T(k));
      TensorVector wtt = sp.h_act(wt, T(k));
      check(wtt - (p.v2() - FieldElem(1)) * wt - p.v2() * w == TensorVector(),
            "(T" + std::to_string(k) + "+1)(T" + std::to_string(k) + "-v^2)=0");
      if (k + 1 < r)
        check(apply_h(sp, w, {T(k), T(k + 1), T(k)}) == apply_h(sp, w, {T(k + 1), T(k), T(k + 1)}),
              "braid T" + std::to_string(k) + "T" + std::to_string(k + 1));
      for (int l = k + 2; l < r; ++l)
        check(apply_h(sp, w, {T(k), T(l)}) == apply_h(sp, w, {T(l), T(k)}),
              "T" + std::to_string(k) + "T" + std::to_string(l) + "=T" + std::to_string(l) + "T" +
                  std::to_string(k));
      check(apply_h(sp, w, {T(k), X(k), T(k)}) == p.v2() * apply_h(sp, w, {X(k + 1)}),
            "T" + std::to_string(k) + "X" + std::to_string(k) + "T" + std::to_string(k) +
                "=v^2X" + std::to_string(k + 1));
      for (int j = 1; j <= r; ++j) {
        if (j == k || j == k + 1) continue;
        check(apply_h(sp, w, {X(j), T(k)}) == apply_h(sp, w, {T(k), X(j)}),
              "X" + std::to_string(j) + "T" + std::to_string(k) + "=T" + std::to_string(k) + "X" +
                  std::to_string(j));
        check(apply_h(sp, w, {Xi(j), T(k)}) == apply_h(sp, w, {T(k), Xi(j)}),
              "X" + std::to_string(j) + "^-1T" + std::to_string(k) + "=T" + std::to_string(k) +
                  "X" + std::to_string(j) + "^-1");
      }
    }
    for (int j = 1; j <= r; ++j) {
      check(apply_h(sp, w, {X(j), Xi(j)}) == w && apply_h(sp, w, {Xi(j), X(j)}) == w,
            "X" + std::to_string(j) + "X" + std::to_string(j) + "^-1=1");
      for (int l = j + 1; l <= r; ++l)
        check(apply_h(sp, w, {X(j), X(l)}) == apply_h(sp, w, {X(l), X(j)}),
              "X" + std::to_string(j) + "X" + std::to_string(l) + "=X" + std::to_string(l) + "X" +
                  std::to_string(j));
    }
  }
  if (checked) *checked += count;
  return out;
}

int affine_cartan(int i, int j, int n) {
  int ri = residue(i, n);
  int rj = residue(j, n);
  if (ri == rj) return 2;
  if (n == 2) return -2;
  if (residue(ri + 1, n) == rj || residue(rj + 1, n) == ri) return -1;
  return 0;
}

std::vector<RelationViolation> quantum_relation_violations(const TensorSpace& sp, int lo, int hi,
                                                           int max_loop, std::size_t* checked) {
  std::vector<RelationViolation> out;
  std::size_t count = 0;
  const Param& p = sp.param();
  int n = sp.n();
  using U = UGenerator;
  auto name_of = [](const std::string& rel, const std::vector<int>& ids) {
    std::string s = rel + "(";
    for (size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + std::to_string(ids[k]);
    return s + ")";
  };
  for (const auto& idx : window_tuples(sp.r(), lo, hi)) {
    TensorVector w = TensorVector::basis(idx);
    auto check = [&](bool ok, const std::string& name) {
      ++count;
      if (!ok) out.push_back({name, idx});
    };
    for (int i = 1; i <= n; ++i) {
      check(apply_u(sp, w, {U::K(i), U::KInv(i)}) == w && apply_u(sp, w, {U::KInv(i), U::K(i)}) == w,
            name_of("QGL1 KK^-1", {i}));
      for (int j = 1; j <= n; ++j) {
        check(apply_u(sp, w, {U::K(i), U::K(j)}) == apply_u(sp, w, {U::K(j), U::K(i)}),
              name_of("QGL1", {i, j}));
        int e = (residue(i, n) == residue(j, n) ? 1 : 0) - (residue(i, n) == residue(j + 1, n) ? 1 : 0);
        check(apply_u(sp, w, {U::K(i), U::E(j)}) == p.v_pow(e) * apply_u(sp, w, {U::E(j), U::K(i)}),
              name_of("QGL2 E", {i, j}));
        check(apply_u(sp, w, {U::K(i), U::F(j)}) == p.v_pow(-e) * apply_u(sp, w, {U::F(j), U::K(i)}),
              name_of("QGL2 F", {i, j}));
        TensorVector lhs = apply_u(sp, w, {U::E(i), U::F(j)}) - apply_u(sp, w, {U::F(j), U::E(i)});
        TensorVector rhs;
        if (i == j) {
          // (K~_i - K~_i^{-1}) / (v - v^{-1}) acts on omega_idx by [m].
          TensorVector kt = apply_u(sp, w, {U::K(i), U::KInv(i % n + 1)});
          TensorVector kti = apply_u(sp, w, {U::KInv(i), U::K(i % n + 1)});
          rhs = (FieldElem(1) / (p.v() - p.v_inv())) * (kt - kti);
        }
        check(lhs == rhs, name_of("QGL3", {i, j}));
        if (n >= 2 && i != j) {
          int c = 1 - affine_cartan(i, j, n);
          TensorVector se, sf;
          for (int a = 0; a <= c; ++a) {
            FieldElem coef = quantum_binomial(c, a, p);
            if (a % 2) coef = -coef;
            std::vector<U> we(a, U::E(i)), wf(a, U::F(i));
            we.push_back(U::E(j));
            wf.push_back(U::F(j));
            for (int b = 0; b < c - a; ++b) {
              we.push_back(U::E(i));
              wf.push_back(U::F(i));
            }
            se += coef * apply_u(sp, w, we);
            sf += coef * apply_u(sp, w, wf);
          }
          check(se.is_zero(), name_of("QGL4", {i, j}));
          check(sf.is_zero(), name_of("QGL5", {i, j}));
        }
      }
    }
    for (int s = 1; s <= max_loop; ++s) {
      for (int t = 1; t <= max_loop; ++t) {
        check(apply_u(sp, w, {U::ZPlus(s), U::ZPlus(t)}) == apply_u(sp, w, {U::ZPlus(t), U::ZPlus(s)}) &&
                  apply_u(sp, w, {U::ZMinus(s), U::ZMinus(t)}) ==
                      apply_u(sp, w, {U::ZMinus(t), U::ZMinus(s)}) &&
                  apply_u(sp, w, {U::ZPlus(s), U::ZMinus(t)}) ==
                      apply_u(sp, w, {U::ZMinus(t), U::ZPlus(s)}),
              name_of("QGL6", {s, t}));
      }
      for (int i = 1; i <= n; ++i) {
        for (U z : {U::ZPlus(s), U::ZMinus(s)}) {
          check(apply_u(sp, w, {U::K(i), z}) == apply_u(sp, w, {z, U::K(i)}), name_of("QGL7", {i, s}));
          check(apply_u(sp, w, {U::E(i), z}) == apply_u(sp, w, {z, U::E(i)}) &&
                    apply_u(sp, w, {U::F(i), z}) == apply_u(sp, w, {z, U::F(i)}),
                name_of("QGL8", {i, s}));
        }
      }
    }
  }
  if (checked) *checked += count;
  return out;
}

}  // namespace affschur
