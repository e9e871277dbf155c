#include "affschur/drinfeld.hpp"

#include <algorithm>

#include "affschur/errors.hpp"

namespace affschur {

DominantTuple::DominantTuple(std::vector<std::vector<FieldElem>> roots) : roots_(std::move(roots)) {
  for (auto& list : roots_) {
    for (const auto& c : list)
      if (c.is_zero()) throw DomainError("Drinfeld polynomial roots must be nonzero");
    std::sort(list.begin(), list.end());
  }
}

std::vector<int> DominantTuple::degrees() const {
  std::vector<int> out;
  for (const auto& list : roots_) out.push_back(static_cast<int>(list.size()));
  return out;
}

int DominantTuple::total_degree() const {
  int d = 0;
  for (const auto& list : roots_) d += static_cast<int>(list.size());
  return d;
}

UPoly DominantTuple::poly(int i) const { return PlusMinusSeries{roots(i)}.expand_plus(); }

bool is_dominant(const DominantTuple& q, const Param& param) {
  for (int i = 1; i < q.n(); ++i) {
    UPoly num = q.poly(i).substitute_scaled(param.v_pow(i - 1));
    UPoly den = q.poly(i + 1).substitute_scaled(param.v_pow(i + 1));
    if (!poly_ratio_if_polynomial(num, den)) return false;
  }
  return true;
}

DominantTuple pa(int n, int r, const Multisegment& s, const Param& param) {
  if (n < 1) throw DomainError("n must be positive");
  if (s.total_length() != r)
    throw DomainError("multisegment has length " + std::to_string(s.total_length()) +
                      ", expected " + std::to_string(r));
  if (!s.is_in_Srn(n)) throw DomainError("a segment is longer than n = " + std::to_string(n));

  // P_k holds the centers of the length-k segments; Q_n the roots a v^{-n+1}.
  std::vector<std::vector<FieldElem>> P(n);
  std::vector<FieldElem> Qn;
  for (const auto& seg : s.segments()) {
    if (seg.length == n)
      Qn.push_back(seg.center * param.v_pow(1 - n));
    else
      P[seg.length].push_back(seg.center);
  }
  // Q_i(u) = P_i(u v^{-i+1}) P_{i+1}(u v^{-i+2}) ... P_{n-1}(u v^{n-2i}) Q_n(u v^{2(n-i)})
  std::vector<std::vector<FieldElem>> roots(n);
  for (int i = 1; i <= n; ++i) {
    for (int k = i; k < n; ++k) {
      FieldElem shift = param.v_pow(k - 2 * i + 1);
      for (const auto& c : P[k]) roots[i - 1].push_back(c * shift);
    }
    FieldElem shift = param.v_pow(2 * (n - i));
    for (const auto& b : Qn) roots[i - 1].push_back(b * shift);
  }
  return DominantTuple(std::move(roots));
}

Multisegment pa_inverse(int n, int r, const DominantTuple& q, const Param& param) {
  if (q.n() != n)
    throw DomainError("expected " + std::to_string(n) + " polynomials, got " +
                      std::to_string(q.n()));
  if (q.total_degree() != r)
    throw DomainError("degrees sum to " + std::to_string(q.total_degree()) + ", expected " +
                      std::to_string(r));
  if (!is_dominant(q, param)) throw DomainError("tuple is not dominant");

  std::vector<Segment> segs;
  for (int j = 1; j < n; ++j) {
    // Roots of P_j(u) = Q_j(u v^{j-1}) / Q_{j+1}(u v^{j+1}).
    std::vector<FieldElem> num, den;
    for (const auto& c : q.roots(j)) num.push_back(c * param.v_pow(j - 1));
    for (const auto& c : q.roots(j + 1)) den.push_back(c * param.v_pow(j + 1));
    for (const auto& d : den) {
      auto it = std::find(num.begin(), num.end(), d);
      if (it == num.end()) throw DomainError("tuple is not dominant");
      num.erase(it);
    }
    for (const auto& a : num) segs.push_back({a, j});
  }
  for (const auto& b : q.roots(n)) segs.push_back({b * param.v_pow(n - 1), n});
  return Multisegment(std::move(segs));
}

DominantTuple tilde(const DominantTuple& q, int N) {
  if (N < q.n()) throw DomainError("tilde needs N >= n");
  auto roots = q.roots();
  roots.resize(N);
  return DominantTuple(std::move(roots));
}

UPoly drinfeld_product(const DominantTuple& q) {
  std::vector<FieldElem> all;
  for (const auto& list : q.roots()) all.insert(all.end(), list.begin(), list.end());
  return PlusMinusSeries{all}.expand_plus();
}

FieldElem idempotent_eigenvalue(const Composition& alpha, int n, const Param& param) {
  FieldElem total;
  for (const auto& lambda : compositions(n, alpha.r())) {
    FieldElem term(1);
    for (int i = 0; i < alpha.p() && !term.is_zero(); ++i) {
      int li = i < n ? lambda.parts[i] : 0;
      term *= quantum_binomial(alpha.parts[i], li, param);
    }
    total += term;
  }
  return total;
}

SparseVec apply_idempotent(const SchurModule& w, int n, const SparseVec& x) {
  std::map<Composition, FieldElem> cache;
  std::vector<SparseVec::Entry> entries;
  for (const auto& [k, c] : x.entries()) {
    Composition alpha = residue_weight(w.ambient()[k], w.n());
    auto it = cache.find(alpha);
    if (it == cache.end()) it = cache.emplace(alpha, idempotent_eigenvalue(alpha, n, w.param())).first;
    const FieldElem& e = it->second;
    if (!e.is_zero() && !e.is_one())
      throw DomainError("weight " + alpha.to_string() + " is not polynomial");
    if (e.is_one()) entries.emplace_back(k, c);
  }
  return SparseVec::from_entries(std::move(entries));
}

GProjection g_projection(int N, int n, const SchurModule& w) {
  if (n < 1 || N < n) throw DomainError("g_projection needs 1 <= n <= N");
  if (w.n() != N) throw DomainError("module is not built over the N-window");
  GProjection out;
  out.N = N;
  out.n = n;
  int r = w.r();
  out.image = SubspaceBasis(w.ambient().size());
  auto small = finite_window(n, r);
  out.reencoded = SubspaceBasis(small.size());

  out.contained = true;
  out.idempotent = true;
  for (const auto& row : w.basis().rows()) {
    SparseVec ex = apply_idempotent(w, n, row);
    if (apply_idempotent(w, n, ex) != ex) out.idempotent = false;
    if (!w.basis().contains(ex)) out.contained = false;
    out.image.insert(ex);
  }
  if (!out.idempotent) out.failures.push_back("e is not idempotent");
  if (!out.contained) out.failures.push_back("eW is not contained in W");

  std::vector<UGenerator> gens;
  for (int i = 1; i < n; ++i) {
    gens.push_back(UGenerator::E(i));
    gens.push_back(UGenerator::F(i));
  }
  for (int i = 1; i <= n; ++i) {
    gens.push_back(UGenerator::K(i));
    gens.push_back(UGenerator::KInv(i));
  }
  for (int t = 1; t <= w.max_loop(); ++t) {
    gens.push_back(UGenerator::ZPlus(t));
    gens.push_back(UGenerator::ZMinus(t));
  }
  out.commutes = true;
  for (const auto& g : gens) {
    for (const auto& row : w.basis().rows()) {
      if (apply_idempotent(w, n, w.act(g, row)) != w.act(g, apply_idempotent(w, n, row))) {
        out.commutes = false;
        out.failures.push_back("e does not commute with " + g.to_string());
        break;
      }
    }
  }

  for (const auto& row : out.image.rows()) {
    std::vector<SparseVec::Entry> entries;
    for (const auto& [k, c] : row.entries()) entries.emplace_back(window_rank(w.ambient()[k], n), c);
    out.reencoded.insert(SparseVec::from_entries(std::move(entries)));
  }
  for (const auto& lambda : compositions(n, r)) {
    Composition padded = lambda;
    padded.parts.resize(N, 0);
    SubspaceBasis ws(w.ambient().size());
    for (const auto& row : out.image.rows()) ws.insert(weight_component(w, row, padded));
    if (ws.dim() > 0) out.weights.emplace(lambda, static_cast<int>(ws.dim()));
  }
  return out;
}

}  // namespace affschur
