#pragma once

// Dominant tuples of Drinfeld polynomials, the bijection between multisegments
// and dominant tuples, padding to a larger window and the weight idempotent e.

#include <map>
#include <string>
#include <vector>

#include "affschur/combinatorics.hpp"
#include "affschur/scalar.hpp"
#include "affschur/schur_functor.hpp"

namespace affschur {

// (Q_1, ..., Q_n) carried by root lists: Q_i(u) = prod_{c in roots[i-1]} (1 - c u).
// Root lists are kept sorted so equality is multiset equality.
class DominantTuple {
 public:
  DominantTuple() = default;
  explicit DominantTuple(std::vector<std::vector<FieldElem>> roots);

  int n() const { return static_cast<int>(roots_.size()); }
  const std::vector<std::vector<FieldElem>>& roots() const { return roots_; }
  const std::vector<FieldElem>& roots(int i) const { return roots_.at(i - 1); }
  int degree(int i) const { return static_cast<int>(roots(i).size()); }
  std::vector<int> degrees() const;
  int total_degree() const;
  UPoly poly(int i) const;

  friend bool operator==(const DominantTuple&, const DominantTuple&) = default;

 private:
  std::vector<std::vector<FieldElem>> roots_;
};

// Every Q_i(v^{i-1} u) / Q_{i+1}(v^{i+1} u) is a polynomial (exact division).
bool is_dominant(const DominantTuple& q, const Param& param);

// Multisegment to Drinfeld polynomials. Throws DomainError if |s| != r or a
// segment is longer than n.
DominantTuple pa(int n, int r, const Multisegment& s, const Param& param);
// Inverse map. Throws DomainError if q is not dominant, has the wrong number
// of polynomials, or its degrees do not sum to r.
Multisegment pa_inverse(int n, int r, const DominantTuple& q, const Param& param);
// (Q_1, ..., Q_n, 1, ..., 1) with N entries.
DominantTuple tilde(const DominantTuple& q, int N);

// prod_i Q_i(u)
UPoly drinfeld_product(const DominantTuple& q);

// Eigenvalue of e = sum_{lambda in Lambda(n, r)} k_lambda on weight alpha,
// with k_lambda acting by prod_i [alpha_i choose lambda_i].
FieldElem idempotent_eigenvalue(const Composition& alpha, int n, const Param& param);

struct GProjection {
  int N = 0;
  int n = 0;
  SubspaceBasis image;      // eW inside the I(N, r) coordinates
  SubspaceBasis reencoded;  // eW inside the I(n, r) coordinates
  std::map<Composition, int> weights;  // weight dimensions of eW, n parts
  bool contained = false;   // eW lies in W
  bool idempotent = false;  // e(e x) = e x on W
  bool commutes = false;    // e g = g e on W for E_i, F_i (i < n), K_i (i <= n), z_t
  std::vector<std::string> failures;
};

// e applied to a vector of the I(N, r) ambient space of w.
SparseVec apply_idempotent(const SchurModule& w, int n, const SparseVec& x);

// eW for W built over the N-window (W.n() == N), re-encoded over the n-window.
GProjection g_projection(int N, int n, const SchurModule& w);

}  // namespace affschur
