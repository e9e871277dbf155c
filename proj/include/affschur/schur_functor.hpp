#pragma once

// The affine Schur functor on the standard modules bar I_mu inside M_a(s).
//
// F(M_a) = Omega^{(x) r} (x)_{H_Delta(r)} M_a is identified with Omega_n^{(x) r}
// through omega_j (x) bar 1 <-> omega_j, and F(bar I_mu) with the subspace
// Omega_n^{(x) r} y_mu. A quantum generator g acts by pi_a(g . x), where pi_a
// sends omega_{j + n lambda} to a^{-lambda} omega_j.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "affschur/combinatorics.hpp"
#include "affschur/linalg.hpp"
#include "affschur/scalar.hpp"
#include "affschur/tensor_space.hpp"

namespace affschur {

// matrix[k] holds the coordinates of g applied to basis row k.
using ActionMatrix = std::vector<std::vector<FieldElem>>;

class SchurModule {
 public:
  // F(bar I_mu) for mu = wp(s) and a = a(s).
  SchurModule(int n, const Multisegment& s, const Param& param, int max_loop = 2);
  // Same construction for an arbitrary parameter tuple a and composition mu
  // with sum(mu) = a.size().
  SchurModule(int n, Composition mu, std::vector<FieldElem> a, const Param& param,
              int max_loop = 2);

  int n() const { return space_.n(); }
  int r() const { return space_.r(); }
  int max_loop() const { return max_loop_; }
  const Param& param() const { return space_.param(); }
  const Composition& mu() const { return mu_; }
  const std::vector<FieldElem>& parameters() const { return a_; }
  const TensorSpace& space() const { return space_; }

  // I(n, r) in lexicographic order; coordinate k is omega_{ambient()[k]}.
  const std::vector<IndexTuple>& ambient() const { return ambient_; }
  const SubspaceBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }

  // pi_a(g . x) for x in the ambient space.
  SparseVec act(UGenerator g, const SparseVec& x) const;
  // pi_a of an arbitrary tensor.
  SparseVec reduce(const TensorVector& tv) const;
  TensorVector to_tensor(const SparseVec& x) const;

  const std::vector<UGenerator>& generators() const { return generators_; }
  // Generators whose action leaves the span; empty for a genuine submodule.
  const std::vector<UGenerator>& unclosed() const { return unclosed_; }
  bool closed() const { return unclosed_.empty(); }
  // Throws std::out_of_range for an unclosed or unknown generator.
  const ActionMatrix& matrix(UGenerator g) const { return matrices_.at(g); }

 private:
  void build();
  FieldElem a_power(int t, int e) const;

  TensorSpace space_;
  Composition mu_;
  std::vector<FieldElem> a_;
  int max_loop_;
  std::vector<IndexTuple> ambient_;
  SubspaceBasis basis_;
  std::vector<UGenerator> generators_;
  std::vector<UGenerator> unclosed_;
  std::map<UGenerator, ActionMatrix> matrices_;
};

// Omega_n^{(x) r} y_mu as a subspace of the coordinate space of I(n, r).
SubspaceBasis tensor_power_image(int n, const Composition& mu, const Param& param);

// Tensor product of subspaces: a over I(n, r1), b over I(n, r2), result over
// I(n, r1 + r2) with concatenated tuples.
SubspaceBasis kronecker(const SubspaceBasis& a, const SubspaceBasis& b);

// Component of x on tuples of the given residue weight.
SparseVec weight_component(const SchurModule& w, const SparseVec& x, const Composition& lambda);
// Weight space W_lambda.
SubspaceBasis weight_space(const SchurModule& w, const Composition& lambda);
std::map<Composition, int> weight_dimension_report(const SchurModule& w);

// Weight-lambda vectors killed by E_1, ..., E_{n-1}.
SubspaceBasis highest_weight_vectors(const SchurModule& w, const Composition& lambda);

// Eigenvalue of g on x; throws DomainError unless g x is a multiple of x.
FieldElem eigenvalue(const SchurModule& w, UGenerator g, const SparseVec& x);

struct CentralCharacter {
  std::vector<FieldElem> zeta;  // zeta[t-1] is the z_t^+ eigenvalue
  UPoly series;                 // exp(-sum zeta_t u^t / t) mod u^{tmax+1}
};

// Throws DomainError if vec is not an eigenvector of some z_t^+.
CentralCharacter central_character(const SchurModule& w, const SparseVec& vec, int tmax);

// exp(-sum_{t>=1} c_t u^t / t) mod u^{m+1} for c = coeffs (c_1 first).
UPoly exp_neg_log_series(const std::vector<FieldElem>& power_sums, int m);

struct PseudoHWReport {
  Composition weight;
  int hw_dim = 0;
  std::vector<int> k_exponents;  // log_v of the K_i eigenvalues on the hw vector
  bool k_matches = false;
  std::vector<FieldElem> zeta;
  UPoly central_series;
  UPoly expected_product;
  bool match = false;
};

// Highest weight mu' (padded to n parts), its hw space, K eigenvalues and the
// central character against prod_i Q_i(u) for Q = pa(s).
PseudoHWReport product_drinfeld_check(const SchurModule& w, const Multisegment& s, int tmax);

struct FactorizationReport {
  Composition mu;
  std::size_t lhs_dim = 0;
  std::vector<std::size_t> factor_dims;
  std::size_t rhs_dim = 0;
  long expected_dim = 0;  // prod C(n, mu_i)
  bool subspace_equal = false;
  bool pass = false;
};

// Omega_n^{(x) r} y_mu against the tensor product of the Omega_n^{(x) mu_j} y_(mu_j).
FactorizationReport factorization_check(int n, const Composition& mu, const Param& param);
FactorizationReport factorization_check(int n, const Multisegment& s, const Param& param);

// prod_i C(n, mu_i); zero as soon as some part exceeds n.
long expected_schur_dimension(int n, const Composition& mu);

}  // namespace affschur
