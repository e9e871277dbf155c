#pragma once

// The finite Hecke algebra H(r), the extended affine Hecke algebra H_Delta(r)
// in the normal form T_w X^lambda, the ideals I_mu and J_mu, and evaluation
// modules M_a.

#include <map>
#include <string>
#include <vector>

#include "affschur/combinatorics.hpp"
#include "affschur/linalg.hpp"
#include "affschur/scalar.hpp"

namespace affschur {

// sum_w c_w T_w with zero coefficients absent.
class FiniteHeckeElem {
 public:
  using Terms = std::map<Permutation, FieldElem>;

  FiniteHeckeElem() = default;
  explicit FiniteHeckeElem(int r) : r_(r) {}

  int rank() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coeff(const Permutation& w) const;
  void add_term(const Permutation& w, const FieldElem& c);

  FiniteHeckeElem& operator+=(const FiniteHeckeElem& o);
  FiniteHeckeElem& operator-=(const FiniteHeckeElem& o);
  friend FiniteHeckeElem operator+(FiniteHeckeElem a, const FiniteHeckeElem& b) { return a += b; }
  friend FiniteHeckeElem operator-(FiniteHeckeElem a, const FiniteHeckeElem& b) { return a -= b; }
  friend FiniteHeckeElem operator*(const FieldElem& c, const FiniteHeckeElem& h);
  friend bool operator==(const FiniteHeckeElem& a, const FiniteHeckeElem& b) {
    return a.terms_ == b.terms_;
  }

  // "c * T[w]" summands joined by " + ".
  std::string to_string() const;

 private:
  int r_ = 0;
  Terms terms_;
};

struct AffineKey {
  Permutation w;
  std::vector<int> lambda;
  friend auto operator<=>(const AffineKey&, const AffineKey&) = default;
};

// sum c T_w X^lambda; X factors always on the right.
class AffineHeckeElem {
 public:
  using Terms = std::map<AffineKey, FieldElem>;

  AffineHeckeElem() = default;
  explicit AffineHeckeElem(int r) : r_(r) {}

  int rank() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coeff(const Permutation& w, const std::vector<int>& lambda) const;
  void add_term(const Permutation& w, const std::vector<int>& lambda, const FieldElem& c);

  AffineHeckeElem& operator+=(const AffineHeckeElem& o);
  AffineHeckeElem& operator-=(const AffineHeckeElem& o);
  friend AffineHeckeElem operator+(AffineHeckeElem a, const AffineHeckeElem& b) { return a += b; }
  friend AffineHeckeElem operator-(AffineHeckeElem a, const AffineHeckeElem& b) { return a -= b; }
  friend AffineHeckeElem operator*(const FieldElem& c, const AffineHeckeElem& h);
  friend bool operator==(const AffineHeckeElem& a, const AffineHeckeElem& b) {
    return a.terms_ == b.terms_;
  }

  // "c * T[w] * X[lambda]" summands joined by " + ".
  std::string to_string() const;

 private:
  int r_ = 0;
  Terms terms_;
};

class FiniteHecke {
 public:
  FiniteHecke(int r, Param param);

  int rank() const { return r_; }
  const Param& param() const { return param_; }
  // S_r in lexicographic order; T_{basis()[k]} is coordinate k.
  const std::vector<Permutation>& basis() const { return basis_; }
  std::size_t index_of(const Permutation& w) const { return index_.at(w); }

  FiniteHeckeElem one() const;
  FiniteHeckeElem T(int i) const;
  FiniteHeckeElem T(const Permutation& w) const;
  // T_i^{-1} = v^{-2} T_i + (v^{-2} - 1)
  FiniteHeckeElem T_inverse(int i) const;

  FiniteHeckeElem mul(const FiniteHeckeElem& a, const FiniteHeckeElem& b) const;
  FiniteHeckeElem mul_simple_left(int i, const FiniteHeckeElem& h) const;   // T_i h
  FiniteHeckeElem mul_simple_right(const FiniteHeckeElem& h, int i) const;  // h T_i

  // y_mu = sum_{w in S_mu} (-v^2)^{-l(w)} T_w
  FiniteHeckeElem y_mu(const Composition& mu) const;
  // C_i = v^{-1} T_i - v
  FiniteHeckeElem c_element(int i) const;

  SparseVec coords(const FiniteHeckeElem& h) const;
  FiniteHeckeElem from_coords(const SparseVec& c) const;

  // span{T_w y_mu}
  SubspaceBasis ideal_I(const Composition& mu) const;
  // Intersection over s_i in S_mu of the left ideals H(r) C_i.
  SubspaceBasis ideal_J(const Composition& mu) const;

 private:
  int r_;
  Param param_;
  std::vector<Permutation> basis_;
  std::map<Permutation, std::size_t> index_;
};

class AffineHecke {
 public:
  AffineHecke(int r, Param param);

  int rank() const { return finite_.rank(); }
  const Param& param() const { return finite_.param(); }
  const FiniteHecke& finite() const { return finite_; }

  AffineHeckeElem one() const;
  AffineHeckeElem T(int i) const;
  AffineHeckeElem T_inverse(int i) const;
  // X_j^power
  AffineHeckeElem X(int j, int power = 1) const;
  AffineHeckeElem X_monomial(const std::vector<int>& lambda) const;
  AffineHeckeElem embed(const FiniteHeckeElem& h) const;

  AffineHeckeElem mul(const AffineHeckeElem& a, const AffineHeckeElem& b) const;

  // Normal form of X^lambda T_i:
  //   T_i X^{s_i lambda} + (v^2 - 1) (X^lambda - X^{s_i lambda}) / (1 - X_i X_{i+1}^{-1}).
  AffineHeckeElem x_monomial_times_T(const std::vector<int>& lambda, int i) const;

 private:
  // (sum c T_w X^lambda) T_i
  AffineHeckeElem mul_simple_right(const AffineHeckeElem& h, int i) const;

  FiniteHecke finite_;
};

// Laurent monomials of (X^lambda - X^{s_i lambda}) / (1 - X_i X_{i+1}^{-1}),
// each with coefficient +1 or -1.
std::vector<std::pair<std::vector<int>, int>> bernstein_divided_difference(
    const std::vector<int>& lambda, int i);

// M_a = H_Delta(r) / J_a where J_a is the left ideal generated by X_j - a_j.
// Elements are coordinates in the basis {bar T_w}.
class EvalModule {
 public:
  EvalModule(AffineHecke algebra, std::vector<FieldElem> a);

  const AffineHecke& algebra() const { return algebra_; }
  const std::vector<FieldElem>& parameters() const { return a_; }

  // The image of h in M_a, i.e. h . bar 1.
  FiniteHeckeElem image(const AffineHeckeElem& h) const;
  // g . m
  FiniteHeckeElem act(const AffineHeckeElem& g, const FiniteHeckeElem& m) const;
  FiniteHeckeElem act_T(int i, const FiniteHeckeElem& m) const;
  FiniteHeckeElem act_X(int j, int power, const FiniteHeckeElem& m) const;

  // prod_t a_t^{lambda_t}
  FieldElem evaluate_monomial(const std::vector<int>& lambda) const;

 private:
  AffineHecke algebra_;
  std::vector<FieldElem> a_;
};

}  // namespace affschur
