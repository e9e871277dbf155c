#pragma once

// The bimodule Omega^{(x) r}: right H_Delta(r)-action and left action of the
// double Ringel-Hall algebra D(n) through the iterated coproduct.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affschur/combinatorics.hpp"
#include "affschur/hecke.hpp"
#include "affschur/scalar.hpp"

namespace affschur {

// Finitely supported sum of basis tensors omega_i, i in Z^r.
class TensorVector {
 public:
  using Terms = std::map<IndexTuple, FieldElem>;

  TensorVector() = default;
  static TensorVector basis(const IndexTuple& i);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coeff(const IndexTuple& i) const;
  void add_term(const IndexTuple& i, const FieldElem& c);

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const FieldElem& c, const TensorVector& t);
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Terms terms_;
};

enum class UKind { E, F, K, KInv, ZPlus, ZMinus };

// E_i, F_i, K_i^{+-1} with 1 <= i <= n, or z_s^{+-} with s >= 1.
struct UGenerator {
  UKind kind;
  int index;

  static UGenerator E(int i) { return {UKind::E, i}; }
  static UGenerator F(int i) { return {UKind::F, i}; }
  static UGenerator K(int i) { return {UKind::K, i}; }
  static UGenerator KInv(int i) { return {UKind::KInv, i}; }
  static UGenerator ZPlus(int s) { return {UKind::ZPlus, s}; }
  static UGenerator ZMinus(int s) { return {UKind::ZMinus, s}; }
  std::string to_string() const;
  friend auto operator<=>(const UGenerator&, const UGenerator&) = default;
};

enum class HKind { T, X, XInv };

// T_k (1 <= k < r) or X_t^{+-1} (1 <= t <= r).
struct HGenerator {
  HKind kind;
  int index;

  static HGenerator T(int k) { return {HKind::T, k}; }
  static HGenerator X(int t) { return {HKind::X, t}; }
  static HGenerator XInv(int t) { return {HKind::XInv, t}; }
  std::string to_string() const;
  friend auto operator<=>(const HGenerator&, const HGenerator&) = default;
};

// Action of one tensor factor operator on a single omega_s.
enum class LocalKind { Id, E, F, K, KInv, KTilde, KTildeInv, ZPlus, ZMinus };
struct LocalOp {
  LocalKind kind = LocalKind::Id;
  int index = 0;
};
// One summand of the iterated coproduct: one local operator per tensor position.
using OperatorWord = std::vector<LocalOp>;

class TensorSpace {
 public:
  TensorSpace(int n, int r, Param param);

  int n() const { return n_; }
  int r() const { return r_; }
  const Param& param() const { return param_; }

  // omega . g for a Hecke generator g.
  TensorVector h_act(const TensorVector& tv, HGenerator g) const;
  // omega . T_k on a basis tensor; off I(n, r) the index is written as
  // omega_j . X^{-lambda} with j in I(n, r) and X^{-lambda} T_k is rewritten in
  // normal form before the finite-window cases apply.
  TensorVector T_on_basis(const IndexTuple& i, int k) const;
  // g . tv for g in D(n).
  TensorVector u_act(const TensorVector& tv, UGenerator g) const;

  // Delta^{(r-1)}(g) as a list of r-local operator words.
  std::vector<OperatorWord> coproduct_words(UGenerator g) const;
  // (coefficient, new index) of a local operator applied to omega_s.
  std::optional<std::pair<FieldElem, int>> local_action(const LocalOp& op, int s) const;

  void check_generator(UGenerator g) const;
  void check_generator(HGenerator g) const;

  // All Hecke / quantum generators handled by the verification suites.
  std::vector<HGenerator> hecke_generators() const;
  std::vector<UGenerator> quantum_generators(int max_loop) const;

 private:
  TensorVector T_on_window(const IndexTuple& j, int k) const;

  int n_;
  int r_;
  Param param_;
  std::optional<AffineHecke> hecke_;
};

Composition weight_of(const IndexTuple& i, int n);

// All r-tuples with entries in [lo, hi].
std::vector<IndexTuple> window_tuples(int r, int lo, int hi);

struct RelationViolation {
  std::string relation;
  IndexTuple tuple;
};

struct CommutationViolation {
  IndexTuple tuple;
  UGenerator u;
  HGenerator h;
};

struct CommutationReport {
  std::size_t checked = 0;
  std::vector<CommutationViolation> violations;
};

// u(omega . h) == (u omega) . h for every basis tensor in [lo, hi]^r, every
// quantum generator with loop index <= max_loop and every Hecke generator.
CommutationReport commutation_witness(const TensorSpace& space, int lo, int hi, int max_loop = 2);

// Defining relations of H_Delta(r) as operators on [lo, hi]^r.
std::vector<RelationViolation> hecke_relation_violations(const TensorSpace& space, int lo, int hi,
                                                         std::size_t* checked = nullptr);
// (QGL1)-(QGL8) as operators on [lo, hi]^r (Serre relations included).
std::vector<RelationViolation> quantum_relation_violations(const TensorSpace& space, int lo,
                                                           int hi, int max_loop = 2,
                                                           std::size_t* checked = nullptr);

// Entry (i, j) of the Cartan matrix of affine type A_{n-1} (n >= 2).
int affine_cartan(int i, int j, int n);

}  // namespace affschur
