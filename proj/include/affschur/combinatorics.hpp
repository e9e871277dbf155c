#pragma once

// Partitions, compositions, the symmetric group, index tuples and
// segment/multisegment combinatorics.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affschur/scalar.hpp"

namespace affschur {

// Element of Lambda(p, r): p non-negative parts summing to r.
struct Composition {
  std::vector<int> parts;

  int p() const { return static_cast<int>(parts.size()); }
  int r() const;
  bool in_lambda(int p, int r) const;
  std::string to_string() const;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  // Throws DomainError unless parts are positive and weakly decreasing.
  static Partition checked(std::vector<int> parts);
  int size() const;
  Composition as_composition() const { return {parts}; }
  std::string to_string() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

Partition dual_partition(const Partition& lambda);

// Lambda(p, r) in reverse lexicographic order: (r,0,..), ..., (0,..,r).
std::vector<Composition> compositions(int p, int r);
// Partitions of r in reverse lexicographic order; with max_part > 0 only parts
// up to max_part are allowed.
std::vector<Partition> partitions(int r, int max_part = 0);

// Permutation of {1..r} in one-line notation: window[k-1] = w(k).
// Products compose as functions: (w * u)(k) = w(u(k)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> window);  // validates bijectivity
  static Permutation identity(int r);
  static Permutation simple(int i, int r);  // s_i = (i, i+1)
  static Permutation from_word(std::span<const int> word, int r);

  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  int operator()(int k) const { return w_[k - 1]; }
  int length() const;  // number of inversions
  bool is_identity() const;
  Permutation inverse() const;
  // A reduced word i_1..i_m with w = s_{i_1} ... s_{i_m}.
  std::vector<int> reduced_word() const;
  // True when l(w s_i) > l(w), i.e. w(i) < w(i+1).
  bool right_ascent(int i) const { return w_[i - 1] < w_[i]; }
  // True when l(s_i w) > l(w), i.e. w^{-1}(i) < w^{-1}(i+1).
  bool left_ascent(int i) const;
  Permutation times_simple_right(int i) const;  // w s_i
  Permutation times_simple_left(int i) const;   // s_i w
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

// All of S_r in lexicographic order of windows.
std::vector<Permutation> all_permutations(int r);
// Standard Young subgroup S_mu (blocks of consecutive positions).
std::vector<Permutation> young_subgroup(const Composition& mu);
// True when s_i lies in S_mu, i.e. i and i+1 belong to the same block.
bool simple_in_young(const Composition& mu, int i);
// Minimal length right coset representatives D_mu.
std::vector<Permutation> min_coset_reps(const Composition& mu);

// r-tuple of integers; in the finite window I(n, r) every entry lies in [1, n].
using IndexTuple = std::vector<int>;

bool in_window(const IndexTuple& i, int n);
// i.w = (i_{w(1)}, ..., i_{w(r)})
IndexTuple place_permutation(const IndexTuple& i, const Permutation& w);
// lambda_j = #{k : i_k = j mod n}, with residues represented in [1, n].
Composition residue_weight(const IndexTuple& i, int n);
// Representative of t modulo n in [1, n].
int residue(int t, int n);
// All of I(n, r) in lexicographic order.
std::vector<IndexTuple> finite_window(int n, int r);
// Position of i in finite_window(n, r).
std::size_t window_rank(const IndexTuple& i, int n);

struct Segment {
  FieldElem center;
  int length = 1;

  // (a v^{-k+1}, a v^{-k+3}, ..., a v^{k-1})
  std::vector<FieldElem> expand(const Param& param) const;
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Unordered multiset of segments, stored in canonical order: length
// descending, then center text ascending.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t size() const { return segs_.size(); }
  bool empty() const { return segs_.empty(); }
  int total_length() const;  // r = |s|
  Partition wp() const;
  bool is_in_Srn(int n) const;
  friend bool operator==(const Multisegment&, const Multisegment&) = default;

 private:
  std::vector<Segment> segs_;
};

// Juxtaposition of the segment expansions in canonical order.
std::vector<FieldElem> juxtapose(const Multisegment& s, const Param& param);
// Juxtaposition in the given order; order lists each segment index once.
std::vector<FieldElem> juxtapose(const Multisegment& s, std::span<const std::size_t> order,
                                 const Param& param);

// All multisegments of total length r with segment lengths <= n (n <= 0 means
// unbounded) and centers drawn from the grid, in a deterministic order.
std::vector<Multisegment> enumerate_multisegments(int r, int n,
                                                  const std::vector<FieldElem>& centers);

long binomial(int n, int k);

}  // namespace affschur
