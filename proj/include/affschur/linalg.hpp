#pragma once

// Exact sparse linear algebra over Q(v): reduced echelon subspaces, kernels
// and intersections.

#include <cstddef>
#include <utility>
#include <vector>

#include "affschur/scalar.hpp"

namespace affschur {

// Sparse coordinate vector: (index, nonzero value) pairs sorted by index.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, FieldElem>;

  SparseVec() = default;
  // Entries may be unsorted and contain zeros or repeated indices.
  static SparseVec from_entries(std::vector<Entry> entries);

  bool is_zero() const { return e_.empty(); }
  const std::vector<Entry>& entries() const { return e_; }
  FieldElem at(std::size_t index) const;
  std::size_t leading_index() const { return e_.front().first; }
  const FieldElem& leading_value() const { return e_.front().second; }

  // this += c * other
  void axpy(const FieldElem& c, const SparseVec& other);
  void scale(const FieldElem& c);
  // Entries with index >= offset, re-based to start at 0.
  SparseVec tail(std::size_t offset) const;
  SparseVec head(std::size_t end) const;
  // Indices shifted up by offset.
  SparseVec shifted(std::size_t offset) const;

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) {
    a.axpy(FieldElem(1), b);
    return a;
  }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) {
    a.axpy(FieldElem(-1), b);
    return a;
  }

 private:
  std::vector<Entry> e_;
};

// Subspace of a declared finite coordinate space, stored as rows in reduced
// row echelon form: every row has leading entry 1 at its pivot and zeros at
// every other pivot column. Pivots follow the index order, so the basis of a
// given subspace is unique.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}
  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<SparseVec>& vecs);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Adds vec to the spanning set; returns true when the dimension grew.
  bool insert(const SparseVec& vec);
  SparseVec reduce(SparseVec vec) const;
  bool contains(const SparseVec& vec) const { return reduce(vec).is_zero(); }
  // Coordinates of vec with respect to rows(); requires contains(vec).
  std::vector<FieldElem> coordinates(const SparseVec& vec) const;

  bool is_subspace_of(const SubspaceBasis& other) const;
  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t dim_;
  std::vector<SparseVec> rows_;      // sorted by pivot
  std::vector<std::size_t> pivots_;  // pivot column of each row
};

// Basis of {c : sum_k c_k images[k] = 0}, as vectors in the coefficient space
// of dimension images.size(). image_dim bounds the indices of the images.
std::vector<SparseVec> kernel(const std::vector<SparseVec>& images, std::size_t image_dim);

// Intersection of two subspaces of the same ambient space (Zassenhaus).
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace affschur
