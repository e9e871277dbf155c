#include "affschur/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "affschur/errors.hpp"

namespace affschur {

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& [idx, val] : entries) {
    if (!v.e_.empty() && v.e_.back().first == idx) {
      v.e_.back().second += val;
      if (v.e_.back().second.is_zero()) v.e_.pop_back();
    } else if (!val.is_zero()) {
      v.e_.emplace_back(idx, std::move(val));
    }
  }
  return v;
}

FieldElem SparseVec::at(std::size_t index) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != e_.end() && it->first == index) return it->second;
  return FieldElem();
}

void SparseVec::axpy(const FieldElem& c, const SparseVec& other) {
  if (c.is_zero() || other.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + other.e_.size());
  auto a = e_.begin();
  auto b = other.e_.begin();
  while (a != e_.end() || b != other.e_.end()) {
    if (b == other.e_.end() || (a != e_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == e_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      FieldElem s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

void SparseVec::scale(const FieldElem& c) {
  if (c.is_zero()) {
    e_.clear();
    return;
  }
  for (auto& e : e_) e.second *= c;
}

SparseVec SparseVec::tail(std::size_t offset) const {
  SparseVec v;
  for (const auto& [i, x] : e_)
    if (i >= offset) v.e_.emplace_back(i - offset, x);
  return v;
}

SparseVec SparseVec::head(std::size_t end) const {
  SparseVec v;
  for (const auto& [i, x] : e_)
    if (i < end) v.e_.emplace_back(i, x);
  return v;
}

SparseVec SparseVec::shifted(std::size_t offset) const {
  SparseVec v = *this;
  for (auto& e : v.e_) e.first += offset;
  return v;
}

// ---------------------------------------------------------------------------

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<SparseVec>& vecs) {
  SubspaceBasis b(ambient_dim);
  for (const auto& v : vecs) b.insert(v);
  return b;
}

SparseVec SubspaceBasis::reduce(SparseVec vec) const {
  for (std::size_t k = 0; k < rows_.size() && !vec.is_zero(); ++k) {
    FieldElem c = vec.at(pivots_[k]);
    if (!c.is_zero()) vec.axpy(-c, rows_[k]);
  }
  return vec;
}

bool SubspaceBasis::insert(const SparseVec& vec) {
  if (!vec.is_zero() && vec.entries().back().first >= dim_)
    throw std::out_of_range("vector index outside the ambient space");
  SparseVec r = reduce(vec);
  if (r.is_zero()) return false;
  std::size_t piv = r.leading_index();
  r.scale(r.leading_value().inverse());
  for (auto& row : rows_) {
    FieldElem c = row.at(piv);
    if (!c.is_zero()) row.axpy(-c, r);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  auto offset = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + offset, std::move(r));
  return true;
}

std::vector<FieldElem> SubspaceBasis::coordinates(const SparseVec& vec) const {
  if (!contains(vec)) throw DomainError("vector is not in the subspace");
  std::vector<FieldElem> c;
  c.reserve(rows_.size());
  for (auto p : pivots_) c.push_back(vec.at(p));
  return c;
}

bool SubspaceBasis::is_subspace_of(const SubspaceBasis& other) const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const SparseVec& r) { return other.contains(r); });
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& images, std::size_t image_dim) {
  // Row-reduce [image | e_k]; rows whose image part vanishes carry kernel vectors.
  std::size_t m = images.size();
  SubspaceBasis aug(image_dim + m);
  for (std::size_t k = 0; k < m; ++k) {
    SparseVec row = images[k];
    SparseVec unit = SparseVec::from_entries({{image_dim + k, FieldElem(1)}});
    row.axpy(FieldElem(1), unit);
    aug.insert(row);
  }
  std::vector<SparseVec> out;
  for (std::size_t k = 0; k < aug.dim(); ++k)
    if (aug.pivots()[k] >= image_dim) out.push_back(aug.rows()[k].tail(image_dim));
  return out;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersection of subspaces of different spaces");
  std::size_t d = a.ambient_dim();
  SubspaceBasis z(2 * d);
  for (const auto& r : a.rows()) z.insert(r + r.shifted(d));
  for (const auto& r : b.rows()) z.insert(r);
  std::vector<SparseVec> out;
  for (std::size_t k = 0; k < z.dim(); ++k)
    if (z.pivots()[k] >= d) out.push_back(z.rows()[k].tail(d));
  return SubspaceBasis::span(d, out);
}

}  // namespace affschur
