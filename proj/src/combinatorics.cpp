#include "affschur/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "affschur/errors.hpp"

namespace affschur {

namespace {

std::string int_list(const std::vector<int>& v) {
  std::ostringstream out;
  out << '(';
  for (size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
  out << ')';
  return out.str();
}

}  // namespace

int Composition::r() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Composition::in_lambda(int p_, int r_) const {
  return p() == p_ && r() == r_ &&
         std::all_of(parts.begin(), parts.end(), [](int x) { return x >= 0; });
}

std::string Composition::to_string() const { return int_list(parts); }

Partition Partition::checked(std::vector<int> parts) {
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) throw DomainError("partition parts must be positive");
    if (k > 0 && parts[k] > parts[k - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  return Partition{std::move(parts)};
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const { return int_list(parts); }

Partition dual_partition(const Partition& lambda) {
  Partition d;
  int cols = lambda.parts.empty() ? 0 : lambda.parts.front();
  for (int j = 1; j <= cols; ++j) {
    int count = 0;
    for (int x : lambda.parts)
      if (x >= j) ++count;
    d.parts.push_back(count);
  }
  return d;
}

std::vector<Composition> compositions(int p, int r) {
  std::vector<Composition> out;
  if (p <= 0) {
    if (r == 0 && p == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(p, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == p - 1) {
      cur[pos] = left;
      out.push_back({cur});
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[pos] = x;
      rec(pos + 1, left - x);
    }
  };
  rec(0, r);
  return out;
}

std::vector<Partition> partitions(int r, int max_part) {
  std::vector<Partition> out;
  if (r < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int bound) {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    for (int x = std::min(left, bound); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(r, max_part > 0 ? max_part : r);
  return out;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> window) : w_(std::move(window)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > rank() || seen[x]) throw DomainError("window is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int r) {
  Permutation p;
  p.w_.resize(r);
  std::iota(p.w_.begin(), p.w_.end(), 1);
  return p;
}

Permutation Permutation::simple(int i, int r) {
  if (i < 1 || i >= r) throw DomainError("simple reflection index out of range");
  Permutation p = identity(r);
  std::swap(p.w_[i - 1], p.w_[i]);
  return p;
}

Permutation Permutation::from_word(std::span<const int> word, int r) {
  Permutation p = identity(r);
  for (int i : word) p = p.times_simple_right(i);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (size_t a = 0; a < w_.size(); ++a)
    for (size_t b = a + 1; b < w_.size(); ++b)
      if (w_[a] > w_[b]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (size_t k = 0; k < w_.size(); ++k)
    if (w_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.w_.resize(w_.size());
  for (size_t k = 0; k < w_.size(); ++k) p.w_[w_[k] - 1] = static_cast<int>(k) + 1;
  return p;
}

std::vector<int> Permutation::reduced_word() const {
  // Peel off right descents: w = (w s_i) s_i whenever w(i) > w(i+1).
  std::vector<int> word;
  Permutation cur = *this;
  for (;;) {
    int i = 1;
    while (i < rank() && cur.right_ascent(i)) ++i;
    if (i >= rank()) break;
    word.push_back(i);
    cur = cur.times_simple_right(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool Permutation::left_ascent(int i) const {
  int a = 0, b = 0;
  for (size_t k = 0; k < w_.size(); ++k) {
    if (w_[k] == i) a = static_cast<int>(k);
    if (w_[k] == i + 1) b = static_cast<int>(k);
  }
  return a < b;
}

Permutation Permutation::times_simple_right(int i) const {
  Permutation p = *this;
  std::swap(p.w_[i - 1], p.w_[i]);
  return p;
}

Permutation Permutation::times_simple_left(int i) const {
  Permutation p = *this;
  for (auto& x : p.w_) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (size_t k = 0; k < w_.size(); ++k) out << (k ? "," : "") << w_[k];
  out << ']';
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.rank() != b.rank()) throw DomainError("product of permutations of different rank");
  Permutation p;
  p.w_.resize(b.w_.size());
  for (size_t k = 0; k < b.w_.size(); ++k) p.w_[k] = a.w_[b.w_[k] - 1];
  return p;
}

std::vector<Permutation> all_permutations(int r) {
  std::vector<Permutation> out;
  Permutation id = Permutation::identity(r);
  std::vector<int> w = id.window();
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

std::vector<int> block_of(const Composition& mu) {
  std::vector<int> block;
  for (int b = 0; b < mu.p(); ++b)
    for (int k = 0; k < mu.parts[b]; ++k) block.push_back(b);
  return block;
}

}  // namespace

std::vector<Permutation> young_subgroup(const Composition& mu) {
  std::vector<int> block = block_of(mu);
  std::vector<Permutation> out;
  for (auto& w : all_permutations(mu.r())) {
    bool ok = true;
    for (int k = 1; k <= w.rank() && ok; ++k) ok = block[w(k) - 1] == block[k - 1];
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

bool simple_in_young(const Composition& mu, int i) {
  std::vector<int> block = block_of(mu);
  return i >= 1 && i < static_cast<int>(block.size()) && block[i - 1] == block[i];
}

std::vector<Permutation> min_coset_reps(const Composition& mu) {
  std::vector<Permutation> sub = young_subgroup(mu);
  std::vector<Permutation> out;
  for (auto& d : all_permutations(mu.r())) {
    int ld = d.length();
    bool ok = std::all_of(sub.begin(), sub.end(), [&](const Permutation& w) {
      return (w * d).length() == w.length() + ld;
    });
    if (ok) out.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Index tuples

int residue(int t, int n) { return ((t - 1) % n + n) % n + 1; }

bool in_window(const IndexTuple& i, int n) {
  return std::all_of(i.begin(), i.end(), [n](int x) { return x >= 1 && x <= n; });
}

IndexTuple place_permutation(const IndexTuple& i, const Permutation& w) {
  if (static_cast<int>(i.size()) != w.rank())
    throw DomainError("place permutation of a tuple of the wrong length");
  IndexTuple out(i.size());
  for (int k = 1; k <= w.rank(); ++k) out[k - 1] = i[w(k) - 1];
  return out;
}

Composition residue_weight(const IndexTuple& i, int n) {
  Composition c{std::vector<int>(n, 0)};
  for (int x : i) ++c.parts[residue(x, n) - 1];
  return c;
}

std::vector<IndexTuple> finite_window(int n, int r) {
  std::vector<IndexTuple> out;
  IndexTuple cur(r, 1);
  if (n < 1) return out;
  for (;;) {
    out.push_back(cur);
    int k = r - 1;
    while (k >= 0 && cur[k] == n) cur[k--] = 1;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

std::size_t window_rank(const IndexTuple& i, int n) {
  std::size_t idx = 0;
  for (int x : i) idx = idx * n + static_cast<std::size_t>(x - 1);
  return idx;
}

// ---------------------------------------------------------------------------
// Segments

std::vector<FieldElem> Segment::expand(const Param& param) const {
  if (length < 1) throw DomainError("segment length must be positive");
  std::vector<FieldElem> out;
  out.reserve(length);
  for (int k = 0; k < length; ++k) out.push_back(center * param.v_pow(-length + 1 + 2 * k));
  return out;
}

Multisegment::Multisegment(std::vector<Segment> segments) : segs_(std::move(segments)) {
  std::vector<std::pair<std::string, Segment>> keyed;
  keyed.reserve(segs_.size());
  for (auto& s : segs_) {
    if (s.length < 1) throw DomainError("segment length must be positive");
    if (s.center.is_zero()) throw DomainError("segment center must be nonzero");
    keyed.emplace_back(s.center.to_string(), std::move(s));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.length != b.second.length) return a.second.length > b.second.length;
    return a.first < b.first;
  });
  segs_.clear();
  for (auto& [key, s] : keyed) segs_.push_back(std::move(s));
}

int Multisegment::total_length() const {
  int r = 0;
  for (const auto& s : segs_) r += s.length;
  return r;
}

Partition Multisegment::wp() const {
  Partition p;
  for (const auto& s : segs_) p.parts.push_back(s.length);  // already length-descending
  return p;
}

bool Multisegment::is_in_Srn(int n) const {
  return std::all_of(segs_.begin(), segs_.end(), [n](const Segment& s) { return s.length <= n; });
}

std::vector<FieldElem> juxtapose(const Multisegment& s, const Param& param) {
  std::vector<FieldElem> out;
  for (const auto& seg : s.segments()) {
    auto e = seg.expand(param);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

std::vector<FieldElem> juxtapose(const Multisegment& s, std::span<const std::size_t> order,
                                 const Param& param) {
  std::vector<bool> used(s.size(), false);
  if (order.size() != s.size()) throw DomainError("order must list every segment once");
  std::vector<FieldElem> out;
  for (auto k : order) {
    if (k >= s.size() || used[k]) throw DomainError("order must list every segment once");
    used[k] = true;
    auto e = s.segments()[k].expand(param);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

std::vector<Multisegment> enumerate_multisegments(int r, int n,
                                                  const std::vector<FieldElem>& centers) {
  std::vector<Multisegment> out;
  if (r == 0) {
    out.emplace_back();
    return out;
  }
  int g = static_cast<int>(centers.size());
  if (g == 0) return out;
  for (const auto& mu : partitions(r, n > 0 ? n : 0)) {
    // Distinct lengths with multiplicities; each gets a multiset of centers.
    std::vector<std::pair<int, int>> groups;
    for (int x : mu.parts) {
      if (!groups.empty() && groups.back().first == x)
        ++groups.back().second;
      else
        groups.emplace_back(x, 1);
    }
    std::vector<Segment> cur;
    std::function<void(size_t)> per_group;
    std::function<void(size_t, int, int)> choose = [&](size_t gi, int left, int from) {
      if (left == 0) {
        per_group(gi + 1);
        return;
      }
      for (int c = from; c < g; ++c) {
        cur.push_back(Segment{centers[c], groups[gi].first});
        choose(gi, left - 1, c);
        cur.pop_back();
      }
    };
    per_group = [&](size_t gi) {
      if (gi == groups.size()) {
        out.emplace_back(cur);
        return;
      }
      choose(gi, groups[gi].second, 0);
    };
    per_group(0);
  }
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long b = 1;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

}  // namespace affschur
