#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "affschur/combinatorics.hpp"
#include "affschur/errors.hpp"

using namespace affschur;
using testing::fe;
using testing::gen;
using testing::vp;

namespace {
Permutation word(std::initializer_list<int> w, int r) {
  std::vector<int> v(w);
  return Permutation::from_word(v, r);
}
}  // namespace

TEST_CASE("dual partitions") {
  CHECK(dual_partition(Partition::checked({2, 1})) == Partition::checked({2, 1}));
  CHECK(dual_partition(Partition::checked({3})) == Partition::checked({1, 1, 1}));
  CHECK(dual_partition(Partition::checked({2, 2, 1})) == Partition::checked({3, 2}));
  CHECK(dual_partition(Partition{}) == Partition{});
  for (int r = 0; r <= 8; ++r)
    for (const auto& p : partitions(r)) CHECK(dual_partition(dual_partition(p)) == p);
  CHECK_THROWS_AS(Partition::checked({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition::checked({2, 0}), DomainError);
}

TEST_CASE("compositions and partitions") {
  CHECK(compositions(2, 2) == std::vector<Composition>{{{2, 0}}, {{1, 1}}, {{0, 2}}});
  CHECK(partitions(3) ==
        std::vector<Partition>{Partition{{3}}, Partition{{2, 1}}, Partition{{1, 1, 1}}});
  for (int p = 1; p <= 6; ++p)
    for (int r = 0; r <= 6; ++r) {
      auto cs = compositions(p, r);
      CHECK(static_cast<long>(cs.size()) == binomial(r + p - 1, p - 1));
      for (const auto& c : cs) CHECK(c.in_lambda(p, r));
    }
  // Partition counts 1, 1, 2, 3, 5, 7, 11, 15, 22.
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int r = 0; r <= 8; ++r) CHECK(partitions(r).size() == counts[r]);
  CHECK(partitions(4, 2).size() == 3);
}

TEST_CASE("permutations") {
  Permutation w({2, 3, 1});
  CHECK(w.length() == 2);
  CHECK(w.to_string() == "[2,3,1]");
  CHECK(Permutation::from_word(w.reduced_word(), 3) == w);
  CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
  CHECK(w * w.inverse() == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
  for (int r = 1; r <= 5; ++r) {
    auto all = all_permutations(r);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& u : all) {
      CHECK(Permutation::from_word(u.reduced_word(), r) == u);
      CHECK(static_cast<int>(u.reduced_word().size()) == u.length());
      for (int i = 1; i < r; ++i) {
        CHECK(u.right_ascent(i) == (u.times_simple_right(i).length() > u.length()));
        CHECK(u.left_ascent(i) == (u.times_simple_left(i).length() > u.length()));
        CHECK(u.times_simple_right(i) == u * Permutation::simple(i, r));
      }
    }
  }
}

TEST_CASE("minimal coset representatives") {
  CHECK(min_coset_reps(Composition{{2}}) == std::vector<Permutation>{Permutation::identity(2)});
  auto d11 = min_coset_reps(Composition{{1, 1}});
  CHECK(std::set<Permutation>(d11.begin(), d11.end()) ==
        std::set<Permutation>{Permutation::identity(2), Permutation::simple(1, 2)});
  auto d21 = min_coset_reps(Composition{{2, 1}});
  CHECK(std::set<Permutation>(d21.begin(), d21.end()) ==
        std::set<Permutation>{Permutation::identity(3), word({2}, 3), word({2, 1}, 3)});
}

TEST_CASE("unique factorization w = u d over Young subgroups") {
  for (int r = 1; r <= 5; ++r) {
    auto all = all_permutations(r);
    for (int p = 1; p <= 3; ++p) {
      for (const auto& mu : compositions(p, r)) {
        auto young = young_subgroup(mu);
        auto reps = min_coset_reps(mu);
        CHECK(young.size() * reps.size() == all.size());
        for (const auto& w : all) {
          int found = 0;
          for (const auto& u : young)
            for (const auto& d : reps)
              if (u * d == w) {
                ++found;
                CHECK(w.length() == u.length() + d.length());
              }
          CHECK(found == 1);
        }
      }
    }
  }
}

TEST_CASE("place permutation") {
  CHECK(place_permutation({1, 2}, Permutation::simple(1, 2)) == IndexTuple{2, 1});
  CHECK(place_permutation({5, -1, 3}, Permutation::identity(3)) == IndexTuple{5, -1, 3});
  CHECK(place_permutation({3, 1, 2}, word({1, 2}, 3)) == IndexTuple{1, 2, 3});
  for (const auto& w : all_permutations(3))
    for (const auto& u : all_permutations(3))
      for (const auto& i : finite_window(3, 3)) {
        CHECK(place_permutation(place_permutation(i, w), u) == place_permutation(i, w * u));
        CHECK(residue_weight(place_permutation(i, w), 3) == residue_weight(i, 3));
      }
}

TEST_CASE("residues and weights") {
  CHECK(residue_weight({1, 2}, 2) == Composition{{1, 1}});
  CHECK(residue_weight({3, 1}, 2) == Composition{{2, 0}});
  CHECK(residue_weight({1, 1, 2}, 3) == Composition{{2, 1, 0}});
  CHECK(residue(0, 3) == 3);
  CHECK(residue(-4, 3) == 2);
  auto window = finite_window(3, 2);
  CHECK(window.size() == 9);
  for (std::size_t k = 0; k < window.size(); ++k) CHECK(window_rank(window[k], 3) == k);
}

TEST_CASE("segments") {
  FieldElem a = fe("7");
  CHECK(Segment{a, 1}.expand(gen()) == std::vector<FieldElem>{a});
  CHECK(Segment{a, 3}.expand(gen()) == std::vector<FieldElem>{a * vp(-2), a, a * vp(2)});
  CHECK(Segment{vp(1), 2}.expand(gen()) == std::vector<FieldElem>{FieldElem(1), vp(2)});
}

TEST_CASE("multisegments") {
  FieldElem a = fe("2"), b = fe("3*v");
  Multisegment one({{a, 2}});
  CHECK(juxtapose(one, gen()) == std::vector<FieldElem>{a * vp(-1), a * vp(1)});
  CHECK(juxtapose(Multisegment({{a, 1}, {b, 1}}), gen()) == std::vector<FieldElem>{a, b});
  Multisegment mixed({{b, 1}, {a, 2}});
  CHECK(juxtapose(mixed, gen()) == std::vector<FieldElem>{a * vp(-1), a * vp(1), b});
  std::vector<std::size_t> order{1, 0};
  CHECK(juxtapose(mixed, order, gen()) == std::vector<FieldElem>{b, a * vp(-1), a * vp(1)});
  std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS_AS(juxtapose(mixed, bad, gen()), DomainError);

  CHECK(Multisegment({{a, 1}, {b, 3}}).wp() == Partition{{3, 1}});
  CHECK(Multisegment().wp() == Partition{});
  CHECK(Multisegment().total_length() == 0);
  CHECK_FALSE(Multisegment({{a, 3}}).is_in_Srn(2));
  CHECK(Multisegment({{a, 2}}).is_in_Srn(2));
  CHECK(Multisegment({{a, 1}, {b, 2}}) == Multisegment({{b, 2}, {a, 1}}));
  CHECK_THROWS_AS(Multisegment({{FieldElem(), 1}}), DomainError);
  CHECK_THROWS_AS(Multisegment({{a, 0}}), DomainError);
}

TEST_CASE("multisegment enumeration") {
  std::vector<FieldElem> one{fe("2")};
  auto segs = enumerate_multisegments(2, 2, one);
  CHECK(segs.size() == 2);
  CHECK(enumerate_multisegments(0, 2, one).size() == 1);
  // With g centers the count is sum over partitions of prod_k C(g + m_k - 1, m_k).
  std::vector<FieldElem> three{fe("2"), fe("3*v"), fe("5/v")};
  CHECK(enumerate_multisegments(4, 0, three).size() == 51);
  CHECK(enumerate_multisegments(3, 0, three).size() == 22);
  CHECK(enumerate_multisegments(4, 2, three).size() == 6 + 18 + 15);
  for (const auto& s : enumerate_multisegments(4, 3, three)) {
    CHECK(s.total_length() == 4);
    CHECK(s.is_in_Srn(3));
  }
}

TEST_CASE("binomials") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(3, 0) == 1);
}
