#include <doctest.h>

#include "oracles.hpp"
#include "regcrys/ladder.hpp"
#include "regcrys/text_format.hpp"

using namespace regcrys;

TEST_CASE("ladder parameters") {
  const LadderParams p = LadderParams::of(3, RationalSlope(4, 3));
  CHECK(p.E() == 9);
  CHECK(p.Y() == 4);
  CHECK(p.e() == 3);
  CHECK(p.str() == "(9,4)");
  CHECK(p.dual().Y() == 5);
  CHECK(p.dual().slope() == RationalSlope(5, 3));
  CHECK(LadderParams(5, 3) == LadderParams::of(5, RationalSlope(3)));
  CHECK(LadderParams::of(4, RationalSlope(5, 3)).str() == "(12,5)");
  CHECK_THROWS_AS(LadderParams::of(4, RationalSlope(4)), DomainError);
  CHECK_THROWS_AS(LadderParams::of(3, RationalSlope(1, 2)), DomainError);
  CHECK_THROWS_AS(LadderParams(4, 4), DomainError);
  CHECK_THROWS_AS(LadderParams(4, 0), DomainError);
}

TEST_CASE("ladder ids and depth") {
  const LadderParams p(3, 2);
  CHECK(ladder_id({1, 1}, p) == Node{1, 1});
  CHECK(ladder_id({1, 3}, p) == Node{2, 1});
  CHECK(depth({1, 3}, p) == depth({2, 1}, p));
  CHECK(depth({1, 1}, p) == 2 + 1);
  for (auto [e, y] : std::vector<std::pair<int, RationalSlope>>{{3, RationalSlope(2)}, {4, RationalSlope(3, 2)}, {5, RationalSlope(7, 3)}}) {
    const LadderParams q = LadderParams::of(e, y);
    for (int r = -4; r <= 8; ++r)
      for (int c = -4; c <= 8; ++c) {
        const Node x{r, c};
        const Node id = ladder_id(x, q);
        CHECK(oracle::same_ladder(x, id, q.E(), q.Y()));
        CHECK(id.col >= 1);
        CHECK(id.col <= q.Y());
        CHECK(depth(x, q) == depth(id, q));
        CHECK(oracle::mod(x.col - x.row, e) == oracle::mod(id.col - id.row, e));
      }
  }
}

TEST_CASE("the (3,2)-ladder class of (5,1)") {
  const LadderParams p(3, 2);
  const auto cls = ladder_class(Partition{5, 1}, p);
  CHECK(cls == std::vector<Partition>{{3, 2, 1}, {3, 3}, {4, 1, 1}, {5, 1}});
  CHECK(regularise(Partition{5, 1}, p) == Partition{5, 1});
  CHECK(restrictise(Partition{5, 1}, p) == Partition{3, 2, 1});
  for (const Partition& mu : cls) {
    CHECK(regularise(mu, p) == Partition{5, 1});
    CHECK(restrictise(mu, p) == Partition{3, 2, 1});
  }
  CHECK(is_regular(Partition{5, 1}, p));
  CHECK_FALSE(is_regular(Partition{3, 3}, p));
  CHECK(is_restricted(Partition{3, 2, 1}, p));
  CHECK_FALSE(is_restricted(Partition{5, 1}, p));
}

TEST_CASE("one abacus step for (9,3,3,3,2) at (5,3)") {
  const LadderParams p(5, 3);
  const Partition la{9, 3, 3, 3, 2};
  CHECK_FALSE(is_regular(la, p));
  CHECK(regularise_step(la, p) == Partition{9, 6, 5});
  CHECK(regularise_path(la, p) == std::vector<Partition>{la, {9, 6, 5}});
  CHECK(regularise(la, p) == Partition{9, 6, 5});
  CHECK(fingerprint(la, p) == fingerprint(Partition{9, 6, 5}, p));
  CHECK_THROWS(regularise_step(Partition{9, 6, 5}, p));
}

TEST_CASE("oracle: regularisation and restrictisation are the extremes of the brute-force class") {
  for (auto [E, Y] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 2}, {9, 4}, {8, 3}}) {
    const LadderParams p(E, Y);
    for (const Partition& la : partitions_up_to(8)) {
      auto cls = oracle::ladder_class(la, E, Y);
      std::sort(cls.begin(), cls.end(), GradedLess{});
      CHECK(cls == ladder_class(la, p));
      const auto top = oracle::dominance_max(cls);
      const auto bottom = oracle::dominance_min(cls);
      REQUIRE(top);
      REQUIRE(bottom);
      CHECK(regularise(la, p) == *top);
      CHECK(restrictise(la, p) == *bottom);
      CHECK(is_regular(la, p) == (la == *top));
      CHECK(is_restricted(la, p) == (la == *bottom));
    }
  }
}

TEST_CASE("regularity by hooks") {
  // (E,Y)-singular: a hook of length E t with arm Y t - 1.
  for (const Partition& la : partitions_up_to(10)) {
    bool singular = false;
    for (const auto& h : oracle::hooks(la))
      if (h.length % 9 == 0 && h.arm == 4 * (h.length / 9) - 1) singular = true;
    CHECK(is_regular(la, LadderParams(9, 4)) == !singular);
    CHECK(is_regular(la, LadderParams(3, 1)) == oracle::e_regular(la, 3));
    CHECK(is_restricted(la, LadderParams(3, 2)) == oracle::e_regular(oracle::conjugate(la), 3));
  }
}

TEST_CASE("bad counts") {
  const LadderParams p = LadderParams::of(4, RationalSlope(3, 2));
  CHECK_THROWS_AS(bad_count(Partition{1}, LadderParams(3, 2)), DomainError);
  CHECK(bad_count(Partition{}, p) == 0);
  // (2,1,1): a 4-hook with arm 1 = floor(3/2).
  CHECK(bad_count(Partition{2, 1, 1}, p) == 1);
  for (int k = 0; k <= 9; ++k) {
    std::map<LadderFingerprint, int> seen;
    for (const Partition& la : enumerate_partitions(k)) {
      const auto [it, fresh] = seen.emplace(fingerprint(la, p), bad_count(la, p));
      CHECK((fresh || it->second == bad_count(la, p)));
    }
  }
}

TEST_CASE("restrictisation is dual regularisation of the conjugate") {
  for (const Partition& la : partitions_up_to(9)) {
    const LadderParams p = LadderParams::of(3, RationalSlope(4, 3));
    CHECK(restrictise(la, p) == conjugate(regularise(conjugate(la), p.dual())));
  }
}

TEST_CASE("ladder_class refuses large sizes") {
  CHECK_THROWS_AS(ladder_class(Partition{15}, LadderParams(3, 2)), DomainError);
  CHECK(ladder_class(Partition{15}, LadderParams(3, 2), 15).size() >= 1);
}
