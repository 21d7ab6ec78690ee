#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "regcrys/abacus.hpp"
#include "regcrys/ladder.hpp"
#include "regcrys/mullineux.hpp"
#include "regcrys/text_format.hpp"

using namespace regcrys;

namespace {

Partition P(const char* s) { return parse_partition(s); }

}  // namespace

TEST_CASE("m_3(6,2,1) step by step") {
  const MullineuxTrace tr = mullineux_trace(Partition{6, 2, 1}, 3);
  CHECK(tr.start == P("3,2,1^4"));
  REQUIRE(tr.steps.size() == 3);
  CHECK(tr.steps[0].slope == RationalSlope(2));
  CHECK(tr.steps[0].result == P("4,1^5"));
  CHECK(tr.steps[1].slope == RationalSlope(4, 3));
  CHECK(tr.steps[1].result == P("5,1^4"));
  CHECK(tr.steps[2].slope == RationalSlope(1));
  CHECK(tr.steps[2].result == P("5,2,2"));
  CHECK(tr.result == P("5,2,2"));
  CHECK(mullineux(Partition{6, 2, 1}, 3) == P("5,2,2"));
}

TEST_CASE("slopes") {
  CHECK(slopes(P("3,2,1^4"), 3) == std::vector<RationalSlope>{RationalSlope(2), RationalSlope(1)});
  const auto s = slopes(P("4,1^5"), 3);
  CHECK(std::find(s.begin(), s.end(), RationalSlope(4, 3)) != s.end());
  CHECK(std::find(s.begin(), s.end(), RationalSlope(3)) != s.end());
  CHECK(slopes(Partition{}, 3).empty());
  CHECK(largest_singular_slope(P("3,2,1^4"), 3, RationalSlope(2)) == RationalSlope(2));
  CHECK(largest_singular_slope(P("4,1^5"), 3, RationalSlope(2)) == RationalSlope(4, 3));
  CHECK_FALSE(largest_singular_slope(P("5,2,2"), 3, RationalSlope(1)).has_value());
  for (const Partition& la : partitions_up_to(10))
    for (int e = 2; e <= 4; ++e)
      for (const RationalSlope& y : slopes(la, e)) {
        CHECK(y.num() > 0);
        CHECK_FALSE(RationalSlope(e) < y);
      }
}

TEST_CASE("small values") {
  CHECK(mullineux(Partition{3, 1}, 2) == Partition{3, 1});
  CHECK(mullineux(Partition{3}, 3) == Partition{2, 1});
  CHECK(mullineux(Partition{2, 1}, 3) == Partition{3});
  CHECK(mullineux(Partition{}, 3).empty());
  CHECK(mullineux(Partition{}, 1).empty());
  CHECK(mullineux_oracle(Partition{6, 2, 1}, 3) == P("5,2,2"));
  CHECK(mullineux_oracle(Partition{}, 4).empty());
  CHECK_THROWS_AS(mullineux(Partition{1}, 1), DomainError);
  CHECK_THROWS_AS(mullineux(Partition{2, 2, 2}, 3), DomainError);
  CHECK_THROWS_AS(mullineux(Partition{1, 1}, 2), DomainError);
  CHECK_THROWS_AS(mullineux_oracle(Partition{1, 1}, 2), DomainError);
}

TEST_CASE("oracle: the Mullineux symbol of the image") {
  for (int e = 2; e <= 5; ++e)
    for (const Partition& la : partitions_up_to(13)) {
      if (!oracle::e_regular(la, e)) continue;
      CAPTURE(format_partition(la));
      CAPTURE(e);
      CHECK(oracle::mullineux_symbol(mullineux(la, e), e) ==
            oracle::conjugate_symbol(oracle::mullineux_symbol(la, e), e));
    }
}

TEST_CASE("oracle: every good-node path gives the same image") {
  for (int e = 3; e <= 4; ++e)
    for (const Partition& la : partitions_up_to(8)) {
      if (!oracle::e_regular(la, e)) continue;
      std::vector<int> prefix;
      std::vector<std::vector<int>> paths;
      oracle::good_paths(la, e, prefix, paths);
      REQUIRE_FALSE(paths.empty());
      std::set<Partition, GradedLess> images;
      for (const auto& path : paths) {
        Partition mu;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
          const auto next = oracle::crystal_op(mu, e, oracle::mod(-*it, e), false, true);
          REQUIRE(next);
          mu = *next;
        }
        images.insert(mu);
      }
      CHECK(images.size() == 1);
      CHECK(*images.begin() == mullineux(la, e));
      CHECK(mullineux_oracle(la, e, ResiduePolicy::largest) == mullineux(la, e));
    }
}

TEST_CASE("involution, size, regularity, content") {
  for (int e = 2; e <= 5; ++e)
    for (const Partition& la : partitions_up_to(12)) {
      if (!is_e_regular(la, e)) continue;
      const Partition m = mullineux(la, e);
      CHECK(m.size() == la.size());
      CHECK(is_e_regular(m, e));
      CHECK(mullineux(m, e) == la);
      CHECK(mullineux_oracle(la, e) == m);
      if (e == 2) CHECK(m == la);
      // la' is e-restricted; m_e(la') has the content of la'
      CHECK(e_content(mullineux(la, e), e) == e_content(conjugate(la), e));
    }
}

TEST_CASE("James regularisation") {
  CHECK(james_regularise(P("1^4"), 3) == Partition{2, 2});
  CHECK(james_regularise(Partition{2, 2}, 2) == Partition{3, 1});
  CHECK(james_regularise(Partition{5, 2}, 3) == Partition{5, 2});
  for (const Partition& la : partitions_up_to(9))
    CHECK(james_regularise(la, 3) == regularise(la, LadderParams(3, 1)));
}

TEST_CASE("steep and shallow hooks") {
  const auto one = classify_hooks(P("1^3"), 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].steep);
  CHECK_FALSE(one[0].shallow);
  const auto row = classify_hooks(Partition{3}, 3);
  REQUIRE(row.size() == 1);
  CHECK(row[0].shallow);
  CHECK_FALSE(row[0].steep);

  // e = 3: the 6-hook at (1,1) has arm 2 and leg 3; the 3-hook at (3,1) arm 1, leg 1.
  const auto hs = classify_hooks(Partition{3, 2, 2, 1}, 3);
  REQUIRE(hs.size() == 2);
  int neither = 0, steep = 0;
  for (const ClassifiedHook& h : hs) {
    CHECK(h.hook.length % 3 == 0);
    if (h.hook.length == 6) {
      CHECK(h.hook.arm == 2);
      CHECK(h.hook.leg == 3);
      CHECK_FALSE(h.steep);
      CHECK_FALSE(h.shallow);
    }
    neither += !h.steep && !h.shallow;
    steep += h.steep;
  }
  CHECK(neither == 2);
  CHECK(steep == 0);
  // e = 4: two 4-hooks, no 8-hook
  CHECK(classify_hooks(Partition{3, 2, 2, 1}, 4).size() == 2);
  // e = 2: every hook is one or the other
  for (const ClassifiedHook& h : classify_hooks(P("4,3,1^2"), 2)) {
    CHECK((h.steep || h.shallow));
    CHECK(h.steep == (h.hook.leg >= h.hook.arm));
    CHECK(h.shallow == (h.hook.arm >= h.hook.leg));
  }
}

TEST_CASE("Lyle comparison") {
  const LyleReport r = lyle_check(P("1^3"), 3);
  CHECK(r.lhs == Partition{3});
  CHECK(r.rhs == Partition{3});
  CHECK(r.equal);
  CHECK(r.all_steep_or_shallow);
  CHECK(r.consistent());
  const LyleReport z = lyle_check(Partition{}, 4);
  CHECK(z.equal);
  CHECK(z.consistent());
  for (int e = 2; e <= 4; ++e)
    for (const Partition& la : partitions_up_to(11)) {
      const LyleReport x = lyle_check(la, e);
      CHECK(x.lhs == mullineux(james_regularise(la, e), e));
      CHECK(x.rhs == james_regularise(conjugate(la), e));
      CHECK(x.dominates == oracle::dominates(x.lhs, x.rhs));
      CHECK(x.consistent());
    }
}
