#include "regcrys/verify.hpp"

#include <functional>
#include <map>
#include <set>

#include "regcrys/abacus.hpp"
#include "regcrys/crystal.hpp"
#include "regcrys/ladder.hpp"
#include "regcrys/mullineux.hpp"
#include "regcrys/separation.hpp"
#include "regcrys/text_format.hpp"

namespace regcrys {

namespace {

struct Outcome {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::string failure;  // empty when everything held
};

Outcome pass(std::size_t n = 1) { return {n, 0, {}}; }
Outcome skip(std::size_t n = 1) { return {0, n, {}}; }
Outcome fail(std::string why) { return {1, 0, why.empty() ? std::string("failed") : std::move(why)}; }

// Accumulates sub-checks of one aggregate instance.
struct Tally {
  Outcome out;
  bool expect(bool ok, const std::function<std::string()>& why) {
    ++out.checked;
    if (!ok && out.failure.empty()) out.failure = why();
    return ok;
  }
  void skip() { ++out.skipped; }
};

std::string P(const Partition& la) { return format_partition(la); }

template <class T, class F>
PropertyResult property(std::string name, const std::vector<T>& items, F f, unsigned threads) {
  auto outs = parallel_map(
      items,
      [&](const T& x) -> Outcome {
        try {
          return f(x);
        } catch (const std::exception& ex) {
          return fail(std::string("exception: ") + ex.what());
        }
      },
      threads);
  PropertyResult r{std::move(name), 0, 0, 0, {}};
  for (const Outcome& o : outs) {
    r.checked += o.checked;
    r.skipped += o.skipped;
    if (!o.failure.empty()) {
      ++r.failed;
      if (r.counterexample.empty()) r.counterexample = o.failure;
    }
  }
  return r;
}

void require_nonvacuous(PropertyResult& r) {
  if (r.checked == 0 && r.failed == 0) {
    r.failed = 1;
    r.counterexample = "no instance satisfied the hypothesis";
  }
}

std::vector<int> e_range(const VerifyOptions& opts, int lo, int hi) {
  if (opts.e) {
    if (*opts.e < 2) throw DomainError("--e must be at least 2");
    return {*opts.e};
  }
  std::vector<int> out;
  for (int e = lo; e <= hi; ++e) out.push_back(e);
  return out;
}

template <class T>
std::vector<T> filter_e(std::vector<T> cases, const VerifyOptions& opts) {
  if (!opts.e) return cases;
  std::vector<T> out;
  for (T& c : cases)
    if (c.e == *opts.e) out.push_back(std::move(c));
  return out;
}

struct EPart {
  int e;
  Partition la;
};

std::vector<EPart> e_partitions(const std::vector<int>& es, int max, bool regular_only) {
  std::vector<EPart> out;
  for (int e : es)
    for (Partition& la : partitions_up_to(max))
      if (!regular_only || is_e_regular(la, e)) out.push_back({e, la});
  return out;
}

int round_up(int x, int e) { return (x + e - 1) / e * e; }

// ---------------------------------------------------------------- core

SuiteReport core_suite(const VerifyOptions& opts) {
  const int max = opts.max.value_or(12);
  const std::vector<int> es = e_range(opts, 2, 5);
  const std::vector<Partition> all = partitions_up_to(max);
  const auto items = e_partitions(es, max, false);
  SuiteReport rep{"core", {}};

  rep.properties.push_back(property("conjugation is an involution", all, [](const Partition& la) {
    const Partition c = conjugate(la);
    if (conjugate(c) != la || c.size() != la.size()) return fail(P(la));
    return pass();
  }, opts.threads));

  rep.properties.push_back(property("conjugation reverses dominance", all, [](const Partition& la) {
    Tally t;
    if (la.size() > 10) return skip();
    for (const Partition& mu : enumerate_partitions(la.size()))
      t.expect(dominates(la, mu) == dominates(conjugate(mu), conjugate(la)), [&] { return P(la) + " vs " + P(mu); });
    return t.out;
  }, opts.threads));

  rep.properties.push_back(property("abacus encode/decode round trip", items, [](const EPart& x) {
    Tally t;
    const int n0 = default_bead_count(x.la, x.e);
    for (int n = x.la.length(); n <= n0 + x.e; ++n)
      t.expect(Abacus::encode(x.la, n, x.e).decode() == x.la, [&] { return P(x.la) + " n=" + std::to_string(n); });
    return t.out;
  }, opts.threads));

  rep.properties.push_back(property("conjugate display decodes to the conjugate", items, [](const EPart& x) {
    const int n = default_bead_count(x.la, x.e);
    const Abacus ab = Abacus::encode(x.la, n, x.e);
    const int m = round_up(ab.max_position() + 1, x.e);
    const Partition got = ab.conjugate_display(m).decode();
    if (got != conjugate(x.la)) return fail("e=" + std::to_string(x.e) + " " + P(x.la) + " gave " + P(got));
    return pass();
  }, opts.threads));

  rep.properties.push_back(property("core and quotient determine the partition", items, [](const EPart& x) {
    const int n = default_bead_count(x.la, x.e);
    const auto q = e_quotient(x.la, n, x.e);
    const Partition core = e_core(x.la, x.e);
    int weight = core.size();
    for (const Partition& p : q) weight += x.e * p.size();
    for (const Hook& h : hooks(core))
      if (h.length % x.e == 0) return fail("core of " + P(x.la) + " has an e-divisible hook");
    if (weight != x.la.size() || from_core_and_quotient(core, q, n, x.e) != x.la)
      return fail("e=" + std::to_string(x.e) + " " + P(x.la));
    return pass();
  }, opts.threads));

  rep.properties.push_back(property("bead moves lengthen the first m columns by e", items, [](const EPart& x) {
    Tally t;
    const Partition c = conjugate(x.la);
    for (int m = 1; m <= x.la[1] + 1; ++m) {
      const Partition got = conjugate(grow_first_columns(x.la, m, x.e));
      bool ok = true;
      for (int j = 1; j <= std::max(got.length(), c.length()); ++j)
        ok = ok && got[j] == c[j] + (j <= m ? x.e : 0);
      t.expect(ok, [&] { return "e=" + std::to_string(x.e) + " " + P(x.la) + " m=" + std::to_string(m); });
    }
    return t.out;
  }, opts.threads));

  struct ESize {
    int e;
    int k;
  };
  std::vector<ESize> sizes;
  for (int e : es)
    for (int k = 0; k <= max; ++k) sizes.push_back({e, k});
  rep.properties.push_back(property("equal e-content gives equal runner counts", sizes, [](const ESize& x) {
    Tally t;
    const int n = std::max(x.e, round_up(x.k, x.e));
    std::map<std::vector<int>, std::vector<int>> seen;
    for (const Partition& la : enumerate_partitions(x.k)) {
      const auto profile = Abacus::encode(la, n, x.e).runner_profile();
      auto [it, fresh] = seen.emplace(e_content(la, x.e), profile);
      t.expect(fresh || it->second == profile, [&] { return "e=" + std::to_string(x.e) + " " + P(la); });
    }
    return t.out;
  }, opts.threads));
  return rep;
}

// ---------------------------------------------------------------- ladder

std::map<LadderFingerprint, std::vector<Partition>> classes_of_size(int k, const LadderParams& P_) {
  std::map<LadderFingerprint, std::vector<Partition>> out;
  for (Partition& la : enumerate_partitions(k)) out[fingerprint(la, P_)].push_back(std::move(la));
  return out;
}

SuiteReport ladder_suite(const VerifyOptions& opts) {
  const int max = opts.max.value_or(10);
  SuiteReport rep{"ladder", {}};

  struct PSize {
    LadderParams p;
    int k;
  };
  std::vector<PSize> grid;
  for (auto [E, Y] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 2}, {9, 4}, {8, 3}})
    for (int k = 0; k <= max; ++k) grid.push_back({LadderParams(E, Y), k});

  rep.properties.push_back(property("regularisation is the dominance maximum of its class", grid, [](const PSize& x) {
    Tally t;
    for (const auto& [fp, cls] : classes_of_size(x.k, x.p)) {
      std::vector<Partition> tops;
      for (const Partition& a : cls)
        if (std::all_of(cls.begin(), cls.end(), [&](const Partition& b) { return dominates(a, b); })) tops.push_back(a);
      std::vector<Partition> regular;
      for (const Partition& a : cls)
        if (is_regular(a, x.p)) regular.push_back(a);
      const std::string where = x.p.str() + " class of " + P(cls.front());
      if (!t.expect(tops.size() == 1 && regular.size() == 1 && tops[0] == regular[0], [&] { return where; })) continue;
      for (const Partition& a : cls)
        t.expect(regularise(a, x.p) == tops[0], [&] { return x.p.str() + " regularise " + P(a); });
    }
    return t.out;
  }, opts.threads));

  rep.properties.push_back(property("restrictisation is the dominance minimum of its class", grid, [](const PSize& x) {
    Tally t;
    for (const auto& [fp, cls] : classes_of_size(x.k, x.p)) {
      std::vector<Partition> bottoms;
      for (const Partition& a : cls)
        if (std::all_of(cls.begin(), cls.end(), [&](const Partition& b) { return dominates(b, a); })) bottoms.push_back(a);
      std::vector<Partition> restricted;
      for (const Partition& a : cls)
        if (is_restricted(a, x.p)) restricted.push_back(a);
      const std::string where = x.p.str() + " class of " + P(cls.front());
      if (!t.expect(bottoms.size() == 1 && restricted.size() == 1 && bottoms[0] == restricted[0], [&] { return where; }))
        continue;
      for (const Partition& a : cls)
        t.expect(restrictise(a, x.p) == bottoms[0], [&] { return x.p.str() + " restrictise " + P(a); });
    }
    return t.out;
  }, opts.threads));

  rep.properties.push_back(property("abacus steps climb strictly within the class", grid, [](const PSize& x) {
    Tally t;
    for (const Partition& la : enumerate_partitions(x.k)) {
      const auto path = regularise_path(la, x.p);
      const auto fp = fingerprint(la, x.p);
      bool ok = is_regular(path.back(), x.p);
      for (std::size_t k = 1; k < path.size(); ++k)
        ok = ok && path[k] != path[k - 1] && dominates(path[k], path[k - 1]) && fingerprint(path[k], x.p) == fp;
      t.expect(ok, [&] { return x.p.str() + " " + P(la); });
    }
    return t.out;
  }, opts.threads));

  std::vector<PSize> bad_grid;
  for (auto [e, y] : std::vector<std::pair<int, RationalSlope>>{
           {3, RationalSlope(4, 3)}, {4, RationalSlope(3, 2)}, {4, RationalSlope(5, 3)},
           {5, RationalSlope(3, 2)}, {5, RationalSlope(7, 3)}})
    for (int k = 0; k <= max; ++k) bad_grid.push_back({LadderParams::of(e, y), k});
  rep.properties.push_back(property("bad counts are constant on ladder classes", bad_grid, [](const PSize& x) {
    Tally t;
    for (const auto& [fp, cls] : classes_of_size(x.k, x.p)) {
      const int b = bad_count(cls.front(), x.p);
      for (const Partition& a : cls)
        t.expect(bad_count(a, x.p) == b, [&] {
          return "e=" + std::to_string(x.p.e()) + " y=" + x.p.slope().str() + " " + P(cls.front()) + " vs " + P(a);
        });
    }
    return t.out;
  }, opts.threads));

  std::vector<LadderParams> params;
  for (auto [e, y] : std::vector<std::pair<int, RationalSlope>>{
           {2, RationalSlope(1)}, {3, RationalSlope(2)}, {3, RationalSlope(4, 3)}, {4, RationalSlope(3, 2)},
           {5, RationalSlope(7, 3)}, {6, RationalSlope(5)}})
    params.push_back(LadderParams::of(e, y));
  rep.properties.push_back(property("ladders preserve depth and residue", params, [](const LadderParams& p) {
    Tally t;
    for (int r = 1; r <= 15; ++r)
      for (int c = 1; c <= 15; ++c) {
        const Node x{r, c};
        const Node id = ladder_id(x, p);
        const Node step{r + p.Y() - p.E(), c + p.Y()};
        t.expect(depth(id, p) == depth(x, p) && residue(id, p.e()) == residue(x, p.e()) && ladder_id(step, p) == id &&
                     id.col >= 1 && id.col <= p.Y(),
                 [&] { return p.str() + " node (" + std::to_string(r) + "," + std::to_string(c) + ")"; });
      }
    return t.out;
  }, opts.threads));
  return rep;
}

// ---------------------------------------------------------------- crystal

struct CrystalCase {
  int e;
  RationalSlope y;
};

std::vector<ArmPrefix> all_prefixes(int e, int n) {
  std::vector<ArmPrefix> out;
  std::vector<int> v;
  std::function<void(int)> rec = [&](int t) {
    if (t > n) {
      try {
        out.emplace_back(e, v);
      } catch (const DomainError&) {
      }
      return;
    }
    for (int a = t - 1; a <= (e - 1) * t; ++a) {
      v.push_back(a);
      rec(t + 1);
      v.pop_back();
    }
  };
  rec(1);
  return out;
}

SuiteReport crystal_suite(const VerifyOptions& opts) {
  const int max = opts.max.value_or(12);
  SuiteReport rep{"crystal", {}};
  const auto cases = filter_e(std::vector<CrystalCase>{{4, RationalSlope(2)}, {3, RationalSlope(3, 2)}, {4, RationalSlope(5, 3)}}, opts);

  struct Item {
    int e;
    RationalSlope y;
    Partition la;
  };
  std::vector<Item> items;
  for (const CrystalCase& c : cases) {
    const ArmPrefix plus = ArmPrefix::plus(c.e, c.y, (max + c.e) / c.e);
    for (Partition& la : partitions_up_to(max))
      if (is_A_regular(la, plus)) items.push_back({c.e, c.y, std::move(la)});
  }
  rep.properties.push_back(property("regularisation commutes with e_i and f_i", items, [max](const Item& x) {
    Tally t;
    const int n = (max + x.e) / x.e;  // e*n >= max + 1
    const ArmPrefix plus = ArmPrefix::plus(x.e, x.y, n);
    const ArmPrefix minus = ArmPrefix::minus(x.e, x.y, n);
    const LadderParams p = LadderParams::of(x.e, x.y);
    const Partition mu = regularise(x.la, p);
    const std::string where = "e=" + std::to_string(x.e) + " y=" + x.y.str() + " " + P(x.la);
    if (!t.expect(is_A_regular(mu, minus), [&] { return where + " image not regular"; })) return t.out;
    auto image = [&](const std::optional<Partition>& a) {
      return a ? std::optional<Partition>(regularise(*a, p)) : std::nullopt;
    };
    for (int i = 0; i < x.e; ++i) {
      t.expect(image(e_op(x.la, plus, i)) == e_op(mu, minus, i), [&] { return where + " e_" + std::to_string(i); });
      t.expect(image(f_op(x.la, plus, i)) == f_op(mu, minus, i), [&] { return where + " f_" + std::to_string(i); });
    }
    return t.out;
  }, opts.threads));

  struct Layer {
    int e;
    RationalSlope y;
    int k;
  };
  std::vector<Layer> layers;
  for (const CrystalCase& c : cases)
    for (int k = 0; k <= max; ++k) layers.push_back({c.e, c.y, k});
  rep.properties.push_back(property("regularisation is a bijection between regular sets", layers, [max](const Layer& x) {
    const int n = (max + x.e) / x.e;
    const ArmPrefix plus = ArmPrefix::plus(x.e, x.y, n);
    const ArmPrefix minus = ArmPrefix::minus(x.e, x.y, n);
    std::set<Partition> image;
    std::set<Partition> target;
    std::size_t sources = 0;
    for (const Partition& la : enumerate_partitions(x.k)) {
      if (is_A_regular(la, plus)) {
        ++sources;
        image.insert(regularise(la, LadderParams::of(x.e, x.y)));
      }
      if (is_A_regular(la, minus)) target.insert(la);
    }
    if (image.size() != sources || image != target)
      return fail("e=" + std::to_string(x.e) + " y=" + x.y.str() + " size " + std::to_string(x.k));
    return pass();
  }, opts.threads));

  std::vector<EPart> graph_items;
  for (int e : e_range(opts, 2, 5))
    for (Partition& la : partitions_up_to(max)) graph_items.push_back({e, std::move(la)});
  rep.properties.push_back(property("e_i and f_i are mutually inverse", graph_items, [max](const EPart& x) {
    Tally t;
    const int n = (max + x.e) / x.e;
    for (int num = 1; num < x.e; ++num)
      for (const ArmPrefix& A : {ArmPrefix::plus(x.e, RationalSlope(num), n), ArmPrefix::minus(x.e, RationalSlope(num), n)}) {
        if (!is_A_regular(x.la, A)) continue;
        for (int i = 0; i < x.e; ++i) {
          if (auto up = f_op(x.la, A, i))
            t.expect(e_op(*up, A, i) == x.la, [&] { return A.str() + " f_" + std::to_string(i) + " " + P(x.la); });
          if (auto down = e_op(x.la, A, i))
            t.expect(f_op(*down, A, i) == x.la, [&] { return A.str() + " e_" + std::to_string(i) + " " + P(x.la); });
        }
      }
    return t.out;
  }, opts.threads));

  struct Pair {
    int e;
    ArmPrefix a;
    ArmPrefix b;
    std::vector<ArmPrefix> between;
  };
  std::vector<Pair> pairs;
  for (int e : e_range(opts, 3, 4)) {
    for (int n = 1; n <= 3; ++n) {
      const auto pre = all_prefixes(e, n);
      for (const ArmPrefix& a : pre)
        for (const ArmPrefix& b : pre) {
          if (compare_prefixes(a, b) != std::strong_ordering::greater) continue;
          Pair p{e, a, b, {}};
          for (const ArmPrefix& c : pre)
            if (c != a && c != b && compare_prefixes(a, c) == std::strong_ordering::greater &&
                compare_prefixes(c, b) == std::strong_ordering::greater)
              p.between.push_back(c);
          pairs.push_back(std::move(p));
        }
    }
  }
  rep.properties.push_back(property("different chain factorisations give the same map", pairs, [](const Pair& x) {
    Tally t;
    const IsoChain direct = iso_chain(x.a, x.b);
    const ArmPrefix bottom = ArmPrefix::minus(x.e, RationalSlope(1), x.a.length());
    const IsoChain down = iso_chain(x.a, bottom);
    const IsoChain up = iso_chain(bottom, x.b);
    std::vector<std::pair<IsoChain, IsoChain>> routes;
    for (const ArmPrefix& c : x.between) routes.emplace_back(iso_chain(x.a, c), iso_chain(c, x.b));
    for (const Partition& la : partitions_up_to(x.a.size_bound())) {
      if (!is_A_regular(la, x.a)) continue;
      const Partition want = apply_chain(la, direct);
      const std::string where = x.a.str() + "->" + x.b.str() + " " + P(la);
      t.expect(apply_chain(apply_chain(la, down), up) == want, [&] { return where + " via " + bottom.str(); });
      for (const auto& [first, second] : routes)
        t.expect(apply_chain(apply_chain(la, first), second) == want, [&] { return where + " via " + first.target.str(); });
    }
    return t.out;
  }, opts.threads));
  return rep;
}

// ---------------------------------------------------------------- mullineux

SuiteReport mullineux_suite(const VerifyOptions& opts) {
  const int max = opts.max.value_or(12);
  const auto items = e_partitions(e_range(opts, 2, 6), max, true);
  SuiteReport rep{"mullineux", {}};

  rep.properties.push_back(property("agrees with the crystal oracle", items, [](const EPart& x) {
    const Partition m = mullineux(x.la, x.e);
    const Partition a = mullineux_oracle(x.la, x.e, ResiduePolicy::smallest);
    const Partition b = mullineux_oracle(x.la, x.e, ResiduePolicy::largest);
    if (m != a || m != b)
      return fail("e=" + std::to_string(x.e) + " " + P(x.la) + ": " + P(m) + " vs oracle " + P(a) + " / " + P(b));
    return pass();
  }, opts.threads));

  rep.properties.push_back(property("is an involution", items, [](const EPart& x) {
    if (mullineux(mullineux(x.la, x.e), x.e) != x.la) return fail("e=" + std::to_string(x.e) + " " + P(x.la));
    return pass();
  }, opts.threads));

  rep.properties.push_back(property("preserves size and e-regularity, negates content", items, [](const EPart& x) {
    const Partition m = mullineux(x.la, x.e);
    const auto c = e_content(x.la, x.e);
    const auto d = e_content(m, x.e);
    bool ok = m.size() == x.la.size() && is_e_regular(m, x.e);
    for (int i = 0; i < x.e; ++i) ok = ok && d[static_cast<std::size_t>(i)] == c[static_cast<std::size_t>(Residue::of(-i, x.e).value)];
    ok = ok && e_core(m, x.e) == conjugate(e_core(x.la, x.e));
    if (!ok) return fail("e=" + std::to_string(x.e) + " " + P(x.la) + " -> " + P(m));
    return pass();
  }, opts.threads));

  rep.properties.push_back(property("m_2 is the identity", items, [](const EPart& x) {
    if (x.e != 2) return skip();
    if (mullineux(x.la, 2) != x.la) return fail(P(x.la));
    return pass();
  }, opts.threads));

  rep.properties.push_back(property("trace slopes decrease and each step regularises", items, [](const EPart& x) {
    const MullineuxTrace tr = mullineux_trace(x.la, x.e);
    Partition prev = tr.start;
    std::optional<RationalSlope> last;
    for (const MullineuxStep& s : tr.steps) {
      if ((last && !(s.slope < *last)) || regularise(prev, LadderParams::of(x.e, s.slope)) != s.result)
        return fail("e=" + std::to_string(x.e) + " " + P(x.la) + " at y=" + s.slope.str());
      last = s.slope;
      prev = s.result;
    }
    return pass();
  }, opts.threads));
  return rep;
}

// ---------------------------------------------------------------- lyle

SuiteReport lyle_suite(const VerifyOptions& opts) {
  const int max = opts.max.value_or(12);
  const auto items = e_partitions(e_range(opts, 2, 5), max, false);
  SuiteReport rep{"lyle", {}};
  rep.properties.push_back(property("mullineux of the regularisation dominates", items, [](const EPart& x) {
    const LyleReport r = lyle_check(x.la, x.e);
    if (!r.dominates) return fail("e=" + std::to_string(x.e) + " " + P(x.la) + ": " + P(r.lhs) + " vs " + P(r.rhs));
    return pass();
  }, opts.threads));
  rep.properties.push_back(property("equality exactly when every hook is steep or shallow", items, [](const EPart& x) {
    const LyleReport r = lyle_check(x.la, x.e);
    if (r.equal != r.all_steep_or_shallow)
      return fail("e=" + std::to_string(x.e) + " " + P(x.la) + ": " + P(r.lhs) + " vs " + P(r.rhs));
    return pass();
  }, opts.threads));
  return rep;
}

// ---------------------------------------------------------------- split

std::vector<std::vector<int>> proper_subsets(int e) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask + 1 < (1 << e); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < e; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

// Room for beta and m_c(beta') plus c copies of alpha' on I, with u swept.
int split_grid_beads(int e, int bound) { return e * (2 * bound + 2); }

struct CtxPart {
  int e;
  std::vector<int> I;
  Partition la;
};

std::string ctx_str(int e, const std::vector<int>& I) {
  std::string s = "e=" + std::to_string(e) + " I={";
  for (std::size_t k = 0; k < I.size(); ++k) s += (k ? "," : "") + std::to_string(I[k]);
  return s + "}";
}

SuiteReport split_suite(const VerifyOptions& opts) {
  const int bound = opts.max.value_or(3);
  constexpr int lemma_max = 12;
  SuiteReport rep{"split", {}};

  std::vector<CtxPart> round;
  std::vector<CtxPart> lemma;
  for (int e : e_range(opts, 4, 6))
    for (const auto& I : proper_subsets(e))
      for (Partition& la : partitions_up_to(lemma_max)) {
        if (e <= 5 || opts.e) lemma.push_back({e, I, la});
        round.push_back({e, I, std::move(la)});
      }

  rep.properties.push_back(property("split and combine are inverse", round, [](const CtxPart& x) {
    Tally t;
    const int n0 = default_bead_count(x.la, x.e);
    for (int n : {n0, n0 + x.e}) {
      const SplitContext ctx(x.e, x.I, n);
      const SplitResult s = split(x.la, ctx);
      t.expect(combine(s.lambda_I, s.lambda_Ibar, ctx, s.u) == x.la,
               [&] { return ctx_str(x.e, x.I) + " n=" + std::to_string(n) + " " + P(x.la); });
    }
    return t.out;
  }, opts.threads));

  rep.properties.push_back(property("separated partitions: regularity and restriction split", lemma, [](const CtxPart& x) {
    Tally t;
    const SplitContext ctx(x.e, x.I, default_bead_count(x.la, x.e));
    if (!is_separated(x.la, ctx)) {
      t.skip();
      return t.out;
    }
    const SplitResult s = split(x.la, ctx);
    const int c = ctx.c();
    const int cb = ctx.c_bar();
    const std::string where = ctx_str(x.e, x.I) + " " + P(x.la);
    t.expect(is_regular(x.la, LadderParams::of(x.e, RationalSlope(cb))) == is_e_restricted(s.lambda_Ibar, cb),
             [&] { return where + " (e,cbar)-regularity"; });
    t.expect(is_e_restricted(x.la, x.e) == is_e_restricted(s.lambda_I, c), [&] { return where + " e-restriction"; });
    for (int den = 1; den <= 3; ++den)
      for (int num = cb * den; num <= (x.e - 1) * den; ++num) {
        const RationalSlope y(num, den);
        if (y.den() != den) continue;
        if (y > RationalSlope(cb) && y < RationalSlope(cb + 1) && is_e_regular(s.lambda_I, c))
          t.expect(is_regular(x.la, LadderParams::of(x.e, y)), [&] { return where + " y=" + y.str(); });
        if (!(y < RationalSlope(cb + 1)) && c >= 2) {
          const RationalSlope z(num - cb * den, den);
          t.expect(is_regular(x.la, LadderParams::of(x.e, y)) == is_regular(s.lambda_I, LadderParams::of(c, z)),
                   [&] { return where + " y=" + y.str(); });
        }
      }
    return t.out;
  }, opts.threads));

  rep.properties.push_back(property("single box step stays in the (e,cbar) ladder class", lemma, [](const CtxPart& x) {
    const SplitContext ctx(x.e, x.I, default_bead_count(x.la, x.e));
    if (!is_separated(x.la, ctx)) return skip();
    const auto xi = detail::single_box_step(x.la, ctx);
    if (!xi) return skip();
    const LadderParams p = LadderParams::of(x.e, RationalSlope(ctx.c_bar()));
    if (xi->size() != x.la.size() || fingerprint(*xi, p) != fingerprint(x.la, p))
      return fail(ctx_str(x.e, x.I) + " " + P(x.la) + " -> " + P(*xi));
    return pass();
  }, opts.threads));

  struct Setting {
    int e;
    std::vector<int> I;
    Partition alpha;
  };
  const std::vector<Partition> small = partitions_up_to(bound);
  std::vector<Setting> settings;
  for (int e : e_range(opts, 4, 6))
    for (const auto& I : proper_subsets(e))
      for (const Partition& a : small) settings.push_back({e, I, a});
  PropertyResult thm = property("splitting theorem", settings, [&small, bound](const Setting& x) {
    Tally t;
    const int n = split_grid_beads(x.e, bound);
    const SplitContext ctx(x.e, x.I, n);
    const int c = ctx.c();
    const int cb = ctx.c_bar();
    for (const Partition& beta : small) {
      if (!is_e_restricted(beta, c)) continue;
      const int inside = std::max(beta.length(), c * x.alpha[1] + mullineux(conjugate(beta), c).length());
      for (const Partition& gamma : small) {
        if (!is_e_restricted(gamma, cb)) continue;
        const int outside = std::max(box_row(x.alpha, gamma, cb).length(), mullineux(conjugate(gamma), cb).length());
        for (int u = inside; u + outside <= n; ++u) {
          const SplitCheck chk = verify_split(x.alpha, beta, gamma, ctx, u);
          if (chk.verdict == SplitVerdict::hypothesis_not_met) {
            t.skip();
            continue;
          }
          t.expect(chk.verdict == SplitVerdict::holds, [&] {
            return ctx_str(x.e, x.I) + " n=" + std::to_string(n) + " u=" + std::to_string(u) + " alpha=" + P(x.alpha) +
                   " beta=" + P(beta) + " gamma=" + P(gamma);
          });
        }
      }
    }
    return t.out;
  }, opts.threads);
  require_nonvacuous(thm);
  rep.properties.push_back(std::move(thm));
  return rep;
}

// ---------------------------------------------------------------- paget

SuiteReport paget_suite(const VerifyOptions& opts) {
  const int bound = opts.max.value_or(2);
  SuiteReport rep{"paget", {}};
  struct Shape {
    int e;
    std::vector<int> counts;
  };
  std::vector<Shape> shapes;
  for (int e : e_range(opts, 3, 4)) {
    const int spread = (e - 1) * (bound + 1) + 1;
    std::vector<int> v(static_cast<std::size_t>(e), bound);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == v.size()) {
        int sum = 0;
        for (int x : v) sum += x;
        if (sum % e == 0 && *std::min_element(v.begin(), v.end()) == bound) shapes.push_back({e, v});
        return;
      }
      for (int x = bound; x <= bound + spread; ++x) {
        v[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
  }
  const std::vector<Partition> small = partitions_up_to(bound);

  // Every partition with the given runner counts and quotient components of size <= bound.
  auto each_partition = [&small](const Shape& s, const std::function<void(const Partition&, int)>& visit) {
    const int e = s.e;
    int n = 0;
    for (int x : s.counts) n += x;
    std::vector<std::size_t> pick(static_cast<std::size_t>(e), 0);
    while (true) {
      std::vector<int> occ;
      for (int i = 0; i < e; ++i) {
        const Partition& q = small[pick[static_cast<std::size_t>(i)]];
        const int u = s.counts[static_cast<std::size_t>(i)];
        for (int r = 1; r <= u; ++r) occ.push_back((q[r] + u - r) * e + i);
      }
      visit(Abacus(e, occ).decode(), n);
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == small.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  };

  rep.properties.push_back(property("separated: restricted iff the top runner quotient is empty", shapes, [&](const Shape& s) {
    Tally t;
    each_partition(s, [&](const Partition& la, int n) {
      if (!is_quotient_separated(la, s.e, n)) return;
      const auto sigma = quotient_sigma(la, s.e, n);
      const auto q = e_quotient(la, n, s.e);
      t.expect(is_e_restricted(la, s.e) == q[static_cast<std::size_t>(sigma.back())].empty(),
               [&] { return "e=" + std::to_string(s.e) + " " + P(la); });
    });
    return t.out;
  }, opts.threads));

  PropertyResult thm = property("Paget's theorem", shapes, [&](const Shape& s) {
    Tally t;
    each_partition(s, [&](const Partition& la, int n) {
      if (!is_e_restricted(la, s.e) || !is_quotient_separated(la, s.e, n)) return;
      const Partition mu = paget_mu(la, s.e, n);
      if (!is_quotient_separated(mu, s.e, n)) {
        t.skip();
        return;
      }
      t.expect(mullineux(conjugate(la), s.e) == mu, [&] { return "e=" + std::to_string(s.e) + " " + P(la); });
    });
    return t.out;
  }, opts.threads);
  require_nonvacuous(thm);
  rep.properties.push_back(std::move(thm));
  return rep;
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"core", core_suite},       {"ladder", ladder_suite}, {"crystal", crystal_suite}, {"mullineux", mullineux_suite},
      {"lyle", lyle_suite},       {"split", split_suite},   {"paget", paget_suite}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteReport> run_verification(std::string_view suite, const VerifyOptions& opts) {
  if (opts.max && *opts.max < 0) throw DomainError("--max must be non-negative");
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : registry()) {
    if (suite == name) return {fn(opts)};
    if (suite == "all") {
      // Component bounds of split and paget are not partition sizes.
      VerifyOptions o = opts;
      if (name == "split" || name == "paget") o.max.reset();
      out.push_back(fn(o));
    }
  }
  if (out.empty()) throw DomainError("unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace regcrys
