#include "regcrys/ladder.hpp"

#include <algorithm>

namespace regcrys {

LadderParams LadderParams::of(int e, RationalSlope y) {
  if (e < 2) throw DomainError("ladders need e >= 2");
  if (y.num() < y.den() || y.num() > static_cast<std::int64_t>(e - 1) * y.den())
    throw DomainError("slope " + y.str() + " lies outside [1, " + std::to_string(e - 1) + "]");
  return LadderParams(e, y, static_cast<int>(e * y.den()), static_cast<int>(y.num()));
}

LadderParams::LadderParams(int E, int Y) : LadderParams(of(E, RationalSlope(Y))) {}

LadderParams LadderParams::dual() const { return of(e_, static_cast<std::int64_t>(e_) - slope_); }

std::string LadderParams::str() const {
  return "(" + std::to_string(E_) + "," + std::to_string(Y_) + ")";
}

Node ladder_id(Node x, const LadderParams& P) {
  const int Y = P.Y();
  const std::int64_t k = floor_div(static_cast<std::int64_t>(x.col) - 1, Y);
  // Step back k times along (Y - E, Y).
  return Node{static_cast<int>(x.row - k * (Y - P.E())), static_cast<int>(x.col - k * Y)};
}

std::int64_t depth(Node x, const LadderParams& P) {
  return static_cast<std::int64_t>(P.Y()) * x.row + static_cast<std::int64_t>(P.E() - P.Y()) * x.col;
}

LadderFingerprint fingerprint(const Partition& la, const LadderParams& P) {
  LadderFingerprint out;
  for (int r = 1; r <= la.length(); ++r)
    for (int c = 1; c <= la[r]; ++c) ++out[ladder_id(Node{r, c}, P)];
  return out;
}

namespace {

// Largest t with a hook of length E*t and arm Y*t + shift; 0 if none.
int largest_hook_multiple(const Partition& la, int E, int Y, int shift) {
  int best = 0;
  for (const Hook& h : hooks(la)) {
    if (h.length % E != 0) continue;
    const int t = h.length / E;
    if (h.arm == Y * t + shift) best = std::max(best, t);
  }
  return best;
}

// Occupancy bitmap that reads as empty past its end.
class BeadRow {
 public:
  explicit BeadRow(const std::vector<int>& pos) {
    for (int p : pos) set(p, true);
  }
  bool at(long p) const { return p >= 0 && p < static_cast<long>(bits_.size()) && bits_[static_cast<std::size_t>(p)]; }
  void set(long p, bool v) {
    if (p >= static_cast<long>(bits_.size())) bits_.resize(static_cast<std::size_t>(p + 1), false);
    bits_[static_cast<std::size_t>(p)] = v;
  }
  std::vector<int> positions() const {
    std::vector<int> out;
    for (std::size_t p = 0; p < bits_.size(); ++p)
      if (bits_[p]) out.push_back(static_cast<int>(p));
    return out;
  }
  long extent() const { return static_cast<long>(bits_.size()); }

 private:
  std::vector<bool> bits_;
};

}  // namespace

bool is_regular(const Partition& la, const LadderParams& P) {
  return largest_hook_multiple(la, P.E(), P.Y(), -1) == 0;
}

bool is_restricted(const Partition& la, const LadderParams& P) {
  return largest_hook_multiple(la, P.E(), P.Y(), 0) == 0;
}

int bad_count(const Partition& la, const LadderParams& P) {
  const RationalSlope& y = P.slope();
  if (y.is_integer()) throw DomainError("y-bad hooks are only defined for non-integral slopes");
  const int e = P.e();
  int count = 0;
  for (const Hook& h : hooks(la)) {
    if (h.length % e != 0) continue;
    const int t = h.length / e;
    if (t % y.den() != 0 && h.arm == y.floor_times(t)) ++count;
  }
  return count;
}

Partition regularise_step(const Partition& la, const LadderParams& P) {
  const int t = largest_hook_multiple(la, P.E(), P.Y(), -1);
  if (t == 0) throw DomainError("partition is already " + P.str() + "-regular");
  // With the largest t, the scaled parameters (Et, Yt) have only t = 1.
  const long E = static_cast<long>(P.E()) * t;
  const long Y = static_cast<long>(P.Y()) * t;

  const int n = la.length() + 2 * static_cast<int>(E);
  std::vector<int> start(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) start[static_cast<std::size_t>(r - 1)] = la[r] + n - r;
  BeadRow row(start);
  const long top = start.front();

  auto empties_in = [&](long lo, long hi) {
    long k = 0;
    for (long p = lo; p <= hi; ++p) k += row.at(p) ? 0 : 1;
    return k;
  };

  long b = -1;
  for (long p = top; p >= E; --p) {
    if (row.at(p) && !row.at(p - E) && empties_in(p - E, p) == Y) {
      b = p;
      break;
    }
  }
  if (b < 0) throw std::logic_error("regularise_step: no qualifying bead for " + P.str());

  std::vector<bool> in_class(static_cast<std::size_t>(E), false);
  for (long p = b - E; p <= b; ++p)
    if (!row.at(p)) in_class[static_cast<std::size_t>(p % E)] = true;
  auto in_union = [&](long p) { return static_cast<bool>(in_class[static_cast<std::size_t>(p % E)]); };

  std::vector<long> bs;
  for (long p = b - E + 1; p <= top; ++p)
    if (row.at(p) && in_union(p)) bs.push_back(p);
  const std::size_t m = bs.size();

  std::vector<long> ts;
  long scan = b + 1;
  auto next_t = [&]() {
    while (row.at(scan) || in_union(scan)) ++scan;
    ts.push_back(scan++);
  };
  std::size_t d = 1;
  for (;; ++d) {
    while (ts.size() < d) next_t();
    if (d == m || ts[d - 1] < bs[d]) break;
  }

  for (std::size_t i = 0; i < d; ++i) {
    const long bi = bs[i];
    const long ti = ts[i];
    if (row.at(bi - E) || !row.at(ti - E))
      throw std::logic_error("regularise_step: bead move blocked for " + P.str());
    row.set(bi, false);
    row.set(bi - E, true);
    row.set(ti - E, false);
    row.set(ti, true);
  }

  std::vector<int> pos = row.positions();
  std::vector<int> parts(pos.size());
  const int beads = static_cast<int>(pos.size());
  for (int r = 1; r <= beads; ++r) parts[static_cast<std::size_t>(r - 1)] = pos[static_cast<std::size_t>(beads - r)] + r - beads;
  return Partition(std::move(parts));
}

std::vector<Partition> regularise_path(const Partition& la, const LadderParams& P) {
  std::vector<Partition> path{la};
  while (!is_regular(path.back(), P)) path.push_back(regularise_step(path.back(), P));
  return path;
}

Partition regularise(const Partition& la, const LadderParams& P) {
  Partition cur = la;
  while (!is_regular(cur, P)) cur = regularise_step(cur, P);
  return cur;
}

Partition restrictise(const Partition& la, const LadderParams& P) {
  return conjugate(regularise(conjugate(la), P.dual()));
}

std::vector<Partition> ladder_class(const Partition& la, const LadderParams& P, int bound) {
  if (la.size() > bound)
    throw DomainError("ladder class oracle bound " + std::to_string(bound) + " exceeded");
  const LadderFingerprint target = fingerprint(la, P);
  std::vector<Partition> out;
  for (Partition& mu : enumerate_partitions(la.size()))
    if (fingerprint(mu, P) == target) out.push_back(std::move(mu));
  std::sort(out.begin(), out.end(), GradedLess{});
  return out;
}

}  // namespace regcrys
