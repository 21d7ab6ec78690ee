#include "regcrys/mullineux.hpp"

#include <algorithm>

#include "regcrys/crystal.hpp"
#include "regcrys/ladder.hpp"
#include "regcrys/text_format.hpp"

namespace regcrys {

std::vector<RationalSlope> slopes(const Partition& mu, int e) {
  if (e < 2) throw DomainError("slopes need e >= 2");
  std::vector<RationalSlope> out;
  for (const Hook& h : hooks(mu))
    if (h.length % e == 0) out.emplace_back(h.arm + 1, h.length / e);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<RationalSlope> largest_singular_slope(const Partition& mu, int e, const RationalSlope& x) {
  // A hook of length r*e and arm a breaks A^{y-}-regularity exactly for
  // a/r < y <= (a+1)/r.
  std::optional<RationalSlope> best;
  for (const Hook& h : hooks(mu)) {
    if (h.length % e != 0) continue;
    const std::int64_t r = h.length / e;
    const std::int64_t a = h.arm;
    const RationalSlope top(a + 1, r);
    const RationalSlope cand = std::min(top, x);
    if (cand.num() < cand.den()) continue;         // below 1
    if (cand.num() * r <= a * cand.den()) continue;  // not above a/r
    if (!best || cand > *best) best = cand;
  }
  return best;
}

MullineuxTrace mullineux_trace(const Partition& la, int e) {
  if (e < 1) throw DomainError("e must be positive");
  if (!is_e_regular(la, e))
    throw DomainError(format_partition(la) + " is not " + std::to_string(e) + "-regular");
  MullineuxTrace trace{conjugate(la), {}, conjugate(la)};
  if (e == 1) return trace;  // only the empty partition gets here
  Partition mu = trace.start;
  RationalSlope x(e - 1);
  while (auto y = largest_singular_slope(mu, e, x)) {
    Partition next = regularise(mu, LadderParams::of(e, *y));
    if (next == mu)
      throw std::logic_error("mullineux: no progress at slope " + y->str() + " on " + format_partition(mu));
    trace.steps.push_back({*y, next});
    mu = std::move(next);
    x = *y;
  }
  trace.result = mu;
  return trace;
}

Partition mullineux(const Partition& la, int e) { return mullineux_trace(la, e).result; }

Partition mullineux_oracle(const Partition& la, int e, ResiduePolicy policy) {
  if (e < 1) throw DomainError("e must be positive");
  if (!is_e_regular(la, e))
    throw DomainError(format_partition(la) + " is not " + std::to_string(e) + "-regular");
  if (e == 1) return la;
  const int n = std::max(1, (la.size() + e - 1) / e);
  const ArmPrefix A = ArmPrefix::minus(e, RationalSlope(1), n);

  std::vector<int> path;
  Partition cur = la;
  while (!cur.empty()) {
    bool stepped = false;
    for (int k = 0; k < e && !stepped; ++k) {
      const int i = policy == ResiduePolicy::smallest ? k : e - 1 - k;
      if (auto down = e_op(cur, A, i)) {
        path.push_back(i);
        cur = std::move(*down);
        stepped = true;
      }
    }
    if (!stepped) throw std::logic_error("mullineux_oracle: " + format_partition(cur) + " has no good node");
  }
  Partition mu;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto up = f_op(mu, A, Residue::of(-*it, e).value);
    if (!up) throw std::logic_error("mullineux_oracle: missing cogood node while rebuilding");
    mu = std::move(*up);
  }
  return mu;
}

Partition james_regularise(const Partition& la, int e) { return regularise(la, LadderParams(e, 1)); }

std::vector<ClassifiedHook> classify_hooks(const Partition& la, int e) {
  if (e < 2) throw DomainError("hook classification needs e >= 2");
  std::vector<ClassifiedHook> out;
  for (const Hook& h : hooks(la))
    if (h.length % e == 0) out.push_back({h, h.leg >= (e - 1) * h.arm, h.arm >= (e - 1) * h.leg});
  return out;
}

LyleReport lyle_check(const Partition& la, int e) {
  LyleReport rep{mullineux(james_regularise(la, e), e), james_regularise(conjugate(la), e), false, false, true};
  rep.dominates = dominates(rep.lhs, rep.rhs);
  rep.equal = rep.lhs == rep.rhs;
  for (const ClassifiedHook& h : classify_hooks(la, e)) rep.all_steep_or_shallow = rep.all_steep_or_shallow && (h.steep || h.shallow);
  return rep;
}

}  // namespace regcrys
