#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regcrys/partition.hpp"
#include "regcrys/rational.hpp"

namespace regcrys {

/// Integer ladder parameters (E, Y) = (e*z, y*z) for a rational slope y
/// with denominator z. Ladders are the orbits of translation by
/// (Y - E, Y); `e` is the residue modulus used by the depth criterion.
class LadderParams {
 public:
  /// Ladders for the rational slope y with 1 <= y <= e-1.
  static LadderParams of(int e, RationalSlope y);
  /// Direct integer parameters, 1 <= Y <= E-1, residue modulus E.
  LadderParams(int E, int Y);

  int E() const { return E_; }
  int Y() const { return Y_; }
  int e() const { return e_; }
  const RationalSlope& slope() const { return slope_; }

  /// Parameters for the slope e - y (same E, Y replaced by E - Y).
  LadderParams dual() const;

  /// "(E,Y)".
  std::string str() const;

  friend bool operator==(const LadderParams& a, const LadderParams& b) {
    return a.E_ == b.E_ && a.Y_ == b.Y_ && a.e_ == b.e_;
  }

 private:
  LadderParams(int e, RationalSlope y, int E, int Y) : e_(e), slope_(y), E_(E), Y_(Y) {}
  int e_;
  RationalSlope slope_;
  int E_;
  int Y_;
};

/// Canonical representative of the ladder through x: the unique member
/// with column in [1, Y].
Node ladder_id(Node x, const LadderParams& P);

/// Y*row + (E-Y)*col; constant on ladders.
std::int64_t depth(Node x, const LadderParams& P);

using LadderFingerprint = std::map<Node, int>;
LadderFingerprint fingerprint(const Partition& la, const LadderParams& P);

/// No hook of length E*t with arm Y*t - 1.
bool is_regular(const Partition& la, const LadderParams& P);
/// No hook of length E*t with arm Y*t.
bool is_restricted(const Partition& la, const LadderParams& P);

/// Hooks of length t*e with arm floor(y*t), z not dividing t. Needs a
/// non-integral slope.
int bad_count(const Partition& la, const LadderParams& P);

/// One abacus move towards the regularisation; `la` must be singular.
/// The result is strictly more dominant and ladder-equivalent.
Partition regularise_step(const Partition& la, const LadderParams& P);

/// The unique regular partition in the ladder class of `la`.
Partition regularise(const Partition& la, const LadderParams& P);
/// Same, returning every intermediate partition (starting with `la`).
std::vector<Partition> regularise_path(const Partition& la, const LadderParams& P);

/// The unique restricted partition in the ladder class of `la`.
Partition restrictise(const Partition& la, const LadderParams& P);

/// Brute force: every partition of |la| with the same fingerprint, sorted
/// by GradedLess. Refuses sizes above `bound`.
std::vector<Partition> ladder_class(const Partition& la, const LadderParams& P, int bound = 14);

}  // namespace regcrys
