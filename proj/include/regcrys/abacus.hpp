#pragma once

#include <set>
#include <string>
#include <vector>

#include "regcrys/partition.hpp"

namespace regcrys {

/// A bead configuration on an abacus with `runners` runners. Positions are
/// the non-negative integers read row by row; runner i holds positions
/// congruent to i.
///
/// Convention: the n-bead display of a partition has beads at
/// lambda_r + n - r for r = 1..n (the beta-numbers). Conjugate displays use
/// the occupied set { m-1-t : t empty, t < m }. Both conventions are the
/// ones that reproduce the standard worked displays; the shorter formulas
/// "lambda_r + r - 1" and "m - b" that sometimes appear in prose are off
/// by one against them.
class Abacus {
 public:
  Abacus(int runners, std::vector<int> occupied);

  int runners() const { return runners_; }
  int beads() const { return static_cast<int>(occupied_.size()); }
  /// Occupied positions in increasing order.
  const std::vector<int>& occupied() const { return occupied_; }
  bool is_occupied(int pos) const;
  int max_position() const { return occupied_.empty() ? -1 : occupied_.back(); }

  static Abacus encode(const Partition& la, int beads, int runners);
  Partition decode() const;

  /// Display for the conjugate partition, truncated at m (m > every
  /// occupied position, m divisible by the runner count).
  Abacus conjugate_display(int m) const;

  /// Bead count on each runner.
  std::vector<int> runner_profile() const;

  /// Runner i read as a one-runner display.
  Partition runner_partition(int i) const;

  /// Keeps only the positions whose runner lies in `classes`, renumbered
  /// 0, 1, 2, ... in order. The result has classes.size() runners.
  Abacus restrict_to_classes(const std::vector<int>& classes) const;

  /// Text grid: a header with runner labels, then one row per abacus row
  /// using 'b' for beads and '.' for gaps.
  std::string render() const;

  friend bool operator==(const Abacus&, const Abacus&) = default;

 private:
  int runners_;
  std::vector<int> occupied_;
};

/// Smallest multiple of e that is at least length(la) + e.
int default_bead_count(const Partition& la, int e);

/// e-quotient, indexed by runner 0..e-1. Requires n divisible by e and
/// n >= length(la).
std::vector<Partition> e_quotient(const Partition& la, int n, int e);
Partition e_core(const Partition& la, int e);

/// Inverse of (e_core, e_quotient) at bead count n: the quotient
/// components are placed on the runners of the n-bead display of `core`.
Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient, int n, int e);

/// The partition whose first m columns are each e longer than those of la,
/// computed by bead moves on a sufficiently long display.
Partition grow_first_columns(const Partition& la, int m, int e);

}  // namespace regcrys
