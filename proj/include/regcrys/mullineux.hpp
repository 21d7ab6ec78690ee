#pragma once

#include <optional>
#include <vector>

#include "regcrys/partition.hpp"
#include "regcrys/rational.hpp"

namespace regcrys {

/// Slopes (a+1)/r of the hooks of mu with length r*e and arm a, in
/// decreasing order without repeats.
std::vector<RationalSlope> slopes(const Partition& mu, int e);

/// Largest y in [1, x] for which mu fails to be A^{y-}-regular.
std::optional<RationalSlope> largest_singular_slope(const Partition& mu, int e, const RationalSlope& x);

struct MullineuxStep {
  RationalSlope slope;
  Partition result;  // after the (e, slope)-regularisation
};

struct MullineuxTrace {
  Partition start;  // the conjugate of the input
  std::vector<MullineuxStep> steps;
  Partition result;
};

/// The Mullineux image of an e-regular partition, computed by
/// regularising the conjugate along decreasing slopes. e = 1 is accepted
/// for the empty partition only.
Partition mullineux(const Partition& la, int e);
MullineuxTrace mullineux_trace(const Partition& la, int e);

enum class ResiduePolicy { smallest, largest };

/// Independent route through the e-regular crystal: strip la to the empty
/// partition along good nodes, then rebuild with negated residues.
Partition mullineux_oracle(const Partition& la, int e, ResiduePolicy policy = ResiduePolicy::smallest);

/// (e,1)-regularisation.
Partition james_regularise(const Partition& la, int e);

struct ClassifiedHook {
  Hook hook;
  bool steep;    // leg >= (e-1) arm
  bool shallow;  // arm >= (e-1) leg
};

/// Every hook whose length is divisible by e.
std::vector<ClassifiedHook> classify_hooks(const Partition& la, int e);

struct LyleReport {
  Partition lhs;  // mullineux of the James regularisation of la
  Partition rhs;  // James regularisation of la'
  bool dominates;
  bool equal;
  bool all_steep_or_shallow;
  bool consistent() const { return dominates && (equal == all_steep_or_shallow); }
};

LyleReport lyle_check(const Partition& la, int e);

}  // namespace regcrys
