#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regcrys/ladder.hpp"
#include "regcrys/partition.hpp"
#include "regcrys/rational.hpp"

namespace regcrys {

int arm_plus(const RationalSlope& y, int t);   // floor(y t)
int arm_minus(const RationalSlope& y, int t);  // ceil(y t - 1)

/// The first n terms A_1..A_n of an arm sequence for a fixed e. Both arm
/// sequence axioms are checked on construction.
class ArmPrefix {
 public:
  ArmPrefix(int e, std::vector<int> values);
  static ArmPrefix plus(int e, const RationalSlope& y, int n);
  static ArmPrefix minus(int e, const RationalSlope& y, int n);

  int e() const { return e_; }
  int length() const { return static_cast<int>(values_.size()); }
  /// A_t for 0 <= t <= length(); A_0 = 0.
  int at(int t) const;
  const std::vector<int>& values() const { return values_; }
  /// Largest partition size whose crystal structure this prefix fixes.
  int size_bound() const { return e_ * length(); }

  std::string str() const;

  friend bool operator==(const ArmPrefix&, const ArmPrefix&) = default;

 private:
  int e_;
  std::vector<int> values_;
};

/// Entrywise comparison; nullopt when the prefixes are incomparable or
/// have different e or length.
std::optional<std::strong_ordering> compare_prefixes(const ArmPrefix& a, const ArmPrefix& b);

/// Total order on nodes of equal residue: `greater` means a is above b
/// in the signature order. Throws on residue mismatch or when the
/// comparison needs an entry past the prefix.
std::strong_ordering node_compare(const ArmPrefix& A, Node a, Node b);

struct SignedNode {
  Node node;
  char sign;  // '+' addable, '-' removable
};

/// Addable and removable i-nodes, from the greatest to the least.
std::vector<SignedNode> i_signature(const Partition& la, const ArmPrefix& A, int i);
/// The surviving entries after cancelling adjacent "+-" pairs.
std::vector<SignedNode> reduced_signature(const Partition& la, const ArmPrefix& A, int i);
std::string signs_of(const std::vector<SignedNode>& s);
std::string reduce(std::string_view signs);

bool is_A_regular(const Partition& la, const ArmPrefix& A);

std::optional<Partition> e_op(const Partition& la, const ArmPrefix& A, int i);
std::optional<Partition> f_op(const Partition& la, const ArmPrefix& A, int i);

struct CrystalEdge {
  std::size_t from;
  int residue;
  std::size_t to;
  friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
  ArmPrefix arm;
  int max_size;
  std::vector<Partition> vertices;  // GradedLess order
  std::vector<CrystalEdge> edges;   // sorted

  std::size_t index_of(const Partition& la) const;  // throws if absent
  std::vector<std::size_t> layer_counts() const;
  std::string to_dot() const;
};

/// A-regular partitions of size <= max_size (default: the prefix bound)
/// with every f-edge between them.
CrystalGraph build_graph(const ArmPrefix& A, std::optional<int> max_size = std::nullopt);

/// Regularisation steps turning the crystal of `source` into that of
/// `target`. When source < target the steps are computed from target to
/// source and `inverse` is set; applying such a chain runs restrictisation
/// backwards.
struct IsoChain {
  ArmPrefix source;
  ArmPrefix target;
  bool inverse = false;
  // In the forward (larger to smaller) direction: stages[k] --steps[k]--> stages[k+1].
  std::vector<LadderParams> steps;
  std::vector<ArmPrefix> stages;
};

IsoChain iso_chain(const ArmPrefix& source, const ArmPrefix& target);

/// Every intermediate partition, starting with la and ending with its
/// image in the target crystal.
std::vector<Partition> apply_chain_path(const Partition& la, const IsoChain& chain);
Partition apply_chain(const Partition& la, const IsoChain& chain);

}  // namespace regcrys
