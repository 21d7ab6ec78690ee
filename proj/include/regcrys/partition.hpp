#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace regcrys {

// Raised when an argument violates a mathematical precondition
// (non-regular input, size mismatch, too few beads, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A box of the plane. Young-diagram nodes have row, col >= 1; ladder
// computations also use arbitrary integer coordinates.
struct Node {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Node&, const Node&) = default;
};

// Residue class col - row + eZ, stored by its representative in [0, e).
struct Residue {
  int value = 0;
  int modulus = 2;

  static Residue of(long long x, int e);
  Residue negated() const { return of(-static_cast<long long>(value), modulus); }

  friend bool operator==(const Residue&, const Residue&) = default;
};

struct Hook {
  Node corner;
  int length = 0;
  int arm = 0;
  int leg = 0;
  Node hand;
  Node foot;
};

/// An integer partition, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Accepts a weakly decreasing sequence of non-negative integers;
  /// zeros are dropped. Throws DomainError otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::span<const int> parts() const { return parts_; }

  /// r-th part, 1-based; zero beyond the length.
  int operator[](int r) const {
    return (r >= 1 && r <= length()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
  }

  bool contains(Node x) const {
    return x.row >= 1 && x.col >= 1 && x.col <= (*this)[x.row];
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  // Lexicographic on parts; a total order used for containers.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Orders by size first, then lexicographically. Used wherever output has
// to be deterministic (graph vertices, ladder classes).
struct GradedLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Partition conjugate(const Partition& la);

/// Dominance order. Throws DomainError when the sizes differ.
bool dominates(const Partition& la, const Partition& mu);

Hook hook_at(const Partition& la, Node corner);
/// All hooks, row by row.
std::vector<Hook> hooks(const Partition& la);

/// Removes the rim hook belonging to the hook at `corner`.
Partition remove_rim_hook(const Partition& la, Node corner);

std::vector<Node> addable_nodes(const Partition& la);
std::vector<Node> removable_nodes(const Partition& la);
Partition add_node(const Partition& la, Node x);
Partition remove_node(const Partition& la, Node x);

Residue residue(Node x, int e);
/// Number of nodes of each residue 0..e-1.
std::vector<int> e_content(const Partition& la, int e);

/// No e equal positive parts. Every partition is 1-regular only if empty.
bool is_e_regular(const Partition& la, int e);
/// Consecutive part differences (including the last part) below e.
bool is_e_restricted(const Partition& la, int e);

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int n);
/// Partitions of 0..max_size, graded and lexicographically decreasing
/// within each size.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace regcrys
