#include "regcrys/partition.hpp"

#include <algorithm>
#include <numeric>

namespace regcrys {

Residue Residue::of(long long x, int e) {
  if (e < 1) throw DomainError("residue modulus must be positive");
  long long v = x % e;
  if (v < 0) v += e;
  return Residue{static_cast<int>(v), e};
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] < 0) throw DomainError("partition parts must be non-negative");
    if (r + 1 < parts_.size() && parts_[r] < parts_[r + 1])
      throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[r];
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition conjugate(const Partition& la) {
  std::vector<int> out(static_cast<std::size_t>(la[1]), 0);
  for (int part : la.parts())
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

bool dominates(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size())
    throw DomainError("dominance is only defined for partitions of equal size");
  int sum_la = 0;
  int sum_mu = 0;
  const int len = std::max(la.length(), mu.length());
  for (int r = 1; r <= len; ++r) {
    sum_la += la[r];
    sum_mu += mu[r];
    if (sum_la < sum_mu) return false;
  }
  return true;
}

namespace {

Hook make_hook(const Partition& la, const Partition& conj, Node x) {
  Hook h;
  h.corner = x;
  h.arm = la[x.row] - x.col;
  h.leg = conj[x.col] - x.row;
  h.length = h.arm + h.leg + 1;
  h.hand = Node{x.row, x.col + h.arm};
  h.foot = Node{x.row + h.leg, x.col};
  return h;
}

}  // namespace

Hook hook_at(const Partition& la, Node corner) {
  if (!la.contains(corner)) throw DomainError("hook corner is not a node of the partition");
  return make_hook(la, conjugate(la), corner);
}

std::vector<Hook> hooks(const Partition& la) {
  const Partition conj = conjugate(la);
  std::vector<Hook> out;
  out.reserve(static_cast<std::size_t>(la.size()));
  for (int r = 1; r <= la.length(); ++r)
    for (int c = 1; c <= la[r]; ++c) out.push_back(make_hook(la, conj, Node{r, c}));
  return out;
}

Partition remove_rim_hook(const Partition& la, Node corner) {
  const Hook h = hook_at(la, corner);
  // Beta-numbers with n = length(la) beads: the hook slides bead r down by its length.
  const int n = la.length();
  std::vector<int> beta(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) beta[static_cast<std::size_t>(r - 1)] = la[r] + n - r;
  beta[static_cast<std::size_t>(corner.row - 1)] -= h.length;
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) parts[static_cast<std::size_t>(r - 1)] = beta[static_cast<std::size_t>(r - 1)] + r - n;
  return Partition(std::move(parts));
}

std::vector<Node> addable_nodes(const Partition& la) {
  std::vector<Node> out;
  for (int r = 1; r <= la.length() + 1; ++r)
    if (r == 1 || la[r - 1] > la[r]) out.push_back(Node{r, la[r] + 1});
  return out;
}

std::vector<Node> removable_nodes(const Partition& la) {
  std::vector<Node> out;
  for (int r = 1; r <= la.length(); ++r)
    if (la[r] > la[r + 1]) out.push_back(Node{r, la[r]});
  return out;
}

Partition add_node(const Partition& la, Node x) {
  if (x.row < 1 || x.col != la[x.row] + 1 || (x.row > 1 && la[x.row - 1] < x.col))
    throw DomainError("node is not addable");
  std::vector<int> parts(la.parts().begin(), la.parts().end());
  if (x.row > la.length()) parts.push_back(1);
  else ++parts[static_cast<std::size_t>(x.row - 1)];
  return Partition(std::move(parts));
}

Partition remove_node(const Partition& la, Node x) {
  if (x.row < 1 || x.row > la.length() || x.col != la[x.row] || la[x.row + 1] >= x.col)
    throw DomainError("node is not removable");
  std::vector<int> parts(la.parts().begin(), la.parts().end());
  --parts[static_cast<std::size_t>(x.row - 1)];
  return Partition(std::move(parts));
}

Residue residue(Node x, int e) {
  if (e < 2) throw DomainError("residues need e >= 2");
  return Residue::of(static_cast<long long>(x.col) - x.row, e);
}

std::vector<int> e_content(const Partition& la, int e) {
  std::vector<int> counts(static_cast<std::size_t>(e), 0);
  for (int r = 1; r <= la.length(); ++r)
    for (int c = 1; c <= la[r]; ++c) ++counts[static_cast<std::size_t>(residue(Node{r, c}, e).value)];
  return counts;
}

bool is_e_regular(const Partition& la, int e) {
  if (e < 1) throw DomainError("e must be positive");
  int run = 0;
  for (int r = 1; r <= la.length(); ++r) {
    run = (r > 1 && la[r] == la[r - 1]) ? run + 1 : 1;
    if (run >= e) return false;
  }
  return true;
}

bool is_e_restricted(const Partition& la, int e) {
  if (e < 1) throw DomainError("e must be positive");
  for (int r = 1; r <= la.length(); ++r)
    if (la[r] - la[r + 1] >= e) return false;
  return true;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Standard successor rule for reverse-lexicographic generation.
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    int rem = 0;
    while (!cur.empty() && cur.back() == 1) {
      ++rem;
      cur.pop_back();
    }
    if (cur.empty()) break;
    const int k = --cur.back();
    ++rem;
    while (rem > k) {
      cur.push_back(k);
      rem -= k;
    }
    if (rem > 0) cur.push_back(rem);
  }
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k) {
    auto layer = enumerate_partitions(k);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace regcrys
