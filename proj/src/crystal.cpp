#include "regcrys/crystal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "regcrys/text_format.hpp"

namespace regcrys {

int arm_plus(const RationalSlope& y, int t) { return static_cast<int>(y.floor_times(t)); }
int arm_minus(const RationalSlope& y, int t) { return static_cast<int>(y.ceil_times_minus_one(t)); }

ArmPrefix::ArmPrefix(int e, std::vector<int> values) : e_(e), values_(std::move(values)) {
  if (e_ < 2) throw DomainError("arm sequences need e >= 2");
  const int n = length();
  for (int t = 1; t <= n; ++t)
    if (at(t) < t - 1 || at(t) > (e_ - 1) * t)
      throw DomainError("arm prefix " + str() + ": A_" + std::to_string(t) + " outside [t-1, (e-1)t]");
  for (int t = 1; t <= n; ++t)
    for (int u = 1; t + u <= n; ++u) {
      const int s = at(t) + at(u);
      if (at(t + u) != s && at(t + u) != s + 1)
        throw DomainError("arm prefix " + str() + ": A_" + std::to_string(t + u) + " is not A_" +
                          std::to_string(t) + " + A_" + std::to_string(u) + " (+1)");
    }
}

ArmPrefix ArmPrefix::plus(int e, const RationalSlope& y, int n) {
  std::vector<int> v;
  for (int t = 1; t <= n; ++t) v.push_back(arm_plus(y, t));
  return ArmPrefix(e, std::move(v));
}

ArmPrefix ArmPrefix::minus(int e, const RationalSlope& y, int n) {
  std::vector<int> v;
  for (int t = 1; t <= n; ++t) v.push_back(arm_minus(y, t));
  return ArmPrefix(e, std::move(v));
}

int ArmPrefix::at(int t) const {
  if (t == 0) return 0;
  if (t < 0 || t > length())
    throw DomainError("arm prefix of length " + std::to_string(length()) + " has no entry " + std::to_string(t));
  return values_[static_cast<std::size_t>(t - 1)];
}

std::string ArmPrefix::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < values_.size(); ++k) out << (k ? "," : "") << values_[k];
  out << ')';
  return out.str();
}

std::optional<std::strong_ordering> compare_prefixes(const ArmPrefix& a, const ArmPrefix& b) {
  if (a.e() != b.e() || a.length() != b.length()) return std::nullopt;
  bool le = true;
  bool ge = true;
  for (int t = 1; t <= a.length(); ++t) {
    le = le && a.at(t) <= b.at(t);
    ge = ge && a.at(t) >= b.at(t);
  }
  if (le && ge) return std::strong_ordering::equal;
  if (le) return std::strong_ordering::less;
  if (ge) return std::strong_ordering::greater;
  return std::nullopt;
}

std::strong_ordering node_compare(const ArmPrefix& A, Node a, Node b) {
  const int e = A.e();
  if (Residue::of(a.col - a.row, e) != Residue::of(b.col - b.row, e))
    throw DomainError("nodes of different residue are not comparable");
  if (a == b) return std::strong_ordering::equal;
  const int t = ((b.row - a.row) + (a.col - b.col)) / e;
  if (std::abs(t) > A.length())
    throw DomainError("node comparison needs A_" + std::to_string(std::abs(t)) + " beyond the prefix");
  if (t >= 0) return (a.col - b.col <= A.at(t)) ? std::strong_ordering::less : std::strong_ordering::greater;
  return (b.col - a.col <= A.at(-t)) ? std::strong_ordering::greater : std::strong_ordering::less;
}

namespace {

void require_bound(const Partition& la, const ArmPrefix& A, int extra) {
  if (la.size() + extra > A.size_bound())
    throw DomainError("partition size exceeds the bound " + std::to_string(A.size_bound()) + " of prefix " + A.str());
}

// Indices into s of the entries that survive "+-" cancellation.
std::vector<std::size_t> surviving(const std::vector<SignedNode>& s) {
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k].sign == '-' && !kept.empty() && s[kept.back()].sign == '+') kept.pop_back();
    else kept.push_back(k);
  }
  return kept;
}

}  // namespace

std::vector<SignedNode> i_signature(const Partition& la, const ArmPrefix& A, int i) {
  require_bound(la, A, 0);
  const int e = A.e();
  const int res = Residue::of(i, e).value;
  std::vector<SignedNode> out;
  for (Node x : addable_nodes(la))
    if (residue(x, e).value == res) out.push_back({x, '+'});
  for (Node x : removable_nodes(la))
    if (residue(x, e).value == res) out.push_back({x, '-'});
  std::sort(out.begin(), out.end(), [&](const SignedNode& p, const SignedNode& q) {
    return node_compare(A, p.node, q.node) == std::strong_ordering::greater;
  });
  return out;
}

std::vector<SignedNode> reduced_signature(const Partition& la, const ArmPrefix& A, int i) {
  const std::vector<SignedNode> s = i_signature(la, A, i);
  std::vector<SignedNode> out;
  for (std::size_t k : surviving(s)) out.push_back(s[k]);
  return out;
}

std::string signs_of(const std::vector<SignedNode>& s) {
  std::string out;
  for (const SignedNode& x : s) out.push_back(x.sign);
  return out;
}

std::string reduce(std::string_view signs) {
  std::string out;
  for (char c : signs) {
    if (c != '+' && c != '-') throw DomainError("sign strings contain only '+' and '-'");
    if (c == '-' && !out.empty() && out.back() == '+') out.pop_back();
    else out.push_back(c);
  }
  return out;
}

bool is_A_regular(const Partition& la, const ArmPrefix& A) {
  require_bound(la, A, 0);
  const int e = A.e();
  for (const Hook& h : hooks(la))
    if (h.length % e == 0 && h.arm == A.at(h.length / e)) return false;
  return true;
}

std::optional<Partition> e_op(const Partition& la, const ArmPrefix& A, int i) {
  if (!is_A_regular(la, A)) throw DomainError("partition is not " + A.str() + "-regular");
  const auto red = reduced_signature(la, A, i);
  for (auto it = red.rbegin(); it != red.rend(); ++it)
    if (it->sign == '-') return remove_node(la, it->node);
  return std::nullopt;
}

std::optional<Partition> f_op(const Partition& la, const ArmPrefix& A, int i) {
  require_bound(la, A, 1);
  if (!is_A_regular(la, A)) throw DomainError("partition is not " + A.str() + "-regular");
  for (const SignedNode& x : reduced_signature(la, A, i))
    if (x.sign == '+') return add_node(la, x.node);
  return std::nullopt;
}

std::size_t CrystalGraph::index_of(const Partition& la) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), la, GradedLess{});
  if (it == vertices.end() || *it != la) throw DomainError(format_partition(la) + " is not a vertex");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> CrystalGraph::layer_counts() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_size + 1), 0);
  for (const Partition& v : vertices) ++out[static_cast<std::size_t>(v.size())];
  return out;
}

std::string CrystalGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  // e=" << arm.e() << " arm=" << arm.str() << " max_size=" << max_size << "\n";
  for (std::size_t k = 0; k < vertices.size(); ++k)
    out << "  n" << k << " [label=\"" << format_partition(vertices[k]) << "\"];\n";
  for (const CrystalEdge& edge : edges)
    out << "  n" << edge.from << " -> n" << edge.to << " [label=\"" << edge.residue << "\"];\n";
  out << "}\n";
  return out.str();
}

CrystalGraph build_graph(const ArmPrefix& A, std::optional<int> max_size) {
  const int bound = max_size.value_or(A.size_bound());
  if (bound < 0 || bound > A.size_bound())
    throw DomainError("graph size bound must lie in [0, " + std::to_string(A.size_bound()) + "]");
  CrystalGraph g{A, bound, {}, {}};
  for (Partition& la : partitions_up_to(bound))
    if (is_A_regular(la, A)) g.vertices.push_back(std::move(la));
  std::sort(g.vertices.begin(), g.vertices.end(), GradedLess{});
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    const Partition& la = g.vertices[k];
    if (la.size() >= bound) continue;
    for (int i = 0; i < A.e(); ++i)
      if (auto mu = f_op(la, A, i)) g.edges.push_back({k, i, g.index_of(*mu)});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

// Forward chain from a larger prefix down to a smaller one.
void descend(const ArmPrefix& from, const ArmPrefix& to, IsoChain& chain) {
  ArmPrefix cur = from;
  chain.stages.push_back(cur);
  while (cur != to) {
    // y = max A_t / t, compared by cross-multiplication (A_1 may be 0).
    int best_num = cur.at(1);
    int best_den = 1;
    for (int t = 2; t <= cur.length(); ++t)
      if (cur.at(t) * best_den > best_num * t) {
        best_num = cur.at(t);
        best_den = t;
      }
    const RationalSlope y(best_num, best_den);
    chain.steps.push_back(LadderParams::of(cur.e(), y));
    cur = ArmPrefix::minus(cur.e(), y, cur.length());
    const auto ord = compare_prefixes(cur, to);
    if (!ord || *ord == std::strong_ordering::less)
      throw std::logic_error("iso_chain overshot the target prefix " + to.str());
    chain.stages.push_back(cur);
  }
}

}  // namespace

IsoChain iso_chain(const ArmPrefix& source, const ArmPrefix& target) {
  const auto ord = compare_prefixes(source, target);
  if (!ord) throw DomainError("prefixes " + source.str() + " and " + target.str() + " are not comparable");
  IsoChain chain{source, target, false, {}, {}};
  if (*ord == std::strong_ordering::less) {
    chain.inverse = true;
    descend(target, source, chain);
  } else {
    descend(source, target, chain);
  }
  return chain;
}

std::vector<Partition> apply_chain_path(const Partition& la, const IsoChain& chain) {
  require_bound(la, chain.source, 0);
  auto check = [](const Partition& mu, const ArmPrefix& A) {
    if (!is_A_regular(mu, A))
      throw DomainError(format_partition(mu) + " is not " + A.str() + "-regular");
  };
  std::vector<Partition> path{la};
  const std::size_t k_steps = chain.steps.size();
  if (!chain.inverse) {
    for (std::size_t k = 0; k < k_steps; ++k) {
      check(path.back(), chain.stages[k]);
      path.push_back(regularise(path.back(), chain.steps[k]));
    }
  } else {
    for (std::size_t k = k_steps; k-- > 0;) {
      check(path.back(), chain.stages[k + 1]);
      path.push_back(restrictise(path.back(), chain.steps[k]));
    }
  }
  check(path.back(), chain.target);
  return path;
}

Partition apply_chain(const Partition& la, const IsoChain& chain) { return apply_chain_path(la, chain).back(); }

}  // namespace regcrys
