#include "regcrys/abacus.hpp"

#include <algorithm>
#include <sstream>

namespace regcrys {

Abacus::Abacus(int runners, std::vector<int> occupied) : runners_(runners), occupied_(std::move(occupied)) {
  if (runners_ < 1) throw DomainError("an abacus needs at least one runner");
  std::sort(occupied_.begin(), occupied_.end());
  if (std::adjacent_find(occupied_.begin(), occupied_.end()) != occupied_.end())
    throw DomainError("abacus positions must be distinct");
  if (!occupied_.empty() && occupied_.front() < 0) throw DomainError("abacus positions must be non-negative");
}

bool Abacus::is_occupied(int pos) const {
  return std::binary_search(occupied_.begin(), occupied_.end(), pos);
}

Abacus Abacus::encode(const Partition& la, int beads, int runners) {
  if (beads < la.length())
    throw DomainError("bead count " + std::to_string(beads) + " is smaller than the number of parts");
  std::vector<int> pos(static_cast<std::size_t>(beads));
  for (int r = 1; r <= beads; ++r) pos[static_cast<std::size_t>(r - 1)] = la[r] + beads - r;
  return Abacus(runners, std::move(pos));
}

Partition Abacus::decode() const {
  const int n = beads();
  std::vector<int> parts(static_cast<std::size_t>(n));
  // b_1 > ... > b_n gives lambda_r = b_r + r - n.
  for (int r = 1; r <= n; ++r) parts[static_cast<std::size_t>(r - 1)] = occupied_[static_cast<std::size_t>(n - r)] + r - n;
  return Partition(std::move(parts));
}

Abacus Abacus::conjugate_display(int m) const {
  if (m <= max_position()) throw DomainError("truncation point must lie after every bead");
  if (m % runners_ != 0) throw DomainError("truncation point must be divisible by the runner count");
  std::vector<int> pos;
  for (int t = 0; t < m; ++t)
    if (!is_occupied(t)) pos.push_back(m - 1 - t);
  return Abacus(runners_, std::move(pos));
}

std::vector<int> Abacus::runner_profile() const {
  std::vector<int> counts(static_cast<std::size_t>(runners_), 0);
  for (int p : occupied_) ++counts[static_cast<std::size_t>(p % runners_)];
  return counts;
}

Partition Abacus::runner_partition(int i) const {
  if (i < 0 || i >= runners_) throw DomainError("runner index out of range");
  std::vector<int> levels;
  for (int p : occupied_)
    if (p % runners_ == i) levels.push_back(p / runners_);
  return Abacus(1, std::move(levels)).decode();
}

Abacus Abacus::restrict_to_classes(const std::vector<int>& classes) const {
  if (classes.empty()) throw DomainError("class set must be nonempty");
  std::vector<int> sorted = classes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int i : sorted)
    if (i < 0 || i >= runners_) throw DomainError("class outside 0..e-1");
  const int c = static_cast<int>(sorted.size());
  std::vector<int> pos;
  for (int p : occupied_) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p % runners_);
    if (it != sorted.end() && *it == p % runners_)
      pos.push_back((p / runners_) * c + static_cast<int>(it - sorted.begin()));
  }
  return Abacus(c, std::move(pos));
}

std::string Abacus::render() const {
  std::ostringstream out;
  for (int i = 0; i < runners_; ++i) out << (i ? " " : "") << i;
  out << '\n';
  const int rows = max_position() / runners_ + 1;
  for (int row = 0; row < rows; ++row) {
    for (int i = 0; i < runners_; ++i) {
      // Pad to the header's label width so columns line up for e > 10.
      const std::string label = std::to_string(i);
      out << (i ? " " : "") << std::string(label.size() - 1, ' ') << (is_occupied(row * runners_ + i) ? 'b' : '.');
    }
    out << '\n';
  }
  return out.str();
}

int default_bead_count(const Partition& la, int e) {
  const int need = la.length() + e;
  return ((need + e - 1) / e) * e;
}

std::vector<Partition> e_quotient(const Partition& la, int n, int e) {
  if (e < 1) throw DomainError("e must be positive");
  if (n % e != 0) throw DomainError("bead count must be divisible by e");
  const Abacus ab = Abacus::encode(la, n, e);
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) out.push_back(ab.runner_partition(i));
  return out;
}

Partition e_core(const Partition& la, int e) {
  const int n = default_bead_count(la, e);
  const std::vector<int> counts = Abacus::encode(la, n, e).runner_profile();
  std::vector<int> pos;
  for (int i = 0; i < e; ++i)
    for (int k = 0; k < counts[static_cast<std::size_t>(i)]; ++k) pos.push_back(k * e + i);
  return Abacus(e, std::move(pos)).decode();
}

Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient, int n, int e) {
  if (static_cast<int>(quotient.size()) != e) throw DomainError("quotient must have e components");
  if (n % e != 0) throw DomainError("bead count must be divisible by e");
  const std::vector<int> counts = Abacus::encode(core, n, e).runner_profile();
  std::vector<int> pos;
  for (int i = 0; i < e; ++i) {
    const int u = counts[static_cast<std::size_t>(i)];
    const Partition& q = quotient[static_cast<std::size_t>(i)];
    if (q.length() > u) throw DomainError("runner " + std::to_string(i) + " has too few beads for its quotient component");
    for (int r = 1; r <= u; ++r) pos.push_back((q[r] + u - r) * e + i);
  }
  return Abacus(e, std::move(pos)).decode();
}

Partition grow_first_columns(const Partition& la, int m, int e) {
  if (m < 0) throw DomainError("column count must be non-negative");
  // With this many beads every position below m*e is occupied, so each
  // t_i - e is a bead when its turn comes.
  const int n = la.length() + m * e;
  const Abacus ab = Abacus::encode(la, n, e);
  std::vector<bool> occ(static_cast<std::size_t>(ab.max_position() + 2 + m * e), false);
  for (int p : ab.occupied()) occ[static_cast<std::size_t>(p)] = true;
  std::vector<int> empties;
  for (int p = 0; static_cast<int>(empties.size()) < m; ++p) {
    if (static_cast<std::size_t>(p) >= occ.size()) occ.resize(occ.size() * 2, false);
    if (!occ[static_cast<std::size_t>(p)]) empties.push_back(p);
  }
  for (int t : empties) {
    if (t < e || !occ[static_cast<std::size_t>(t - e)])
      throw std::logic_error("grow_first_columns: no bead at t - e");
    occ[static_cast<std::size_t>(t - e)] = false;
    occ[static_cast<std::size_t>(t)] = true;
  }
  std::vector<int> pos;
  for (std::size_t p = 0; p < occ.size(); ++p)
    if (occ[p]) pos.push_back(static_cast<int>(p));
  return Abacus(e, std::move(pos)).decode();
}

}  // namespace regcrys
