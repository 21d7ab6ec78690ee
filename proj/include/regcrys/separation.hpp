#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regcrys/partition.hpp"

namespace regcrys {

/// A union I of residue classes mod e together with the bead count n of
/// the e-runner displays it is read on.
class SplitContext {
 public:
  SplitContext(int e, std::vector<int> classes, int n);

  int e() const { return e_; }
  int n() const { return n_; }
  const std::vector<int>& classes() const { return classes_; }
  const std::vector<int>& complement() const { return complement_; }
  int c() const { return static_cast<int>(classes_.size()); }
  int c_bar() const { return e_ - c(); }
  bool in_I(int pos) const { return member_[static_cast<std::size_t>(pos % e_)]; }

  /// Position of the k-th (0-based) abacus slot in I, resp. in the complement.
  int I_position(int k) const;
  int Ibar_position(int k) const;

 private:
  int e_;
  int n_;
  std::vector<int> classes_;
  std::vector<int> complement_;
  std::vector<bool> member_;
};

struct SplitResult {
  Partition lambda_I;
  Partition lambda_Ibar;
  int u;  // beads on positions in I
};

SplitResult split(const Partition& la, const SplitContext& ctx);
/// The partition with u beads on I reading as beta and n-u beads on the
/// complement reading as gamma.
Partition combine(const Partition& beta, const Partition& gamma, const SplitContext& ctx, int u);

/// The first empty position in I comes after the last occupied position
/// outside I (vacuously true when nothing outside I is occupied).
bool is_separated(const Partition& la, const SplitContext& ctx);

/// (c_bar*alpha_1 + beta_1, c_bar*alpha_2 + beta_2, ...).
Partition box_row(const Partition& alpha, const Partition& beta, int c_bar);
/// Parts of beta together with c copies of each part of alpha.
Partition box_col(const Partition& alpha, const Partition& beta, int c);

struct SplitPair {
  Partition lambda;
  Partition mu;
};

/// lambda_I = beta, lambda_Ibar = box_row(alpha, gamma);
/// mu_I = box_col(alpha', m_c(beta')), mu_Ibar = m_cbar(gamma').
/// beta must be c-restricted and gamma c_bar-restricted.
SplitPair build_split_pair(const Partition& alpha, const Partition& beta, const Partition& gamma,
                           const SplitContext& ctx, int u);

enum class SplitVerdict { holds, hypothesis_not_met, falsified };

struct SplitCheck {
  SplitPair pair;
  bool lambda_separated;
  bool mu_separated;
  SplitVerdict verdict;
};

/// When both partitions are I-separated, compares mullineux(lambda', e)
/// with mu.
SplitCheck verify_split(const Partition& alpha, const Partition& beta, const Partition& gamma,
                        const SplitContext& ctx, int u);

std::string to_string(SplitVerdict v);

/// Runners ordered by (bead count, runner index); entry k is the runner
/// in position k+1.
std::vector<int> quotient_sigma(const Partition& la, int e, int n);
bool is_quotient_separated(const Partition& la, int e, int n);

/// The partition with the e-core of la whose quotient is shifted one step
/// along sigma and conjugated. la must be e-restricted and e-quotient
/// separated.
Partition paget_mu(const Partition& la, int e, int n);

namespace detail {

/// One (e, c_bar)-equivalence move on an I-separated partition whose
/// complement part is not c_bar-restricted; nullopt when it is.
std::optional<Partition> single_box_step(const Partition& nu, const SplitContext& ctx);

}  // namespace detail

}  // namespace regcrys
