#include "regcrys/separation.hpp"

#include <algorithm>

#include "regcrys/abacus.hpp"
#include "regcrys/ladder.hpp"
#include "regcrys/mullineux.hpp"
#include "regcrys/text_format.hpp"

namespace regcrys {

SplitContext::SplitContext(int e, std::vector<int> classes, int n) : e_(e), n_(n), member_(static_cast<std::size_t>(std::max(e, 0)), false) {
  if (e_ < 2) throw DomainError("separation needs e >= 2");
  if (n_ < 0 || n_ % e_ != 0) throw DomainError("bead count must be a non-negative multiple of e");
  for (int i : classes) member_[static_cast<std::size_t>(Residue::of(i, e_).value)] = true;
  for (int i = 0; i < e_; ++i) (member_[static_cast<std::size_t>(i)] ? classes_ : complement_).push_back(i);
  if (classes_.empty() || complement_.empty())
    throw DomainError("I must be a nonempty proper union of residue classes");
}

int SplitContext::I_position(int k) const { return (k / c()) * e_ + classes_[static_cast<std::size_t>(k % c())]; }

int SplitContext::Ibar_position(int k) const {
  return (k / c_bar()) * e_ + complement_[static_cast<std::size_t>(k % c_bar())];
}

namespace {

Abacus display(const Partition& la, const SplitContext& ctx) {
  if (ctx.n() < la.length())
    throw DomainError("bead count " + std::to_string(ctx.n()) + " is below the length of " + format_partition(la));
  return Abacus::encode(la, ctx.n(), ctx.e());
}

}  // namespace

SplitResult split(const Partition& la, const SplitContext& ctx) {
  const Abacus ab = display(la, ctx);
  const Abacus in = ab.restrict_to_classes(ctx.classes());
  const Abacus out = ab.restrict_to_classes(ctx.complement());
  return {in.decode(), out.decode(), in.beads()};
}

Partition combine(const Partition& beta, const Partition& gamma, const SplitContext& ctx, int u) {
  if (u < 0 || u > ctx.n()) throw DomainError("u must lie in [0, n]");
  if (beta.length() > u || gamma.length() > ctx.n() - u)
    throw DomainError("(" + format_partition(beta) + ", " + format_partition(gamma) + ") does not fit on " +
                      std::to_string(u) + " + " + std::to_string(ctx.n() - u) + " beads");
  std::vector<int> occ;
  for (int r = 1; r <= u; ++r) occ.push_back(ctx.I_position(beta[r] + u - r));
  for (int r = 1; r <= ctx.n() - u; ++r) occ.push_back(ctx.Ibar_position(gamma[r] + ctx.n() - u - r));
  return Abacus(ctx.e(), std::move(occ)).decode();
}

bool is_separated(const Partition& la, const SplitContext& ctx) {
  const Abacus ab = display(la, ctx);
  int first_gap = 0;
  for (int k = 0;; ++k)
    if (!ab.is_occupied(ctx.I_position(k))) {
      first_gap = ctx.I_position(k);
      break;
    }
  int last_bead = -1;
  for (int pos : ab.occupied())
    if (!ctx.in_I(pos)) last_bead = pos;
  return first_gap > last_bead;
}

Partition box_row(const Partition& alpha, const Partition& beta, int c_bar) {
  std::vector<int> parts;
  for (int r = 1; r <= std::max(alpha.length(), beta.length()); ++r) parts.push_back(c_bar * alpha[r] + beta[r]);
  return Partition(std::move(parts));
}

Partition box_col(const Partition& alpha, const Partition& beta, int c) {
  std::vector<int> parts(beta.parts().begin(), beta.parts().end());
  for (int a : alpha.parts()) parts.insert(parts.end(), static_cast<std::size_t>(c), a);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

SplitPair build_split_pair(const Partition& alpha, const Partition& beta, const Partition& gamma,
                           const SplitContext& ctx, int u) {
  if (!is_e_restricted(beta, ctx.c()))
    throw DomainError("beta " + format_partition(beta) + " is not " + std::to_string(ctx.c()) + "-restricted");
  if (!is_e_restricted(gamma, ctx.c_bar()))
    throw DomainError("gamma " + format_partition(gamma) + " is not " + std::to_string(ctx.c_bar()) + "-restricted");
  SplitPair out;
  out.lambda = combine(beta, box_row(alpha, gamma, ctx.c_bar()), ctx, u);
  out.mu = combine(box_col(conjugate(alpha), mullineux(conjugate(beta), ctx.c()), ctx.c()),
                   mullineux(conjugate(gamma), ctx.c_bar()), ctx, u);
  return out;
}

SplitCheck verify_split(const Partition& alpha, const Partition& beta, const Partition& gamma,
                        const SplitContext& ctx, int u) {
  SplitCheck out{build_split_pair(alpha, beta, gamma, ctx, u), false, false, SplitVerdict::hypothesis_not_met};
  out.lambda_separated = is_separated(out.pair.lambda, ctx);
  out.mu_separated = is_separated(out.pair.mu, ctx);
  if (out.lambda_separated && out.mu_separated)
    out.verdict = mullineux(conjugate(out.pair.lambda), ctx.e()) == out.pair.mu ? SplitVerdict::holds : SplitVerdict::falsified;
  return out;
}

std::string to_string(SplitVerdict v) {
  switch (v) {
    case SplitVerdict::holds: return "holds";
    case SplitVerdict::hypothesis_not_met: return "hypothesis not met";
    case SplitVerdict::falsified: return "FALSIFIED";
  }
  return "?";
}

namespace {

Abacus quotient_display(const Partition& la, int e, int n) {
  if (e < 2) throw DomainError("quotients need e >= 2");
  if (n < 0 || n % e != 0) throw DomainError("bead count must be a non-negative multiple of e");
  if (n < la.length())
    throw DomainError("bead count " + std::to_string(n) + " is below the length of " + format_partition(la));
  return Abacus::encode(la, n, e);
}

}  // namespace

std::vector<int> quotient_sigma(const Partition& la, int e, int n) {
  const std::vector<int> counts = quotient_display(la, e, n).runner_profile();
  std::vector<int> sigma(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) sigma[static_cast<std::size_t>(i)] = i;
  std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) {
    return counts[static_cast<std::size_t>(a)] < counts[static_cast<std::size_t>(b)];
  });
  return sigma;
}

bool is_quotient_separated(const Partition& la, int e, int n) {
  const Abacus ab = quotient_display(la, e, n);
  const std::vector<int> sigma = quotient_sigma(la, e, n);
  auto last_bead = [&](int runner) {
    int last = -1;
    for (int pos : ab.occupied())
      if (pos % e == runner) last = pos;
    return last;
  };
  auto first_gap = [&](int runner) {
    int pos = runner;
    while (ab.is_occupied(pos)) pos += e;
    return pos;
  };
  for (int k = 0; k < e; ++k)
    for (int l = k + 1; l < e; ++l)
      if (last_bead(sigma[static_cast<std::size_t>(k)]) >= first_gap(sigma[static_cast<std::size_t>(l)])) return false;
  return true;
}

Partition paget_mu(const Partition& la, int e, int n) {
  if (!is_e_restricted(la, e)) throw DomainError(format_partition(la) + " is not " + std::to_string(e) + "-restricted");
  if (!is_quotient_separated(la, e, n))
    throw DomainError(format_partition(la) + " is not " + std::to_string(e) + "-quotient separated");
  const std::vector<int> sigma = quotient_sigma(la, e, n);
  const std::vector<Partition> q = e_quotient(la, n, e);
  std::vector<Partition> shifted(static_cast<std::size_t>(e));
  for (int k = 1; k < e; ++k)
    shifted[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] =
        conjugate(q[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k - 1)])]);
  return from_core_and_quotient(e_core(la, e), shifted, n, e);
}

namespace detail {

std::optional<Partition> single_box_step(const Partition& nu, const SplitContext& ctx) {
  if (!is_separated(nu, ctx)) throw DomainError(format_partition(nu) + " is not I-separated");
  const int cb = ctx.c_bar();
  const SplitResult parts = split(nu, ctx);
  const Partition& out = parts.lambda_Ibar;
  int s = 0;
  for (int r = 1; r <= out.length(); ++r)
    if (out[r] - out[r + 1] >= cb) {
      s = r;
      break;
    }
  if (s == 0) return std::nullopt;
  std::vector<int> tau(out.parts().begin(), out.parts().end());
  for (int r = 0; r < s; ++r) tau[static_cast<std::size_t>(r)] -= cb;
  const Partition xi_I = box_col(Partition{s}, parts.lambda_I, ctx.c());
  // Extra beads on every runner leave nu and its I/Ibar parts unchanged.
  SplitContext wide = ctx;
  int u = parts.u;
  while (u < xi_I.length()) {
    wide = SplitContext(ctx.e(), ctx.classes(), wide.n() + ctx.e());
    u += ctx.c();
  }
  return combine(xi_I, Partition(std::move(tau)), wide, u);
}

}  // namespace detail

}  // namespace regcrys
