// Acceptance run: every golden example and every property suite at full
// size. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "regcrys/abacus.hpp"
#include "regcrys/crystal.hpp"
#include "regcrys/ladder.hpp"
#include "regcrys/mullineux.hpp"
#include "regcrys/separation.hpp"
#include "regcrys/text_format.hpp"
#include "regcrys/verify.hpp"

using namespace regcrys;

namespace {

int failures = 0;

Partition P(const char* s) { return parse_partition(s); }

std::vector<std::string> step_names(const IsoChain& ch) {
  std::vector<std::string> out;
  for (const LadderParams& p : ch.steps) out.push_back(p.str());
  return out;
}

void report(const std::string& name, bool ok, const std::string& detail = {}) {
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

void golden(const std::string& name, const std::function<bool()>& f) {
  bool ok = false;
  std::string detail;
  try {
    ok = f();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report("golden: " + name, ok, detail);
}

void suite(const std::string& name, const VerifyOptions& opts, const std::string& label) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<SuiteReport> reports;
  try {
    reports = run_verification(name, opts);
  } catch (const std::exception& e) {
    report("suite " + label, false, std::string("exception: ") + e.what());
    return;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const SuiteReport& r : reports)
    for (const PropertyResult& p : r.properties) {
      std::string detail = "checked " + std::to_string(p.checked);
      if (p.skipped) detail += ", skipped " + std::to_string(p.skipped);
      if (!p.ok()) detail += ", failed " + std::to_string(p.failed) + ", first: " + p.counterexample;
      report("suite " + label + ": " + p.name, p.ok(), detail);
    }
  std::cout << "     " << label << " took " << static_cast<int>(secs * 10) / 10.0 << "s" << std::endl;
}

std::vector<Node> order_of(const Partition& la, const ArmPrefix& A) {
  std::vector<Node> out;
  for (const SignedNode& x : i_signature(la, A, 0)) out.push_back(x.node);
  return out;
}

}  // namespace

int main() {
  golden("(5,3)-regularisation step of (9,3,3,3,2) is (9,6,5)", [] {
    const LadderParams p(5, 3);
    return regularise_step(P("9,3^3,2"), p) == P("9,6,5") && regularise(P("9,3^3,2"), p) == P("9,6,5");
  });

  golden("(3,2)-ladder class of (5,1), its regularisation and restrictisation", [] {
    const LadderParams p(3, 2);
    return ladder_class(P("5,1"), p) == std::vector<Partition>{P("3,2,1"), P("3,3"), P("4,1,1"), P("5,1")} &&
           regularise(P("5,1"), p) == P("5,1") && restrictise(P("5,1"), p) == P("3,2,1");
  });

  golden("conjugate display of (6,4,2,1,1) on 7 beads, 5 runners, truncated at 15", [] {
    const Abacus ab = Abacus::encode(P("6,4,2,1,1"), 7, 5);
    const Abacus c = ab.conjugate_display(15);
    return ab.occupied() == std::vector<int>{0, 1, 3, 4, 6, 9, 12} &&
           c.occupied() == std::vector<int>{0, 1, 3, 4, 6, 7, 9, 12} && c.decode() == P("5,3,2,2,1,1");
  });

  golden("e=4 signature table of (5,2,1,1) at i=0 for A_1 = 0, 2, 3", [] {
    const Partition la = P("5,2,1,1");
    const ArmPrefix a0(4, {0, 1, 2}), a2(4, {2, 5, 7}), a3(4, {3, 6, 9});
    const bool r0 = order_of(la, a0) == std::vector<Node>{{1, 5}, {2, 2}, {5, 1}} &&
                    signs_of(i_signature(la, a0, 0)) == "--+" && signs_of(reduced_signature(la, a0, 0)) == "--+" &&
                    e_op(la, a0, 0) == P("5,1^3") && f_op(la, a0, 0) == P("5,2,1^3");
    const bool r2 = order_of(la, a2) == std::vector<Node>{{5, 1}, {1, 5}, {2, 2}} &&
                    signs_of(i_signature(la, a2, 0)) == "+--" && signs_of(reduced_signature(la, a2, 0)) == "-" &&
                    e_op(la, a2, 0) == P("5,1^3") && !f_op(la, a2, 0);
    const bool r3 = order_of(la, a3) == std::vector<Node>{{5, 1}, {2, 2}, {1, 5}} &&
                    signs_of(i_signature(la, a3, 0)) == "+--" && signs_of(reduced_signature(la, a3, 0)) == "-" &&
                    e_op(la, a3, 0) == P("4,2,1^2") && !f_op(la, a3, 0);
    return r0 && r2 && r3;
  });

  golden("chain (2,4,6,8) -> (1,2,4,5) and the image of (4,3,3,2,1^4)", [] {
    const IsoChain ch = iso_chain(ArmPrefix(4, {2, 4, 6, 8}), ArmPrefix(4, {1, 2, 4, 5}));
    const Partition la = P("4,3^2,2,1^4");
    return step_names(ch) == std::vector<std::string>{"(4,2)", "(16,7)", "(12,5)", "(8,3)"} &&
           apply_chain_path(la, ch) ==
               std::vector<Partition>{la, P("5,4,2,1^5"), P("5,4,2,1^5"), P("6,4,2,1^4"), P("6,4,2,1^4")};
  });

  golden("m_3(6,2,1) = (5,2,2) through (3,2,1^4), (4,1^5), (5,1^4)", [] {
    const MullineuxTrace tr = mullineux_trace(P("6,2,1"), 3);
    return tr.start == P("3,2,1^4") && tr.steps.size() == 3 && tr.steps[0].slope == RationalSlope(2) &&
           tr.steps[0].result == P("4,1^5") && tr.steps[1].slope == RationalSlope(4, 3) &&
           tr.steps[1].result == P("5,1^4") && tr.steps[2].slope == RationalSlope(1) &&
           tr.steps[2].result == P("5,2,2") && tr.result == P("5,2,2");
  });

  golden("m_2(3,1) = (3,1) and m_3(3) = (2,1)", [] {
    return mullineux(P("3,1"), 2) == P("3,1") && mullineux(P("3"), 3) == P("2,1");
  });

  golden("e=5 splitting example: m_5(lambda') = mu", [] {
    const SplitContext ctx(5, {1, 4}, 15);
    const SplitCheck chk = verify_split(P("2,2,1"), P("2,1,1"), P("1,1,1"), ctx, 10);
    return chk.pair.lambda == P("15,11,9,7,7,7,6,4,4,4,2,1") && chk.pair.mu == P("17,16,14,10,9,5,2,2,1,1") &&
           chk.verdict == SplitVerdict::holds && mullineux(conjugate(chk.pair.lambda), 5) == chk.pair.mu;
  });

  golden("e=6 example: hypothesis fails and m_6((2^5)') != (5,2,2,1)", [] {
    const SplitContext ctx(6, {0, 3, 5}, 12);
    const SplitCheck chk = verify_split(Partition{}, Partition{}, P("2,2"), ctx, 7);
    return chk.pair.lambda == P("2^5") && chk.pair.mu == P("5,2,2,1") &&
           chk.verdict == SplitVerdict::hypothesis_not_met && mullineux(conjugate(P("2^5")), 6) != P("5,2,2,1");
  });

  golden("e=4 quotient-separated example: mu = (19,10,9,8,7,4,3,3,3,2,1) = m_4(lambda')", [] {
    const Partition la = P("11,10,9,8,7,5,5,4,3,2,1^5");
    const Partition mu = paget_mu(la, 4, 20);
    return quotient_sigma(la, 4, 20) == std::vector<int>{1, 3, 0, 2} && is_quotient_separated(la, 4, 20) &&
           mu == P("19,10,9,8,7,4,3,3,3,2,1") && is_quotient_separated(mu, 4, 20) &&
           mullineux(conjugate(la), 4) == mu;
  });

  suite("mullineux", {16, std::nullopt, 0}, "mullineux |la| <= 16, e = 2..6");
  suite("mullineux", {18, 2, 0}, "mullineux |la| <= 18, e = 2");
  {
    // la -> m_e(la') on e-restricted la keeps the e-content.
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (int e = 2; e <= 6; ++e)
      for (const Partition& la : partitions_up_to(14)) {
        if (!is_e_restricted(la, e)) continue;
        ++checked;
        const Partition m = mullineux(conjugate(la), e);
        if (e_content(m, e) != e_content(la, e)) {
          if (!bad++) first = "e=" + std::to_string(e) + " " + format_partition(la);
        }
      }
    report("property: la -> m_e(la') preserves e-content, |la| <= 14, e = 2..6", bad == 0,
           "checked " + std::to_string(checked) + (bad ? ", first: " + first : ""));
  }
  suite("ladder", {10, std::nullopt, 0}, "ladder |la| <= 10");
  suite("crystal", {12, std::nullopt, 0}, "crystal |la| <= 12");
  suite("lyle", {14, std::nullopt, 0}, "lyle |la| <= 14, e = 2..5");
  suite("split", {}, "split");
  suite("paget", {}, "paget");
  suite("core", {}, "core");

  std::cout << (failures ? "FAILED " + std::to_string(failures) + " criteria" : std::string("ALL PASS")) << std::endl;
  return failures ? 1 : 0;
}
