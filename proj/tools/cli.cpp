#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "regcrys/abacus.hpp"
#include "regcrys/crystal.hpp"
#include "regcrys/ladder.hpp"
#include "regcrys/mullineux.hpp"
#include "regcrys/separation.hpp"
#include "regcrys/text_format.hpp"
#include "regcrys/verify.hpp"

namespace regcrys::cli {

namespace {

using json = nlohmann::ordered_json;

std::string P(const Partition& la) { return format_partition(la); }

json parts_json(const std::vector<Partition>& v) {
  json out = json::array();
  for (const Partition& la : v) out.push_back(P(la));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

// "P/Q", "P/Q+" or "P/Q-"; the sign defaults to '+'.
ArmPrefix slope_prefix(int e, std::string text, int length) {
  char sign = '+';
  if (!text.empty() && (text.back() == '+' || text.back() == '-')) {
    sign = text.back();
    text.pop_back();
  }
  const RationalSlope y = RationalSlope::parse(text);
  return sign == '+' ? ArmPrefix::plus(e, y, length) : ArmPrefix::minus(e, y, length);
}

struct Flags {
  int e = 0;
  std::string y;
  std::string arm;
  std::string slope;
  std::string from;
  std::string to;
  std::string I;
  std::optional<int> beads;
  std::optional<int> max_size;
  std::optional<int> max;
  unsigned threads = 0;
  std::string dot;
  bool json = false;
  bool trace = false;
  std::string partition;
  bool has_partition = false;
  std::string suite;
};

int beads_for(const Flags& f, const Partition& la) {
  if (!f.beads) return default_bead_count(la, f.e);
  if (*f.beads < la.length() || *f.beads % f.e != 0)
    throw DomainError("--beads must be a multiple of e and at least the length of " + P(la));
  return *f.beads;
}

void cmd_conj(const Flags& f, std::ostream& out) {
  const Partition la = parse_partition(f.partition);
  if (f.json) {
    out << json{{"partition", P(la)}, {"conjugate", P(conjugate(la))}}.dump(2) << "\n";
    return;
  }
  out << P(conjugate(la)) << "\n";
}

void cmd_abacus(const Flags& f, std::ostream& out) {
  const Partition la = parse_partition(f.partition);
  const Abacus ab = Abacus::encode(la, beads_for(f, la), f.e);
  if (f.json) {
    out << json{{"e", f.e}, {"n", ab.beads()}, {"occupied", ab.occupied()}}.dump(2) << "\n";
    return;
  }
  out << ab.render();
}

void cmd_reg(const Flags& f, std::ostream& out, bool restrict_) {
  const Partition la = parse_partition(f.partition);
  const LadderParams p = LadderParams::of(f.e, RationalSlope::parse(f.y));
  std::vector<Partition> path;
  if (!restrict_) {
    path = regularise_path(la, p);
  } else {
    // Restrictisation is regularisation of the conjugate at slope e - y.
    for (const Partition& mu : regularise_path(conjugate(la), p.dual())) path.push_back(conjugate(mu));
  }
  if (f.json) {
    out << json{{"e", f.e}, {"y", p.slope().str()}, {"params", p.str()}, {"input", P(la)}, {"path", parts_json(path)},
                {"result", P(path.back())}}
               .dump(2)
        << "\n";
    return;
  }
  if (f.trace)
    for (std::size_t k = 0; k + 1 < path.size(); ++k) out << P(path[k]) << "\n";
  out << P(path.back()) << "\n";
}

void cmd_ladder_class(const Flags& f, std::ostream& out) {
  const Partition la = parse_partition(f.partition);
  const LadderParams p = LadderParams::of(f.e, RationalSlope::parse(f.y));
  const auto cls = ladder_class(la, p);
  if (f.json) {
    json members = json::array();
    for (const Partition& mu : cls)
      members.push_back({{"partition", P(mu)}, {"regular", is_regular(mu, p)}, {"restricted", is_restricted(mu, p)}});
    out << json{{"e", f.e}, {"y", p.slope().str()}, {"params", p.str()}, {"class", members}}.dump(2) << "\n";
    return;
  }
  for (const Partition& mu : cls) {
    out << P(mu);
    if (is_regular(mu, p)) out << " regular";
    if (is_restricted(mu, p)) out << " restricted";
    out << "\n";
  }
}

void cmd_crystal(const Flags& f, std::ostream& out) {
  std::optional<ArmPrefix> A;
  if (!f.arm.empty()) {
    A.emplace(f.e, parse_int_list(f.arm));
  } else {
    if (!f.max_size) throw ParseError("--slope needs --max-size");
    A = slope_prefix(f.e, f.slope, std::max(1, (*f.max_size + f.e - 1) / f.e));
  }
  const CrystalGraph g = build_graph(*A, f.max_size);
  if (f.json) {
    json edges = json::array();
    for (const CrystalEdge& x : g.edges) edges.push_back({{"from", x.from}, {"to", x.to}, {"residue", x.residue}});
    out << json{{"e", f.e}, {"arm", A->values()}, {"max_size", g.max_size}, {"vertices", parts_json(g.vertices)},
                {"edges", edges}}
               .dump(2)
        << "\n";
  } else if (f.dot.empty()) {
    out << g.to_dot();
  } else {
    std::ofstream file(f.dot);
    if (!file) throw DomainError("cannot write " + f.dot);
    file << g.to_dot();
    std::vector<int> layers;
    for (std::size_t c : g.layer_counts()) layers.push_back(static_cast<int>(c));
    out << "arm " << A->str() << " vertices " << g.vertices.size() << " edges " << g.edges.size() << " layers "
        << join(layers) << "\n";
  }
}

void cmd_chain(const Flags& f, std::ostream& out) {
  const ArmPrefix from(f.e, parse_int_list(f.from));
  const ArmPrefix to(f.e, parse_int_list(f.to));
  const IsoChain ch = iso_chain(from, to);
  // Steps in the order they are applied.
  std::vector<std::pair<std::string, LadderParams>> ops;
  std::vector<std::string> stages;
  const std::size_t k_steps = ch.steps.size();
  for (std::size_t k = 0; k < k_steps; ++k) {
    const std::size_t j = ch.inverse ? k_steps - 1 - k : k;
    ops.emplace_back(ch.inverse ? "restrictise" : "regularise", ch.steps[j]);
    const ArmPrefix& a = ch.stages[ch.inverse ? j + 1 : j];
    const ArmPrefix& b = ch.stages[ch.inverse ? j : j + 1];
    stages.push_back(a.str() + " -> " + b.str());
  }
  std::vector<Partition> path;
  if (f.has_partition) path = apply_chain_path(parse_partition(f.partition), ch);
  if (f.json) {
    json steps = json::array();
    for (const auto& [op, p] : ops) steps.push_back({{"op", op}, {"params", p.str()}, {"E", p.E()}, {"Y", p.Y()}});
    json doc{{"e", f.e}, {"from", from.values()}, {"to", to.values()}, {"steps", steps}};
    if (!path.empty()) doc["path"] = parts_json(path);
    out << doc.dump(2) << "\n";
    return;
  }
  if (!path.empty()) out << P(path[0]) << "\n";
  for (std::size_t k = 0; k < ops.size(); ++k) {
    out << ops[k].first << " " << ops[k].second.str();
    if (f.trace) out << " [" << stages[k] << "]";
    if (!path.empty()) out << ": " << P(path[k + 1]);
    out << "\n";
  }
}

void cmd_mull(const Flags& f, std::ostream& out) {
  const Partition la = parse_partition(f.partition);
  const MullineuxTrace tr = mullineux_trace(la, f.e);
  if (f.json) {
    json steps = json::array();
    for (const MullineuxStep& s : tr.steps) steps.push_back({{"y", s.slope.str()}, {"mu", P(s.result)}});
    out << json{{"e", f.e}, {"input", P(la)}, {"start", P(tr.start)}, {"steps", steps}, {"result", P(tr.result)}}.dump(2)
        << "\n";
    return;
  }
  if (f.trace) {
    out << "mu = " << P(tr.start) << "  x = " << (f.e - 1) << "\n";
    for (const MullineuxStep& s : tr.steps) out << "y = " << s.slope.str() << ": " << P(s.result) << "\n";
  }
  out << P(tr.result) << "\n";
}

void cmd_split(const Flags& f, std::ostream& out) {
  const Partition la = parse_partition(f.partition);
  const SplitContext ctx(f.e, parse_int_list(f.I), beads_for(f, la));
  const SplitResult s = split(la, ctx);
  const bool sep = is_separated(la, ctx);
  if (f.json) {
    out << json{{"e", f.e}, {"I", ctx.classes()}, {"n", ctx.n()}, {"lambda_I", P(s.lambda_I)},
                {"lambda_Ibar", P(s.lambda_Ibar)}, {"u", s.u}, {"separated", sep}}
               .dump(2)
        << "\n";
    return;
  }
  out << "lambda_I " << P(s.lambda_I) << "\n"
      << "lambda_Ibar " << P(s.lambda_Ibar) << "\n"
      << "u " << s.u << "\n"
      << "separated " << yes_no(sep) << "\n";
}

void cmd_paget(const Flags& f, std::ostream& out) {
  const Partition la = parse_partition(f.partition);
  const int n = beads_for(f, la);
  const std::vector<int> sigma = quotient_sigma(la, f.e, n);
  const std::vector<Partition> q = e_quotient(la, n, f.e);
  const Partition mu = paget_mu(la, f.e, n);
  const bool mu_sep = is_quotient_separated(mu, f.e, n);
  const Partition m = mullineux(conjugate(la), f.e);
  if (f.json) {
    out << json{{"e", f.e}, {"n", n}, {"sigma", sigma}, {"quotient", parts_json(q)}, {"mu", P(mu)},
                {"mu_quotient_separated", mu_sep}, {"mullineux", P(m)}, {"agrees", m == mu}}
               .dump(2)
        << "\n";
    return;
  }
  std::string quot;
  for (std::size_t i = 0; i < q.size(); ++i) quot += (i ? " | " : "") + P(q[i]);
  out << "sigma " << join(sigma) << "\n"
      << "quotient " << quot << "\n"
      << "mu " << P(mu) << "\n"
      << "mu quotient separated " << yes_no(mu_sep) << "\n"
      << "mullineux " << P(m) << "\n"
      << "agrees " << yes_no(m == mu) << "\n";
}

bool cmd_verify(const Flags& f, std::ostream& out) {
  VerifyOptions opts;
  opts.max = f.max;
  if (f.e) opts.e = f.e;
  opts.threads = f.threads;
  const auto reports = run_verification(f.suite, opts);
  bool ok = true;
  json doc = json::array();
  for (const SuiteReport& r : reports) {
    ok = ok && r.ok();
    for (const PropertyResult& p : r.properties) {
      if (f.json) {
        doc.push_back({{"suite", r.suite}, {"property", p.name}, {"checked", p.checked}, {"skipped", p.skipped},
                       {"failed", p.failed}, {"counterexample", p.counterexample}});
        continue;
      }
      out << (p.ok() ? "PASS " : "FAIL ") << r.suite << ": " << p.name << " (checked " << p.checked;
      if (p.skipped) out << ", skipped " << p.skipped;
      out << ")";
      if (!p.ok()) out << " failed " << p.failed << "; first: " << p.counterexample;
      out << "\n";
    }
  }
  if (f.json) out << doc.dump(2) << "\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition regularisation, arm-sequence crystals and the Mullineux map", "regcrys"};
  app.require_subcommand(1);
  Flags f;

  auto add_e = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--e", f.e, "the integer e")->check(CLI::Range(1, 1000));
    if (required) o->required();
  };
  auto add_partition = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("partition", f.partition, "partition, e.g. 9,3^3,2 ('-' for the empty one)");
    if (required) o->required();
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", f.json, "JSON output"); };

  auto* conj = app.add_subcommand("conj", "conjugate partition");
  add_partition(conj, true);
  add_json(conj);

  auto* abacus = app.add_subcommand("abacus", "abacus displays");
  abacus->require_subcommand(1);
  auto* show = abacus->add_subcommand("show", "print the abacus display");
  add_e(show, true);
  show->add_option("--beads", f.beads, "bead count (default: a multiple of e past the length)")->check(CLI::NonNegativeNumber);
  add_partition(show, true);
  add_json(show);

  auto reg_like = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    add_e(c, true);
    c->add_option("--y", f.y, "slope P or P/Q with 1 <= y <= e-1")->required();
    add_partition(c, true);
    add_json(c);
    return c;
  };
  auto* reg = reg_like("reg", "(e,y)-regularisation");
  reg->add_flag("--trace", f.trace, "print every abacus step");
  auto* restrict_ = reg_like("restrict", "(e,y)-restrictisation");
  restrict_->add_flag("--trace", f.trace, "print every step");
  auto* lclass = reg_like("ladder-class", "all partitions with the same (e,y)-ladder fingerprint");

  auto* crystal = app.add_subcommand("crystal", "crystal graph of an arm-sequence prefix");
  add_e(crystal, true);
  auto* arm_opt = crystal->add_option("--arm", f.arm, "arm prefix a1,a2,...");
  auto* slope_opt = crystal->add_option("--slope", f.slope, "slope P/Q with optional + or - (default +)");
  arm_opt->excludes(slope_opt);
  crystal->add_option("--max-size", f.max_size, "largest partition size")->check(CLI::NonNegativeNumber);
  crystal->add_option("--dot", f.dot, "write DOT to this file");
  add_json(crystal);

  auto* chain = app.add_subcommand("chain", "regularisation chain between two arm prefixes");
  add_e(chain, true);
  chain->add_option("--from", f.from, "source arm prefix")->required();
  chain->add_option("--to", f.to, "target arm prefix")->required();
  add_partition(chain, false);
  chain->add_flag("--trace", f.trace, "also print the arm prefix before and after each step");
  add_json(chain);

  auto* mull = app.add_subcommand("mull", "Mullineux map");
  add_e(mull, true);
  add_partition(mull, true);
  mull->add_flag("--trace", f.trace, "print each slope and intermediate partition");
  add_json(mull);

  auto* split_cmd = app.add_subcommand("split", "I-parts of a partition");
  add_e(split_cmd, true);
  split_cmd->add_option("--I", f.I, "residues in I, e.g. 0,2")->required();
  split_cmd->add_option("--beads", f.beads, "bead count (multiple of e)")->check(CLI::NonNegativeNumber);
  add_partition(split_cmd, true);
  add_json(split_cmd);

  auto* paget = app.add_subcommand("paget", "quotient-separated Mullineux images");
  add_e(paget, true);
  paget->add_option("--beads", f.beads, "bead count (multiple of e)")->check(CLI::NonNegativeNumber);
  add_partition(paget, true);
  add_json(paget);

  auto* verify = app.add_subcommand("verify", "exhaustive property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", f.suite, "suite name")->required()->check(CLI::IsMember(suites));
  add_e(verify, false);
  verify->add_option("--max", f.max, "size bound (component bound for split and paget)")->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", f.threads, "worker threads (0: all cores)");
  add_json(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "regcrys: " << ex.what() << "\n";
    return 2;
  }

  try {
    f.has_partition = chain->parsed() && chain->count("partition") > 0;
    if (crystal->parsed() && f.arm.empty() && f.slope.empty()) throw ParseError("crystal needs --arm or --slope");

    if (conj->parsed()) cmd_conj(f, out);
    else if (show->parsed()) cmd_abacus(f, out);
    else if (reg->parsed()) cmd_reg(f, out, false);
    else if (restrict_->parsed()) cmd_reg(f, out, true);
    else if (lclass->parsed()) cmd_ladder_class(f, out);
    else if (crystal->parsed()) cmd_crystal(f, out);
    else if (chain->parsed()) cmd_chain(f, out);
    else if (mull->parsed()) cmd_mull(f, out);
    else if (split_cmd->parsed()) cmd_split(f, out);
    else if (paget->parsed()) cmd_paget(f, out);
    else if (verify->parsed()) return cmd_verify(f, out) ? 0 : 1;
    return 0;
  } catch (const ParseError& ex) {
    err << "regcrys: " << ex.what() << "\n";
    return 2;
  } catch (const DomainError& ex) {
    err << "regcrys: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "regcrys: internal error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace regcrys::cli
