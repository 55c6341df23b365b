#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "ceplab/cli.hpp"
#include "ceplab/errors.hpp"
#include "ceplab/properties.hpp"
#include "ceplab/term.hpp"
#include "ceplab/verify.hpp"

namespace ceplab {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
  std::string report;

  std::string frame;
  std::vector<std::string> props;
  std::string identity;
  std::string term;
  std::vector<std::string> assignments;
  std::vector<std::string> disjuncts;
  std::string phi, psi;
  unsigned k = 2;
  std::vector<std::string> generators;
  bool corners = false;
  std::string at;
  std::string builtin;
  std::string file;
  std::string x = "{1,3}";
  bool all = false;
  std::vector<std::string> items;
  std::string out_path;
  std::string expect;
};

// Collects one line of text output and one JSON record per check.
class Session {
 public:
  Session(Options const& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void record(std::string check, std::string outcome, json details = json::object()) {
    out_ << check << ": " << outcome << '\n';
    for (auto const& [k, v] : details.items()) {
      out_ << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    bool ok = true;
    if (!opt_.expect.empty() && outcome.substr(0, outcome.find(' ')) != opt_.expect) ok = false;
    ok_ = ok_ && ok;
    json r{{"check", std::move(check)}, {"outcome", std::move(outcome)}};
    if (!details.empty()) r["details"] = std::move(details);
    if (!opt_.expect.empty()) r["as_expected"] = ok;
    results_.push_back(std::move(r));
  }

  void record_item(ItemOutcome const& item) {
    out_ << (item.ok ? "PASS " : "FAIL ") << item.id << ": " << item.summary << '\n';
    json facts = json::object();
    for (Fact const& f : item.facts) {
      out_ << "  " << f.key << ": " << f.value << '\n';
      facts[f.key] = f.value;
    }
    ok_ = ok_ && item.ok;
    results_.push_back(json{{"id", item.id},
                            {"expected", item.expected},
                            {"ok", item.ok},
                            {"summary", item.summary},
                            {"facts", std::move(facts)}});
  }

  void fail() { ok_ = false; }
  bool ok() const { return ok_; }

  void write_report(std::string const& command) const {
    if (opt_.report.empty()) return;
    json doc{{"command", command}, {"seed", opt_.seed}, {"samples", opt_.samples}, {"ok", ok_}, {"results", results_}};
    std::ofstream f(opt_.report, std::ios::binary);
    if (!f) throw UsageError("cannot write report '" + opt_.report + "'");
    f << doc.dump(2) << '\n';
  }

 private:
  Options const& opt_;
  std::ostream& out_;
  json results_ = json::array();
  bool ok_ = true;
};

std::string verdict_outcome(Verdict const& v) {
  if (!v.failed()) return to_string(v.kind);
  return "fails";
}

json verdict_details(Verdict const& v) {
  json d{{"checked", v.checked}};
  if (v.failed()) {
    json ce = json::object();
    for (Binding const& b : v.counterexample) ce[b.name] = to_string(b.value);
    d["counterexample"] = std::move(ce);
  }
  return d;
}

Strategy strategy_for(Frame const& frame, Options const& opt) {
  return frame.is_finite() ? Strategy::exhaustive() : Strategy::sampled(opt.samples, opt.seed);
}

FiniteFrame finite_frame_of(Options const& opt) {
  Frame f = parse_frame_expression(opt.frame);
  return f.finite();
}

void cmd_check_props(Options const& opt, Session& s) {
  Frame const frame = parse_frame_expression(opt.frame);
  std::vector<PropertyTag> tags;
  if (opt.props.empty()) tags.assign(std::begin(kAllProperties), std::end(kAllProperties));
  for (std::string const& name : opt.props) {
    auto p = parse_property(name);
    if (!p) throw UsageError("unknown property '" + name + "'");
    tags.push_back(*p);
  }
  for (PropertyTag p : tags) {
    Verdict const v = check_property(frame, p, strategy_for(frame, opt));
    s.record(to_string(p), verdict_outcome(v), verdict_details(v));
  }
}

void cmd_check_identity(Options const& opt, Session& s) {
  Frame const frame = parse_frame_expression(opt.frame);
  Identity const e = parse_identity(opt.identity);
  Verdict const v = check_identity(frame, e, strategy_for(frame, opt));
  s.record(to_string(e), verdict_outcome(v), verdict_details(v));
}

Clause clause_of(Options const& opt) {
  int const given = !opt.disjuncts.empty() + !opt.phi.empty() + !opt.psi.empty();
  if (given != 1) throw UsageError("give exactly one of --disjunct, --phi, --psi");
  if (!opt.phi.empty()) return make_clause(ClauseMode::phi, parse_identity(opt.phi));
  if (!opt.psi.empty()) return make_clause(ClauseMode::psi, parse_identity(opt.psi), opt.k);
  Clause c;
  for (std::string const& d : opt.disjuncts) c.disjuncts.push_back(parse_identity(d));
  return c;
}

void cmd_check_clause(Options const& opt, Session& s) {
  Frame const frame = parse_frame_expression(opt.frame);
  Clause const c = clause_of(opt);
  Verdict const v = opt.psi.empty() ? check_clause(frame, c) : check_psi(frame.finite(), parse_identity(opt.psi), opt.k);
  s.record(to_string(c), verdict_outcome(v), verdict_details(v));
}

void cmd_eval(Options const& opt, Session& s) {
  Frame const frame = parse_frame_expression(opt.frame);
  if (opt.identity.empty() == opt.term.empty()) throw UsageError("give exactly one of --identity, --term");
  if (!opt.identity.empty()) {
    if (!opt.assignments.empty()) throw UsageError("--assign applies to --term only");
    cmd_check_identity(opt, s);
    return;
  }
  Term const t = parse_term(opt.term);
  Assignment a;
  for (std::string const& binding : opt.assignments) {
    auto eq = binding.find('=');
    if (eq == std::string::npos) throw UsageError("assignment '" + binding + "' needs the form name=value");
    std::string const name = binding.substr(0, eq);
    std::string const text = binding.substr(eq + 1);
    if (frame.is_finite()) a.emplace(name, parse_element(frame.finite().algebra(), text));
    else a.emplace(name, parse_epset(text));
  }
  s.record(to_string(t), to_string(eval_term(frame, t, a)));
}

void cmd_cong_lattice(Options const& opt, Session& s) {
  CongruenceLattice const l = congruence_lattice(finite_frame_of(opt));
  json elems = json::array();
  for (Element e : l.elements) elems.push_back(to_hex(e));
  s.record("congruences",
           std::to_string(l.size()) + " congruences, " + std::to_string(l.nontrivial()) + " non-trivial",
           json{{"elements", std::move(elems)}});
}

void cmd_cong_simple(Options const& opt, Session& s) {
  s.record("simple", is_simple(finite_frame_of(opt)) ? "simple" : "not-simple");
}

void cmd_cep_full(Options const& opt, Session& s) {
  FiniteFrame const f = finite_frame_of(opt);
  CepResult const r = cep_check_full(f);
  json d{{"subalgebras", r.subalgebras}, {"congruences", r.congruences}};
  if (r.failure) {
    json sub = json::array();
    for (Element e : r.failure->subalgebra.elements) sub.push_back(to_hex(e));
    d["subalgebra"] = std::move(sub);
    d["generator"] = to_hex(r.failure->generator);
    d["witness"] = to_hex(r.failure->witness);
  }
  s.record("cep", r.holds() ? "holds" : "fails", std::move(d));
}

void cmd_cep_refute(Options const& opt, Session& s) {
  FiniteFrame const f = finite_frame_of(opt);
  FiniteAlgebra const& alg = f.algebra();
  if (opt.corners == !opt.generators.empty()) throw UsageError("give exactly one of --gen, --corners");
  std::vector<Element> gens;
  if (opt.corners) {
    if (alg.atom_count() % 2 != 0) throw UsageError("--corners needs an even number of atoms");
    gens = square_corners(make_powerset_algebra(alg.atom_count() / 2)).all();
  }
  for (std::string const& g : opt.generators) gens.push_back(parse_element(alg, g));
  Subalgebra const sub = generate_subalgebra(f, gens);
  Element const a = parse_element(alg, opt.at);
  Refutation const r = cep_refute(f, sub, a);
  json d{{"subalgebra size", sub.elements.size()}, {"at", to_hex(a)}, {"extension", to_hex(r.extension)}};
  if (r.witness) d["witness"] = to_hex(*r.witness);
  s.record("refutation", r.refuted() ? "refuted" : "not-refuted", std::move(d));
}

std::string read_text(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void cmd_trace_replay(Options const& opt, Session& s) {
  if (opt.builtin.empty() == opt.file.empty()) throw UsageError("give exactly one of --builtin, --file");
  std::string text;
  std::optional<SymbolicFrame> frame;
  std::string label;
  if (!opt.builtin.empty()) {
    text = builtin_trace_text(opt.builtin);
    if (opt.frame.empty()) frame = family_frame(builtin_trace_family(opt.builtin), parse_epset(opt.x));
    label = opt.builtin;
  } else {
    text = read_text(opt.file);
    if (opt.frame.empty()) throw UsageError("--file needs --frame");
    label = opt.file;
  }
  if (!opt.frame.empty()) frame = parse_frame_expression(opt.frame).symbolic();
  TraceVerdict const v = replay_trace(*frame, four_block, has_infinitely_many_odds, parse_trace(text));
  json d{{"frame", "family " + to_string(frame->family()) + " x=" + to_string(frame->parameter())}};
  if (!v.valid) {
    d["step"] = v.step;
    d["reason"] = v.reason;
  } else {
    json pairs = json::array();
    for (auto const& [x, y] : v.derived) pairs.push_back(to_string(x) + " ~ " + to_string(y));
    d["derived"] = std::move(pairs);
  }
  s.record("trace " + label, v.valid ? "valid" : "invalid", std::move(d));
}

void cmd_verify(Options const& opt, Session& s) {
  if (opt.all == !opt.items.empty()) throw UsageError("give exactly one of --all, --item");
  std::vector<std::string> const ids = opt.all ? verification_ids() : opt.items;
  VerifyOptions const vo{opt.seed, opt.samples};
  for (std::string const& id : ids) s.record_item(run_verification(id, vo));
}

void cmd_export_dot(Options const& opt, Session& s, std::ostream& out) {
  std::string const dot = lattice_dot(congruence_lattice(finite_frame_of(opt)));
  if (opt.out_path.empty()) {
    out << dot;
    return;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + opt.out_path + "'");
  f << dot;
  s.record("dot", "written", json{{"path", opt.out_path}});
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Boolean frames, congruences and the congruence extension property", "cep-lab"};
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", opt.seed, "Seed for sampled checks");
  app.add_option("--report", opt.report, "Write a JSON report to this path");
  app.add_option("--samples", opt.samples, "Sample count for symbolic frames");
  app.require_subcommand(1);

  auto frame_opt = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--frame", opt.frame, "Frame expression");
    if (required) o->required();
  };
  auto expect_opt = [&](CLI::App* cmd) {
    cmd->add_option("--expect", opt.expect, "Outcome keyword that counts as success");
  };

  auto* check = app.add_subcommand("check", "Check properties, identities or clauses");
  check->require_subcommand(1);
  auto* props = check->add_subcommand("props", "Check frame properties");
  frame_opt(props);
  props->add_option("--prop", opt.props, "Property name (repeatable); all when omitted");
  expect_opt(props);
  auto* ident = check->add_subcommand("identity", "Check an identity");
  frame_opt(ident);
  ident->add_option("--identity", opt.identity, "Identity, e.g. 'f(0) = 0'")->required();
  expect_opt(ident);
  auto* clause = check->add_subcommand("clause", "Check a disjunction of identities");
  frame_opt(clause);
  clause->add_option("--disjunct", opt.disjuncts, "Identity disjunct (repeatable)");
  clause->add_option("--phi", opt.phi, "Build phi_e from this identity");
  clause->add_option("--psi", opt.psi, "Build psi_e from this identity");
  clause->add_option("--k", opt.k, "Iteration depth for psi_e");
  expect_opt(clause);

  auto* eval = app.add_subcommand("eval", "Evaluate a term or check an identity");
  frame_opt(eval);
  eval->add_option("--identity", opt.identity, "Identity to check");
  eval->add_option("--term", opt.term, "Term to evaluate");
  eval->add_option("--assign", opt.assignments, "Variable binding name=value (repeatable)");
  expect_opt(eval);

  auto* cong = app.add_subcommand("cong", "Congruences of finite frames");
  cong->require_subcommand(1);
  auto* lattice = cong->add_subcommand("lattice", "List congruential elements");
  frame_opt(lattice);
  auto* simple = cong->add_subcommand("simple", "Decide simplicity");
  frame_opt(simple);
  expect_opt(simple);

  auto* cep = app.add_subcommand("cep", "Congruence extension property");
  cep->require_subcommand(1);
  auto* full = cep->add_subcommand("full", "Check every subalgebra (at most 16 elements)");
  frame_opt(full);
  expect_opt(full);
  auto* refute = cep->add_subcommand("refute", "Refute the CEP at one subalgebra congruence");
  frame_opt(refute);
  refute->add_option("--gen", opt.generators, "Subalgebra generator (repeatable)");
  refute->add_flag("--corners", opt.corners, "Generate the subalgebra from the four corners");
  refute->add_option("--at", opt.at, "Congruential element of the subalgebra")->required();
  expect_opt(refute);

  auto* trace = app.add_subcommand("trace", "Forcing traces");
  trace->require_subcommand(1);
  auto* replay = trace->add_subcommand("replay", "Replay a trace on a family frame");
  frame_opt(replay, false);
  replay->add_option("--builtin", opt.builtin, "Built-in trace: ext2, cont, subadd");
  replay->add_option("--file", opt.file, "Trace file");
  replay->add_option("--x", opt.x, "Family parameter for built-in traces");
  expect_opt(replay);

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_flag("--all", opt.all, "Run every item");
  verify->add_option("--item", opt.items, "Item id (repeatable)");

  auto* exp = app.add_subcommand("export", "Export diagrams");
  exp->require_subcommand(1);
  auto* dot = exp->add_subcommand("dot", "Congruence lattice as a DOT digraph");
  frame_opt(dot);
  dot->add_option("--out", opt.out_path, "Output path; standard output when omitted");

  for (CLI::App* sub : {check, props, ident, clause, eval, cong, lattice, simple, cep, full, refute, trace, replay,
                        verify, exp, dot}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  Session session(opt, out);
  std::string command;
  try {
    if (props->parsed()) command = "check props", cmd_check_props(opt, session);
    else if (ident->parsed()) command = "check identity", cmd_check_identity(opt, session);
    else if (clause->parsed()) command = "check clause", cmd_check_clause(opt, session);
    else if (eval->parsed()) command = "eval", cmd_eval(opt, session);
    else if (lattice->parsed()) command = "cong lattice", cmd_cong_lattice(opt, session);
    else if (simple->parsed()) command = "cong simple", cmd_cong_simple(opt, session);
    else if (full->parsed()) command = "cep full", cmd_cep_full(opt, session);
    else if (refute->parsed()) command = "cep refute", cmd_cep_refute(opt, session);
    else if (replay->parsed()) command = "trace replay", cmd_trace_replay(opt, session);
    else if (verify->parsed()) command = "verify", cmd_verify(opt, session);
    else if (dot->parsed()) command = "export dot", cmd_export_dot(opt, session, out);
    else throw UsageError("missing command");
    session.write_report(command);
  } catch (InternalError const& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return session.ok() ? 0 : 1;
}

}  // namespace ceplab
