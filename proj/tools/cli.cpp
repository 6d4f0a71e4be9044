#include "cli.hpp"

#include "qdga/config.hpp"
#include "qdga/differential.hpp"
#include "qdga/format.hpp"
#include "qdga/parser.hpp"
#include "qdga/reduce.hpp"
#include "qdga/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

namespace qdga::cli {

namespace {

struct Options {
  std::string config_path;
  std::string preset;
  std::optional<std::size_t> n;
  std::string twist;
  std::string format;
  std::optional<int> grade_bound;
  std::optional<int> word_bound;
  std::optional<std::size_t> size_cap;
  std::optional<std::uint64_t> seed;
  std::string letter_order;
  std::optional<std::size_t> max_steps;

  std::string expr;
  int k = 1;
  bool mod_ideal = false;

  std::string suite = "all";
  std::string report_path;
  unsigned jobs = 1;
  bool timing = false;
  std::size_t word_length = 2;
  std::optional<std::size_t> samples;
};

SessionConfig resolve_config(const Options& o) {
  SessionConfig cfg;
  if (!o.config_path.empty()) {
    cfg = load_config(o.config_path);
  } else {
    cfg = preset_config(o.preset.empty() ? "commutative" : o.preset, o.n.value_or(2));
  }
  if (!o.preset.empty() && !o.config_path.empty()) {
    if (std::find(preset_names().begin(), preset_names().end(), o.preset) == preset_names().end())
      throw ConfigError("unknown preset '" + o.preset + "'");
    cfg.preset = o.preset;
  }
  if (o.n) {
    if (*o.n < 1) throw ConfigError("n must be positive");
    cfg.n = *o.n;
  }
  if (!o.twist.empty()) cfg.twist = o.twist;
  if (!o.format.empty()) {
    try {
      cfg.format = parse_format(o.format);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (o.grade_bound) cfg.bounds.grade_bound = *o.grade_bound;
  if (o.word_bound) cfg.bounds.word_bound = *o.word_bound;
  if (o.size_cap) cfg.bounds.size_cap = *o.size_cap;
  if (o.seed) cfg.seed = *o.seed;
  if (o.max_steps) cfg.max_steps = *o.max_steps;
  if (!o.letter_order.empty()) {
    if (o.letter_order == "ascending") {
      cfg.letter_order = LetterOrder::Ascending;
    } else if (o.letter_order == "descending") {
      cfg.letter_order = LetterOrder::Descending;
    } else {
      throw ConfigError("letter order must be 'ascending' or 'descending'");
    }
  }
  return cfg;
}

int verdict_exit(const MembershipVerdict& v) {
  switch (v.status) {
    case MembershipStatus::Member:
      return kOk;
    case MembershipStatus::NotMemberAtBound:
      return kCheckFailure;
    case MembershipStatus::BoundExceeded:
      return kInconclusive;
  }
  return kCheckFailure;
}

std::string verdict_line(const MembershipVerdict& v) {
  const std::string at = " (grade bound " + std::to_string(v.bounds.grade_bound) + ", word bound " +
                         std::to_string(v.bounds.word_bound) + ")";
  switch (v.status) {
    case MembershipStatus::Member:
      return "member of I_q" + at;
    case MembershipStatus::NotMemberAtBound:
      return "not a member of I_q at bounds" + at;
    case MembershipStatus::BoundExceeded:
      return "inconclusive: spanning set of " + std::to_string(v.spanning_size) +
             " exceeds the size cap " + std::to_string(v.bounds.size_cap);
  }
  return "";
}

void print_witness(std::ostream& out, const Witness& w) {
  for (const auto& t : w.terms) {
    out << "  " << to_text(Tensor(Poly(t.coefficient))) << " * [";
    const Tensor left = Tensor::monomial(t.left_dword, Poly::monomial(t.left_word));
    const Tensor right = Tensor::monomial(t.right_dword, Poly::monomial(t.right_word));
    out << to_text(left) << "] * " << to_string(t.generator) << " * [" << to_text(right) << "]\n";
  }
}

int cmd_diff(const Options& o, std::ostream& out) {
  const Session s = make_session(resolve_config(o));
  const Tensor e = parse_expression(o.expr, *s.calculus);
  const Tensor r = diff_n(*s.calculus, e, o.k);
  const OutputFormat fmt = s.config.format;
  std::optional<MembershipVerdict> v;
  if (o.mod_ideal) v = membership(*s.ideal, r, s.config.bounds);
  if (fmt == OutputFormat::Json) {
    nlohmann::json j{{"input", to_text(e)}, {"k", o.k}, {"result", to_json(r)}};
    if (v) j["membership"] = to_json(*v);
    out << j.dump(2) << "\n";
  } else {
    out << render(r, fmt) << "\n";
    if (v) out << verdict_line(*v) << "\n";
  }
  return v ? verdict_exit(*v) : kOk;
}

int cmd_parse(const Options& o, std::ostream& out) {
  const Session s = make_session(resolve_config(o));
  const Tensor e = parse_expression(o.expr, *s.calculus);
  if (s.config.format == OutputFormat::Json) {
    out << to_json(e).dump(2) << "\n";
  } else {
    out << render(e, s.config.format) << "\n";
  }
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  const Session s = make_session(resolve_config(o));
  const Tensor e = parse_expression(o.expr, *s.calculus);
  std::optional<Reducer> reducer;
  try {
    reducer.emplace(*s.ideal, s.config.letter_order);
  } catch (const RewriteNotApplicable& ex) {
    err << "reduce refused: " << ex.what() << "\n";
    return kInputError;
  }
  Reducer::Result r;
  try {
    r = reducer->reduce(e, s.config.max_steps);
  } catch (const StepBudgetExhausted& ex) {
    err << "reduce stopped: " << ex.what() << "\n";
    return kInconclusive;
  }
  if (s.config.format == OutputFormat::Json) {
    out << nlohmann::json{{"input", to_text(e)}, {"normal_form", to_json(r.normal_form)}, {"steps", r.steps}}
               .dump(2)
        << "\n";
  } else {
    out << render(r.normal_form, s.config.format) << "\n";
  }
  return kOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  const Session s = make_session(resolve_config(o));
  const Tensor e = parse_expression(o.expr, *s.calculus);
  const MembershipVerdict v = membership(*s.ideal, e, s.config.bounds);
  if (s.config.format == OutputFormat::Json) {
    out << to_json(v).dump(2) << "\n";
  } else {
    out << verdict_line(v) << "\n";
    if (v.witness) print_witness(out, *v.witness);
  }
  return verdict_exit(v);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Session s = make_session(resolve_config(o));
  SuiteOptions so;
  so.bounds = s.config.bounds;
  so.seed = s.config.seed;
  so.jobs = std::max(1u, o.jobs);
  so.word_length = o.word_length;
  if (o.samples) so.random_elements = *o.samples;
  const auto reports = run_suites(s, o.suite, so);

  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) doc.push_back(to_json(r, o.timing));
  if (!o.report_path.empty()) {
    std::ofstream f(o.report_path);
    if (!f) throw ConfigError("cannot write report to " + o.report_path);
    f << doc.dump(2) << "\n";
  }
  if (s.config.format == OutputFormat::Json) {
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r, o.timing);
  }
  bool failed = false, inconclusive = false;
  for (const auto& r : reports) {
    failed = failed || r.has_failure();
    inconclusive = inconclusive || r.count(Outcome::Inconclusive) > 0;
  }
  return failed ? kCheckFailure : inconclusive ? kInconclusive : kOk;
}

void add_session_options(CLI::App& app, Options& o) {
  app.add_option("--config", o.config_path, "JSON session configuration");
  app.add_option("--preset", o.preset, "commutative | scalar-twist | constant");
  app.add_option("-n", o.n, "number of generators for presets");
  app.add_option("--twist", o.twist, "scalar c for the scalar-twist preset");
  app.add_option("--format", o.format, "text | latex | json");
  app.add_option("--grade-bound", o.grade_bound, "membership grade bound");
  app.add_option("--word-bound", o.word_bound, "membership word bound");
  app.add_option("--size-cap", o.size_cap, "largest spanning set the oracle will build");
  app.add_option("--seed", o.seed, "seed for sampled inputs");
  app.add_option("--letter-order", o.letter_order, "ascending | descending");
  app.add_option("--max-steps", o.max_steps, "rewrite step budget");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded q-differential algebras over a free algebra"};
  app.require_subcommand(1);
  Options o;
  add_session_options(app, o);
  app.fallthrough();

  auto* diff_cmd = app.add_subcommand("diff", "apply d k times to an expression");
  diff_cmd->add_option("expr", o.expr)->required();
  diff_cmd->add_option("-k", o.k, "number of applications")->check(CLI::Range(1, 3));
  diff_cmd->add_flag("--mod-ideal", o.mod_ideal, "also decide membership of the result in I_q");

  auto* parse_cmd = app.add_subcommand("parse", "print the canonical form of an expression");
  parse_cmd->add_option("expr", o.expr)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "rewrite an expression to normal form modulo I_q");
  reduce_cmd->add_option("expr", o.expr)->required();

  auto* member_cmd = app.add_subcommand("member", "decide membership in I_q and print a witness");
  member_cmd->add_option("expr", o.expr)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string suites_help = "all";
  for (const auto& s : suite_names()) suites_help += " | " + s;
  verify_cmd->add_option("--suite", o.suite, suites_help);
  verify_cmd->add_option("--report", o.report_path, "write the JSON report to this file");
  verify_cmd->add_option("--jobs", o.jobs, "worker threads");
  verify_cmd->add_option("--word-length", o.word_length, "exhaustive word length");
  verify_cmd->add_option("--samples", o.samples, "seeded random elements for the iterates suite");
  verify_cmd->add_flag("--timing", o.timing, "include wall time in reports");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*diff_cmd) return cmd_diff(o, out);
    if (*parse_cmd) return cmd_parse(o, out);
    if (*reduce_cmd) return cmd_reduce(o, out, err);
    if (*member_cmd) return cmd_member(o, out);
    if (*verify_cmd) {
      if (o.suite != "all" &&
          std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
        throw ConfigError("unknown suite '" + o.suite + "'");
      return cmd_verify(o, out);
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace qdga::cli
