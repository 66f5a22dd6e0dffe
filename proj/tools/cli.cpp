#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hyperset/hyperset.hpp"

namespace hyperset::cli {
namespace {

// Bad input found after flag parsing; printed with exit code 2.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto in_context(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw Usage(what + ": " + e.what());
  }
}

CanonSet read_set(const std::string& what, const std::string& text) {
  return in_context(what, [&] { return parse_canon(text); });
}

Formula read_formula(const std::string& text) {
  return in_context("FORMULA", [&] { return parse_formula(text); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("FILE: cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// NAME=SET pairs, as given to --env and --const.
Environment read_bindings(const std::string& flag, const std::vector<std::string>& items) {
  Environment env;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    const std::string name = item.substr(0, eq);
    if (eq == std::string::npos || !is_name(name)) {
      throw Usage(flag + ": expected NAME=SET, got '" + item + "'");
    }
    if (env.count(name)) throw Usage(flag + ": '" + name + "' given twice");
    env.emplace(name, read_set(flag + " " + name, item.substr(eq + 1)));
  }
  return env;
}

Universe read_universe(std::size_t k, std::size_t max_k) {
  try {
    return enumerate_universe(k, max_k);
  } catch (const ResourceLimitError& e) {
    throw Usage("--k: " + std::string(e.what()) + " (raise --max-k to allow it)");
  } catch (const ValidationError& e) {
    throw Usage("--k: " + std::string(e.what()));
  }
}

struct Options {
  std::string a, b, c;
  std::string file;
  std::string output;
  std::string format = "text";
  std::string strategies = "bare";
  std::vector<std::string> env;
  std::vector<std::string> constants;
  std::vector<std::string> terms;
  std::size_t k = 2;
  std::size_t max_k = kDefaultMaxUniverseBound;
  std::size_t n = 0;
  std::size_t width = 2;
  std::size_t budget = 64;
};

int canon_cmd(const Options& o, std::ostream& out) {
  out << to_program(read_set("SET", o.a)) << "\n";
  return kExitOk;
}

int eq_cmd(const Options& o, std::ostream& out) {
  const bool same = read_set("A", o.a) == read_set("B", o.b);
  out << (same ? "bisimilar" : "not bisimilar") << "\n";
  return same ? kExitOk : kExitNegative;
}

int solve_cmd(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.file);
  const SetProgram prog = in_context(o.file, [&] { return parse_program(text); });
  std::map<std::string, CanonSet> solution;
  try {
    solution = solve(prog.system);
  } catch (const ValidationError& e) {
    throw Usage(o.file + ": " + e.what());
  }
  for (const auto& name : prog.declared) out << name << " = " << to_program(solution.at(name)) << "\n";
  if (prog.result) out << "result = " << to_program(solution.at(*prog.result)) << "\n";
  return kExitOk;
}

int replace_cmd(const Options& o, std::ostream& out) {
  out << to_program(replace(read_set("S", o.a), read_set("X", o.b), read_set("Y", o.c))) << "\n";
  return kExitOk;
}

int stratify_cmd(const Options& o, std::ostream& out) {
  const StratResult r = stratify(read_formula(o.a));
  if (r.stratified()) {
    out << "stratified\n";
    for (const auto& [name, level] : *r.levels) out << name << " = " << level << "\n";
    return kExitOk;
  }
  out << "not stratified\n";
  out << "witness (weight " << r.witness_weight() << "):\n";
  for (const auto& step : r.witness) out << "  " << to_string(step) << "\n";
  return kExitNegative;
}

int eval_cmd(const Options& o, std::ostream& out) {
  const Formula f = read_formula(o.a);
  const Environment env = read_bindings("--env", o.env);
  for (const auto& v : free_vars(f)) {
    if (!env.count(v)) throw Usage("--env: no value for free name '" + v + "'");
  }
  const Universe u = read_universe(o.k, o.max_k);
  out << (evaluate(f, env, u.members) ? "true" : "false") << "\n";
  return kExitOk;
}

int universe_cmd(const Options& o, std::ostream& out) {
  const Universe u = read_universe(o.k, o.max_k);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["k"] = u.bound;
    j["size"] = u.members.size();
    j["members"] = nlohmann::ordered_json::array();
    for (const auto& s : u.members) j["members"].push_back(to_program(s));
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "k = " << u.bound << "\n";
  out << "size = " << u.members.size() << "\n";
  for (const auto& s : u.members) out << to_program(s) << "\n";
  return kExitOk;
}

int totality_cmd(const Options& o, std::ostream& out) {
  const Formula f = read_formula(o.a);
  TotalityOptions opts;
  opts.budget = o.budget;
  opts.constants = read_bindings("--const", o.constants);
  try {
    if (!o.strategies.empty()) {
      opts.strategies = in_context("--strategies", [&] { return parse_strategies(o.strategies); });
    }
  } catch (const ValidationError& e) {
    throw Usage("--strategies: " + std::string(e.what()));
  }
  for (const auto& t : o.terms) {
    opts.strategies.push_back(Strategy::literal(in_context("--term", [&] {
      try {
        return parse_pterm(t);
      } catch (const ValidationError& e) {
        throw Usage("--term: " + std::string(e.what()));
      }
    })));
  }
  const Universe u = read_universe(o.k, o.max_k);
  TotalityReport r;
  try {
    r = complete_totality(f, u, opts);
  } catch (const ValidationError& e) {
    throw Usage(e.what());
  }
  out << (o.format == "json" ? to_json(r) + "\n" : to_text(r));
  return kExitOk;
}

int constructible_cmd(const Options& o, std::ostream& out) {
  const CanonSet x = read_set("X", o.a);
  const CanonSet y = read_set("Y", o.b);
  bool ok = false;
  try {
    ok = n_constructible(x, y, o.n, o.width);
  } catch (const ResourceLimitError& e) {
    throw Usage(e.what());
  }
  out << (ok ? "constructible" : "not constructible") << "\n";
  return ok ? kExitOk : kExitNegative;
}

int dot_cmd(const Options& o, std::ostream& out) {
  const std::string dot = to_dot(read_set("SET", o.a));
  if (o.output.empty()) {
    out << dot;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file || !(file << dot)) throw Usage("-o: cannot write '" + o.output + "'");
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperset workbench: non-well-founded sets, stratification and totalities",
               "hyperset"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"text", "json"});

  auto* canon = app.add_subcommand("canon", "Canonical let-form of a set");
  canon->add_option("SET", o.a, "set literal")->required();

  auto* eq = app.add_subcommand("eq", "Decide bisimilarity of two sets (exit 1 if different)");
  eq->add_option("A", o.a, "set literal")->required();
  eq->add_option("B", o.b, "set literal")->required();

  auto* solve_ = app.add_subcommand("solve", "Solve the let system in a file");
  solve_->add_option("FILE", o.file, "program file")->required();

  auto* repl = app.add_subcommand("replace", "Replace X with Y within S");
  repl->add_option("S", o.a, "set literal")->required();
  repl->add_option("X", o.b, "set literal")->required();
  repl->add_option("Y", o.c, "set literal")->required();

  auto* strat = app.add_subcommand("stratify", "Levels or a contradictory cycle (exit 1)");
  strat->add_option("FORMULA", o.a, "formula")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a formula over the finite universe");
  eval->add_option("FORMULA", o.a, "formula")->required();
  eval->add_option("--env", o.env, "NAME=SET value for a free name")->allow_extra_args(false);
  eval->add_option("--k", o.k, "universe bound")->capture_default_str();
  eval->add_option("--max-k", o.max_k, "largest bound allowed")->capture_default_str();

  auto* univ = app.add_subcommand("universe", "List every set with a picture of at most k nodes");
  univ->add_option("--k", o.k, "universe bound")->required();
  univ->add_option("--max-k", o.max_k, "largest bound allowed")->capture_default_str();
  univ->add_option("--format", o.format, "text or json")->check(formats)->capture_default_str();

  auto* total = app.add_subcommand("totality", "Ideal and complete totality of a predicate");
  total->add_option("FORMULA", o.a, "predicate with one free variable")->required();
  total->add_option("--k", o.k, "universe bound")->capture_default_str();
  total->add_option("--max-k", o.max_k, "largest bound allowed")->capture_default_str();
  total->add_option("--strategies", o.strategies,
                    "comma-separated: bare, singleton, successor, pair-with, pair-with(SET)")
      ->capture_default_str();
  total->add_option("--term", o.terms, "extra hypothetical object containing @I")->allow_extra_args(false);
  total->add_option("--const", o.constants, "NAME=SET constant symbol")->allow_extra_args(false);
  total->add_option("--budget", o.budget, "maximum number of terms")->capture_default_str();
  total->add_option("--format", o.format, "text or json")->check(formats)->capture_default_str();

  auto* cons = app.add_subcommand("constructible", "Decide n-constructibility (exit 1 if not)");
  cons->add_option("X", o.a, "source set")->required();
  cons->add_option("Y", o.b, "target set")->required();
  cons->add_option("--n", o.n, "rounds")->required();
  cons->add_option("--width", o.width, "largest aggregation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* dot = app.add_subcommand("dot", "Graphviz picture of a set");
  dot->add_option("SET", o.a, "set literal")->required();
  dot->add_option("-o,--output", o.output, "write to a file instead of stdout");

  if (!args.empty() && !args.front().starts_with("-")) {
    const auto subs = app.get_subcommands([](CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(),
                                   [&](CLI::App* s) { return s->get_name() == args.front(); });
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n";
      return kExitUsage;
    }
  }

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> table = {
      {canon, canon_cmd}, {eq, eq_cmd},         {solve_, solve_cmd},
      {repl, replace_cmd}, {strat, stratify_cmd}, {eval, eval_cmd},
      {univ, universe_cmd}, {total, totality_cmd}, {cons, constructible_cmd},
      {dot, dot_cmd}};
  try {
    for (const auto& [cmd, fn] : table) {
      if (cmd->parsed()) {
        std::ostringstream buf;
        const int code = fn(o, buf);
        out << buf.str();
        return code;
      }
    }
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperset::cli
