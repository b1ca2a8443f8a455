#include "dcgx/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dcgx/engine.hpp"
#include "dcgx/grammar.hpp"
#include "dcgx/opcheck.hpp"
#include "dcgx/transform_empty.hpp"
#include "dcgx/transform_leftcorner.hpp"

namespace dcgx::cli {

namespace {

int load_grammar_file(const std::string& path, bool allow_reserved,
                      Grammar& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "dcgx: cannot read " << path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  ReadResult res = read_grammar(buf.str(), ReadOptions{allow_reserved});
  if (!res.ok()) {
    for (const Diagnostic& d : res.diagnostics)
      err << path << ":" << to_string(d) << "\n";
    return 2;
  }
  out = std::move(*res.grammar);
  return 0;
}

std::optional<Symbol> parse_symbol_spec(const std::string& spec) {
  auto slash = spec.rfind('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= spec.size())
    return std::nullopt;
  std::string name = spec.substr(0, slash);
  int arity = 0;
  for (char c : spec.substr(slash + 1)) {
    if (c < '0' || c > '9') return std::nullopt;
    arity = arity * 10 + (c - '0');
  }
  return Symbol{std::move(name), arity};
}

TokenString split_tokens(const std::string& text) {
  TokenString out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Solutions are reported in terms of the user's goal: the instantiated
// argument list of the goal term, so `--goal "s(S)"` prints the value
// bound to S.
std::string format_solution(const Term& goal_binding) {
  if (goal_binding.is_atom()) return goal_binding.name();
  std::string text = to_string(goal_binding);
  const std::size_t open = goal_binding.name().size();
  return text.substr(open + 1, text.size() - open - 2);
}

void print_tree(std::ostream& out, const Grammar& g,
                const DerivationTree& node, int indent) {
  out << std::string(2 * static_cast<std::size_t>(indent), ' ') << "["
      << node.span_begin << "," << node.span_end << ") ";
  if (node.rule_index >= 0 &&
      node.rule_index < static_cast<int>(g.rules.size())) {
    out << to_string(g.rules[node.rule_index]);
  }
  out << "\n";
  for (const DerivationTree& c : node.children)
    print_tree(out, g, c, indent + 1);
}

int do_check(const std::string& file, const std::string& start_spec,
             std::ostream& out, std::ostream& err) {
  Grammar g;
  if (int rc = load_grammar_file(file, false, g, err)) return rc;
  std::optional<Symbol> start;
  if (!start_spec.empty()) {
    start = parse_symbol_spec(start_spec);
    if (!start) {
      err << "dcgx: --start expects NAME/ARITY, got '" << start_spec << "'\n";
      return 2;
    }
  }
  OPVerdict v = is_offline_parsable(g, start);
  if (v.offline_parsable) {
    out << "offline-parsable\n";
    return 0;
  }
  out << "NOT offline-parsable: " << chain_to_string(*v.witness) << "\n";
  return 1;
}

int do_transform(const std::string& file, const std::string& stage,
                 const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  Grammar g;
  if (int rc = load_grammar_file(file, false, g, err)) return rc;
  Grammar result;
  try {
    if (stage == "empty") {
      result = eliminate_empty(g);
    } else if (stage == "encode") {
      result = encode(g);
    } else if (stage == "leftcorner") {
      result = eliminate_left_recursion(encode(g));
    } else {
      result = transform(g);
    }
  } catch (const Error& e) {
    err << "dcgx: " << e.what() << "\n";
    return 1;
  }
  std::string text = write_grammar(result);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "dcgx: cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  return 0;
}

struct ParseArgs {
  std::string file;
  std::string goal;
  std::string tokens;
  bool raw = false;
  int depth = 25;
  int max_solutions = 0;
  bool tree = false;
  bool no_occurs_check = false;
};

int do_parse(const ParseArgs& a, std::ostream& out, std::ostream& err) {
  Grammar g;
  if (int rc = load_grammar_file(a.file, a.raw, g, err)) return rc;
  ReadTermResult goal_res = read_term(a.goal);
  if (!goal_res.ok()) {
    for (const Diagnostic& d : goal_res.diagnostics)
      err << "dcgx: invalid goal: " << to_string(d) << "\n";
    return 2;
  }
  Term goal = std::move(*goal_res.term);
  if (goal.is_variable()) {
    err << "dcgx: goal must be a nonterminal call\n";
    return 2;
  }
  if (!nonterminals(g).contains(symbol_of(goal))) {
    err << "dcgx: unknown nonterminal: " << to_string(symbol_of(goal)) << "\n";
    return 2;
  }
  TokenString input = split_tokens(a.tokens);
  ParseOptions opts;
  if (a.max_solutions > 0) opts.max_solutions = a.max_solutions;
  opts.occurs_check = !a.no_occurs_check;

  std::vector<Solution> solutions;
  Grammar executed = g;
  try {
    if (a.raw) {
      solutions = parse_bounded(g, goal, input, a.depth, opts);
    } else {
      executed = transform(g);
      Term wrapped = Term::compound("g", {goal});
      solutions = parse(executed, wrapped, input, opts);
    }
  } catch (const UnknownNonterminalError& e) {
    err << "dcgx: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "dcgx: " << e.what() << "\n";
    return 1;
  }

  for (const Solution& sol : solutions) {
    const Term& user_binding = a.raw ? sol.binding : sol.binding.args()[0];
    out << format_solution(user_binding) << "\n";
    if (a.tree) print_tree(out, executed, sol.derivation, 1);
  }
  return solutions.empty() ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Definite clause grammar transformation and parsing"};
  app.name("dcgx");
  app.require_subcommand(1);

  std::string check_file, check_start;
  CLI::App* check =
      app.add_subcommand("check", "Decide offline-parsability of a grammar");
  check->add_option("FILE", check_file, "grammar file (.dcg)")->required();
  check->add_option("--start", check_start,
                    "start symbol NAME/ARITY for usefulness (default: all)");

  std::string tr_file, tr_stage, tr_out;
  CLI::App* tr = app.add_subcommand(
      "transform", "Rewrite a grammar for terminating top-down parsing");
  tr->add_option("FILE", tr_file, "grammar file (.dcg)")->required();
  tr->add_option("--stage", tr_stage, "empty | encode | leftcorner | full")
      ->required()
      ->check(CLI::IsMember({"empty", "encode", "leftcorner", "full"}));
  tr->add_option("-o,--output", tr_out, "output file (default: stdout)");

  ParseArgs pa;
  CLI::App* ps =
      app.add_subcommand("parse", "Enumerate all parses of a token string");
  ps->add_option("FILE", pa.file, "grammar file (.dcg)")->required();
  ps->add_option("--goal", pa.goal, "goal term, e.g. \"s(S)\"")->required();
  ps->add_option("--tokens", pa.tokens, "space-separated token string")
      ->required();
  ps->add_flag("--raw", pa.raw,
               "run the grammar as-is with a depth bound instead of "
               "transforming it first");
  ps->add_option("--depth", pa.depth, "depth bound for --raw (default 25)");
  ps->add_option("--max-solutions", pa.max_solutions,
                 "stop after this many solutions");
  ps->add_flag("--tree", pa.tree, "print the derivation tree of each solution");
  ps->add_flag("--no-occurs-check", pa.no_occurs_check,
               "unify without the occurs check");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("dcgx");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "dcgx: " << e.what() << "\n";
    return 2;
  }

  if (*check) return do_check(check_file, check_start, out, err);
  if (*tr) return do_transform(tr_file, tr_stage, tr_out, out, err);
  return do_parse(pa, out, err);
}

}  // namespace dcgx::cli
