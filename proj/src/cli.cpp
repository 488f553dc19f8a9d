#include "algeo/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "algeo/error.hpp"
#include "algeo/galois.hpp"
#include "algeo/lattice.hpp"
#include "algeo/parser.hpp"
#include "algeo/relations.hpp"
#include "algeo/rep.hpp"

namespace algeo {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string algebra_path, algebra2_path;
  std::string rep_path, rep2_path, group_path;
  std::string system_path, points_path, subst_path, premises_path;
  std::string pair_text, conclusion_text, term_text;
  std::string out_path;
  std::string format = "text";
  std::string mode = "auto";
  int vars = 1;
  int module_vars = 0;
  int group_vars = 0;
  int depth = 2;
  int system_limit = 3;
  bool report = false;
  Caps caps;
};

std::vector<Point> parse_points(const std::string& text, int n, int carrier,
                                const std::string& path) {
  std::vector<Point> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string digits;
    Point p;
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == '(') continue;
      if (c == ',' || c == ')') {
        if (digits.empty()) {
          if (c == ')' && p.empty()) continue;  // "()" = empty point
          throw ParseError(path, line_no, "malformed point");
        }
        p.push_back(std::stoi(digits));
        digits.clear();
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(path, line_no, std::string("unexpected character '") + c + "' in point");
      digits += c;
    }
    if (!digits.empty()) throw ParseError(path, line_no, "missing ')' in point");
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    if (static_cast<int>(p.size()) != n)
      throw ParseError(path, line_no, "point has " + std::to_string(p.size()) +
                                          " coordinates, expected " + std::to_string(n));
    for (int c : p)
      if (c < 0 || c >= carrier)
        throw ParseError(path, line_no, "coordinate " + std::to_string(c) +
                                            " outside carrier 0.." + std::to_string(carrier - 1));
    out.push_back(std::move(p));
  }
  return out;
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  return load_algebra(slurp(path), path);
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) throw ParseError(opt.out_path, 0, "cannot open output file");
  f << text;
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
  const Caps& caps = opt.caps;

  if (command == "solve") {
    FiniteAlgebra h = load_algebra_file(opt.algebra_path);
    EquationSystem system{opt.vars, parse_system(slurp(opt.system_path), h.signature(), opt.vars,
                                                 opt.system_path)};
    AlgebraicSet solutions = solve_system(h, opt.vars, system, caps);
    emit(opt, out, print_point_set(solutions.points));
    return 0;
  }

  if (command == "closure-set") {
    FiniteAlgebra h = load_algebra_file(opt.algebra_path);
    auto points = parse_points(slurp(opt.points_path), opt.vars, h.size(), opt.points_path);
    AlgebraicSet closed = closure_of_set(h, opt.vars, points, caps);
    emit(opt, out, print_point_set(closed.points));
    return 0;
  }

  if (command == "closure-pair") {
    FiniteAlgebra h = load_algebra_file(opt.algebra_path);
    Equation pair = parse_equation(opt.pair_text, h.signature(), opt.vars);
    bool member = false;
    if (!opt.system_path.empty()) {
      EquationSystem system{opt.vars, parse_system(slurp(opt.system_path), h.signature(),
                                                   opt.vars, opt.system_path)};
      member = system_closure_membership(h, opt.vars, system, pair, caps);
    } else {
      auto points = parse_points(slurp(opt.points_path), opt.vars, h.size(), opt.points_path);
      member = congruence_membership(h, opt.vars, points, pair);
    }
    emit(opt, out, std::string(member ? "true" : "false") + "\n");
    return 0;
  }

  if (command == "algebraic") {
    FiniteAlgebra h = load_algebra_file(opt.algebra_path);
    auto points = parse_points(slurp(opt.points_path), opt.vars, h.size(), opt.points_path);
    emit(opt, out, std::string(is_algebraic(h, opt.vars, points, caps) ? "true" : "false") + "\n");
    return 0;
  }

  if (command == "lattice") {
    FiniteAlgebra h = load_algebra_file(opt.algebra_path);
    LatticeMode mode = LatticeMode::automatic;
    if (opt.mode == "exhaustive") mode = LatticeMode::exhaustive;
    if (opt.mode == "generators") mode = LatticeMode::generators;
    ClosedSetLattice lattice = enumerate_closed_sets(h, opt.vars, caps, mode);
    if (opt.format == "dot")
      emit(opt, out, export_hasse_dot(lattice));
    else
      emit(opt, out, lattice_report(lattice, caps));
    return 0;
  }

  if (command == "equiv") {
    FiniteAlgebra h1 = load_algebra_file(opt.algebra_path);
    FiniteAlgebra h2 = load_algebra_file(opt.algebra2_path);
    EquivBounds bounds{opt.vars, opt.depth, opt.system_limit};
    EquivalenceVerdict verdict = geom_equivalent_bounded(h1, h2, bounds, caps);
    SeparationReport separation = separation_equivalence(h1, h2, caps);
    std::ostringstream text;
    if (opt.report) {
      text << "status: " << (verdict.distinguished ? "distinguished" : "equivalent-up-to-bound")
           << "\n";
      text << "bounds.vars: " << bounds.max_vars << "\n";
      text << "bounds.depth: " << bounds.depth << "\n";
      text << "bounds.system-limit: " << bounds.system_limit << "\n";
      if (verdict.witness) {
        text << "witness.vars: " << verdict.witness->var_count << "\n";
        text << "witness.system-size: " << verdict.witness->system.size() << "\n";
        text << "witness.pair: " << print_equation(verdict.witness->pair, h1.signature()) << "\n";
        text << "witness.holds-in: " << (verdict.witness->holds_in == 1 ? "first" : "second")
             << "\n";
      }
      text << "separation.forward: " << (separation.forward ? "true" : "false") << "\n";
      text << "separation.backward: " << (separation.backward ? "true" : "false") << "\n";
    } else {
      text << equivalence_report(verdict, h1.signature());
      text << separation_text(separation);
    }
    // The separation criterion implies bounded equivalence; a conflict
    // would falsify one of the implementations.
    if (separation.equivalent() && verdict.distinguished) {
      text << "error: separation criterion and bounded search disagree\n";
      emit(opt, out, text.str());
      return 1;
    }
    emit(opt, out, text.str());
    return 0;
  }

  if (command == "identities") {
    FiniteAlgebra h = load_algebra_file(opt.algebra_path);
    std::ostringstream text;
    // labeled with the enumeration depth; the output stays a valid system file
    text << "# identities of " << h.name() << ", " << opt.vars << " variables, depth "
         << opt.depth << "\n";
    for (const auto& eq : identities_up_to(h, opt.vars, opt.depth, caps))
      text << print_equation(eq, h.signature()) << "\n";
    emit(opt, out, text.str());
    return 0;
  }

  if (command == "quasi") {
    FiniteAlgebra h = load_algebra_file(opt.algebra_path);
    QuasiIdentity q;
    q.var_count = opt.vars;
    q.premises = parse_system(slurp(opt.premises_path), h.signature(), opt.vars,
                              opt.premises_path);
    q.conclusion = parse_equation(opt.conclusion_text, h.signature(), opt.vars);
    emit(opt, out, std::string(check_quasi_identity(h, q, caps) ? "true" : "false") + "\n");
    return 0;
  }

  if (command == "reduce") {
    FiniteAlgebra h = load_algebra_file(opt.algebra_path);
    EquationSystem system{opt.vars, parse_system(slurp(opt.system_path), h.signature(), opt.vars,
                                                 opt.system_path)};
    EquationSystem reduced = reduce_system(h, opt.vars, system, caps);
    std::ostringstream text;
    for (const auto& eq : reduced.equations) text << print_equation(eq, h.signature()) << "\n";
    emit(opt, out, text.str());
    return 0;
  }

  if (command == "pullback") {
    FiniteAlgebra h = load_algebra_file(opt.algebra_path);
    Substitution s = parse_substitution(slurp(opt.subst_path), h.signature(), opt.vars,
                                        opt.subst_path);
    EquationSystem system{opt.vars, parse_system(slurp(opt.system_path), h.signature(), opt.vars,
                                                 opt.system_path)};
    Equation pair = parse_equation(opt.pair_text, h.signature(), s.source_vars);
    bool member = pullback_membership(h, s, system, pair, caps);
    emit(opt, out, std::string(member ? "true" : "false") + "\n");
    return 0;
  }

  if (command == "rep-solve" || command == "rep-closure") {
    FiniteRepresentation rep = load_representation(slurp(opt.rep_path), opt.rep_path);
    auto system = parse_action_system(slurp(opt.system_path), opt.module_vars, opt.group_vars,
                                      rep.modulus, opt.system_path);
    if (command == "rep-solve") {
      std::ostringstream text;
      for (const auto& p : solve_action_system(rep, opt.module_vars, opt.group_vars, system, caps))
        text << print_rep_point(p) << "\n";
      emit(opt, out, text.str());
      return 0;
    }
    ActionTerm w0 = parse_action_term(opt.term_text, opt.module_vars, opt.group_vars, rep.modulus);
    bool member = action_closure_membership(rep, opt.module_vars, opt.group_vars, system, w0, caps);
    emit(opt, out, std::string(member ? "true" : "false") + "\n");
    return 0;
  }

  if (command == "rep-triangular") {
    FiniteRepresentation r1 = load_representation(slurp(opt.rep_path), opt.rep_path);
    FiniteRepresentation r2 = load_representation(slurp(opt.rep2_path), opt.rep2_path);
    emit(opt, out, print_representation(triangular_product(r1, r2, caps)));
    return 0;
  }

  if (command == "rep-wreath") {
    FiniteRepresentation rep = load_representation(slurp(opt.rep_path), opt.rep_path);
    GroupTable g = load_group_table(slurp(opt.group_path), opt.group_path);
    emit(opt, out, print_representation(wreath_product(rep, g, caps)));
    return 0;
  }

  throw Error("unknown command '" + command + "'");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"algebraic geometry workbench over finite algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
    cmd->add_option("--max-points", opt.caps.max_points, "cap on point grids (|H|^n)")
        ->capture_default_str();
    cmd->add_option("--max-terms", opt.caps.max_terms, "cap on enumerated terms")
        ->capture_default_str();
  };

  std::vector<std::pair<std::string, CLI::App*>> cmds;
  auto sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_common(cmd);
    cmds.push_back({name, cmd});
    return cmd;
  };

  {
    auto* c = sub("solve", "solve an equation system over a finite algebra");
    c->add_option("--algebra", opt.algebra_path, "algebra file")->required();
    c->add_option("--vars", opt.vars, "number of variables")->required();
    c->add_option("--system", opt.system_path, "system file")->required();
  }
  {
    auto* c = sub("closure-set", "least algebraic set containing the given points");
    c->add_option("--algebra", opt.algebra_path)->required();
    c->add_option("--vars", opt.vars)->required();
    c->add_option("--points", opt.points_path, "point set file")->required();
  }
  {
    auto* c = sub("closure-pair", "membership of a pair in a closed congruence");
    c->add_option("--algebra", opt.algebra_path)->required();
    c->add_option("--vars", opt.vars)->required();
    c->add_option("--system", opt.system_path, "congruence given as T'' of this system");
    c->add_option("--points", opt.points_path, "congruence given as A' of these points");
    c->add_option("--pair", opt.pair_text, "equation 'term = term'")->required();
  }
  {
    auto* c = sub("algebraic", "test whether a point set is closed");
    c->add_option("--algebra", opt.algebra_path)->required();
    c->add_option("--vars", opt.vars)->required();
    c->add_option("--points", opt.points_path)->required();
  }
  {
    auto* c = sub("lattice", "enumerate the lattice of algebraic sets");
    c->add_option("--algebra", opt.algebra_path)->required();
    c->add_option("--vars", opt.vars)->required();
    c->add_option("--format", opt.format, "text | dot")->check(CLI::IsMember({"text", "dot"}));
    c->add_option("--mode", opt.mode, "auto | exhaustive | generators")
        ->check(CLI::IsMember({"auto", "exhaustive", "generators"}));
  }
  {
    auto* c = sub("equiv", "bounded geometric equivalence of two algebras");
    c->add_option("--algebra", opt.algebra_path)->required();
    c->add_option("--algebra2", opt.algebra2_path)->required();
    c->add_option("--vars", opt.vars, "maximal variable count");
    c->add_option("--depth", opt.depth, "term enumeration depth")->capture_default_str();
    c->add_option("--max-systems", opt.system_limit, "maximal premises per system")
        ->capture_default_str();
    c->add_flag("--report", opt.report, "structured key: value output");
  }
  {
    auto* c = sub("identities", "identities of an algebra up to a depth");
    c->add_option("--algebra", opt.algebra_path)->required();
    c->add_option("--vars", opt.vars)->required();
    c->add_option("--depth", opt.depth);
  }
  {
    auto* c = sub("quasi", "check a quasi-identity");
    c->add_option("--algebra", opt.algebra_path)->required();
    c->add_option("--vars", opt.vars)->required();
    c->add_option("--premises", opt.premises_path, "system file of premises")->required();
    c->add_option("--conclusion", opt.conclusion_text, "equation 'term = term'")->required();
  }
  {
    auto* c = sub("reduce", "inclusion-minimal subsystem with the same solutions");
    c->add_option("--algebra", opt.algebra_path)->required();
    c->add_option("--vars", opt.vars)->required();
    c->add_option("--system", opt.system_path)->required();
  }
  {
    auto* c = sub("pullback", "membership in a congruence pulled back along a substitution");
    c->add_option("--algebra", opt.algebra_path)->required();
    c->add_option("--vars", opt.vars, "variables of the target space X")->required();
    c->add_option("--subst", opt.subst_path, "substitution file (one image term per line)")
        ->required();
    c->add_option("--system", opt.system_path, "system over X")->required();
    c->add_option("--pair", opt.pair_text, "equation over Y")->required();
  }
  {
    auto* c = sub("rep-solve", "solve an action-type system over a representation");
    c->add_option("--rep", opt.rep_path, "representation file")->required();
    c->add_option("--module-vars", opt.module_vars)->required();
    c->add_option("--group-vars", opt.group_vars)->required();
    c->add_option("--system", opt.system_path, "action term file")->required();
  }
  {
    auto* c = sub("rep-closure", "action-type closure membership");
    c->add_option("--rep", opt.rep_path)->required();
    c->add_option("--module-vars", opt.module_vars)->required();
    c->add_option("--group-vars", opt.group_vars)->required();
    c->add_option("--system", opt.system_path)->required();
    c->add_option("--term", opt.term_text, "action term to test")->required();
  }
  {
    auto* c = sub("rep-triangular", "triangular product of two representations");
    c->add_option("--rep", opt.rep_path)->required();
    c->add_option("--rep2", opt.rep2_path)->required();
  }
  {
    auto* c = sub("rep-wreath", "wreath product of a representation with a group");
    c->add_option("--rep", opt.rep_path)->required();
    c->add_option("--group", opt.group_path, "group table file")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string command;
  for (const auto& [name, cmd] : cmds)
    if (cmd->parsed()) command = name;

  try {
    if (command == "closure-pair" && opt.system_path.empty() == opt.points_path.empty())
      throw Error("closure-pair needs exactly one of --system / --points");
    if (opt.vars < 1 && command != "rep-solve" && command != "rep-closure" &&
        command != "rep-triangular" && command != "rep-wreath")
      throw Error("--vars must be at least 1");
    return dispatch(command, opt, out);
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace algeo
