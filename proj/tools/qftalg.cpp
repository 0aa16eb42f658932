// Command-line front end. Exit codes: 0 success, 1 law failure, 2 usage or
// input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qftalg/coqts.hpp"
#include "qftalg/errors.hpp"
#include "qftalg/expression.hpp"
#include "qftalg/format.hpp"
#include "qftalg/graphs.hpp"
#include "qftalg/json_io.hpp"
#include "qftalg/laws.hpp"
#include "qftalg/renorm.hpp"

using namespace qftalg;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output = "pretty";
  std::string mode = "feynman";
  bool strict = false;
  std::string expr;
  std::string lhs;
  std::string rhs;
  std::string vertex_file;
  std::string format = "dot";
  bool connected = false;
  std::string law = "all";
  std::uint64_t seed = 2024;
};

bool json_output(const Options& o) { return o.output == "json"; }

void emit(const Options& o, const Element& u) {
  if (json_output(o)) {
    std::cout << to_json(u).dump(2) << "\n";
  } else {
    std::cout << to_string(u) << "\n";
  }
}

void emit(const Options& o, const PropPoly& p) {
  if (json_output(o)) {
    std::cout << to_json(p).dump(2) << "\n";
  } else {
    std::cout << to_string(p) << "\n";
  }
}

void emit(const Options& o, const Tensor& t) {
  if (json_output(o)) {
    std::cout << to_json(t).dump(2) << "\n";
  } else {
    std::cout << to_string(t) << "\n";
  }
}

RMode require_chronological(const Options& o, const std::string& command) {
  if (o.mode == "wightman") {
    throw UsageError(command + " is only defined for --mode feynman; the Wightman contraction is not symmetric");
  }
  return RMode::Chronological;
}

// Lenient default: project onto ker ε with a warning.
KernelPolicy kernel_policy(const Options& o, const Element& u, const std::string& command) {
  if (o.strict) return KernelPolicy::Strict;
  if (!counit(u).is_zero()) {
    std::cerr << "warning: " << command << " needs an input with zero counit; subtracting " << to_string(counit(u))
              << " times the unit\n";
  }
  return KernelPolicy::Lenient;
}

Monomial single_monomial(const Element& u) {
  if (u.terms().size() != 1 || u.terms().begin()->second != PropPoly(1)) {
    throw UsageError("graphs takes a single monomial with coefficient 1");
  }
  return u.terms().begin()->first;
}

Vertex read_vertex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read vertex file " + path);
  try {
    return vertex_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<Law> laws_for(const std::string& name) {
  if (name == "coalgebra") return {Law::CoalgebraDelta, Law::CoalgebraDeltaPrime};
  if (name == "bialgebra") return {Law::Bialgebra};
  if (name == "comodule") return {Law::Comodule};
  if (name == "antipode") return {Law::Antipode};
  return {Law::CoalgebraDelta, Law::CoalgebraDeltaPrime, Law::Bialgebra, Law::Comodule, Law::Antipode};
}

int run_check(const Options& o) {
  std::uint64_t seed = o.seed;
  if (const char* env = std::getenv("QFTALG_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("QFTALG_SEED is not a number: ") + env);
    }
  }
  bool ok = true;
  Json reports = Json::array();
  for (Law law : laws_for(o.law)) {
    LawReport r = run_law(law, seed);
    ok = ok && r.passed();
    if (json_output(o)) {
      reports.push_back(to_json(r));
    } else {
      std::cout << r.law_name << ": " << r.instances_checked << " checked, " << r.failures.size() << " failures\n";
      for (const auto& f : r.failures) {
        std::cout << "  " << f.law << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
      }
    }
  }
  if (json_output(o)) std::cout << reports.dump(2) << "\n";
  return ok ? 0 : 1;
}

int dispatch(const std::string& command, const Options& o) {
  if (command == "check") return run_check(o);
  if (command == "wick") {
    RMode mode = o.mode == "wightman" ? RMode::Operator : RMode::Chronological;
    emit(o, twisted_product(parse_expression(o.lhs), parse_expression(o.rhs), mode));
    return 0;
  }

  const Element u = parse_expression(o.expr);
  if (command == "delta") {
    emit(o, coproduct(u));
  } else if (command == "delta-prime") {
    emit(o, coproduct_prime(u));
  } else if (command == "counit") {
    emit(o, counit(u));
  } else if (command == "T") {
    emit(o, chronological(u, require_chronological(o, command)));
  } else if (command == "t") {
    emit(o, t_functional(u, require_chronological(o, command)));
  } else if (command == "Tc") {
    require_chronological(o, command);
    emit(o, connected_T(u, kernel_policy(o, u, command)));
  } else if (command == "tc") {
    require_chronological(o, command);
    emit(o, t_c_functional(u, kernel_policy(o, u, command)));
  } else if (command == "TR") {
    require_chronological(o, command);
    Vertex v = read_vertex(o.vertex_file);
    emit(o, renormalized_T(u, v, kernel_policy(o, u, command)));
  } else if (command == "graphs") {
    std::cout << export_graphs(single_monomial(u), o.connected, parse_graph_format(o.format));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wick products, chronological products and their Hopf-algebraic laws"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"pretty", "json"}));
  app.add_option("--mode", o.mode, "Contraction: feynman (chronological) or wightman (operator)")
      ->check(CLI::IsMember({"feynman", "wightman"}));
  app.add_flag("--strict", o.strict, "Reject inputs outside the kernel of the counit");

  auto with_expr = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--expr", o.expr, "Expression")->required();
    return sub;
  };
  with_expr("delta", "Coproduct");
  with_expr("delta-prime", "Primitive coproduct");
  with_expr("counit", "Counit");
  with_expr("T", "Chronological product");
  with_expr("t", "Counit of the chronological product");
  with_expr("Tc", "Connected chronological product");
  with_expr("tc", "Counit of the connected chronological product");
  with_expr("TR", "Renormalized chronological product")
      ->add_option("--vertex", o.vertex_file, "Vertex rules (JSON)")
      ->required();
  auto* graphs = with_expr("graphs", "Feynman graphs of a monomial");
  graphs->add_flag("--connected", o.connected, "Connected graphs only");
  graphs->add_option("--format", o.format, "dot or json");

  auto* wick = app.add_subcommand("wick", "Twisted (Wick) product of two expressions");
  wick->add_option("--lhs", o.lhs)->required();
  wick->add_option("--rhs", o.rhs)->required();

  auto* check = app.add_subcommand("check", "Run the law checkers");
  check->add_option("--law", o.law)->check(CLI::IsMember({"coalgebra", "bialgebra", "comodule", "antipode", "all"}));
  check->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), o);
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const PowerError& e) {
    std::cerr << "error at offset " << e.offset << ": " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const NotInKernel& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const UnsupportedFormat& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const VertexError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
