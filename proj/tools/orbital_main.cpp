#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orbital/closure.hpp"
#include "orbital/errors.hpp"
#include "orbital/io.hpp"
#include "orbital/oracle.hpp"
#include "orbital/zoo.hpp"

namespace {

using namespace orbital;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  return out;
}

void emit_group(const PermGroup& g, const std::string& out_path) {
  if (out_path.empty()) {
    write_group(std::cout, g);
  } else {
    auto out = open_out(out_path);
    write_group(out, g);
  }
}

void emit_scheme(const CoherentConfiguration& x, const std::string& out_path) {
  if (out_path.empty()) {
    write_scheme(std::cout, x);
  } else {
    auto out = open_out(out_path);
    write_scheme(out, x);
  }
}

void print_group_order(const PermGroup& g) {
  auto order = g.order();
  if (order)
    std::cout << "order " << *order << "\n";
  else
    std::cout << "order > element cap\n";
}

int run(int argc, char** argv) {
  CLI::App app{
      "2-closures of 3/2-transitive permutation groups and isomorphisms of their schemes"};
  app.require_subcommand(1);

  std::string group_path, group_path2, scheme_path, psi_path, out_path;
  int threshold = 169;
  int karg = 3;
  std::uint64_t budget = tuple_budget();

  auto* closure2 = app.add_subcommand("closure2", "2-closure of a 3/2-transitive group");
  closure2->add_option("group-file", group_path)->required();
  closure2->add_option("--threshold", threshold, "max degree routed to the oracle branch");
  closure2->add_option("--out", out_path, "write the closure group file here");

  auto* closurek = app.add_subcommand("closurek", "k-closure (not 2-transitive input)");
  closurek->add_option("group-file", group_path)->required();
  closurek->add_option("--k", karg, "closure parameter")->required();
  closurek->add_option("--threshold", threshold);
  closurek->add_option("--budget", budget, "tuple budget");
  closurek->add_option("--out", out_path);

  auto* iso = app.add_subcommand("iso", "isomorphisms between two group schemes");
  iso->add_option("group-file", group_path)->required();
  iso->add_option("group-file2", group_path2)->required();
  iso->add_option("--colored", psi_path, "psi file: one '<color> <color>' line per color");
  iso->add_option("--threshold", threshold);
  iso->add_option("--out", out_path);

  auto* inv = app.add_subcommand("inv", "scheme of a group");
  inv->add_option("group-file", group_path)->required();
  inv->add_option("--out", out_path);

  auto* wl = app.add_subcommand("wl", "WL-closure of relations or scheme classes");
  wl->add_option("input-file", scheme_path)->required();
  wl->add_option("--out", out_path);

  auto* check = app.add_subcommand("check", "predicate table for a group");
  check->add_option("group-file", group_path)->required();

  auto* zoo = app.add_subcommand("zoo", "construct a zoo group: agl1 p [d] | agammal1 p d | "
                                        "as0 p d | affine p dim <dim*dim entries per matrix>...");
  std::vector<std::string> zoo_args;
  zoo->add_option("name-and-params", zoo_args)->expected(-1);
  zoo->add_option("--out", out_path);

  auto* oracle_aut = app.add_subcommand("oracle-aut", "automorphism group of a scheme file");
  oracle_aut->add_option("scheme-file", scheme_path)->required();
  oracle_aut->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (closure2->parsed()) {
    PermGroup g = read_group_file(group_path);
    TwoClosureResult result = two_closure(g, threshold);
    if (result.step == 2 && g.degree() <= 20) {
      std::uint64_t factorial = 1;
      for (int i = 2; i <= g.degree(); ++i) factorial *= i;
      std::cout << "order " << factorial << "\n";
    } else if (result.step == 2) {
      std::cout << "order " << g.degree() << "!\n";
    } else {
      print_group_order(result.closure);
    }
    std::cout << "branch step " << result.step << "\n";
    if (result.below_classification_bound)
      std::cout << "caveat: classification steps ran below the degree bound; "
                   "cross-check against oracle-aut\n";
    emit_group(result.closure, out_path);
    return 0;
  }
  if (closurek->parsed()) {
    PermGroup g = read_group_file(group_path);
    PermGroup k = k_closure(g, karg, budget, threshold);
    print_group_order(k);
    emit_group(k, out_path);
    return 0;
  }
  if (iso->parsed()) {
    PermGroup g = read_group_file(group_path);
    PermGroup g2 = read_group_file(group_path2);
    IsoSet result;
    if (psi_path.empty()) {
      result = iso_schemes(g, g2, threshold);
    } else {
      CoherentConfiguration x = scheme_of_group(g);
      std::ifstream psi_in(psi_path);
      if (!psi_in) throw ParseError("cannot open psi file: " + psi_path);
      ColorBijection psi = read_color_bijection(psi_in, x.rank());
      result = iso_colored(g, g2, psi, threshold);
    }
    write_iso_set(std::cout, result);
    if (!out_path.empty()) {
      auto out = open_out(out_path);
      write_iso_set(out, result);
    }
    return 0;
  }
  if (inv->parsed()) {
    PermGroup g = read_group_file(group_path);
    CoherentConfiguration x = scheme_of_group(g);
    std::cout << "rank " << x.rank() << "\n";
    emit_scheme(x, out_path);
    return 0;
  }
  if (wl->parsed()) {
    std::ifstream probe(scheme_path);
    if (!probe) throw ParseError("cannot open file: " + scheme_path);
    std::string first;
    while (std::getline(probe, first)) {
      auto start = first.find_first_not_of(" \t\r\n");
      if (start != std::string::npos && first[start] != '#') break;
    }
    std::vector<BinaryRelation> rels;
    if (first.find("coherent-config") != std::string::npos) {
      rels = read_scheme_file(scheme_path).relations();
    } else {
      std::ifstream in(scheme_path);
      rels = read_relations(in);
    }
    CoherentConfiguration x = wl_closure(rels);
    std::cout << "rank " << x.rank() << "\n";
    emit_scheme(x, out_path);
    return 0;
  }
  if (check->parsed()) {
    PermGroup g = read_group_file(group_path);
    std::cout << "degree " << g.degree() << "\n";
    auto order = g.order();
    if (order)
      std::cout << "order " << *order << "\n";
    else
      std::cout << "order > element cap\n";
    bool transitive = g.is_transitive();
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "transitive " << yesno(transitive) << "\n";
    if (transitive) {
      std::cout << "rank " << g.rank() << "\n";
      std::cout << "2-transitive " << yesno(g.is_2transitive()) << "\n";
      std::cout << "primitive " << yesno(g.is_primitive()) << "\n";
      std::cout << "frobenius " << yesno(g.is_frobenius()) << "\n";
    } else {
      std::cout << "rank -\n2-transitive -\nprimitive -\nfrobenius -\n";
    }
    std::cout << "three-halves-transitive " << yesno(g.is_three_halves_transitive()) << "\n";
    return 0;
  }
  if (zoo->parsed()) {
    if (zoo_args.empty()) throw ParseError("zoo: missing constructor name");
    const std::string& name = zoo_args[0];
    auto arg_int = [&](std::size_t i) {
      if (i >= zoo_args.size()) throw ParseError("zoo: missing parameter");
      return std::stoi(zoo_args[i]);
    };
    PermGroup g = PermGroup::trivial(1);
    if (name == "agl1") {
      int p = arg_int(1);
      int d = zoo_args.size() > 2 ? arg_int(2) : 1;
      g = agl1(FiniteField(p, d));
    } else if (name == "agammal1") {
      g = agammal1(arg_int(1), arg_int(2));
    } else if (name == "as0") {
      g = as0(arg_int(1), arg_int(2));
    } else if (name == "affine") {
      int p = arg_int(1);
      int dim = arg_int(2);
      std::size_t pos = 3;
      std::vector<Matrix> mats;
      while (pos < zoo_args.size()) {
        Matrix m(dim, std::vector<int>(dim));
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) m[i][j] = arg_int(pos++);
        mats.push_back(std::move(m));
      }
      g = affine_group(p, dim, mats);
    } else {
      throw ParseError("zoo: unknown constructor " + name);
    }
    print_group_order(g);
    emit_group(g, out_path);
    return 0;
  }
  if (oracle_aut->parsed()) {
    CoherentConfiguration x = read_scheme_file(scheme_path);
    PermGroup aut = aut_oracle(x);
    print_group_order(aut);
    emit_group(aut, out_path);
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const OverCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const OverBudgetError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
