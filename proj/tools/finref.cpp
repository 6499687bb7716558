#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finref/category.hpp"
#include "finref/io.hpp"
#include "finref/reflect.hpp"
#include "finref/search.hpp"
#include "finref/topalg.hpp"
#include "finref/verify.hpp"
#include "finref/mutate.hpp"

using namespace finref;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

Mask subset_mask(const std::vector<int>& ids, int n) {
  Mask m = 0;
  for (int i : ids) {
    if (i < 0 || i >= n)
      throw Error(ErrorKind::InputError,
                  "subset index " + std::to_string(i) + " out of range");
    m |= bit(i);
  }
  return m;
}

std::string set_to_string(const FinSpace& X, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : bits_of(m)) {
    if (!first) out += ",";
    out += X.label(i);
    first = false;
  }
  return out + "}";
}

int cmd_check(const std::string& file, bool json) {
  FinSpace X = space_from_json(load_json(file));
  Json report = Json::object();
  for (Axiom a : kAllAxioms) report[axiom_name(a)] = check_axiom(X, a);
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << X.n << " points, " << open_set_count(X) << " open sets\n";
    for (Axiom a : kAllAxioms)
      std::cout << "  " << axiom_name(a) << ": "
                << (report[axiom_name(a)].get<bool>() ? "yes" : "no") << "\n";
  }
  return kExitTrue;
}

int cmd_reflect(const std::string& file, const std::string& axiom,
                const std::string& method, bool json) {
  FinSpace X = space_from_json(load_json(file));
  auto m = method_from_name(method);
  if (!m) throw Error(ErrorKind::InputError, "unknown method: " + method);
  Reflection r = reflect(X, builtin(axiom), *m);
  if (json) {
    std::cout << reflection_report(r).dump(2) << "\n";
  } else {
    std::cout << axiom << " reflection (" << method_name(r.method_used)
              << "): " << X.n << " -> " << r.target.n << " points\n";
    for (int x = 0; x < X.n; ++x)
      std::cout << "  " << X.label(x) << " -> "
                << r.target.label(r.arrow_table[x]) << "\n";
    CMap arrow = r.arrow();
    std::cout << "  quotient map: " << (is_quotient_map(arrow) ? "yes" : "no")
              << ", open: " << (is_open_map(arrow) ? "yes" : "no") << "\n";
  }
  return kExitTrue;
}

int cmd_copen(const std::string& file, const std::string& axiom,
              const std::vector<int>& subset, bool json) {
  FinSpace X = space_from_json(load_json(file));
  const CategorySpec& C = builtin(axiom);
  if (!subset.empty()) {
    bool open = is_c_open(X, subset_mask(subset, X.n), C);
    if (json)
      std::cout << Json{{"axiom", axiom}, {"subset", subset}, {"open", open}}
                       .dump(2)
                << "\n";
    else
      std::cout << (open ? "open" : "not open") << " in the " << axiom
                << "-open topology\n";
    return open ? kExitTrue : kExitFalse;
  }
  std::vector<Mask> fam = c_open_sets(X, C);
  if (json) {
    Json opens = Json::array();
    for (Mask u : fam) opens.push_back(bits_of(u));
    std::cout << Json{{"axiom", axiom}, {"opens", opens}}.dump(2) << "\n";
  } else {
    std::cout << fam.size() << " " << axiom << "-open sets:\n";
    for (Mask u : fam) std::cout << "  " << set_to_string(X, u) << "\n";
  }
  return kExitTrue;
}

int cmd_coincide(const std::string& file, const std::string& coarse,
                 const std::string& fine, bool json) {
  FinSpace X = space_from_json(load_json(file));
  auto c = axiom_from_name(coarse), e = axiom_from_name(fine);
  if (!c || !e)
    throw Error(ErrorKind::UnknownAxiom, "coincide needs built-in axioms");
  bool eq = coincide(X, *c, *e);
  if (json)
    std::cout << Json{{"coarse", coarse}, {"fine", fine}, {"coincide", eq}}
                     .dump(2)
              << "\n";
  else
    std::cout << coarse << " and " << fine << " reflections "
              << (eq ? "coincide" : "differ") << "\n";
  return eq ? kExitTrue : kExitFalse;
}

int cmd_subspace(const std::string& file, const std::string& axiom,
                 const std::vector<int>& subset, bool json) {
  FinSpace X = space_from_json(load_json(file));
  auto a = axiom_from_name(axiom);
  if (!a)
    throw Error(ErrorKind::UnknownAxiom, "subspace needs a built-in axiom");
  Mask A = subset_mask(subset, X.n);
  bool ok = preserves_subspace(X, A, *a);
  auto [c1, c2] = pr_subspace_criterion(X, A, *a);
  if (json)
    std::cout << Json{{"axiom", axiom},
                      {"subset", subset},
                      {"preserved", ok},
                      {"arrow_separation", c1},
                      {"trace_condition", c2}}
                     .dump(2)
              << "\n";
  else
    std::cout << "subspace " << set_to_string(X, A) << " "
              << (ok ? "preserved" : "not preserved") << " by the " << axiom
              << " reflection (separation " << (c1 ? "holds" : "fails")
              << ", traces " << (c2 ? "hold" : "fail") << ")\n";
  return ok ? kExitTrue : kExitFalse;
}

int cmd_product(const std::string& file, const std::string& file2,
                const std::string& axiom, bool json) {
  FinSpace X = space_from_json(load_json(file));
  FinSpace Y = space_from_json(load_json(file2));
  auto a = axiom_from_name(axiom);
  if (!a)
    throw Error(ErrorKind::UnknownAxiom, "product needs a built-in axiom");
  std::vector<FinSpace> pair = {X, Y};
  ProductComparison pc = product_preservation(pair, *a);
  bool ok = pc.mu_well_defined && pc.is_homeo;
  if (json)
    std::cout << Json{{"axiom", axiom},
                      {"well_defined", pc.mu_well_defined},
                      {"homeomorphism", pc.is_homeo},
                      {"arrows_open", pc.arrows_open}}
                     .dump(2)
              << "\n";
  else
    std::cout << "the " << axiom << " reflection "
              << (ok ? "preserves" : "does not preserve")
              << " this product (arrows "
              << (pc.arrows_open ? "open" : "not all open") << ")\n";
  return ok ? kExitTrue : kExitFalse;
}

int cmd_alg(const std::string& file, bool json) {
  Structure U = structure_from_json(load_json(file));
  SatisfiesResult sat = satisfies(U);
  std::size_t congruences = U.n <= 8 ? all_congruences(U).size() : 0;
  if (json) {
    Json out{{"carrier", U.n}, {"satisfies", sat.ok}};
    if (!sat.ok) out["violated"] = sat.equation;
    if (U.n <= 8) out["congruences"] = congruences;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "carrier " << U.n << ", equations "
              << (sat.ok ? "hold" : "fail (" + sat.equation + ")") << "\n";
    if (U.n <= 8) std::cout << congruences << " congruences\n";
  }
  return sat.ok ? kExitTrue : kExitFalse;
}

int cmd_topalg(const std::string& file, bool json) {
  TopStructure T = topstructure_from_json(load_json(file));
  ContinuityMode mode = continuity_mode(T);
  Json out{{"carrier", T.alg.n}, {"mode", mode_name(mode)}};
  if (T.alg.sig == group_signature()) {
    GroupPredicates g = group_predicates(T);
    out["left_topological"] = g.left_topological;
    out["right_topological"] = g.right_topological;
    out["semitopological"] = g.semitopological;
    out["topological"] = g.topological;
    out["smallest_closed_subgroup"] =
        (g.left_topological || g.right_topological)
            ? Json(bits_of(smallest_closed_subgroup(T)))
            : Json();
  }
  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "carrier " << T.alg.n << ", " << mode_name(mode) << "\n";
    if (T.alg.sig == group_signature())
      std::cout << "  left/right/semi/topological: "
                << out["left_topological"].get<bool>() << "/"
                << out["right_topological"].get<bool>() << "/"
                << out["semitopological"].get<bool>() << "/"
                << out["topological"].get<bool>() << "\n";
  }
  return kExitTrue;
}

int cmd_verify(const std::string& suite, int max_points, int jobs,
               const std::vector<std::string>& mutate, bool json) {
  for (const std::string& m : mutate) set_mutation(m, true);
  VerificationReport report = run_suite(suite, max_points, jobs);
  if (json) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    for (const PropertyResult& p : report.results) {
      std::cout << (p.passed ? "pass" : "FAIL") << "  " << p.id << "  ("
                << p.instances << " instances, " << p.seconds << "s)\n";
      if (!p.passed)
        std::cout << "      counterexample: " << p.counterexample.dump()
                  << "\n";
    }
    std::cout << (report.ok ? "all properties passed"
                            : "some properties FAILED")
              << "\n";
  }
  return report.ok ? kExitTrue : kExitFalse;
}

int cmd_search(const std::string& target, int max_points, bool json) {
  std::vector<Finding> findings = run_search(target, max_points);
  if (json) {
    Json out = Json::array();
    for (const Finding& f : findings)
      out.push_back(Json{{"target", f.target},
                         {"documents", f.documents},
                         {"note", f.note}});
    std::cout << out.dump(2) << "\n";
  } else if (findings.empty()) {
    std::cout << "none up to " << max_points << "\n";
  } else {
    for (const Finding& f : findings)
      std::cout << f.note << "\n  " << f.documents.dump() << "\n";
    std::cout << findings.size() << " findings\n";
  }
  return kExitTrue;
}

int cmd_replay(const std::string& property, const std::string& file,
               bool json) {
  Json instance = load_json(file);
  bool ok = replay(property, instance);
  if (json)
    std::cout << Json{{"property", property}, {"passed", ok}}.dump(2) << "\n";
  else
    std::cout << property << ": "
              << (ok ? "passes on this instance" : "still fails") << "\n";
  return ok ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for reflections of finite spaces"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string file, file2, axiom = "t0", method = "auto";
  std::string coarse, fine, suite = "all", target, property;
  std::vector<int> subset;
  std::vector<std::string> mutate;
  int max_points = 4, jobs = 1;

  auto* check = app.add_subcommand("check", "separation axioms of a space");
  std::string check_what = "axioms";
  check->add_option("what", check_what)->check(CLI::IsMember({"axioms"}));
  check->add_option("file", file)->required();

  auto* refl = app.add_subcommand("reflect", "compute a reflection");
  refl->add_option("--axiom", axiom)->required();
  refl->add_option("--method", method);
  refl->add_option("file", file)->required();

  auto* copen = app.add_subcommand("copen", "class-open subsets");
  copen->add_option("--axiom", axiom)->required();
  copen->add_option("--subset", subset)->delimiter(',');
  copen->add_option("file", file)->required();

  auto* coin = app.add_subcommand("coincide", "compare two reflections");
  coin->add_option("--coarse", coarse)->required();
  coin->add_option("--fine", fine)->required();
  coin->add_option("file", file)->required();

  auto* sub = app.add_subcommand("subspace", "subspace preservation");
  sub->add_option("--axiom", axiom)->required();
  sub->add_option("--subset", subset)->delimiter(',')->required();
  sub->add_option("file", file)->required();

  auto* prod = app.add_subcommand("product", "product preservation");
  prod->add_option("--axiom", axiom)->required();
  prod->add_option("file", file)->required();
  prod->add_option("file2", file2)->required();

  auto* alg = app.add_subcommand("alg", "inspect an algebra document");
  alg->add_option("file", file)->required();

  auto* talg = app.add_subcommand("topalg", "inspect a topological structure");
  talg->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "run the property harness");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "reflection", "algebra", "maltsev",
                             "subspace", "coincidence"}));
  verify->add_option("--max-points", max_points)->check(CLI::Range(0, 5));
  verify->add_option("--jobs", jobs)->check(CLI::Range(1, 64));
  verify->add_option("--mutate", mutate)
      ->check(CLI::IsMember(mutation_names()));

  auto* search = app.add_subcommand("search", "hunt for counterexamples");
  search->add_option("--target", target)
      ->required()
      ->check(CLI::IsMember(
          {"separate-not-joint", "t1-product-failure", "subspace-failure"}));
  search->add_option("--max-points", max_points)->check(CLI::Range(0, 5));

  auto* rep = app.add_subcommand("replay", "rerun a stored counterexample");
  rep->add_option("--property", property)->required();
  rep->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file, json);
    if (refl->parsed()) return cmd_reflect(file, axiom, method, json);
    if (copen->parsed()) return cmd_copen(file, axiom, subset, json);
    if (coin->parsed()) return cmd_coincide(file, coarse, fine, json);
    if (sub->parsed()) return cmd_subspace(file, axiom, subset, json);
    if (prod->parsed()) return cmd_product(file, file2, axiom, json);
    if (alg->parsed()) return cmd_alg(file, json);
    if (talg->parsed()) return cmd_topalg(file, json);
    if (verify->parsed())
      return cmd_verify(suite, max_points, jobs, mutate, json);
    if (search->parsed()) return cmd_search(target, max_points, json);
    if (rep->parsed()) return cmd_replay(property, file, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SizeLimit ? kExitLimit : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
