// End-to-end acceptance harness: eight gates, one pass/fail line each.
// Exit status is the number of failed gates.

#include <chrono>
#include <cstdio>
#include <string>

#include "finref/category.hpp"
#include "finref/enumerate.hpp"
#include "finref/io.hpp"
#include "finref/mutate.hpp"
#include "finref/reflect.hpp"
#include "finref/search.hpp"
#include "finref/topalg.hpp"
#include "finref/verify.hpp"

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "fixtures"
#endif

using namespace finref;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void gate(const char* name, bool ok, double secs, const std::string& detail) {
  std::printf("%-4s %-28s %7.2fs  %s\n", ok ? "pass" : "FAIL", name, secs,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fx(const char* name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

// 1. Two independent enumerators agree on the counts up to four points and
// the four-point sweep stays under ten seconds.
void gate_enumeration() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  static const long expected[] = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4 && ok; ++n) {
    long via_topologies = count_topologies(n);
    long via_preorders = count_preorders(n);
    if (via_topologies != expected[n] || via_preorders != expected[n]) {
      ok = false;
      detail = "count mismatch at n=" + std::to_string(n);
    }
  }
  double secs = seconds_since(t0);
  if (ok && secs >= 10.0) {
    ok = false;
    detail = "time budget exceeded";
  }
  if (ok) detail = "counts 1,1,4,29,355 twice over";
  gate("enumeration", ok, secs, detail);
}

// 2. Full reflection sweep: every space with up to four points, every
// axiom; target membership, universal property, idempotence, and quotient
// arrows for the quotient-stable classes.  Budget: five minutes.
void gate_reflection_sweep() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  long instances = 0;
  for (int n = 1; n <= 4 && ok; ++n) {
    for (const FinSpace& X : all_spaces_of(n)) {
      for (Axiom a : kAllAxioms) {
        ++instances;
        Reflection r = reflect(X, a);
        if (!builtin(a).contains(r.target)) {
          ok = false;
          detail = "target not in class";
          break;
        }
        if (!verify_universal_property(r, builtin(a)).ok) {
          ok = false;
          detail = "universal property failed";
          break;
        }
        Reflection again = reflect(r.target, a);
        if (again.target.n != r.target.n ||
            again.kernel() != identity_partition(r.target.n)) {
          ok = false;
          detail = "not idempotent";
          break;
        }
      }
      if (!ok) break;
      for (Axiom a : kQuotientAxioms) {
        if (!map_predicates(reflect(X, a).arrow()).quotient) {
          ok = false;
          detail = "arrow not a quotient map";
          break;
        }
      }
      if (!ok) break;
    }
  }
  double secs = seconds_since(t0);
  if (ok && secs >= 300.0) {
    ok = false;
    detail = "time budget exceeded";
  }
  if (ok) detail = std::to_string(instances) + " reflections checked";
  gate("reflection-sweep", ok, secs, detail);
}

// 3. The direct t1 and iterative t2 engines agree with the partition
// search on every space with up to four points.
void gate_engine_agreement() {
  auto t0 = std::chrono::steady_clock::now();
  const Property* p = find_property("engine-agreement");
  PropertyResult r = run_property(*p, 4);
  gate("engine-agreement", r.passed, seconds_since(t0),
       std::to_string(r.instances) + " instances");
}

// 4. Frozen behavior of the three-point fixture with two open points under
// a generic one.
void gate_fixture_regressions() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "all frozen values match";
  FinSpace X = space_from_json(load_json(fx("x1.json")));
  for (Axiom a : {Axiom::T1, Axiom::T2, Axiom::Urysohn, Axiom::FH}) {
    if (reflect(X, a).target.n != 1) {
      ok = false;
      detail = std::string("reflection of ") + axiom_name(a) +
               " is not a point";
    }
  }
  Reflection creg = reflect(X, Axiom::CReg);
  if (creg.target.n != 3 || !same_space(creg.target, indiscrete_space(3))) {
    ok = false;
    detail = "creg reflection is not the indiscrete carrier";
  }
  if (preserves_subspace(X, 3, Axiom::T1)) {
    ok = false;
    detail = "t1 unexpectedly preserves the subspace {a,b}";
  }
  for (Mask A = 1; A < 8; ++A) {
    if (!preserves_subspace(X, A, Axiom::T0)) {
      ok = false;
      detail = "t0 fails a subspace";
    }
  }
  gate("fixture-regressions", ok, seconds_since(t0), detail);
}

// 5. Coincidence agrees with its criterion on all nested pairs, and the
// complete-separation characterization matches t1/t35 coincidence.
void gate_coincidence() {
  auto t0 = std::chrono::steady_clock::now();
  PropertyResult a = run_property(*find_property("coincide-criterion"), 4);
  PropertyResult b = run_property(*find_property("t1-closed-separation"), 4);
  gate("coincidence", a.passed && b.passed, seconds_since(t0),
       std::to_string(a.instances + b.instances) + " instances");
}

// 6. Congruence lattice of the four-element cyclic group, quotients
// satisfy the equations, and the induced map of the first isomorphism
// reconstructs every homomorphism between groups of order at most four.
void gate_algebra() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  long homs = 0;
  if (all_congruences(cyclic_group(4)).size() != 3) {
    ok = false;
    detail = "z4 congruence count is off";
  }
  for (int m = 1; m <= 4 && ok; ++m) {
    for (int k = 1; k <= 4 && ok; ++k) {
      for (const Structure& U : all_groups_of(m)) {
        for (const Partition& P : all_congruences(U)) {
          if (!satisfies(quotient_structure(U, P).structure).ok) {
            ok = false;
            detail = "quotient breaks the equations";
          }
        }
        for (const Structure& V : all_groups_of(k)) {
          std::vector<int> f(U.n, 0);
          while (true) {
            if (is_homomorphism(f, U, V)) {
              ++homs;
              FirstIsomorphism fi = first_isomorphism(U, V, f);
              bool inj = true;
              for (int i = 0; i < fi.quotient.structure.n && inj; ++i)
                for (int j = i + 1; j < fi.quotient.structure.n; ++j)
                  if (fi.induced[i] == fi.induced[j]) inj = false;
              bool factors = true;
              for (int x = 0; x < U.n; ++x)
                if (fi.induced[fi.quotient.projection[x]] != f[x])
                  factors = false;
              if (!inj || !factors ||
                  !is_homomorphism(fi.induced, fi.quotient.structure, V)) {
                ok = false;
                detail = "first isomorphism failed to reconstruct a map";
              }
            }
            int i = 0;
            while (i < U.n && ++f[i] == V.n) f[i++] = 0;
            if (i == U.n) break;
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
  }
  if (ok) detail = std::to_string(homs) + " homomorphisms reconstructed";
  gate("algebra", ok, seconds_since(t0), detail);
}

// 7. The full Mal'tsev and group suite on up to three points, plus the
// coset-topology group fixture reflecting to the discrete two-element
// group through both routes.  Budget: ten minutes.
void gate_maltsev_groups() {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep = run_suite("maltsev", 3, 2);
  bool ok = rep.ok;
  std::string detail;
  long instances = 0;
  for (const PropertyResult& r : rep.results) {
    instances += static_cast<long>(r.instances);
    if (!r.passed) detail = r.id + " failed";
  }
  if (ok) {
    TopStructure T = topstructure_from_json(load_json(fx("z4-coset.json")));
    TopStructure via_cosets = t1_reflection_group(T);
    TopStructure via_space = induced_reflection_structure(T, Axiom::T1);
    ok = via_cosets.alg.n == 2 &&
         same_space(via_cosets.space, discrete_space(2)) &&
         algebra_isomorphic(via_cosets.alg, cyclic_group(2)).has_value() &&
         algebra_isomorphic(via_cosets.alg, via_space.alg).has_value() &&
         is_homeomorphic(via_cosets.space, via_space.space).has_value();
    if (!ok) detail = "coset fixture disagreement";
  }
  double secs = seconds_since(t0);
  if (ok && secs >= 600.0) {
    ok = false;
    detail = "time budget exceeded";
  }
  if (ok) detail = std::to_string(instances) + " instances";
  gate("maltsev-groups", ok, secs, detail);
}

// 8. Each injected fault makes at least one property fail with a stored
// counterexample that still fails on replay and passes once the fault is
// removed.
void gate_negative_controls() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "3 faults detected and replayed";
  struct Control {
    const char* mutation;
    const char* suite;
  };
  const Control controls[] = {
      {"t1-skip-closure", "reflection"},
      {"scr-skip-alternation", "reflection"},
      {"quotient-skip-congruence", "algebra"},
  };
  for (const Control& c : controls) {
    set_mutation(c.mutation, true);
    VerificationReport rep = run_suite(c.suite, 3, 2);
    const PropertyResult* failed = nullptr;
    for (const PropertyResult& r : rep.results)
      if (!r.passed) failed = &r;
    if (!failed) {
      ok = false;
      detail = std::string(c.mutation) + " went undetected";
      set_mutation(c.mutation, false);
      continue;
    }
    bool still_fails = !replay(failed->id, failed->counterexample);
    set_mutation(c.mutation, false);
    bool clean_passes = replay(failed->id, failed->counterexample);
    if (!still_fails || !clean_passes) {
      ok = false;
      detail = std::string(c.mutation) + " counterexample did not replay";
    }
  }
  gate("negative-controls", ok, seconds_since(t0), detail);
}

}  // namespace

int main() {
  gate_enumeration();
  gate_reflection_sweep();
  gate_engine_agreement();
  gate_fixture_regressions();
  gate_coincidence();
  gate_algebra();
  gate_maltsev_groups();
  gate_negative_controls();
  if (g_failures == 0)
    std::printf("all gates passed\n");
  else
    std::printf("%d gate(s) failed\n", g_failures);
  return g_failures;
}
