#include "finref/category.hpp"

#include <array>
#include <map>

namespace finref {

bool is_t0(const FinSpace& X) {
  for (int x = 0; x < X.n; ++x)
    for (int y = x + 1; y < X.n; ++y)
      if (X.min_open[x] == X.min_open[y]) return false;
  return true;
}

bool is_t1(const FinSpace& X) {
  for (int x = 0; x < X.n; ++x)
    if (closure(X, bit(x)) != bit(x)) return false;
  return true;
}

bool is_t2(const FinSpace& X) {
  for (int x = 0; x < X.n; ++x)
    for (int y = x + 1; y < X.n; ++y)
      if (X.min_open[x] & X.min_open[y]) return false;
  return true;
}

bool is_urysohn(const FinSpace& X) {
  // The minimal opens have the smallest closures among neighbourhoods.
  for (int x = 0; x < X.n; ++x)
    for (int y = x + 1; y < X.n; ++y)
      if (closure(X, X.min_open[x]) & closure(X, X.min_open[y])) return false;
  return true;
}

bool is_functionally_hausdorff(const FinSpace& X) {
  for (Mask c : weak_components(X))
    if (popcount(c) > 1) return false;
  return true;
}

bool is_regular(const FinSpace& X) {
  // A closed set is a union of point closures, so checking point closures
  // against outside points is enough.
  for (int y = 0; y < X.n; ++y) {
    Mask f = closure(X, bit(y));
    Mask hull = open_hull(X, f);
    for (int x = 0; x < X.n; ++x)
      if (!contains(f, x) && (X.min_open[x] & hull)) return false;
  }
  return true;
}

bool is_completely_regular(const FinSpace& X) {
  auto comps = weak_components(X);
  std::vector<int> comp_of(X.n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int x : bits_of(comps[c])) comp_of[x] = static_cast<int>(c);
  for (int y = 0; y < X.n; ++y) {
    Mask f = closure(X, bit(y));
    for (int x = 0; x < X.n; ++x)
      if (!contains(f, x) && comp_of[x] == comp_of[y]) return false;
  }
  return true;
}

bool is_t35(const FinSpace& X) {
  return is_completely_regular(X) && is_t1(X);
}

bool completely_separated(const FinSpace& X, Mask A, Mask B) {
  // A continuous map to the two-point discrete space is a clopen bipartition
  // and the clopen sets are exactly the unions of weak components.
  for (Mask c : weak_components(X))
    if ((c & A) && (c & B)) return false;
  return true;
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::T0: return "t0";
    case Axiom::T1: return "t1";
    case Axiom::T2: return "t2";
    case Axiom::Urysohn: return "urysohn";
    case Axiom::FH: return "fh";
    case Axiom::Reg: return "regular";
    case Axiom::CReg: return "creg";
    case Axiom::T35: return "t35";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  for (Axiom a : kAllAxioms)
    if (name == axiom_name(a)) return a;
  return std::nullopt;
}

const CategorySpec& builtin(Axiom a) {
  static const std::map<Axiom, CategorySpec> specs = [] {
    std::map<Axiom, CategorySpec> m;
    auto add = [&](Axiom ax, bool (*pred)(const FinSpace&), bool super,
                   std::vector<FinSpace> gens = {}) {
      m.emplace(ax, CategorySpec{axiom_name(ax), pred, super, true, true,
                                 std::move(gens)});
    };
    add(Axiom::T0, is_t0, true, {sierpinski()});
    // Finite cofinite spaces are discrete, so discrete spaces generate the
    // finite shadow of the t1 class.
    add(Axiom::T1, is_t1, true,
        {discrete_space(1), discrete_space(2), discrete_space(3),
         discrete_space(4)});
    add(Axiom::T2, is_t2, true);
    add(Axiom::Urysohn, is_urysohn, true);
    add(Axiom::FH, is_functionally_hausdorff, true);
    add(Axiom::Reg, is_regular, false);
    add(Axiom::CReg, is_completely_regular, false);
    add(Axiom::T35, is_t35, false);
    return m;
  }();
  return specs.at(a);
}

const CategorySpec& builtin(const std::string& name) {
  auto a = axiom_from_name(name);
  if (!a) throw Error(ErrorKind::UnknownAxiom, name);
  return builtin(*a);
}

bool check_axiom(const FinSpace& X, Axiom a) { return builtin(a).member(X); }

bool check_axiom(const FinSpace& X, const std::string& axiom) {
  return builtin(axiom).member(X);
}

bool class_nested_in(Axiom inner, Axiom outer) {
  // Transitive closure of the general (not merely finite) implications:
  // t35 => fh => urysohn => t2 => t1 => t0 and t35 => creg => regular.
  static const std::map<Axiom, std::vector<Axiom>> up = {
      {Axiom::T0, {}},
      {Axiom::T1, {Axiom::T0}},
      {Axiom::T2, {Axiom::T1}},
      {Axiom::Urysohn, {Axiom::T2}},
      {Axiom::FH, {Axiom::Urysohn}},
      {Axiom::Reg, {}},
      {Axiom::CReg, {Axiom::Reg}},
      {Axiom::T35, {Axiom::FH, Axiom::CReg}},
  };
  if (inner == outer) return true;
  for (Axiom mid : up.at(inner))
    if (class_nested_in(mid, outer)) return true;
  return false;
}

}  // namespace finref
