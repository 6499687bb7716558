#include "finref/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "finref/enumerate.hpp"
#include "finref/mutate.hpp"

namespace finref {

bool Signature::has_constant(const std::string& name) const {
  return std::find(constants.begin(), constants.end(), name) !=
         constants.end();
}

const OpSym* Signature::find_op(const std::string& name) const {
  for (const OpSym& op : ops)
    if (op.name == name) return &op;
  return nullptr;
}

bool Signature::operator==(const Signature& other) const {
  if (constants != other.constants || ops.size() != other.ops.size())
    return false;
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name != other.ops[i].name || ops[i].arity != other.ops[i].arity)
      return false;
  return true;
}

namespace {

struct Parser {
  const Signature& sig;
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    if (peek() != c)
      throw Error(ErrorKind::InputError,
                  "expected '" + std::string(1, c) + "' at position " +
                      std::to_string(pos) + " in \"" + text + "\"");
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start)
      throw Error(ErrorKind::InputError,
                  "expected an identifier at position " + std::to_string(pos) +
                      " in \"" + text + "\"");
    return text.substr(start, pos - start);
  }

  Term term() {
    std::string name = ident();
    if (peek() == '(') {
      const OpSym* op = sig.find_op(name);
      if (!op)
        throw Error(ErrorKind::InputError,
                    "\"" + name + "\" is not an operation of the signature");
      ++pos;
      Term t{Term::Kind::Op, name, {}};
      t.children.push_back(term());
      while (peek() == ',') {
        ++pos;
        t.children.push_back(term());
      }
      expect(')');
      if (static_cast<int>(t.children.size()) != op->arity)
        throw Error(ErrorKind::InputError,
                    "\"" + name + "\" expects " + std::to_string(op->arity) +
                        " arguments, got " +
                        std::to_string(t.children.size()));
      return t;
    }
    if (sig.find_op(name))
      throw Error(ErrorKind::InputError,
                  "operation \"" + name + "\" used without arguments");
    if (sig.has_constant(name)) return Term{Term::Kind::Const, name, {}};
    return Term{Term::Kind::Var, name, {}};
  }
};

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const Term& c : t.children) collect_vars(c, out);
}

}  // namespace

Term parse_term(const Signature& sig, const std::string& text) {
  Parser p{sig, text};
  Term t = p.term();
  if (p.peek() != '\0')
    throw Error(ErrorKind::InputError,
                "trailing input at position " + std::to_string(p.pos) +
                    " in \"" + text + "\"");
  return t;
}

Equation parse_equation(const Signature& sig, const std::string& text) {
  std::size_t eq = text.find('=');
  if (eq == std::string::npos)
    throw Error(ErrorKind::InputError, "equation lacks '=': \"" + text + "\"");
  Equation e;
  e.lhs = parse_term(sig, text.substr(0, eq));
  e.rhs = parse_term(sig, text.substr(eq + 1));
  e.text = text;
  std::set<std::string> vars;
  collect_vars(e.lhs, vars);
  collect_vars(e.rhs, vars);
  e.vars.assign(vars.begin(), vars.end());
  return e;
}

std::string term_to_string(const Term& t) {
  if (t.kind != Term::Kind::Op) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ",";
    out += term_to_string(t.children[i]);
  }
  return out + ")";
}

int Structure::constant(const std::string& name) const {
  auto it = const_values.find(name);
  if (it == const_values.end())
    throw Error(ErrorKind::SignatureMismatch, "no constant \"" + name + "\"");
  return it->second;
}

int Structure::apply(const std::string& op, std::span<const int> args) const {
  auto it = tables.find(op);
  if (it == tables.end())
    throw Error(ErrorKind::SignatureMismatch, "no operation \"" + op + "\"");
  std::size_t idx = 0;
  for (int a : args) idx = idx * n + a;
  return it->second[idx];
}

Structure make_structure(Signature sig, int n,
                         std::map<std::string, int> const_values,
                         std::map<std::string, std::vector<int>> tables,
                         bool check_equations) {
  if (n < 0) throw Error(ErrorKind::InputError, "negative carrier size");
  if (n == 0 && !sig.constants.empty())
    throw Error(ErrorKind::InputError,
                "empty carrier cannot interpret constants");
  for (const std::string& c : sig.constants) {
    auto it = const_values.find(c);
    if (it == const_values.end() || it->second < 0 || it->second >= n)
      throw Error(ErrorKind::InputError,
                  "constant \"" + c + "\" missing or out of range");
  }
  for (const OpSym& op : sig.ops) {
    std::size_t want = 1;
    for (int i = 0; i < op.arity; ++i) want *= n;
    auto it = tables.find(op.name);
    if (it == tables.end() || it->second.size() != want)
      throw Error(ErrorKind::InputError,
                  "operation \"" + op.name + "\" table missing or mis-sized");
    for (int v : it->second)
      if (v < 0 || v >= n)
        throw Error(ErrorKind::InputError,
                    "operation \"" + op.name + "\" table entry out of range");
  }
  Structure U{std::move(sig), n, std::move(const_values), std::move(tables)};
  if (check_equations) {
    SatisfiesResult r = satisfies(U);
    if (!r.ok)
      throw Error(ErrorKind::InputError,
                  "structure violates \"" + r.equation + "\"");
  }
  return U;
}

int eval_term(const Structure& U, const Term& t,
              const std::map<std::string, int>& env) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = env.find(t.name);
      if (it == env.end())
        throw Error(ErrorKind::UnboundVariable, "variable \"" + t.name + "\"");
      return it->second;
    }
    case Term::Kind::Const:
      return U.constant(t.name);
    case Term::Kind::Op: {
      std::vector<int> args;
      args.reserve(t.children.size());
      for (const Term& c : t.children) args.push_back(eval_term(U, c, env));
      return U.apply(t.name, args);
    }
  }
  throw Error(ErrorKind::InputError, "malformed term");
}

SatisfiesResult satisfies(const Structure& U) {
  SatisfiesResult res;
  if (U.n == 0) return res;  // vacuous
  for (const Equation& eq : U.sig.equations) {
    const int k = static_cast<int>(eq.vars.size());
    std::vector<int> assign(k, 0);
    while (true) {
      std::map<std::string, int> env;
      for (int i = 0; i < k; ++i) env[eq.vars[i]] = assign[i];
      if (eval_term(U, eq.lhs, env) != eval_term(U, eq.rhs, env)) {
        res.ok = false;
        res.equation = eq.text;
        res.witness = std::move(env);
        return res;
      }
      int i = k - 1;
      while (i >= 0 && assign[i] == U.n - 1) assign[i--] = 0;
      if (i < 0) break;
      ++assign[i];
    }
  }
  return res;
}

bool is_homomorphism(const std::vector<int>& table, const Structure& U,
                     const Structure& V) {
  if (!(U.sig == V.sig))
    throw Error(ErrorKind::SignatureMismatch,
                "structures over different signatures");
  if (static_cast<int>(table.size()) != U.n)
    throw Error(ErrorKind::InputError, "map table has the wrong size");
  if (U.n == 0) return true;
  for (const std::string& c : U.sig.constants)
    if (table[U.constant(c)] != V.constant(c)) return false;
  for (const OpSym& op : U.sig.ops) {
    std::vector<int> args(op.arity, 0), mapped(op.arity);
    while (true) {
      for (int i = 0; i < op.arity; ++i) mapped[i] = table[args[i]];
      if (table[U.apply(op.name, args)] != V.apply(op.name, mapped))
        return false;
      int i = op.arity - 1;
      while (i >= 0 && args[i] == U.n - 1) args[i--] = 0;
      if (i < 0) break;
      ++args[i];
    }
  }
  return true;
}

CongruenceResult congruence_detail(const Structure& U, const Partition& P) {
  if (P.n != U.n)
    throw Error(ErrorKind::InvalidPartition,
                "partition carrier does not match the structure");
  CongruenceResult res;
  if (U.n == 0) {
    for (const OpSym& op : U.sig.ops) res.per_op[op.name] = true;
    return res;
  }
  for (const OpSym& op : U.sig.ops) {
    bool ok = true;
    // Single-coordinate substitutions generate all related tuples.
    std::vector<int> args(op.arity, 0);
    while (ok) {
      int base = U.apply(op.name, args);
      for (int i = 0; i < op.arity && ok; ++i) {
        Mask block = P.blocks[P.block_of(args[i])];
        for (int y : bits_of(block)) {
          if (y == args[i]) continue;
          std::vector<int> alt = args;
          alt[i] = y;
          if (!P.related(base, U.apply(op.name, alt))) {
            ok = false;
            res.witness = op.name + " at (" + std::to_string(args[i]) + "~" +
                          std::to_string(y) + " in slot " + std::to_string(i) +
                          ")";
            break;
          }
        }
      }
      int i = op.arity - 1;
      while (i >= 0 && args[i] == U.n - 1) args[i--] = 0;
      if (i < 0) break;
      ++args[i];
    }
    res.per_op[op.name] = ok;
    res.ok = res.ok && ok;
  }
  return res;
}

bool is_congruence(const Structure& U, const Partition& P) {
  return congruence_detail(U, P).ok;
}

QuotientStructure quotient_structure(const Structure& U, const Partition& P) {
  if (!mutations().quotient_skip_congruence_check) {
    CongruenceResult c = congruence_detail(U, P);
    if (!c.ok)
      throw Error(ErrorKind::NotACongruence,
                  "partition is not a congruence: " + c.witness);
  }
  const int m = P.block_count();
  std::vector<int> proj(U.n);
  for (int x = 0; x < U.n; ++x) proj[x] = P.block_of(x);
  std::map<std::string, int> consts;
  for (const std::string& c : U.sig.constants)
    consts[c] = proj[U.constant(c)];
  std::map<std::string, std::vector<int>> tables;
  for (const OpSym& op : U.sig.ops) {
    std::size_t size = 1;
    for (int i = 0; i < op.arity; ++i) size *= m;
    std::vector<int> table(size);
    std::vector<int> blocks(op.arity, 0), reps(op.arity);
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t rest = idx;
      for (int i = op.arity - 1; i >= 0; --i) {
        blocks[i] = static_cast<int>(rest % m);
        rest /= m;
      }
      for (int i = 0; i < op.arity; ++i)
        reps[i] = lowest_bit(P.blocks[blocks[i]]);
      table[idx] = proj[U.apply(op.name, reps)];
    }
    tables[op.name] = std::move(table);
  }
  Structure q{U.sig, m, std::move(consts), std::move(tables)};
  return QuotientStructure{std::move(q), std::move(proj), P};
}

std::vector<Partition> all_congruences(const Structure& U) {
  if (U.n > 8)
    throw Error(ErrorKind::SizeLimit,
                "congruence scan limited to carriers of at most 8");
  std::vector<Partition> out;
  for_each_partition(U.n, [&](const Partition& P) {
    if (is_congruence(U, P)) out.push_back(P);
  });
  return out;
}

Partition congruence_generated(const Structure& U,
                               const std::vector<std::pair<int, int>>& pairs) {
  if (U.n == 0) return Partition{0, {}};
  std::vector<int> ids(U.n);
  std::iota(ids.begin(), ids.end(), 0);
  auto merge = [&](int a, int b) {
    int from = ids[a], to = ids[b];
    if (from == to) return false;
    for (int& v : ids)
      if (v == from) v = to;
    return true;
  };
  for (auto [a, b] : pairs) merge(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const OpSym& op : U.sig.ops) {
      std::vector<int> args(op.arity, 0);
      while (true) {
        int base = U.apply(op.name, args);
        for (int i = 0; i < op.arity; ++i)
          for (int y = 0; y < U.n; ++y) {
            if (y == args[i] || ids[y] != ids[args[i]]) continue;
            std::vector<int> alt = args;
            alt[i] = y;
            if (merge(base, U.apply(op.name, alt))) changed = true;
          }
        int i = op.arity - 1;
        while (i >= 0 && args[i] == U.n - 1) args[i--] = 0;
        if (i < 0) break;
        ++args[i];
      }
    }
  }
  return partition_from_ids(ids);
}

FirstIsomorphism first_isomorphism(const Structure& U, const Structure& V,
                                   const std::vector<int>& f) {
  if (!is_homomorphism(f, U, V))
    throw Error(ErrorKind::NotAHomomorphism,
                "the given map is not a homomorphism");
  Partition kernel = kernel_partition(f, U.n);
  QuotientStructure q = quotient_structure(U, kernel);
  std::vector<int> induced(kernel.block_count());
  for (int b = 0; b < kernel.block_count(); ++b)
    induced[b] = f[lowest_bit(kernel.blocks[b])];
  return FirstIsomorphism{std::move(kernel), std::move(q),
                          std::move(induced)};
}

std::optional<std::vector<int>> algebra_isomorphic(const Structure& U,
                                                   const Structure& V) {
  if (!(U.sig == V.sig) || U.n != V.n) return std::nullopt;
  std::vector<int> perm(U.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_homomorphism(perm, U, V)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

const Signature& group_signature() {
  static const Signature sig = [] {
    Signature s;
    s.constants = {"e"};
    s.ops = {{"mul", 2}, {"inv", 1}};
    for (const char* eq :
         {"mul(mul(x,y),z)=mul(x,mul(y,z))", "mul(e,x)=x", "mul(x,e)=x",
          "mul(x,inv(x))=e", "mul(inv(x),x)=e"})
      s.equations.push_back(parse_equation(s, eq));
    return s;
  }();
  return sig;
}

Structure cyclic_group(int n) {
  if (n < 1) throw Error(ErrorKind::InputError, "cyclic group needs n >= 1");
  std::vector<int> mul(n * n), inv(n);
  for (int a = 0; a < n; ++a) {
    inv[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  }
  return make_structure(group_signature(), n, {{"e", 0}},
                        {{"mul", std::move(mul)}, {"inv", std::move(inv)}});
}

Structure klein_group() {
  std::vector<int> mul(16), inv(4);
  for (int a = 0; a < 4; ++a) {
    inv[a] = a;
    for (int b = 0; b < 4; ++b) mul[a * 4 + b] = a ^ b;
  }
  return make_structure(group_signature(), 4, {{"e", 0}},
                        {{"mul", std::move(mul)}, {"inv", std::move(inv)}});
}

Structure sym3() {
  // Elements as permutations of {0,1,2}; mul(a,b) = a after b.
  static const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                  {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    return -1;
  };
  std::vector<int> mul(36), inv(6);
  for (int a = 0; a < 6; ++a) {
    int vi[3];
    for (int x = 0; x < 3; ++x) vi[perms[a][x]] = x;
    inv[a] = index_of(vi);
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      mul[a * 6 + b] = index_of(comp);
    }
  }
  return make_structure(group_signature(), 6, {{"e", 0}},
                        {{"mul", std::move(mul)}, {"inv", std::move(inv)}});
}

std::vector<Structure> all_groups_of(int n) {
  if (n < 1 || n > 6)
    throw Error(ErrorKind::SizeLimit, "group enumeration covers orders 1..6");
  std::vector<Structure> reps;
  reps.push_back(cyclic_group(n));
  if (n == 4) reps.push_back(klein_group());
  if (n == 6) reps.push_back(sym3());
  // All labeled copies: relabel each representative by every permutation.
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<Structure> out;
  for (const Structure& G : reps) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> ip(n);
      for (int i = 0; i < n; ++i) ip[perm[i]] = i;
      std::vector<int> mul(n * n), inv(n);
      for (int a = 0; a < n; ++a) {
        inv[a] = perm[G.tables.at("inv")[ip[a]]];
        for (int b = 0; b < n; ++b)
          mul[a * n + b] = perm[G.tables.at("mul")[ip[a] * n + ip[b]]];
      }
      if (!seen.insert({mul, inv}).second) continue;
      out.push_back(make_structure(group_signature(), n,
                                   {{"e", perm[G.constant("e")]}},
                                   {{"mul", std::move(mul)},
                                    {"inv", std::move(inv)}},
                                   false));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace finref
