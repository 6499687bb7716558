#include "finref/io.hpp"

#include <fstream>
#include <sstream>

namespace finref {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json parse_json(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw Error(ErrorKind::InputError, "malformed JSON");
  return doc;
}

namespace {

const Json& need(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw Error(ErrorKind::InputError,
                std::string("missing field \"") + key + "\"");
  return *it;
}

// A field that is either an inline document or a path to one.
Json inline_or_file(const Json& value) {
  if (value.is_string()) return load_json(value.get<std::string>());
  return value;
}

int checked_index(const Json& v, int n, const char* what) {
  if (!v.is_number_integer())
    throw Error(ErrorKind::InputError, std::string(what) + " must be integers");
  int i = v.get<int>();
  if (i < 0 || i >= n)
    throw Error(ErrorKind::InputError,
                std::string(what) + " index " + std::to_string(i) +
                    " out of range");
  return i;
}

std::vector<int> int_array(const Json& v, int n, const char* what) {
  if (!v.is_array())
    throw Error(ErrorKind::InputError, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& e : v) out.push_back(checked_index(e, n, what));
  return out;
}

void flatten_table(const Json& v, int n, int depth, std::vector<int>& out) {
  if (depth == 0) {
    out.push_back(checked_index(v, n, "table entries"));
    return;
  }
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw Error(ErrorKind::InputError,
                "operation table has the wrong shape");
  for (const Json& e : v) flatten_table(e, n, depth - 1, out);
}

Json nest_table(const std::vector<int>& flat, int n, int arity,
                std::size_t& pos) {
  if (arity == 0) return flat[pos++];
  Json out = Json::array();
  for (int i = 0; i < n; ++i) out.push_back(nest_table(flat, n, arity - 1, pos));
  return out;
}

}  // namespace

Json space_to_json(const FinSpace& X) {
  Json points = Json::array();
  for (int i = 0; i < X.n; ++i) points.push_back(X.label(i));
  Json opens = Json::array();
  for (Mask u : open_sets(X)) opens.push_back(bits_of(u));
  return Json{{"points", points}, {"opens", opens}};
}

FinSpace space_from_json(const Json& doc) {
  const Json& points = need(doc, "points");
  if (!points.is_array())
    throw Error(ErrorKind::InputError, "\"points\" must be an array");
  const int n = static_cast<int>(points.size());
  if (n > kMaxPoints)
    throw Error(ErrorKind::SizeLimit,
                "space exceeds " + std::to_string(kMaxPoints) + " points");
  std::vector<std::string> labels;
  for (const Json& p : points) {
    if (!p.is_string())
      throw Error(ErrorKind::InputError, "point names must be strings");
    labels.push_back(p.get<std::string>());
  }
  const Json& opens = need(doc, "opens");
  if (!opens.is_array())
    throw Error(ErrorKind::InputError, "\"opens\" must be an array");
  std::vector<Mask> family;
  for (const Json& u : opens) {
    Mask m = 0;
    for (int i : int_array(u, n, "opens")) m |= bit(i);
    family.push_back(m);
  }
  return make_space(n, std::move(family), std::move(labels));
}

Json map_to_json(const CMap& f) {
  return Json{{"dom", space_to_json(f.dom)},
              {"cod", space_to_json(f.cod)},
              {"table", f.table}};
}

CMap map_from_json(const Json& doc) {
  FinSpace dom = space_from_json(inline_or_file(need(doc, "dom")));
  FinSpace cod = space_from_json(inline_or_file(need(doc, "cod")));
  std::vector<int> table = int_array(need(doc, "table"), cod.n, "table");
  if (static_cast<int>(table.size()) != dom.n)
    throw Error(ErrorKind::InputError, "map table size mismatch");
  return CMap{std::move(dom), std::move(cod), std::move(table)};
}

Json partition_to_json(const Partition& P) {
  Json blocks = Json::array();
  for (Mask b : P.blocks) blocks.push_back(bits_of(b));
  return Json{{"n", P.n}, {"blocks", blocks}};
}

Partition partition_from_json(const Json& doc) {
  int n = need(doc, "n").get<int>();
  std::vector<Mask> blocks;
  for (const Json& b : need(doc, "blocks")) {
    Mask m = 0;
    for (int i : int_array(b, n, "blocks")) m |= bit(i);
    blocks.push_back(m);
  }
  return make_partition(n, std::move(blocks));
}

Json structure_to_json(const Structure& U) {
  Json ops = Json::array();
  for (const OpSym& op : U.sig.ops) ops.push_back(Json::array({op.name, op.arity}));
  Json equations = Json::array();
  for (const Equation& eq : U.sig.equations) equations.push_back(eq.text);
  Json tables = Json::object();
  for (const OpSym& op : U.sig.ops) {
    std::size_t pos = 0;
    tables[op.name] = nest_table(U.tables.at(op.name), U.n, op.arity, pos);
  }
  return Json{{"signature",
               {{"constants", U.sig.constants},
                {"ops", ops},
                {"equations", equations}}},
              {"carrier", U.n},
              {"constants", U.const_values},
              {"tables", tables}};
}

Structure structure_from_json(const Json& doc) {
  const Json& sigdoc = need(doc, "signature");
  Signature sig;
  for (const Json& c : need(sigdoc, "constants"))
    sig.constants.push_back(c.get<std::string>());
  for (const Json& o : need(sigdoc, "ops")) {
    if (!o.is_array() || o.size() != 2)
      throw Error(ErrorKind::InputError, "ops entries must be [name, arity]");
    OpSym op{o[0].get<std::string>(), o[1].get<int>()};
    if (op.arity < 1)
      throw Error(ErrorKind::InputError, "operation arity must be positive");
    sig.ops.push_back(std::move(op));
  }
  if (auto it = sigdoc.find("equations"); it != sigdoc.end())
    for (const Json& e : *it)
      sig.equations.push_back(parse_equation(sig, e.get<std::string>()));
  int n = need(doc, "carrier").get<int>();
  std::map<std::string, int> consts;
  if (auto it = doc.find("constants"); it != doc.end())
    for (auto& [k, v] : it->items()) consts[k] = v.get<int>();
  std::map<std::string, std::vector<int>> tables;
  const Json& tabdoc = need(doc, "tables");
  for (const OpSym& op : sig.ops) {
    std::vector<int> flat;
    flatten_table(need(tabdoc, op.name.c_str()), n, op.arity, flat);
    tables[op.name] = std::move(flat);
  }
  return make_structure(std::move(sig), n, std::move(consts),
                        std::move(tables));
}

Json topstructure_to_json(const TopStructure& T) {
  return Json{{"algebra", structure_to_json(T.alg)},
              {"space", space_to_json(T.space)}};
}

TopStructure topstructure_from_json(const Json& doc) {
  Structure alg = structure_from_json(inline_or_file(need(doc, "algebra")));
  FinSpace space = space_from_json(inline_or_file(need(doc, "space")));
  return make_topstructure(std::move(alg), std::move(space));
}

Json maltsev_to_json(const MaltsevWitness& W) {
  std::size_t pos = 0;
  return Json{{"space", space_to_json(W.space)},
              {"phi", nest_table(W.phi, W.space.n, 3, pos)}};
}

MaltsevWitness maltsev_from_json(const Json& doc) {
  FinSpace space = space_from_json(inline_or_file(need(doc, "space")));
  std::vector<int> phi;
  flatten_table(need(doc, "phi"), space.n, 3, phi);
  return is_maltsev(space, phi);
}

Json reflection_report(const Reflection& R) {
  CMap arrow = R.arrow();
  return Json{{"axiom", R.axiom},
              {"method", method_name(R.method_used)},
              {"target", space_to_json(R.target)},
              {"arrow", R.arrow_table},
              {"quotient", is_quotient_map(arrow)},
              {"open", is_open_map(arrow)}};
}

}  // namespace finref
