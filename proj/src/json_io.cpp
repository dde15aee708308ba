#include "rigidity/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace rigidity {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json structure_to_json(const FiniteStructure &s) {
  FiniteStructure canon = s;
  canon.normalize();
  ordered_json j;
  j["n"] = canon.n;
  ordered_json sig = ordered_json::array();
  for (const auto &sym : canon.sig.symbols) {
    ordered_json e;
    e["name"] = sym.name;
    e["arity"] = sym.arity;
    sig.push_back(e);
  }
  j["signature"] = sig;
  ordered_json rels = ordered_json::object();
  for (std::size_t i = 0; i < canon.sig.symbols.size(); ++i)
    rels[canon.sig.symbols[i].name] = canon.interp[i];
  j["relations"] = rels;
  j["constants"] = canon.named;
  return j;
}

namespace {

int require_int(const json &j, const std::string &field) {
  if (!j.is_number_integer())
    throw std::invalid_argument(field + ": expected an integer");
  return j.get<int>();
}

} // namespace

FiniteStructure structure_from_json(const json &j) {
  if (!j.is_object())
    throw std::invalid_argument("structure: expected a JSON object");
  FiniteStructure s;
  if (!j.contains("n"))
    throw std::invalid_argument("n: missing field");
  s.n = require_int(j.at("n"), "n");
  if (j.contains("signature")) {
    const auto &sig = j.at("signature");
    if (!sig.is_array())
      throw std::invalid_argument("signature: expected an array");
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const auto &e = sig[i];
      std::string ctx = "signature[" + std::to_string(i) + "]";
      if (!e.is_object() || !e.contains("name") || !e.contains("arity"))
        throw std::invalid_argument(ctx + ": expected {name, arity}");
      if (!e.at("name").is_string())
        throw std::invalid_argument(ctx + ".name: expected a string");
      s.sig.symbols.push_back(
          {e.at("name").get<std::string>(), require_int(e.at("arity"), ctx + ".arity")});
    }
  }
  s.interp.assign(s.sig.symbols.size(), {});
  if (j.contains("relations")) {
    const auto &rels = j.at("relations");
    if (!rels.is_object())
      throw std::invalid_argument("relations: expected an object");
    for (auto it = rels.begin(); it != rels.end(); ++it) {
      int idx = s.sig.index_of(it.key());
      if (idx < 0)
        throw std::invalid_argument("relations." + it.key() +
                                    ": symbol not declared in signature");
      if (!it.value().is_array())
        throw std::invalid_argument("relations." + it.key() + ": expected an array");
      for (std::size_t t = 0; t < it.value().size(); ++t) {
        const auto &tup = it.value()[t];
        std::string ctx = "relations." + it.key() + "[" + std::to_string(t) + "]";
        if (!tup.is_array())
          throw std::invalid_argument(ctx + ": expected an array of integers");
        std::vector<int> tv;
        for (const auto &v : tup)
          tv.push_back(require_int(v, ctx));
        s.interp[idx].push_back(std::move(tv));
      }
    }
  }
  if (j.contains("constants")) {
    const auto &cs = j.at("constants");
    if (!cs.is_array())
      throw std::invalid_argument("constants: expected an array");
    for (const auto &v : cs)
      s.named.push_back(require_int(v, "constants"));
  }
  s.normalize();
  auto violations = validate(s);
  if (!violations.empty())
    throw std::invalid_argument(violations.front());
  return s;
}

FiniteStructure load_structure(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  try {
    return structure_from_json(j);
  } catch (const std::invalid_argument &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void save_structure(const FiniteStructure &s, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open " + path + " for writing");
  out << structure_to_json(s).dump(2) << "\n";
}

nlohmann::ordered_json extnat_to_json(ExtNat v, const char *inf_word) {
  if (v.is_infinite())
    return inf_word;
  return v.value();
}

ExtNat extnat_from_json(const json &j, const std::string &field) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "omega" || s == "OMEGA" || s == "INF" || s == "inf")
      return ExtNat::infinity();
    throw std::invalid_argument(field + ": expected integer or \"omega\"");
  }
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0)
      throw std::invalid_argument(field + ": negative value");
    return ExtNat(static_cast<std::uint64_t>(v));
  }
  throw std::invalid_argument(field + ": expected integer or \"omega\"");
}

nlohmann::ordered_json profile_to_json(const MonadicProfile &p) {
  ordered_json j;
  ordered_json classes = ordered_json::array();
  for (const auto &k : p.classes) {
    ordered_json e;
    e["c"] = extnat_to_json(k.c, "omega");
    e["u"] = extnat_to_json(k.u, "omega");
    e["mult"] = extnat_to_json(k.mult, "omega");
    e["definable"] = k.definable;
    classes.push_back(e);
  }
  j["classes"] = classes;
  j["unbounded_finite_family"] = p.unbounded_finite_family;
  return j;
}

MonadicProfile profile_from_json(const json &j) {
  if (!j.is_object())
    throw std::invalid_argument("profile: expected a JSON object");
  MonadicProfile p;
  if (j.contains("classes")) {
    const auto &cs = j.at("classes");
    if (!cs.is_array())
      throw std::invalid_argument("classes: expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto &e = cs[i];
      std::string ctx = "classes[" + std::to_string(i) + "]";
      AtomClass k;
      if (!e.is_object() || !e.contains("c") || !e.contains("u"))
        throw std::invalid_argument(ctx + ": expected {c, u, [mult], [definable]}");
      k.c = extnat_from_json(e.at("c"), ctx + ".c");
      k.u = extnat_from_json(e.at("u"), ctx + ".u");
      k.mult = e.contains("mult") ? extnat_from_json(e.at("mult"), ctx + ".mult")
                                  : ExtNat(1);
      if (e.contains("definable")) {
        if (!e.at("definable").is_boolean())
          throw std::invalid_argument(ctx + ".definable: expected a boolean");
        k.definable = e.at("definable").get<bool>();
      }
      p.classes.push_back(k);
    }
  }
  if (j.contains("unbounded_finite_family")) {
    if (!j.at("unbounded_finite_family").is_boolean())
      throw std::invalid_argument("unbounded_finite_family: expected a boolean");
    p.unbounded_finite_family = j.at("unbounded_finite_family").get<bool>();
  }
  return p;
}

MonadicProfile load_profile(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  try {
    return profile_from_json(j);
  } catch (const std::invalid_argument &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

} // namespace rigidity
