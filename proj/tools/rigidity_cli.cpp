#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigidity/combinators.hpp"
#include "rigidity/config.hpp"
#include "rigidity/corpus.hpp"
#include "rigidity/degrees.hpp"
#include "rigidity/harness.hpp"
#include "rigidity/json_io.hpp"
#include "rigidity/monadic.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<int> parse_set(const std::string &spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception &) {
      throw std::invalid_argument("bad element '" + item + "' in set " + spec);
    }
  }
  return out;
}

rigidity::ExtNat parse_extnat(const std::string &s) {
  if (s == "INF" || s == "inf" || s == "omega" || s == "OMEGA")
    return rigidity::ExtNat::infinity();
  try {
    long long v = std::stoll(s);
    if (v < 0)
      throw std::invalid_argument("negative");
    return rigidity::ExtNat(static_cast<std::uint64_t>(v));
  } catch (const std::exception &) {
    throw std::invalid_argument("expected a natural number or INF, got '" + s + "'");
  }
}

rigidity::MonadicProfile load_profile_arg(const std::string &path) {
  if (path == "-") {
    json j = json::parse(std::cin);
    return rigidity::profile_from_json(j);
  }
  return rigidity::load_profile(path);
}

std::string set_str(const std::vector<int> &v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

void print_json(const ordered_json &j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char **argv) {
  CLI::App app{"rigidity invariants of finite relational structures"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file, file2, out_path, set_spec;
  std::string quantifier = "", mode = "";

  auto *aut_cmd = app.add_subcommand("aut", "automorphism group summary");
  aut_cmd->add_option("file", file, "structure JSON")->required();

  auto *dcl_cmd = app.add_subcommand("dcl", "definable closure of a set");
  dcl_cmd->add_option("file", file, "structure JSON")->required();
  dcl_cmd->add_option("--set", set_spec, "comma-separated elements");

  auto *deg_cmd = app.add_subcommand("degrees", "degrees of rigidity with witnesses");
  deg_cmd->add_option("file", file, "structure JSON")->required();
  deg_cmd->add_option("--quantifier", quantifier, "exists|forall");
  deg_cmd->add_option("--mode", mode, "sem|synt");
  deg_cmd->add_option("--set", set_spec, "constants to expand by first");

  auto *tet_cmd = app.add_subcommand("tetrad", "the degree tetrad");
  tet_cmd->add_option("file", file, "structure JSON")->required();

  auto *ind_cmd = app.add_subcommand("ind", "index of rigidity");
  ind_cmd->add_option("file", file, "structure JSON")->required();
  ind_cmd->add_option("--set", set_spec, "comma-separated elements");

  auto *dun_cmd = app.add_subcommand("dunion", "disjoint union of two structures");
  dun_cmd->add_option("a", file, "first structure JSON")->required();
  dun_cmd->add_option("b", file2, "second structure JSON")->required();
  dun_cmd->add_option("-o,--output", out_path, "output structure file")->required();

  auto *comp_cmd = app.add_subcommand("compose", "composition M[N]");
  comp_cmd->add_option("m", file, "outer structure JSON")->required();
  comp_cmd->add_option("n", file2, "inner structure JSON")->required();
  comp_cmd->add_option("-o,--output", out_path, "output structure file")->required();

  auto *pt_cmd = app.add_subcommand("profile-tetrad", "tetrad of a monadic profile");
  pt_cmd->add_option("profile", file, "profile JSON ('-' for stdin)")->required();

  auto *pi_cmd = app.add_subcommand("profile-ind", "index of a monadic profile");
  pi_cmd->add_option("profile", file, "profile JSON ('-' for stdin)")->required();

  std::string mu_str, nu_str;
  auto *rp_cmd = app.add_subcommand("realize-pair",
                                    "profile with given exists-sem/synt degrees");
  rp_cmd->add_option("mu", mu_str, "exists-sem degree (natural or INF)")->required();
  rp_cmd->add_option("nu", nu_str, "exists-synt degree (natural or INF)")->required();

  int max_size = 0, max_preds = 0;
  auto *enum_cmd = app.add_subcommand("enumerate",
                                      "unary structures up to isomorphism");
  enum_cmd->add_option("--max-size", max_size, "largest universe")->required();
  enum_cmd->add_option("--max-preds", max_preds, "most unary predicates")->required();

  std::string suite = "all", report_path;
  std::uint64_t seed = 1;
  auto *check_cmd = app.add_subcommand("check", "run the verification suites");
  check_cmd->add_option("--suite", suite, "all or comma-separated claim ids");
  check_cmd->add_option("--seed", seed, "corpus seed");
  check_cmd->add_option("--report", report_path, "write the JSON report here");

  for (auto *sub : app.get_subcommands([](const CLI::App *) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  using namespace rigidity;

  if (aut_cmd->parsed()) {
    FiniteStructure s = load_structure(file);
    auto enc = encode_constants(s);
    PermGroup g = automorphism_group(enc.structure);
    if (as_json) {
      ordered_json j;
      j["order"] = g.order().to_string();
      j["base"] = g.base();
      ordered_json gens = ordered_json::array();
      for (const auto &p : g.generators())
        gens.push_back(p.images());
      j["generators"] = gens;
      print_json(j);
    } else {
      std::cout << "order: " << g.order().to_string() << "\n";
      std::cout << "base: " << set_str(g.base()) << "\n";
      std::cout << "generators (" << g.generators().size() << "):\n";
      for (const auto &p : g.generators())
        std::cout << "  " << p.to_string() << "\n";
    }
    return 0;
  }

  if (dcl_cmd->parsed()) {
    FiniteStructure s = load_structure(file);
    std::vector<int> a = parse_set(set_spec);
    std::vector<int> closure = dcl(s, a);
    if (as_json)
      print_json(ordered_json{{"set", a}, {"dcl", closure}});
    else
      std::cout << "dcl(" << set_str(a) << ") = " << set_str(closure) << "\n";
    return 0;
  }

  if (deg_cmd->parsed()) {
    FiniteStructure s = load_structure(file);
    std::vector<int> a = parse_set(set_spec);
    std::vector<Quantifier> qs{Quantifier::exists, Quantifier::forall};
    std::vector<Mode> ms{Mode::semantic, Mode::syntactic};
    if (quantifier == "exists")
      qs = {Quantifier::exists};
    else if (quantifier == "forall")
      qs = {Quantifier::forall};
    else if (!quantifier.empty())
      throw std::invalid_argument("--quantifier must be exists or forall");
    if (mode == "sem")
      ms = {Mode::semantic};
    else if (mode == "synt")
      ms = {Mode::syntactic};
    else if (!mode.empty())
      throw std::invalid_argument("--mode must be sem or synt");
    ordered_json arr = ordered_json::array();
    for (Quantifier q : qs)
      for (Mode m : ms) {
        WitnessReport w = a.empty() ? degree(s, q, m) : relative_degree(s, a, q, m);
        if (as_json) {
          ordered_json e;
          e["quantifier"] = to_string(q);
          e["mode"] = to_string(m);
          e["degree"] = extnat_to_json(w.degree, "INF");
          if (w.witness)
            e["witness"] = *w.witness;
          else
            e["witness"] = nullptr;
          arr.push_back(e);
        } else {
          std::cout << to_string(q) << " " << to_string(m) << ": "
                    << w.degree.to_string()
                    << (w.witness ? "  witness " + set_str(*w.witness) : "")
                    << "\n";
        }
      }
    if (as_json)
      print_json(arr);
    return 0;
  }

  if (tet_cmd->parsed()) {
    FiniteStructure s = load_structure(file);
    Tetrad t = tetrad(s);
    if (as_json)
      print_json(ordered_json{{"e_sem", extnat_to_json(t.e_sem, "INF")},
                              {"e_synt", extnat_to_json(t.e_synt, "INF")},
                              {"a_sem", extnat_to_json(t.a_sem, "INF")},
                              {"a_synt", extnat_to_json(t.a_synt, "INF")}});
    else
      std::cout << t.to_string() << "\n";
    return 0;
  }

  if (ind_cmd->parsed()) {
    FiniteStructure s = load_structure(file);
    std::vector<int> a = parse_set(set_spec);
    std::uint64_t v = rigidity_index(s, a);
    if (as_json)
      print_json(ordered_json{{"set", a}, {"ind", v}});
    else
      std::cout << "ind(" << set_str(a) << ") = " << v << "\n";
    return 0;
  }

  if (dun_cmd->parsed() || comp_cmd->parsed()) {
    FiniteStructure s1 = load_structure(file);
    FiniteStructure s2 = load_structure(file2);
    auto e1 = encode_constants(s1).structure;
    auto e2 = encode_constants(s2).structure;
    ordered_json layout;
    FiniteStructure result;
    if (dun_cmd->parsed()) {
      UnionResult ur = disjoint_union(e1, e2);
      result = std::move(ur.structure);
      layout["offsets"] = {0, ur.layout.n1};
      layout["markers"] = {ur.layout.p1_name, ur.layout.p2_name};
      ordered_json renames = ordered_json::array();
      for (const auto &[from, to] : ur.layout.renames2)
        renames.push_back(ordered_json{{"from", from}, {"to", to}});
      layout["renamed_in_second"] = renames;
    } else {
      CompositionResult cr = compose(e1, e2);
      result = std::move(cr.structure);
      layout["pairing"] = "a*|N|+b";
      layout["m"] = cr.layout.m;
      layout["n"] = cr.layout.n;
      layout["copy_equivalence"] = cr.layout.e_name;
    }
    save_structure(result, out_path);
    if (as_json)
      print_json(ordered_json{{"output", out_path}, {"layout", layout}});
    else
      std::cout << "wrote " << out_path << "\nlayout: " << layout.dump() << "\n";
    return 0;
  }

  if (pt_cmd->parsed()) {
    MonadicProfile p = load_profile_arg(file);
    Tetrad t = profile_tetrad(p);
    if (as_json)
      print_json(ordered_json{{"e_sem", extnat_to_json(t.e_sem, "INF")},
                              {"e_synt", extnat_to_json(t.e_synt, "INF")},
                              {"a_sem", extnat_to_json(t.a_sem, "INF")},
                              {"a_synt", extnat_to_json(t.a_synt, "INF")}});
    else
      std::cout << t.to_string() << "\n";
    return 0;
  }

  if (pi_cmd->parsed()) {
    MonadicProfile p = load_profile_arg(file);
    ExtNat v = profile_ind(p);
    if (as_json)
      print_json(ordered_json{{"ind", extnat_to_json(v, "omega")}});
    else
      std::cout << v.to_string("omega") << "\n";
    return 0;
  }

  if (rp_cmd->parsed()) {
    MonadicProfile p = realize_pair(parse_extnat(mu_str), parse_extnat(nu_str));
    print_json(profile_to_json(p));
    return 0;
  }

  if (enum_cmd->parsed()) {
    auto list = enumerate_unary(max_size, max_preds);
    if (as_json) {
      ordered_json arr = ordered_json::array();
      for (const auto &s : list)
        arr.push_back(structure_to_json(s));
      print_json(arr);
    } else {
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::cout << i << ": n=" << list[i].n;
        for (std::size_t r = 0; r < list[i].sig.symbols.size(); ++r)
          std::cout << " |" << list[i].sig.symbols[r].name
                    << "|=" << list[i].interp[r].size();
        std::cout << "\n";
      }
      std::cout << list.size() << " structures\n";
    }
    return 0;
  }

  if (check_cmd->parsed()) {
    std::vector<std::string> claims;
    std::stringstream ss(suite);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty())
        claims.push_back(item);
    Corpus corpus = default_corpus(seed);
    auto reports = run_suite(claims, corpus);
    SuiteSummary sum = summarize(reports);
    ordered_json rep = report_json(corpus, reports);
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out)
        throw std::runtime_error("cannot open " + report_path + " for writing");
      out << rep.dump(2) << "\n";
    }
    if (as_json) {
      print_json(rep);
    } else {
      std::map<std::string, std::array<int, 4>> per_claim;
      for (const auto &r : reports) {
        auto &row = per_claim[r.claim];
        if (r.verdict == Verdict::pass)
          ++row[0];
        else if (r.verdict == Verdict::fail)
          ++row[1];
        else if (r.verdict == Verdict::not_applicable)
          ++row[2];
        else
          ++row[3];
      }
      std::cout << "claim                       pass  fail    na  findings\n";
      for (const auto &[claim, row] : per_claim) {
        std::cout << claim;
        for (std::size_t i = claim.size(); i < 28; ++i)
          std::cout << ' ';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%4d  %4d  %4d  %8d", row[0], row[1],
                      row[2], row[3]);
        std::cout << buf << "\n";
      }
      std::cout << "total: " << sum.pass << " pass, " << sum.fail << " fail, "
                << sum.na << " not-applicable, " << sum.findings << " findings\n";
    }
    return sum.fail > 0 ? 2 : 0;
  }

  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
