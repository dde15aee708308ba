#include "rigidity/harness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <omp.h>

#include "rigidity/combinators.hpp"
#include "rigidity/json_io.hpp"
#include "rigidity/monadic.hpp"

namespace rigidity {

using nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "fail";
  case Verdict::not_applicable:
    return "not-applicable";
  case Verdict::finding:
    return "finding";
  }
  return "?";
}

namespace {

const std::vector<std::pair<const char *, const char *>> kClaims = {
    {"THM_DIS_1",
     "exists-degree of a disjoint union is the sum of the operand exists-degrees"},
    {"THM_DIS_2",
     "a disjoint union has forall-degree 0 exactly when both operands do"},
    {"THM_DIS_3",
     "forall-degree of a disjoint union is the max of deg_forall(M_i)+|M_other| "
     "over operands with nonzero forall-degree"},
    {"THM_DIS_IND",
     "rigidity index of a disjoint union over A is the max of the operand "
     "indexes over the traces of A"},
    {"PROP_WREATH",
     "automorphism count of a composition is |Aut(N)|^|M| * |Aut(M)|"},
    {"THM_COMP1",
     "exists-sem degree of a composition is deg(M) when N is semantically "
     "rigid, else |M|*deg(N)"},
    {"THM_COMP2",
     "exists-synt degree of a composition is deg(M) when N is syntactically "
     "rigid, else |M|*deg(N)"},
    {"COR_ZERO", "a composition has forall-degree 0 exactly when both factors do"},
    {"THM_COMP3_a",
     "forall-degree of a composition with rigid inner factor is "
     "(deg_forall(M)-1)*|N|+1"},
    {"THM_COMP3_b",
     "forall-degree of a finite composition with non-rigid inner factor is "
     "(|M|-1)*|N|+deg_forall(N)"},
    {"THM_COMP3_c",
     "forall-degree of a composition is 1 for an infinite outer factor of "
     "degree 1 over a rigid inner factor"},
    {"THM_COMP3_d",
     "forall-degree of a composition with a singleton outer factor equals the "
     "inner factor's"},
    {"PROP_DEGA_1", "constants inside dcl(empty) preserve all degrees"},
    {"PROP_DEGA_2",
     "constants covering an exists-witness drop the exists-degree to 0"},
    {"PROP_DEGA_3", "relative degrees are non-increasing in the constant set"},
    {"PROP_DEGA_4",
     "an exists-witness splits its degree additively across any partition"},
    {"PROP_DEGA_5",
     "relative exists-degrees over a cofinite set are natural numbers"},
    {"PROP_DEGA_6",
     "every cofinite set has a minimal finite rigidifying extension"},
    {"COR_SEM_SYNT1",
     "unary-language tetrads take one of the four admissible shapes"},
    {"INEQ_1", "forall-sem degree <= forall-synt degree"},
    {"INEQ_2", "exists-sem degree <= exists-synt degree"},
    {"INEQ_3", "exists-sem degree <= forall-sem degree"},
    {"INEQ_4", "exists-synt degree <= forall-synt degree"},
    {"UPPER_BOUND",
     "finite degrees are at most n-1, exists-degrees at most "
     "|universe minus dcl(empty)|-1 for non-rigid structures"},
    {"FINDING_EX28_NPRIME",
     "printed exists-synt value for the infinitely-extended named family vs "
     "the computed value"},
    {"FINDING_VEC_FORALL",
     "forall degree of a finite vector space vs (dim-1)*|F|+1"},
    {"FINDING_DIS3_NAIVE",
     "unconditional max formula for the union forall-degree on rigid/non-rigid "
     "pairs"},
    {"FINDING_WREATH_SHARED",
     "wreath order formula under a shared reflexive symbol"},
};

ordered_json deg_json(ExtNat v) { return extnat_to_json(v, "INF"); }

struct StructRecord {
  const NamedStructure *ns = nullptr;
  bool ok = false;
  std::string error;
  Tetrad tet;
  BigUint aut_order;
  std::vector<int> dcl0;
};

struct UnionRecord {
  int i = 0, j = 0;
  std::string instance;
  bool ok = false;
  std::string error;
  FiniteStructure u;
  UnionLayout lay;
  Tetrad tet;
};

struct CompRecord {
  int i = 0, j = 0;
  std::string instance;
  bool ok = false;
  std::string error;
  FiniteStructure c;
  CompositionLayout lay;
  Tetrad tet;
  BigUint order;
};

struct Records {
  const Corpus *corpus = nullptr;
  std::vector<StructRecord> structs;
  std::vector<UnionRecord> unions;
  std::vector<CompRecord> comps;
};

struct Needs {
  bool unions = false;
  bool comps = false;
};

Needs needs_of(const std::vector<std::string> &claims) {
  bool all = claims.empty() ||
             std::find(claims.begin(), claims.end(), "all") != claims.end();
  Needs n;
  for (const auto &c : claims) {
    if (c.rfind("THM_DIS", 0) == 0 || c == "FINDING_DIS3_NAIVE")
      n.unions = true;
    if (c.rfind("THM_COMP", 0) == 0 || c == "PROP_WREATH" || c == "COR_ZERO")
      n.comps = true;
  }
  if (all)
    n.unions = n.comps = true;
  return n;
}

Records precompute(const Corpus &corpus, const Needs &needs) {
  Records rec;
  rec.corpus = &corpus;
  rec.structs.resize(corpus.structures.size());
  int ns = static_cast<int>(corpus.structures.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < ns; ++i) {
    StructRecord &r = rec.structs[i];
    r.ns = &corpus.structures[i];
    try {
      StructureAnalysis a(r.ns->s);
      r.tet = a.tetrad();
      r.aut_order = a.aut().order();
      r.dcl0 = a.dcl({});
      r.ok = true;
    } catch (const std::exception &e) {
      r.error = e.what();
    }
  }

  rec.unions.resize(needs.unions ? corpus.union_pairs.size() : 0);
  int nu = static_cast<int>(rec.unions.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < nu; ++k) {
    UnionRecord &r = rec.unions[k];
    r.i = corpus.union_pairs[k].first;
    r.j = corpus.union_pairs[k].second;
    r.instance = "dunion(" + corpus.structures[r.i].name + "," +
                 corpus.structures[r.j].name + ")";
    try {
      UnionResult ur =
          disjoint_union(corpus.structures[r.i].s, corpus.structures[r.j].s);
      r.u = std::move(ur.structure);
      r.lay = std::move(ur.layout);
      r.tet = StructureAnalysis(r.u).tetrad();
      r.ok = true;
    } catch (const std::exception &e) {
      r.error = e.what();
    }
  }

  rec.comps.resize(needs.comps ? corpus.comp_pairs.size() : 0);
  int nc = static_cast<int>(rec.comps.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < nc; ++k) {
    CompRecord &r = rec.comps[k];
    r.i = corpus.comp_pairs[k].first;
    r.j = corpus.comp_pairs[k].second;
    r.instance = "compose(" + corpus.structures[r.i].name + "," +
                 corpus.structures[r.j].name + ")";
    try {
      CompositionResult cr =
          compose_disjoint(corpus.structures[r.i].s, corpus.structures[r.j].s);
      r.c = std::move(cr.structure);
      r.lay = cr.layout;
      StructureAnalysis a(r.c);
      r.tet = a.tetrad();
      r.order = a.aut().order();
      r.ok = true;
    } catch (const std::exception &e) {
      r.error = e.what();
    }
  }
  return rec;
}

class Suite {
public:
  Suite(const Records &rec) : rec_(rec), corpus_(*rec.corpus) {}

  std::vector<CheckReport> run(const std::vector<std::string> &claims) {
    bool all = claims.empty() ||
               std::find(claims.begin(), claims.end(), "all") != claims.end();
    auto wants = [&](const std::string &c) {
      return all || std::find(claims.begin(), claims.end(), c) != claims.end();
    };
    for (const auto &[id, statement] : kClaims) {
      if (!wants(id))
        continue;
      dispatch(id);
    }
    std::sort(reports_.begin(), reports_.end(),
              [](const CheckReport &a, const CheckReport &b) {
                return std::tie(a.claim, a.instance) < std::tie(b.claim, b.instance);
              });
    return std::move(reports_);
  }

private:
  const Records &rec_;
  const Corpus &corpus_;
  std::vector<CheckReport> reports_;

  void emit(const std::string &claim, const std::string &instance,
            ordered_json expected, ordered_json computed, Verdict v) {
    reports_.push_back(CheckReport{claim, claim_statement(claim), instance,
                                   std::move(expected), std::move(computed), v});
  }

  void emit_eq(const std::string &claim, const std::string &instance,
               ordered_json expected, ordered_json computed) {
    bool equal = expected == computed;
    Verdict v = equal ? Verdict::pass
                      : (is_findings_claim(claim) ? Verdict::finding
                                                  : Verdict::fail);
    emit(claim, instance, std::move(expected), std::move(computed), v);
  }

  void emit_error(const std::string &claim, const std::string &instance,
                  const std::string &error) {
    emit(claim, instance, nullptr, ordered_json{{"error", error}}, Verdict::fail);
  }

  void dispatch(const std::string &id);

  // --- disjoint unions -----------------------------------------------------

  void thm_dis_1() {
    for (const auto &r : rec_.unions) {
      if (!r.ok) {
        emit_error("THM_DIS_1", r.instance, r.error);
        continue;
      }
      const Tetrad &t1 = rec_.structs[r.i].tet, &t2 = rec_.structs[r.j].tet;
      emit_eq("THM_DIS_1", r.instance + " s=sem", deg_json(t1.e_sem + t2.e_sem),
              deg_json(r.tet.e_sem));
      emit_eq("THM_DIS_1", r.instance + " s=synt", deg_json(t1.e_synt + t2.e_synt),
              deg_json(r.tet.e_synt));
    }
  }

  void thm_dis_2() {
    for (const auto &r : rec_.unions) {
      if (!r.ok) {
        emit_error("THM_DIS_2", r.instance, r.error);
        continue;
      }
      const Tetrad &t1 = rec_.structs[r.i].tet, &t2 = rec_.structs[r.j].tet;
      emit_eq("THM_DIS_2", r.instance + " s=sem",
              t1.a_sem.is_zero() && t2.a_sem.is_zero(), r.tet.a_sem.is_zero());
      emit_eq("THM_DIS_2", r.instance + " s=synt",
              t1.a_synt.is_zero() && t2.a_synt.is_zero(), r.tet.a_synt.is_zero());
    }
  }

  void thm_dis_3() {
    for (const auto &r : rec_.unions) {
      if (!r.ok) {
        emit_error("THM_DIS_3", r.instance, r.error);
        continue;
      }
      auto one_mode = [&](const char *s, ExtNat a1, ExtNat a2, ExtNat au) {
        std::string inst = r.instance + " s=" + s;
        if (au.is_zero()) {
          emit("THM_DIS_3", inst, nullptr,
               ordered_json{{"side_condition", "union forall-degree is 0"}},
               Verdict::not_applicable);
          return;
        }
        int n1 = rec_.structs[r.i].ns->s.n, n2 = rec_.structs[r.j].ns->s.n;
        ExtNat expected(0);
        if (!a1.is_zero())
          expected = std::max(expected, a1 + ExtNat(std::uint64_t(n2)));
        if (!a2.is_zero())
          expected = std::max(expected, a2 + ExtNat(std::uint64_t(n1)));
        emit_eq("THM_DIS_3", inst, deg_json(expected), deg_json(au));
      };
      one_mode("sem", rec_.structs[r.i].tet.a_sem, rec_.structs[r.j].tet.a_sem,
               r.tet.a_sem);
      one_mode("synt", rec_.structs[r.i].tet.a_synt, rec_.structs[r.j].tet.a_synt,
               r.tet.a_synt);
    }
  }

  void thm_dis_ind() {
    for (std::size_t k = 0; k < rec_.unions.size(); ++k) {
      const auto &r = rec_.unions[k];
      if (!r.ok) {
        emit_error("THM_DIS_IND", r.instance, r.error);
        continue;
      }
      try {
        StructureAnalysis au(r.u);
        StructureAnalysis a1(rec_.structs[r.i].ns->s);
        StructureAnalysis a2(rec_.structs[r.j].ns->s);
        Rng rng(corpus_.seed * 7919 + k * 131);
        for (int t = 0; t < 5; ++t) {
          std::vector<int> a, left, right;
          for (int x = 0; x < r.u.n; ++x)
            if (rng.below(3) == 0) {
              a.push_back(x);
              if (x < r.lay.n1)
                left.push_back(x);
              else
                right.push_back(x - r.lay.n1);
            }
          std::uint64_t expected =
              std::max(a1.rigidity_index(left), a2.rigidity_index(right));
          std::uint64_t computed = au.rigidity_index(a);
          std::string inst = r.instance + " A#" + std::to_string(t);
          emit_eq("THM_DIS_IND", inst, expected, computed);
        }
      } catch (const std::exception &e) {
        emit_error("THM_DIS_IND", r.instance, e.what());
      }
    }
  }

  // --- compositions ---------------------------------------------------------

  void prop_wreath() {
    for (const auto &r : rec_.comps) {
      if (!r.ok) {
        emit_error("PROP_WREATH", r.instance, r.error);
        continue;
      }
      const auto &sm = rec_.structs[r.i];
      const auto &sn = rec_.structs[r.j];
      BigUint expected =
          sn.aut_order.pow(static_cast<std::uint64_t>(sm.ns->s.n)) * sm.aut_order;
      emit_eq("PROP_WREATH", r.instance, expected.to_string(),
              r.order.to_string());
    }
  }

  void thm_comp_exists(const std::string &claim, bool synt) {
    for (const auto &r : rec_.comps) {
      if (!r.ok) {
        emit_error(claim, r.instance, r.error);
        continue;
      }
      const Tetrad &tm = rec_.structs[r.i].tet, &tn = rec_.structs[r.j].tet;
      ExtNat em = synt ? tm.e_synt : tm.e_sem;
      ExtNat en = synt ? tn.e_synt : tn.e_sem;
      ExtNat got = synt ? r.tet.e_synt : r.tet.e_sem;
      ExtNat expected = en.is_zero()
                            ? em
                            : ExtNat(std::uint64_t(rec_.structs[r.i].ns->s.n)) * en;
      emit_eq(claim, r.instance, deg_json(expected), deg_json(got));
    }
  }

  void cor_zero() {
    for (const auto &r : rec_.comps) {
      if (!r.ok) {
        emit_error("COR_ZERO", r.instance, r.error);
        continue;
      }
      const Tetrad &tm = rec_.structs[r.i].tet, &tn = rec_.structs[r.j].tet;
      emit_eq("COR_ZERO", r.instance + " s=sem",
              tm.a_sem.is_zero() && tn.a_sem.is_zero(), r.tet.a_sem.is_zero());
      emit_eq("COR_ZERO", r.instance + " s=synt",
              tm.a_synt.is_zero() && tn.a_synt.is_zero(), r.tet.a_synt.is_zero());
    }
  }

  void thm_comp3(const std::string &which) {
    for (const auto &r : rec_.comps) {
      if (!r.ok) {
        emit_error("THM_COMP3_" + which, r.instance, r.error);
        continue;
      }
      const Tetrad &tm = rec_.structs[r.i].tet, &tn = rec_.structs[r.j].tet;
      std::uint64_t m = rec_.structs[r.i].ns->s.n;
      std::uint64_t n = rec_.structs[r.j].ns->s.n;
      auto one_mode = [&](const char *s, ExtNat am, ExtNat an, ExtNat ac) {
        std::string claim = "THM_COMP3_" + which;
        std::string inst = r.instance + " s=" + std::string(s);
        auto na = [&](const char *why) {
          emit(claim, inst, nullptr, ordered_json{{"side_condition", why}},
               Verdict::not_applicable);
        };
        if (which == "c") { // needs an infinite outer factor
          na("outer factor infinite is unsatisfiable at this scale");
          return;
        }
        if (ac.is_zero()) {
          na("composition forall-degree is 0");
          return;
        }
        if (which == "a") {
          if (!an.is_zero()) {
            na("inner factor not forall-rigid");
            return;
          }
          emit_eq(claim, inst, deg_json(ExtNat((am.value() - 1) * n + 1)),
                  deg_json(ac));
        } else if (which == "b") {
          if (an.is_zero()) {
            na("inner factor forall-rigid");
            return;
          }
          emit_eq(claim, inst, deg_json(ExtNat((m - 1) * n + an.value())),
                  deg_json(ac));
        } else { // d
          if (m != 1) {
            na("outer factor not a singleton");
            return;
          }
          emit_eq(claim, inst, deg_json(an), deg_json(ac));
        }
      };
      one_mode("sem", tm.a_sem, tn.a_sem, r.tet.a_sem);
      one_mode("synt", tm.a_synt, tn.a_synt, r.tet.a_synt);
    }
  }

  // --- relative degrees -----------------------------------------------------

  std::vector<int> dega_selection() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < rec_.structs.size() && out.size() < 40; ++i)
      if (rec_.structs[i].ok && rec_.structs[i].ns->s.n <= 5)
        out.push_back(static_cast<int>(i));
    return out;
  }

  void prop_dega(int item) {
    std::string claim = "PROP_DEGA_" + std::to_string(item);
    for (int idx : dega_selection()) {
      const auto &sr = rec_.structs[idx];
      const FiniteStructure &s = sr.ns->s;
      std::string inst = sr.ns->name;
      try {
        StructureAnalysis a(s);
        Rng rng(corpus_.seed * 104729 + idx * 37 + item);
        switch (item) {
        case 1: {
          if (sr.dcl0.empty()) {
            emit(claim, inst, nullptr,
                 ordered_json{{"side_condition", "dcl(empty) is empty"}},
                 Verdict::not_applicable);
            break;
          }
          std::vector<int> set(sr.dcl0.begin(),
                               sr.dcl0.begin() +
                                   std::min<std::size_t>(2, sr.dcl0.size()));
          Tetrad rel = relative_tetrad(s, set);
          emit_eq(claim, inst + " A={" + set_str(set) + "}", sr.tet.to_string(),
                  rel.to_string());
          break;
        }
        case 2: {
          for (Mode m : {Mode::semantic, Mode::syntactic}) {
            WitnessReport w = a.degree(Quantifier::exists, m);
            std::vector<int> set = w.witness.value_or(std::vector<int>{});
            for (int x = 0; x < s.n && set.size() < w.degree.value() + 1; ++x)
              if (std::find(set.begin(), set.end(), x) == set.end()) {
                set.push_back(x);
                break;
              }
            std::sort(set.begin(), set.end());
            ExtNat got = relative_degree(s, set, Quantifier::exists, m).degree;
            emit_eq(claim, inst + " s=" + to_string(m), deg_json(ExtNat(0)),
                    deg_json(got));
          }
          break;
        }
        case 3: {
          std::vector<int> small, big;
          for (int x = 0; x < s.n; ++x) {
            if (rng.below(3) == 0)
              small.push_back(x);
            else if (rng.below(3) == 0)
              big.push_back(x);
          }
          big.insert(big.end(), small.begin(), small.end());
          std::sort(big.begin(), big.end());
          bool holds = true;
          for (Quantifier q : {Quantifier::exists, Quantifier::forall})
            for (Mode m : {Mode::semantic, Mode::syntactic}) {
              ExtNat da = relative_degree(s, small, q, m).degree;
              ExtNat db = relative_degree(s, big, q, m).degree;
              if (!(da >= db))
                holds = false;
            }
          emit_eq(claim,
                  inst + " A={" + set_str(small) + "} B={" + set_str(big) + "}",
                  true, holds);
          break;
        }
        case 4: {
          // Every split A' / A\A' of the found witness must sum back to the
          // degree; the first counterexample (if any) is reported.
          for (Mode m : {Mode::semantic, Mode::syntactic}) {
            WitnessReport w = a.degree(Quantifier::exists, m);
            std::vector<int> wit = w.witness.value_or(std::vector<int>{});
            ordered_json computed = deg_json(w.degree);
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << wit.size());
                 ++bits) {
              std::vector<int> part, rest;
              for (std::size_t b = 0; b < wit.size(); ++b)
                ((bits >> b) & 1 ? part : rest).push_back(wit[b]);
              ExtNat da = relative_degree(s, part, Quantifier::exists, m).degree;
              ExtNat db = relative_degree(s, rest, Quantifier::exists, m).degree;
              if (da + db != w.degree) {
                computed = ordered_json{{"split", part},
                                        {"sum", deg_json(da + db)}};
                break;
              }
            }
            emit_eq(claim, inst + " s=" + to_string(m), deg_json(w.degree),
                    computed);
          }
          break;
        }
        case 5: {
          std::vector<int> set;
          for (int x = 0; x < s.n; ++x)
            if (rng.below(2) == 0)
              set.push_back(x);
          bool natural =
              !relative_degree(s, set, Quantifier::exists, Mode::semantic)
                   .degree.is_infinite() &&
              !relative_degree(s, set, Quantifier::exists, Mode::syntactic)
                   .degree.is_infinite();
          emit_eq(claim, inst + " A={" + set_str(set) + "}", true, natural);
          break;
        }
        case 6: {
          std::vector<int> set;
          for (int x = 0; x < s.n; ++x)
            if (rng.below(4) == 0)
              set.push_back(x);
          std::vector<int> ext = a.rigiditize(set);
          bool superset = std::includes(ext.begin(), ext.end(), set.begin(),
                                        set.end());
          bool rigid = a.sem_rigid(ext);
          bool minimal = true;
          if (ext.size() > set.size()) {
            // No superset of `set` one element smaller may rigidify.
            minimal = !superset_rigidifies(a, s.n, set, ext.size() - 1);
          }
          emit_eq(claim, inst + " A={" + set_str(set) + "}", true,
                  superset && rigid && minimal);
          break;
        }
        default:
          throw std::logic_error("unknown PROP_DEGA item");
        }
      } catch (const std::exception &e) {
        emit_error(claim, inst, e.what());
      }
    }
  }

  static std::string set_str(const std::vector<int> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  }

  // Exhaustive check used as the minimality oracle in PROP_DEGA_6.
  static bool superset_rigidifies(const StructureAnalysis &a, int n,
                                  const std::vector<int> &base,
                                  std::size_t size) {
    std::vector<int> extra;
    for (int x = 0; x < n; ++x)
      if (std::find(base.begin(), base.end(), x) == base.end())
        extra.push_back(x);
    std::size_t need = size - base.size();
    std::vector<int> pick(need);
    auto rec = [&](auto &&self, std::size_t from, std::size_t depth) -> bool {
      if (depth == need) {
        std::vector<int> set = base;
        set.insert(set.end(), pick.begin(), pick.begin() + need);
        return a.sem_rigid(set);
      }
      for (std::size_t i = from; i < extra.size(); ++i) {
        pick[depth] = extra[i];
        if (self(self, i + 1, depth + 1))
          return true;
      }
      return false;
    };
    if (need > extra.size())
      return false;
    return rec(rec, 0, 0);
  }

  // --- shapes, inequalities, bounds ------------------------------------------

  void cor_sem_synt1() {
    for (const auto &sr : rec_.structs) {
      if (!sr.ok)
        continue;
      bool unary = true;
      for (const auto &sym : sr.ns->s.sig.symbols)
        if (sym.arity != 1)
          unary = false;
      if (!unary)
        continue;
      int c = cor25_case(sr.tet);
      bool good = c == 1 ||
                  (c == 2 && sr.tet.a_sem == ExtNat(std::uint64_t(sr.ns->s.n) - 1));
      emit_eq("COR_SEM_SYNT1", sr.ns->name, true, good);
    }
    for (const auto &np : corpus_.profiles) {
      try {
        Tetrad t = profile_tetrad(np.p);
        int c = cor25_case(t);
        emit_eq("COR_SEM_SYNT1", "profile:" + np.name + " " + t.to_string(), true,
                c >= 1 && c <= 4);
      } catch (const std::exception &e) {
        emit_error("COR_SEM_SYNT1", "profile:" + np.name, e.what());
      }
    }
  }

  void ineq(int which) {
    std::string claim = "INEQ_" + std::to_string(which);
    auto check = [&](const std::string &inst, const Tetrad &t) {
      bool holds = true;
      switch (which) {
      case 1:
        holds = t.a_sem <= t.a_synt;
        break;
      case 2:
        holds = t.e_sem <= t.e_synt;
        break;
      case 3:
        holds = t.e_sem <= t.a_sem;
        break;
      case 4:
        holds = t.e_synt <= t.a_synt;
        break;
      }
      emit_eq(claim, inst + " " + t.to_string(), true, holds);
    };
    for (const auto &sr : rec_.structs) {
      if (!sr.ok) {
        emit_error(claim, sr.ns->name, sr.error);
        continue;
      }
      check(sr.ns->name, sr.tet);
    }
    for (const auto &np : corpus_.profiles) {
      try {
        check("profile:" + np.name, profile_tetrad(np.p));
      } catch (const std::exception &e) {
        emit_error(claim, "profile:" + np.name, e.what());
      }
    }
  }

  void upper_bound() {
    for (const auto &sr : rec_.structs) {
      if (!sr.ok) {
        emit_error("UPPER_BOUND", sr.ns->name, sr.error);
        continue;
      }
      std::uint64_t n = sr.ns->s.n;
      const Tetrad &t = sr.tet;
      bool holds = t.e_sem <= ExtNat(n - 1) && t.e_synt <= ExtNat(n - 1) &&
                   t.a_sem <= ExtNat(n - 1) && t.a_synt <= ExtNat(n - 1);
      std::uint64_t moving = n - sr.dcl0.size();
      if (moving > 0 && !t.e_sem.is_zero())
        holds = holds && t.e_sem <= ExtNat(moving - 1) &&
                t.e_synt <= ExtNat(moving - 1);
      emit_eq("UPPER_BOUND", sr.ns->name + " " + t.to_string(), true, holds);
    }
  }

  // --- findings ---------------------------------------------------------------

  void finding_ex28() {
    MonadicProfile nprime;
    nprime.classes.push_back(
        {ExtNat::infinity(), ExtNat(1), ExtNat::infinity(), true});
    Tetrad t = profile_tetrad(nprime);
    emit_eq("FINDING_EX28_NPRIME", "profile:(c=omega,u=1,mult=omega)",
            "n (as printed)", deg_json(t.e_synt));
  }

  void finding_vec_forall() {
    for (auto [q, d] : {std::pair{2, 2}, {3, 2}}) {
      std::string name =
          "vecspace(" + std::to_string(q) + "," + std::to_string(d) + ")";
      for (const auto &sr : rec_.structs) {
        if (sr.ns->name != name)
          continue;
        if (!sr.ok) {
          emit_error("FINDING_VEC_FORALL", name, sr.error);
          break;
        }
        std::uint64_t formula = static_cast<std::uint64_t>(d - 1) * q + 1;
        emit_eq("FINDING_VEC_FORALL", name, formula, deg_json(sr.tet.a_sem));
        break;
      }
    }
  }

  void finding_dis3_naive() {
    for (const auto &r : rec_.unions) {
      if (!r.ok)
        continue;
      const Tetrad &t1 = rec_.structs[r.i].tet, &t2 = rec_.structs[r.j].tet;
      bool mixed = t1.a_sem.is_zero() != t2.a_sem.is_zero();
      if (!mixed || r.tet.a_sem.is_zero())
        continue;
      std::uint64_t n1 = rec_.structs[r.i].ns->s.n;
      std::uint64_t n2 = rec_.structs[r.j].ns->s.n;
      ExtNat naive = std::max(t1.a_sem + ExtNat(n2), t2.a_sem + ExtNat(n1));
      emit_eq("FINDING_DIS3_NAIVE", r.instance + " s=sem", deg_json(naive),
              deg_json(r.tet.a_sem));
    }
  }

  void finding_wreath_shared() {
    try {
      FiniteStructure m = gen_family("eqrel", {2});
      FiniteStructure n = gen_family("eqrel", {1, 2});
      CompositionResult cr = compose(m, n); // shared "E" kept on purpose
      StructureAnalysis am(m), an(n), ac(cr.structure);
      BigUint formula =
          an.aut().order().pow(static_cast<std::uint64_t>(m.n)) * am.aut().order();
      emit_eq("FINDING_WREATH_SHARED", "compose(eqrel(2),eqrel(1,2)) shared E",
              formula.to_string(), ac.aut().order().to_string());
    } catch (const std::exception &e) {
      emit_error("FINDING_WREATH_SHARED", "compose(eqrel(2),eqrel(1,2))",
                 e.what());
    }
  }
};

void Suite::dispatch(const std::string &id) {
  if (id == "THM_DIS_1")
    thm_dis_1();
  else if (id == "THM_DIS_2")
    thm_dis_2();
  else if (id == "THM_DIS_3")
    thm_dis_3();
  else if (id == "THM_DIS_IND")
    thm_dis_ind();
  else if (id == "PROP_WREATH")
    prop_wreath();
  else if (id == "THM_COMP1")
    thm_comp_exists("THM_COMP1", false);
  else if (id == "THM_COMP2")
    thm_comp_exists("THM_COMP2", true);
  else if (id == "COR_ZERO")
    cor_zero();
  else if (id == "THM_COMP3_a")
    thm_comp3("a");
  else if (id == "THM_COMP3_b")
    thm_comp3("b");
  else if (id == "THM_COMP3_c")
    thm_comp3("c");
  else if (id == "THM_COMP3_d")
    thm_comp3("d");
  else if (id == "PROP_DEGA_1")
    prop_dega(1);
  else if (id == "PROP_DEGA_2")
    prop_dega(2);
  else if (id == "PROP_DEGA_3")
    prop_dega(3);
  else if (id == "PROP_DEGA_4")
    prop_dega(4);
  else if (id == "PROP_DEGA_5")
    prop_dega(5);
  else if (id == "PROP_DEGA_6")
    prop_dega(6);
  else if (id == "COR_SEM_SYNT1")
    cor_sem_synt1();
  else if (id == "INEQ_1")
    ineq(1);
  else if (id == "INEQ_2")
    ineq(2);
  else if (id == "INEQ_3")
    ineq(3);
  else if (id == "INEQ_4")
    ineq(4);
  else if (id == "UPPER_BOUND")
    upper_bound();
  else if (id == "FINDING_EX28_NPRIME")
    finding_ex28();
  else if (id == "FINDING_VEC_FORALL")
    finding_vec_forall();
  else if (id == "FINDING_DIS3_NAIVE")
    finding_dis3_naive();
  else if (id == "FINDING_WREATH_SHARED")
    finding_wreath_shared();
  else
    throw std::invalid_argument("unknown claim id: " + id);
}

} // namespace

std::vector<std::string> all_claims() {
  std::vector<std::string> out;
  for (const auto &[id, statement] : kClaims)
    out.push_back(id);
  return out;
}

bool is_findings_claim(const std::string &claim) {
  return claim.rfind("FINDING_", 0) == 0 || claim == "PROP_DEGA_4";
}

std::string claim_statement(const std::string &claim) {
  for (const auto &[id, statement] : kClaims)
    if (claim == id)
      return statement;
  return "";
}

std::vector<CheckReport> run_suite(const std::vector<std::string> &claims,
                                   const Corpus &corpus) {
  for (const auto &c : claims)
    if (c != "all" && claim_statement(c).empty())
      throw std::invalid_argument("unknown claim id: " + c);
  Records rec = precompute(corpus, needs_of(claims));
  Suite suite(rec);
  return suite.run(claims);
}

SuiteSummary summarize(const std::vector<CheckReport> &reports) {
  SuiteSummary s;
  for (const auto &r : reports)
    switch (r.verdict) {
    case Verdict::pass:
      ++s.pass;
      break;
    case Verdict::fail:
      ++s.fail;
      break;
    case Verdict::not_applicable:
      ++s.na;
      break;
    case Verdict::finding:
      ++s.findings;
      break;
    }
  return s;
}

nlohmann::ordered_json report_json(const Corpus &corpus,
                                   const std::vector<CheckReport> &reports) {
  SuiteSummary s = summarize(reports);
  ordered_json j;
  j["seed"] = corpus.seed;
  j["summary"] = ordered_json{{"pass", s.pass}, {"fail", s.fail}, {"na", s.na}};
  ordered_json arr = ordered_json::array();
  for (const auto &r : reports) {
    ordered_json e;
    e["claim"] = r.claim;
    e["quote"] = r.statement;
    e["instance"] = r.instance;
    e["expected"] = r.expected;
    e["computed"] = r.computed;
    e["verdict"] = to_string(r.verdict);
    arr.push_back(e);
  }
  j["reports"] = arr;
  return j;
}

} // namespace rigidity
