#include "rigidity/degrees.hpp"

#include <algorithm>
#include <stdexcept>

#include "rigidity/config.hpp"

namespace rigidity {

std::string to_string(Quantifier q) {
  return q == Quantifier::exists ? "exists" : "forall";
}

std::string to_string(Mode m) {
  return m == Mode::semantic ? "sem" : "synt";
}

void Tetrad::check() const {
  if (!(e_sem <= e_synt && a_sem <= a_synt && e_sem <= a_sem && e_synt <= a_synt))
    throw std::logic_error("tetrad inequalities violated: " + to_string());
}

std::string Tetrad::to_string() const {
  return "(" + e_sem.to_string() + "," + e_synt.to_string() + "," +
         a_sem.to_string() + "," + a_synt.to_string() + ")";
}

StructureAnalysis::StructureAnalysis(const FiniteStructure &s, scan::Options opts)
    : original_(s), encoded_(encode_constants(s).structure), opts_(opts),
      aut_(automorphism_group(encoded_)) {}

std::vector<int> StructureAnalysis::checked_set(const std::vector<int> &a) const {
  std::vector<int> out = a;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int e : out)
    if (e < 0 || e >= encoded_.n)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " out of range for universe size " +
                                  std::to_string(encoded_.n));
  return out;
}

std::vector<int> StructureAnalysis::dcl(const std::vector<int> &a) const {
  auto set = checked_set(a);
  auto view = aut_.pointwise_stabilizer_view(set);
  std::vector<int> out;
  for (int x = 0; x < encoded_.n; ++x) {
    bool fixed = true;
    for (const auto &g : view.generators)
      if (g(x) != x) {
        fixed = false;
        break;
      }
    if (fixed)
      out.push_back(x);
  }
  return out;
}

bool StructureAnalysis::sem_rigid(const std::vector<int> &a) const {
  auto view = aut_.pointwise_stabilizer_view(checked_set(a));
  return view.order.is_one();
}

bool StructureAnalysis::synt_rigid(const std::vector<int> &a) const {
  bool synt = static_cast<int>(dcl(a).size()) == encoded_.n;
  bool sem = sem_rigid(a);
  if (synt != sem)
    throw std::logic_error("finite sem/synt rigidity diverged");
  return synt;
}

bool StructureAnalysis::rigidifies(Mode m, std::uint64_t mask) const {
  auto view = aut_.pointwise_stabilizer_view(scan::elements_of(mask));
  if (m == Mode::semantic)
    return view.order.is_one();
  for (int x = 0; x < encoded_.n; ++x)
    for (const auto &g : view.generators)
      if (g(x) != x)
        return false;
  return true;
}

WitnessReport StructureAnalysis::exists_degree(Mode m) const {
  WitnessReport out;
  out.quantifier = Quantifier::exists;
  out.mode = m;
  int n = encoded_.n;
  if (n > 64)
    throw std::invalid_argument("degree scan: universe cap exceeded");
  auto pred = [&](std::uint64_t mask) { return rigidifies(m, mask); };
  for (int k = 0; k < n; ++k) {
    auto hit = scan::least_satisfying(n, k, aut_.generators(), pred, opts_);
    if (hit) {
      out.degree = ExtNat(static_cast<std::uint64_t>(k));
      out.witness = scan::elements_of(*hit);
      return out;
    }
  }
  // Any (n-1)-set rigidifies a finite structure, so we cannot get here.
  throw std::logic_error("exists-degree scan exhausted all sizes");
}

WitnessReport StructureAnalysis::forall_degree(Mode m,
                                               const WitnessReport &exists) const {
  WitnessReport out;
  out.quantifier = Quantifier::forall;
  out.mode = m;
  int n = encoded_.n;
  std::uint64_t e = exists.degree.value();
  if (e == 0) {
    out.degree = ExtNat(0);
    return out;
  }
  auto fails = [&](std::uint64_t mask) { return !rigidifies(m, mask); };
  // Every level below the exists-degree fails outright; walk upward from
  // there. Failing levels exit at their least failing set; the single full
  // scan happens at the answer.
  std::optional<std::uint64_t> last_failing;
  for (int k = static_cast<int>(e); k <= n - 1; ++k) {
    auto failing = scan::least_satisfying(n, k, aut_.generators(), fails, opts_);
    if (!failing) {
      out.degree = ExtNat(static_cast<std::uint64_t>(k));
      if (static_cast<std::uint64_t>(k) == e) {
        // All (e-1)-sets fail; the least one is {0,...,e-2}.
        std::vector<int> w(e - 1);
        for (std::uint64_t i = 0; i + 1 < e; ++i)
          w[i] = static_cast<int>(i);
        out.witness = std::move(w);
      } else {
        out.witness = scan::elements_of(*last_failing);
      }
      return out;
    }
    last_failing = failing;
  }
  throw std::logic_error("forall-degree scan exhausted all sizes");
}

WitnessReport StructureAnalysis::degree(Quantifier q, Mode m) const {
  WitnessReport e = exists_degree(m);
  if (q == Quantifier::exists)
    return e;
  return forall_degree(m, e);
}

Tetrad StructureAnalysis::tetrad() const {
  WitnessReport es = exists_degree(Mode::semantic);
  WitnessReport ey = exists_degree(Mode::syntactic);
  WitnessReport as = forall_degree(Mode::semantic, es);
  WitnessReport ay = forall_degree(Mode::syntactic, ey);
  Tetrad t{es.degree, ey.degree, as.degree, ay.degree};
  t.check();
  if (!(t.e_sem == t.e_synt && t.a_sem == t.a_synt))
    throw std::logic_error("finite sem/synt degree collapse violated: " +
                           t.to_string());
  return t;
}

std::uint64_t StructureAnalysis::rigidity_index(const std::vector<int> &a) const {
  auto view = aut_.pointwise_stabilizer_view(checked_set(a));
  PermGroup stab(encoded_.n, view.generators);
  std::uint64_t best = 0;
  for (const auto &orbit : stab.orbits())
    best = std::max(best, static_cast<std::uint64_t>(orbit.size()));
  return best;
}

std::vector<int> StructureAnalysis::rigiditize(const std::vector<int> &a) const {
  auto base = checked_set(a);
  int n = encoded_.n;
  if (n > 64)
    throw std::invalid_argument("rigiditize scan: universe cap exceeded");
  std::uint64_t base_mask = scan::mask_of(base);
  auto stab_view = aut_.pointwise_stabilizer_view(base);
  auto pred = [&](std::uint64_t mask) {
    if ((mask & base_mask) != base_mask)
      return false;
    return rigidifies(Mode::semantic, mask);
  };
  for (int t = static_cast<int>(base.size()); t <= n; ++t) {
    auto hit = scan::least_satisfying(n, t, stab_view.generators, pred, opts_);
    if (hit)
      return scan::elements_of(*hit);
  }
  throw std::logic_error("rigiditize: full universe failed to rigidify");
}

std::vector<int> dcl(const FiniteStructure &s, const std::vector<int> &a) {
  return StructureAnalysis(s).dcl(a);
}

bool is_sem_rigid(const FiniteStructure &s, const std::vector<int> &a) {
  return StructureAnalysis(s).sem_rigid(a);
}

bool is_synt_rigid(const FiniteStructure &s, const std::vector<int> &a) {
  return StructureAnalysis(s).synt_rigid(a);
}

WitnessReport degree(const FiniteStructure &s, Quantifier q, Mode m,
                     scan::Options opts) {
  return StructureAnalysis(s, opts).degree(q, m);
}

Tetrad tetrad(const FiniteStructure &s, scan::Options opts) {
  return StructureAnalysis(s, opts).tetrad();
}

FiniteStructure expand_by_constants(const FiniteStructure &s,
                                    const std::vector<int> &a) {
  FiniteStructure out = s;
  for (int e : a) {
    if (e < 0 || e >= s.n)
      throw std::invalid_argument("expand_by_constants: element out of range");
    if (std::find(out.named.begin(), out.named.end(), e) == out.named.end())
      out.named.push_back(e);
  }
  return out;
}

WitnessReport relative_degree(const FiniteStructure &s, const std::vector<int> &a,
                              Quantifier q, Mode m, scan::Options opts) {
  return StructureAnalysis(expand_by_constants(s, a), opts).degree(q, m);
}

Tetrad relative_tetrad(const FiniteStructure &s, const std::vector<int> &a,
                       scan::Options opts) {
  return StructureAnalysis(expand_by_constants(s, a), opts).tetrad();
}

std::vector<int> rigiditize(const FiniteStructure &s, const std::vector<int> &a,
                            scan::Options opts) {
  return StructureAnalysis(s, opts).rigiditize(a);
}

std::uint64_t rigidity_index(const FiniteStructure &s, const std::vector<int> &a) {
  return StructureAnalysis(s).rigidity_index(a);
}

} // namespace rigidity
