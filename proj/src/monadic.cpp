#include "rigidity/monadic.hpp"

#include <stdexcept>

#include "rigidity/config.hpp"

namespace rigidity {

bool profile_is_finite(const MonadicProfile &p) {
  if (p.unbounded_finite_family)
    return false;
  for (const auto &k : p.classes)
    if (k.c.is_infinite() || k.u.is_infinite() || k.mult.is_infinite())
      return false;
  return true;
}

ExtNat profile_total_size(const MonadicProfile &p) {
  ExtNat total(0);
  for (const auto &k : p.classes)
    total = total + k.mult * (k.c + k.u);
  if (p.unbounded_finite_family)
    total = ExtNat::infinity();
  return total;
}

void validate_profile(const MonadicProfile &p) {
  if (p.classes.empty() && !p.unbounded_finite_family)
    throw std::invalid_argument("profile: no classes and no unbounded family");
  bool finite = profile_is_finite(p);
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const auto &k = p.classes[i];
    std::string ctx = "classes[" + std::to_string(i) + "]";
    if (k.mult.is_zero())
      throw std::invalid_argument(ctx + ": mult must be >= 1");
    if (k.c.is_zero() && k.u.is_zero())
      throw std::invalid_argument(ctx + ": empty atom (c = u = 0)");
    if (!k.definable && finite)
      throw std::invalid_argument(
          ctx + ": definable=false requires an infinite profile "
                "(every atom of a finite unary structure is definable)");
  }
}

Tetrad profile_tetrad(const MonadicProfile &p) {
  validate_profile(p);
  if (p.unbounded_finite_family)
    throw std::invalid_argument(
        "profile_tetrad: unbounded_finite_family supports only the index");
  ExtNat e_sem(0), e_synt(0);
  for (const auto &k : p.classes) {
    e_sem = e_sem + k.mult * k.u.dec_clamped();
    bool isolated = k.definable && !k.c.is_infinite();
    e_synt = e_synt + k.mult * (isolated ? k.u.dec_clamped() : k.u);
  }
  bool finite = profile_is_finite(p);
  auto forall_of = [&](ExtNat e) {
    if (e.is_zero())
      return ExtNat(0);
    if (finite)
      return ExtNat(profile_total_size(p).value() - 1);
    return ExtNat::infinity();
  };
  Tetrad t{e_sem, e_synt, forall_of(e_sem), forall_of(e_synt)};
  t.check();
  return t;
}

ExtNat profile_ind(const MonadicProfile &p) {
  validate_profile(p);
  if (p.unbounded_finite_family)
    return ExtNat::infinity();
  ExtNat best(0);
  for (const auto &k : p.classes) {
    if (!k.c.is_zero() && best < ExtNat(1))
      best = ExtNat(1);
    if (!k.u.is_zero() && !k.u.is_infinite() && best < k.u)
      best = k.u;
  }
  return best;
}

MonadicProfile realize_pair(ExtNat mu, ExtNat nu) {
  if (!(mu <= nu))
    throw std::invalid_argument("realize_pair: mu must be <= nu");
  MonadicProfile p;
  if (mu.is_infinite()) { // nu infinite too
    p.classes.push_back({ExtNat(0), ExtNat::infinity(), ExtNat(1), true});
    return p;
  }
  if (mu.is_zero() && nu.is_zero()) {
    p.classes.push_back({ExtNat(1), ExtNat(0), ExtNat(1), true});
    return p;
  }
  // (nu - mu) atoms with an infinite named part and one unnamed element give
  // the synt surplus; one finite atom with mu+1 unnamed elements gives mu.
  ExtNat surplus = nu.is_infinite()
                       ? ExtNat::infinity()
                       : ExtNat(nu.value() - mu.value());
  if (!surplus.is_zero())
    p.classes.push_back({ExtNat::infinity(), ExtNat(1), surplus, true});
  if (!mu.is_zero())
    p.classes.push_back({ExtNat(0), ExtNat(mu.value() + 1), ExtNat(1), true});
  return p;
}

FiniteStructure truncate(const MonadicProfile &p, const TruncationCaps &caps) {
  validate_profile(p);
  if (p.unbounded_finite_family)
    throw std::invalid_argument(
        "truncate: unbounded_finite_family has no finite substitute");
  auto substitute = [](ExtNat v, const std::optional<std::uint64_t> &cap,
                       const char *field) {
    if (!v.is_infinite())
      return v.value();
    if (!cap)
      throw std::invalid_argument(std::string("truncate: substitute for ") +
                                  field + " = omega missing");
    return *cap;
  };
  FiniteStructure s;
  s.n = 0;
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const auto &k = p.classes[i];
    std::uint64_t mult = substitute(k.mult, caps.mult, "mult");
    if (mult < 1)
      throw std::invalid_argument("truncate: mult substitute must be >= 1");
    std::uint64_t c = substitute(k.c, caps.c, "c");
    std::uint64_t u = substitute(k.u, caps.u, "u");
    for (std::uint64_t j = 0; j < mult; ++j) {
      std::vector<std::vector<int>> atom;
      for (std::uint64_t e = 0; e < c + u; ++e) {
        int elem = s.n + static_cast<int>(e);
        atom.push_back({elem});
        if (e < c)
          s.named.push_back(elem);
      }
      if (static_cast<long long>(s.n) + static_cast<long long>(c + u) >
          universe_cap())
        throw std::invalid_argument("truncate: universe cap exceeded");
      s.n += static_cast<int>(c + u);
      s.add_symbol("A" + std::to_string(i) + "_" + std::to_string(j), 1,
                   std::move(atom));
    }
  }
  if (s.n == 0)
    throw std::invalid_argument("truncate: empty structure");
  // Constants as singleton predicates, same convention as encode_constants.
  FiniteStructure out = encode_constants(s).structure;
  return out;
}

int cor25_case(const Tetrad &t) {
  bool all_zero = t.e_sem.is_zero() && t.e_synt.is_zero() && t.a_sem.is_zero() &&
                  t.a_synt.is_zero();
  if (all_zero)
    return 1;
  if (!t.e_sem.is_infinite() && !t.a_sem.is_infinite() &&
      !t.a_synt.is_infinite() && t.e_sem == t.e_synt && t.a_sem == t.a_synt &&
      ExtNat(1) <= t.e_sem && t.e_sem <= t.a_sem)
    return 2;
  if (t.e_sem.is_zero() && t.a_sem.is_zero() && ExtNat(1) <= t.e_synt &&
      t.a_synt.is_infinite())
    return 3;
  if (ExtNat(1) <= t.e_sem && t.e_sem <= t.e_synt && t.a_sem.is_infinite() &&
      t.a_synt.is_infinite())
    return 4;
  return 0;
}

} // namespace rigidity
