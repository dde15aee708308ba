#include "rigidity/combinators.hpp"

#include <stdexcept>

#include "rigidity/config.hpp"

namespace rigidity {

namespace {

void require_encoded_operand(const FiniteStructure &s, const char *op) {
  require_valid(s);
  if (!s.named.empty())
    throw std::invalid_argument(std::string(op) +
                                ": encode constants before combining");
}

} // namespace

UnionResult disjoint_union(const FiniteStructure &s1, const FiniteStructure &s2) {
  require_encoded_operand(s1, "disjoint_union");
  require_encoded_operand(s2, "disjoint_union");
  long long total = static_cast<long long>(s1.n) + s2.n;
  if (total > universe_cap())
    throw std::invalid_argument("disjoint_union: universe cap exceeded");

  UnionResult out;
  out.layout.n1 = s1.n;
  out.layout.n2 = s2.n;
  FiniteStructure &u = out.structure;
  u.n = static_cast<int>(total);

  for (std::size_t i = 0; i < s1.sig.symbols.size(); ++i)
    u.add_symbol(s1.sig.symbols[i].name, s1.sig.symbols[i].arity, s1.interp[i]);

  for (std::size_t i = 0; i < s2.sig.symbols.size(); ++i) {
    const auto &sym = s2.sig.symbols[i];
    std::string name = sym.name;
    if (u.sig.has(name)) {
      name = u.fresh_symbol_name(sym.name + "_2");
      out.layout.renames2.emplace_back(sym.name, name);
    }
    std::vector<std::vector<int>> shifted;
    shifted.reserve(s2.interp[i].size());
    for (const auto &t : s2.interp[i]) {
      std::vector<int> st(t.size());
      for (std::size_t j = 0; j < t.size(); ++j)
        st[j] = t[j] + s1.n;
      shifted.push_back(std::move(st));
    }
    u.add_symbol(name, sym.arity, std::move(shifted));
  }

  out.layout.p1_name = u.fresh_symbol_name("P_1");
  std::vector<std::vector<int>> p1;
  for (int x = 0; x < s1.n; ++x)
    p1.push_back({x});
  u.add_symbol(out.layout.p1_name, 1, std::move(p1));

  out.layout.p2_name = u.fresh_symbol_name("P_2");
  std::vector<std::vector<int>> p2;
  for (int x = 0; x < s2.n; ++x)
    p2.push_back({s1.n + x});
  u.add_symbol(out.layout.p2_name, 1, std::move(p2));

  require_valid(u);
  return out;
}

CompositionResult compose(const FiniteStructure &m, const FiniteStructure &n) {
  require_encoded_operand(m, "compose");
  require_encoded_operand(n, "compose");
  long long total = static_cast<long long>(m.n) * n.n;
  if (total > universe_cap())
    throw std::invalid_argument("compose: universe cap exceeded");
  for (const auto &sym : m.sig.symbols) {
    int j = n.sig.index_of(sym.name);
    if (j >= 0 && n.sig.symbols[j].arity != sym.arity)
      throw std::invalid_argument("compose: shared symbol " + sym.name +
                                  " has mismatched arities");
  }

  CompositionResult out;
  CompositionLayout &lay = out.layout;
  lay.m = m.n;
  lay.n = n.n;
  FiniteStructure &c = out.structure;
  c.n = static_cast<int>(total);

  // Tuples for one symbol, assembled from the M-side reading (first
  // coordinates in R_M, second coordinates free) and/or the N-side reading
  // (equal first coordinate, second coordinates in R_N).
  auto build_symbol = [&](int arity, const std::vector<std::vector<int>> *rm,
                          const std::vector<std::vector<int>> *rn) {
    std::vector<std::vector<int>> tuples;
    if (rm) {
      std::vector<int> b(arity, 0);
      for (const auto &am : *rm) {
        // all assignments of second coordinates
        for (;;) {
          std::vector<int> t(arity);
          for (int i = 0; i < arity; ++i)
            t[i] = lay.pair(am[i], b[i]);
          tuples.push_back(std::move(t));
          int i = arity - 1;
          while (i >= 0 && b[i] == n.n - 1)
            b[i--] = 0;
          if (i < 0)
            break;
          ++b[i];
        }
      }
    }
    if (rn) {
      for (int a = 0; a < m.n; ++a)
        for (const auto &bn : *rn) {
          std::vector<int> t(arity);
          for (int i = 0; i < arity; ++i)
            t[i] = lay.pair(a, bn[i]);
          tuples.push_back(std::move(t));
        }
    }
    return tuples;
  };

  for (std::size_t i = 0; i < m.sig.symbols.size(); ++i) {
    const auto &sym = m.sig.symbols[i];
    int j = n.sig.index_of(sym.name);
    c.add_symbol(sym.name, sym.arity,
                 build_symbol(sym.arity, &m.interp[i],
                              j >= 0 ? &n.interp[j] : nullptr));
  }
  for (std::size_t j = 0; j < n.sig.symbols.size(); ++j) {
    const auto &sym = n.sig.symbols[j];
    if (m.sig.has(sym.name))
      continue; // shared, already handled
    c.add_symbol(sym.name, sym.arity,
                 build_symbol(sym.arity, nullptr, &n.interp[j]));
  }

  lay.e_name = c.fresh_symbol_name("E");
  std::vector<std::vector<int>> e_tuples;
  for (int a = 0; a < m.n; ++a)
    for (int b1 = 0; b1 < n.n; ++b1)
      for (int b2 = 0; b2 < n.n; ++b2)
        e_tuples.push_back({lay.pair(a, b1), lay.pair(a, b2)});
  c.add_symbol(lay.e_name, 2, std::move(e_tuples));

  require_valid(c);
  return out;
}

CompositionResult compose_disjoint(const FiniteStructure &m,
                                   const FiniteStructure &n) {
  FiniteStructure n2 = n;
  for (auto &sym : n2.sig.symbols)
    if (m.sig.has(sym.name)) {
      std::string name = sym.name + "_c";
      while (m.sig.has(name) || n2.sig.has(name))
        name += "_";
      sym.name = name;
    }
  return compose(m, n2);
}

} // namespace rigidity
