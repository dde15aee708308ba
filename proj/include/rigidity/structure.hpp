#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rigidity {

struct SignatureSymbol {
  std::string name;
  int arity = 1;
};

/// Purely relational signature: ordered symbols, unique names, arity >= 1.
struct Signature {
  std::vector<SignatureSymbol> symbols;

  int index_of(const std::string &name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i].name == name)
        return static_cast<int>(i);
    return -1;
  }
  bool has(const std::string &name) const { return index_of(name) >= 0; }
};

/// Finite relational structure over universe 0..n-1. `interp[i]` holds the
/// tuples of `sig.symbols[i]`, kept sorted and duplicate-free by normalize().
/// `named` lists constant elements in declaration order.
struct FiniteStructure {
  int n = 1;
  Signature sig;
  std::vector<std::vector<std::vector<int>>> interp;
  std::vector<int> named;

  void normalize();
  bool tuple_in(int sym_index, const std::vector<int> &t) const;
  std::size_t tuple_count() const;

  /// Appends a symbol with its (already in-range) tuples.
  void add_symbol(const std::string &name, int arity,
                  std::vector<std::vector<int>> tuples);

  /// Deterministic fresh name: `base`, then `base_`, `base__`, ...
  std::string fresh_symbol_name(const std::string &base) const;
};

/// Empty list iff all FiniteStructure invariants hold; each entry names the
/// offending field and value.
std::vector<std::string> validate(const FiniteStructure &s);

void require_valid(const FiniteStructure &s);

struct ConstantEncoding {
  FiniteStructure structure;
  /// (constant element, fresh unary symbol) in original named order.
  std::vector<std::pair<int, std::string>> constant_symbols;
};

/// Replaces each named constant by a fresh singleton unary predicate; the
/// result has an empty named list and is a fixed point of this operation.
ConstantEncoding encode_constants(const FiniteStructure &s);

/// Families used as fixtures:
///   empty(n); cycle(n); eqrel(s1,...,sk); atoms(s1,...,sk); vecspace(q,dim).
/// vecspace builds F_q^dim with ternary "add" = {(x,y,x+y)} and binary
/// "sc<l>" = {(x, l*x)} for each scalar l; q must be prime.
FiniteStructure gen_family(const std::string &family_id,
                           const std::vector<int> &params);

} // namespace rigidity
