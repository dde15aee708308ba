#include "rigidity/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rigidity/config.hpp"

namespace rigidity {

void FiniteStructure::normalize() {
  for (auto &tuples : interp) {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  }
}

bool FiniteStructure::tuple_in(int sym_index, const std::vector<int> &t) const {
  const auto &tuples = interp[sym_index];
  return std::binary_search(tuples.begin(), tuples.end(), t);
}

std::size_t FiniteStructure::tuple_count() const {
  std::size_t c = 0;
  for (const auto &tuples : interp)
    c += tuples.size();
  return c;
}

void FiniteStructure::add_symbol(const std::string &name, int arity,
                                 std::vector<std::vector<int>> tuples) {
  sig.symbols.push_back({name, arity});
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  interp.push_back(std::move(tuples));
}

std::string FiniteStructure::fresh_symbol_name(const std::string &base) const {
  std::string name = base;
  while (sig.has(name))
    name += "_";
  return name;
}

std::vector<std::string> validate(const FiniteStructure &s) {
  std::vector<std::string> out;
  if (s.n < 1)
    out.push_back("n: universe size " + std::to_string(s.n) + " < 1");
  std::set<std::string> names;
  for (const auto &sym : s.sig.symbols) {
    if (!names.insert(sym.name).second)
      out.push_back("signature: duplicate symbol name " + sym.name);
    if (sym.arity < 1)
      out.push_back("signature." + sym.name + ": arity " +
                    std::to_string(sym.arity) + " < 1");
  }
  if (s.interp.size() != s.sig.symbols.size()) {
    out.push_back("relations: " + std::to_string(s.interp.size()) +
                  " interpretations for " +
                  std::to_string(s.sig.symbols.size()) + " symbols");
    return out;
  }
  for (std::size_t i = 0; i < s.interp.size(); ++i) {
    const auto &sym = s.sig.symbols[i];
    for (const auto &t : s.interp[i]) {
      if (static_cast<int>(t.size()) != sym.arity) {
        out.push_back("relations." + sym.name + ": tuple of length " +
                      std::to_string(t.size()) + " does not match arity " +
                      std::to_string(sym.arity));
        continue;
      }
      for (int v : t)
        if (v < 0 || v >= s.n)
          out.push_back("relations." + sym.name + ": tuple out of range (entry " +
                        std::to_string(v) + ", universe size " +
                        std::to_string(s.n) + ")");
    }
  }
  std::set<int> seen;
  for (int c : s.named) {
    if (c < 0 || c >= s.n)
      out.push_back("constants: element " + std::to_string(c) + " out of range");
    else if (!seen.insert(c).second)
      out.push_back("constants: duplicate constant " + std::to_string(c));
  }
  return out;
}

void require_valid(const FiniteStructure &s) {
  auto violations = validate(s);
  if (!violations.empty())
    throw std::invalid_argument("invalid structure: " + violations.front());
}

ConstantEncoding encode_constants(const FiniteStructure &s) {
  require_valid(s);
  ConstantEncoding out;
  out.structure = s;
  out.structure.named.clear();
  for (int c : s.named) {
    std::string name = out.structure.fresh_symbol_name("c" + std::to_string(c));
    out.structure.add_symbol(name, 1, {{c}});
    out.constant_symbols.emplace_back(c, name);
  }
  return out;
}

namespace {

bool is_prime(int q) {
  if (q < 2)
    return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0)
      return false;
  return true;
}

void check_size(long long n) {
  if (n < 1)
    throw std::invalid_argument("gen_family: universe size must be positive");
  if (n > universe_cap())
    throw std::invalid_argument("gen_family: size " + std::to_string(n) +
                                " exceeds universe cap " +
                                std::to_string(universe_cap()));
}

FiniteStructure make_empty(int n) {
  check_size(n);
  FiniteStructure s;
  s.n = n;
  return s;
}

FiniteStructure make_cycle(int n) {
  check_size(n);
  FiniteStructure s;
  s.n = n;
  std::vector<std::vector<int>> tuples;
  for (int i = 0; i < n; ++i)
    tuples.push_back({i, (i + 1) % n});
  s.add_symbol("R", 2, std::move(tuples));
  return s;
}

FiniteStructure make_eqrel(const std::vector<int> &sizes) {
  long long n = 0;
  for (int b : sizes) {
    if (b < 1)
      throw std::invalid_argument("gen_family: eqrel block size must be positive");
    n += b;
  }
  check_size(n);
  FiniteStructure s;
  s.n = static_cast<int>(n);
  std::vector<std::vector<int>> tuples;
  int offset = 0;
  for (int b : sizes) {
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j)
        tuples.push_back({offset + i, offset + j});
    offset += b;
  }
  s.add_symbol("E", 2, std::move(tuples));
  return s;
}

FiniteStructure make_atoms(const std::vector<int> &sizes) {
  long long n = 0;
  for (int b : sizes) {
    if (b < 1)
      throw std::invalid_argument("gen_family: atom size must be positive");
    n += b;
  }
  check_size(n);
  FiniteStructure s;
  s.n = static_cast<int>(n);
  int offset = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    std::vector<std::vector<int>> tuples;
    for (int i = 0; i < sizes[k]; ++i)
      tuples.push_back({offset + i});
    s.add_symbol("P" + std::to_string(k), 1, std::move(tuples));
    offset += sizes[k];
  }
  return s;
}

FiniteStructure make_vecspace(int q, int dim) {
  if (!is_prime(q))
    throw std::invalid_argument("gen_family: vecspace field size must be prime");
  if (dim < 1)
    throw std::invalid_argument("gen_family: vecspace dimension must be positive");
  long long n = 1;
  for (int i = 0; i < dim; ++i) {
    n *= q;
    if (n > universe_cap())
      throw std::invalid_argument("gen_family: vecspace size exceeds universe cap");
  }
  check_size(n);
  int nn = static_cast<int>(n);

  auto add_mod = [&](int x, int y) {
    int z = 0, p = 1;
    for (int i = 0; i < dim; ++i) {
      z += ((x % q + y % q) % q) * p;
      x /= q;
      y /= q;
      p *= q;
    }
    return z;
  };
  auto scale_mod = [&](int l, int x) {
    int z = 0, p = 1;
    for (int i = 0; i < dim; ++i) {
      z += ((x % q) * l % q) * p;
      x /= q;
      p *= q;
    }
    return z;
  };

  FiniteStructure s;
  s.n = nn;
  std::vector<std::vector<int>> add;
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y)
      add.push_back({x, y, add_mod(x, y)});
  s.add_symbol("add", 3, std::move(add));
  for (int l = 0; l < q; ++l) {
    std::vector<std::vector<int>> sc;
    for (int x = 0; x < nn; ++x)
      sc.push_back({x, scale_mod(l, x)});
    s.add_symbol("sc" + std::to_string(l), 2, std::move(sc));
  }
  return s;
}

} // namespace

FiniteStructure gen_family(const std::string &family_id,
                           const std::vector<int> &params) {
  for (int p : params)
    if (p <= 0)
      throw std::invalid_argument("gen_family: parameters must be positive");
  if (family_id == "empty") {
    if (params.size() != 1)
      throw std::invalid_argument("gen_family: empty(n) takes one parameter");
    return make_empty(params[0]);
  }
  if (family_id == "cycle") {
    if (params.size() != 1)
      throw std::invalid_argument("gen_family: cycle(n) takes one parameter");
    return make_cycle(params[0]);
  }
  if (family_id == "eqrel") {
    if (params.empty())
      throw std::invalid_argument("gen_family: eqrel needs block sizes");
    return make_eqrel(params);
  }
  if (family_id == "atoms") {
    if (params.empty())
      throw std::invalid_argument("gen_family: atoms needs atom sizes");
    return make_atoms(params);
  }
  if (family_id == "vecspace") {
    if (params.size() != 2)
      throw std::invalid_argument("gen_family: vecspace(q,dim) takes two parameters");
    return make_vecspace(params[0], params[1]);
  }
  throw std::invalid_argument("gen_family: unknown family id '" + family_id + "'");
}

} // namespace rigidity
