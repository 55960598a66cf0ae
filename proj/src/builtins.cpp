#include "leibniz/builtins.hpp"

#include <algorithm>
#include <tuple>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

using Bracket = std::tuple<std::size_t, std::size_t, std::size_t, long long>;

struct Definition {
  std::size_t dim;
  std::vector<Bracket> brackets;  // 1-based
  bool skew;                      // also add [e_j, e_i] = -[e_i, e_j]
};

Definition definition(std::string_view name) {
  if (name == "l5") return {4, {{1, 2, 2, 1}, {1, 3, 3, 1}, {1, 4, 4, 2}, {2, 3, 4, 1}}, true};
  if (name == "ex3dim") return {3, {{2, 2, 1, 1}, {3, 3, 1, 1}}, false};
  if (name == "ex5dim") return {5, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 5, 1}}, true};
  if (name == "heisenberg") return {3, {{1, 2, 3, 1}}, true};
  // Upper triangular 2x2 matrices on h1 = E11, h2 = E22, e = E12.
  if (name == "b2") return {3, {{1, 3, 3, 1}, {2, 3, 3, -1}}, true};
  throw PreconditionViolated("unknown builtin algebra '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"l5", "ex3dim", "ex5dim", "heisenberg", "b2"};
  return names;
}

bool is_builtin(std::string_view name) {
  const auto& names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

FieldChange builtin(std::string_view name, FieldSpec field) {
  const Definition def = definition(name);
  const FieldSpec q = FieldSpec::rationals();
  std::vector<AlgebraTable::Entry> entries;
  for (const auto& [i, j, k, c] : def.brackets) {
    entries.push_back({i - 1, j - 1, k - 1, Scalar::from_int(q, c)});
    if (def.skew) entries.push_back({j - 1, i - 1, k - 1, Scalar::from_int(q, -c)});
  }
  return change_field(AlgebraTable::from_entries(q, def.dim, entries), field);
}

}  // namespace leibniz
