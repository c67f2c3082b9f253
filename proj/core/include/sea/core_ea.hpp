#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sea/report.hpp"

namespace sea {

// Index into the carrier of a FiniteEffectAlgebra.
struct ElementId {
  std::size_t index = 0;

  friend bool operator==(ElementId, ElementId) = default;
  friend auto operator<=>(ElementId, ElementId) = default;
};

// Finite effect algebra given by its partial addition table.
//
// Construction only checks shape (square table, ids in range, size cap);
// the axioms are checked by check_ea_axioms(). Order and difference tables are
// derived once on construction.
class FiniteEffectAlgebra {
 public:
  static constexpr std::size_t kMaxSize = 64;

  FiniteEffectAlgebra(std::size_t size, ElementId zero, ElementId one,
                      std::vector<std::optional<ElementId>> oplus);

  std::size_t size() const { return size_; }
  ElementId zero() const { return zero_; }
  ElementId one() const { return one_; }

  std::optional<ElementId> oplus(ElementId a, ElementId b) const;
  bool orthogonal(ElementId a, ElementId b) const { return oplus(a, b).has_value(); }

  // leq(a,b) iff a (+) c = b for some c.
  bool leq(ElementId a, ElementId b) const;
  // The c with a (+) c = b. Throws AxiomViolation when c is not unique.
  std::optional<ElementId> ominus(ElementId b, ElementId a) const;

  ElementId orthosupplement(ElementId a) const;

  bool is_sharp(ElementId a) const;
  bool is_principal(ElementId a) const;
  bool mackey_compatible(ElementId a, ElementId b) const;

  std::optional<ElementId> brute_inf(std::span<const ElementId> s) const;
  std::optional<ElementId> brute_sup(std::span<const ElementId> s) const;

  std::vector<ElementId> elements() const;

 private:
  void check_id(ElementId a) const;
  std::size_t at(ElementId a, ElementId b) const { return a.index * size_ + b.index; }

  std::size_t size_;
  ElementId zero_;
  ElementId one_;
  std::vector<std::optional<ElementId>> oplus_;
  std::vector<char> leq_;
};

// Per-axiom pass/fail for (E1)-(E4), each with the lexicographically first
// violating tuple as witness.
SuiteReport check_ea_axioms(const FiniteEffectAlgebra& e, const std::string& model = "table");

// A built-in table together with its embedding as [0,1]-valued vectors
// (coordinates of element i are embedding[i]).
struct TableFixture {
  std::string name;
  FiniteEffectAlgebra table;
  std::vector<std::vector<double>> embedding;
};

// Product of `points` copies of the Lukasiewicz chain with `levels` values.
// Elements are enumerated lexicographically, 0 first and 1 last.
TableFixture mv_grid_table(std::string name, std::size_t points, std::size_t levels);

TableFixture lukasiewicz_chain(std::size_t n);
TableFixture boolean_algebra(std::size_t k);
// L3 x L3: nine elements, Hasse diagram a diamond-shaped grid.
TableFixture diamond();

std::vector<TableFixture> builtin_tables();

// {"size": n, "zero": i, "one": j, "oplus": [[entry|null, ...], ...]}
nlohmann::json to_json(const FiniteEffectAlgebra& e);
FiniteEffectAlgebra table_from_json(const nlohmann::json& j);

}  // namespace sea
