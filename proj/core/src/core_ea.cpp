#include "sea/core_ea.hpp"

#include "sea/error.hpp"

namespace sea {

FiniteEffectAlgebra::FiniteEffectAlgebra(std::size_t size, ElementId zero, ElementId one,
                                         std::vector<std::optional<ElementId>> oplus)
    : size_(size), zero_(zero), one_(one), oplus_(std::move(oplus)) {
  if (size_ == 0 || size_ > kMaxSize) {
    throw InputError("table size must be in [1, " + std::to_string(kMaxSize) + "]");
  }
  if (oplus_.size() != size_ * size_) throw InputError("oplus table must be size x size");
  check_id(zero_);
  check_id(one_);
  for (const auto& e : oplus_) {
    if (e) check_id(*e);
  }
  leq_.assign(size_ * size_, 0);
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t c = 0; c < size_; ++c) {
      if (auto b = oplus_[a * size_ + c]) leq_[a * size_ + b->index] = 1;
    }
  }
}

void FiniteEffectAlgebra::check_id(ElementId a) const {
  if (a.index >= size_) {
    throw InputError("element id " + std::to_string(a.index) + " out of range for size " +
                     std::to_string(size_));
  }
}

std::optional<ElementId> FiniteEffectAlgebra::oplus(ElementId a, ElementId b) const {
  check_id(a);
  check_id(b);
  return oplus_[at(a, b)];
}

bool FiniteEffectAlgebra::leq(ElementId a, ElementId b) const {
  check_id(a);
  check_id(b);
  return leq_[at(a, b)] != 0;
}

std::optional<ElementId> FiniteEffectAlgebra::ominus(ElementId b, ElementId a) const {
  check_id(a);
  check_id(b);
  std::optional<ElementId> found;
  for (std::size_t c = 0; c < size_; ++c) {
    if (oplus_[at(a, ElementId{c})] == b) {
      if (found) {
        throw AxiomViolation("difference " + std::to_string(b.index) + " - " +
                             std::to_string(a.index) + " is not unique");
      }
      found = ElementId{c};
    }
  }
  return found;
}

ElementId FiniteEffectAlgebra::orthosupplement(ElementId a) const {
  auto c = ominus(one_, a);
  if (!c) throw AxiomViolation("element " + std::to_string(a.index) + " has no orthosupplement");
  return *c;
}

bool FiniteEffectAlgebra::is_sharp(ElementId a) const {
  const ElementId ap = orthosupplement(a);
  for (std::size_t x = 0; x < size_; ++x) {
    const ElementId e{x};
    if (e != zero_ && leq(e, a) && leq(e, ap)) return false;
  }
  return true;
}

bool FiniteEffectAlgebra::is_principal(ElementId a) const {
  for (std::size_t x = 0; x < size_; ++x) {
    if (!leq(ElementId{x}, a)) continue;
    for (std::size_t y = 0; y < size_; ++y) {
      if (!leq(ElementId{y}, a)) continue;
      auto s = oplus(ElementId{x}, ElementId{y});
      if (s && !leq(*s, a)) return false;
    }
  }
  return true;
}

bool FiniteEffectAlgebra::mackey_compatible(ElementId a, ElementId b) const {
  check_id(a);
  check_id(b);
  for (std::size_t c = 0; c < size_; ++c) {
    for (std::size_t a1 = 0; a1 < size_; ++a1) {
      if (oplus_[at(ElementId{a1}, ElementId{c})] != a) continue;
      for (std::size_t b1 = 0; b1 < size_; ++b1) {
        if (oplus_[at(ElementId{b1}, ElementId{c})] != b) continue;
        auto s = oplus_[at(ElementId{a1}, ElementId{b1})];
        if (s && oplus_[at(*s, ElementId{c})]) return true;
      }
    }
  }
  return false;
}

std::optional<ElementId> FiniteEffectAlgebra::brute_inf(std::span<const ElementId> s) const {
  if (s.empty()) throw InputError("brute_inf of an empty set");
  std::vector<ElementId> lower;
  for (std::size_t x = 0; x < size_; ++x) {
    bool below = true;
    for (ElementId e : s) below = below && leq(ElementId{x}, e);
    if (below) lower.push_back(ElementId{x});
  }
  for (ElementId g : lower) {
    bool greatest = true;
    for (ElementId x : lower) greatest = greatest && leq(x, g);
    if (greatest) return g;
  }
  return std::nullopt;
}

std::optional<ElementId> FiniteEffectAlgebra::brute_sup(std::span<const ElementId> s) const {
  if (s.empty()) throw InputError("brute_sup of an empty set");
  std::vector<ElementId> upper;
  for (std::size_t x = 0; x < size_; ++x) {
    bool above = true;
    for (ElementId e : s) above = above && leq(e, ElementId{x});
    if (above) upper.push_back(ElementId{x});
  }
  for (ElementId g : upper) {
    bool least = true;
    for (ElementId x : upper) least = least && leq(g, x);
    if (least) return g;
  }
  return std::nullopt;
}

std::vector<ElementId> FiniteEffectAlgebra::elements() const {
  std::vector<ElementId> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i].index = i;
  return out;
}

namespace {

std::string tuple_witness(std::initializer_list<std::pair<const char*, std::size_t>> fields) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : fields) j[k] = v;
  return j.dump();
}

}  // namespace

SuiteReport check_ea_axioms(const FiniteEffectAlgebra& e, const std::string& model) {
  const std::size_t n = e.size();
  auto id = [](std::size_t i) { return ElementId{i}; };

  // (E1) commutativity
  CheckAccumulator e1("E1", model);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool ok = e.oplus(id(a), id(b)) == e.oplus(id(b), id(a));
      e1.record(ok, 0.0, [&] { return tuple_witness({{"a", a}, {"b", b}}); });
    }
  }

  // (E2) associativity
  CheckAccumulator e2("E2", model);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = e.oplus(id(a), id(b));
      for (std::size_t c = 0; c < n; ++c) {
        if (!ab || !e.oplus(*ab, id(c))) {
          e2.record(true);
          continue;
        }
        auto bc = e.oplus(id(b), id(c));
        const bool ok = bc && e.oplus(id(a), *bc) == e.oplus(*ab, id(c));
        e2.record(ok, 0.0, [&] { return tuple_witness({{"a", a}, {"b", b}, {"c", c}}); });
      }
    }
  }

  // (E3) unique orthosupplement
  CheckAccumulator e3("E3", model);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t count = 0;
    for (std::size_t b = 0; b < n; ++b) count += e.oplus(id(a), id(b)) == e.one() ? 1 : 0;
    e3.record(count == 1, 0.0,
              [&] { return tuple_witness({{"a", a}, {"complements", count}}); });
  }

  // (E4) a (+) 1 defined only for a = 0
  CheckAccumulator e4("E4", model);
  for (std::size_t a = 0; a < n; ++a) {
    const bool ok = !e.oplus(id(a), e.one()) || id(a) == e.zero();
    e4.record(ok, 0.0, [&] { return tuple_witness({{"a", a}}); });
  }

  SuiteReport report;
  report.results = {e1.take(), e2.take(), e3.take(), e4.take()};
  report.normalize();
  return report;
}

TableFixture mv_grid_table(std::string name, std::size_t points, std::size_t levels) {
  if (points == 0 || levels < 2) throw InputError("mv grid needs points >= 1 and levels >= 2");
  std::size_t size = 1;
  for (std::size_t i = 0; i < points; ++i) {
    size *= levels;
    if (size > FiniteEffectAlgebra::kMaxSize) throw InputError("mv grid table too large");
  }
  // Element i has base-`levels` digits as coordinates, most significant first.
  std::vector<std::vector<std::size_t>> digits(size, std::vector<std::size_t>(points));
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = i;
    for (std::size_t p = points; p-- > 0;) {
      digits[i][p] = r % levels;
      r /= levels;
    }
  }
  auto index_of = [&](const std::vector<std::size_t>& d) {
    std::size_t i = 0;
    for (std::size_t v : d) i = i * levels + v;
    return i;
  };
  std::vector<std::optional<ElementId>> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      std::vector<std::size_t> s(points);
      bool defined = true;
      for (std::size_t p = 0; p < points; ++p) {
        s[p] = digits[a][p] + digits[b][p];
        defined = defined && s[p] <= levels - 1;
      }
      if (defined) table[a * size + b] = ElementId{index_of(s)};
    }
  }
  std::vector<std::vector<double>> embedding(size, std::vector<double>(points));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t p = 0; p < points; ++p) {
      embedding[i][p] = static_cast<double>(digits[i][p]) / static_cast<double>(levels - 1);
    }
  }
  return TableFixture{std::move(name),
                      FiniteEffectAlgebra(size, ElementId{0}, ElementId{size - 1}, std::move(table)),
                      std::move(embedding)};
}

TableFixture lukasiewicz_chain(std::size_t n) {
  return mv_grid_table("L" + std::to_string(n), 1, n);
}

TableFixture boolean_algebra(std::size_t k) {
  if (k == 0 || k > 4) throw InputError("boolean_algebra supports 1 <= k <= 4");
  return mv_grid_table("B" + std::to_string(k), k, 2);
}

TableFixture diamond() { return mv_grid_table("diamond", 2, 3); }

std::vector<TableFixture> builtin_tables() {
  std::vector<TableFixture> out;
  out.push_back(lukasiewicz_chain(3));
  out.push_back(lukasiewicz_chain(5));
  out.push_back(boolean_algebra(2));
  out.push_back(boolean_algebra(3));
  out.push_back(diamond());
  return out;
}

nlohmann::json to_json(const FiniteEffectAlgebra& e) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t a = 0; a < e.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t b = 0; b < e.size(); ++b) {
      auto s = e.oplus(ElementId{a}, ElementId{b});
      row.push_back(s ? nlohmann::json(s->index) : nlohmann::json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  return {{"size", e.size()}, {"zero", e.zero().index}, {"one", e.one().index}, {"oplus", rows}};
}

FiniteEffectAlgebra table_from_json(const nlohmann::json& j) {
  try {
    const auto size = j.at("size").get<std::size_t>();
    const auto& rows = j.at("oplus");
    if (!rows.is_array() || rows.size() != size) throw InputError("oplus must have `size` rows");
    std::vector<std::optional<ElementId>> table(size * size);
    for (std::size_t a = 0; a < size; ++a) {
      const auto& row = rows[a];
      if (!row.is_array() || row.size() != size) throw InputError("oplus rows must have `size` entries");
      for (std::size_t b = 0; b < size; ++b) {
        if (!row[b].is_null()) table[a * size + b] = ElementId{row[b].get<std::size_t>()};
      }
    }
    return FiniteEffectAlgebra(size, ElementId{j.at("zero").get<std::size_t>()},
                               ElementId{j.at("one").get<std::size_t>()}, std::move(table));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed table JSON: ") + ex.what());
  }
}

}  // namespace sea
