#include "csg/bar.hpp"

#include <algorithm>

#include <json.hpp>

namespace csg {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidElement, "monoid: " + what); }

bool associative(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
      }
    }
  }
  return true;
}

}  // namespace

FiniteMonoid::FiniteMonoid(std::vector<std::string> names, std::size_t unit,
                           std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), unit_(unit), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) invalid("no elements");
  if (unit_ >= n) invalid("unit out of range");
  if (table_.size() != n) invalid("table has the wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) invalid("table row has the wrong length");
    for (std::size_t v : row) {
      if (v >= n) invalid("table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[unit_][a] != a || table_[a][unit_] != a) invalid("unit law fails for " + names_[a]);
  }
  if (!associative(table_)) invalid("multiplication is not associative");
}

std::size_t FiniteMonoid::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorKind::Parse, "monoid: unknown element '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool FiniteMonoid::is_commutative() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

FiniteMonoid FiniteMonoid::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("monoid: ") + e.what());
  }
  try {
    auto names = j.at("elements").get<std::vector<std::string>>();
    const auto unit_name = j.at("unit").get<std::string>();
    const auto rows = j.at("table").get<std::vector<std::vector<std::string>>>();
    auto lookup = [&](const std::string& s) {
      const auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end()) throw Error(ErrorKind::Parse, "monoid: unknown element '" + s + "'");
      return static_cast<std::size_t>(it - names.begin());
    };
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : rows) {
      std::vector<std::size_t> r;
      for (const auto& cell : row) r.push_back(lookup(cell));
      table.push_back(std::move(r));
    }
    const std::size_t unit = lookup(unit_name);
    return FiniteMonoid(std::move(names), unit, std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("monoid: ") + e.what());
  }
}

std::string FiniteMonoid::to_json() const {
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& row : table_) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (std::size_t v : row) r.push_back(names_[v]);
    table.push_back(std::move(r));
  }
  nlohmann::ordered_json j;
  j["elements"] = names_;
  j["unit"] = names_[unit_];
  j["table"] = std::move(table);
  return j.dump();
}

FiniteMonoid FiniteMonoid::left_zero_band() {
  // Row a, column b holds a * b.
  return FiniteMonoid({"e", "x", "y"}, 0, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
}

FiniteMonoid FiniteMonoid::cyclic_group(std::size_t order) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a) {
    names.push_back(a == 0 ? "e" : "g" + std::to_string(a));
    for (std::size_t b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  }
  return FiniteMonoid(std::move(names), 0, std::move(table));
}

std::vector<FiniteMonoid> all_monoids(std::size_t order) {
  std::vector<FiniteMonoid> out;
  if (order == 0) return out;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < order; ++a) names.push_back(a == 0 ? "e" : "m" + std::to_string(a));
  const std::size_t free_cells = (order - 1) * (order - 1);
  std::vector<std::size_t> cells(free_cells, 0);
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a) table[0][a] = table[a][0] = a;
  while (true) {
    for (std::size_t c = 0; c < free_cells; ++c) table[1 + c / (order - 1)][1 + c % (order - 1)] = cells[c];
    if (associative(table)) out.emplace_back(names, 0, table);
    std::size_t c = 0;
    while (c < free_cells && ++cells[c] == order) cells[c++] = 0;
    if (c == free_cells) break;
  }
  return out;
}

std::string to_string(const FiniteMonoid& m, const BarTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (i) out += ",";
    out += m.name(t.entries[i]);
  }
  return out + ")";
}

std::vector<BarTuple> all_tuples(const FiniteMonoid& m, std::size_t level) {
  std::vector<BarTuple> out;
  std::vector<std::size_t> cur(level + 1, 0);
  while (true) {
    out.push_back({cur});
    std::size_t pos = level + 1;
    while (pos > 0) {
      if (++cur[pos - 1] < m.size()) break;
      cur[--pos] = 0;
    }
    if (pos == 0) break;
  }
  return out;
}

BarTuple bar_face(const FiniteMonoid& m, std::size_t i, const BarTuple& t, bool reversed_wrap) {
  const std::size_t n = t.level();
  if (n == 0) throw_index_out_of_range("bar_face", i, 0);
  if (i > n) throw_index_out_of_range("bar_face", i, n);
  std::vector<std::size_t> e = t.entries;
  if (i < n) {
    e[i] = m.mul(e[i], e[i + 1]);
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  } else {
    e[0] = reversed_wrap ? m.mul(e[0], e[n]) : m.mul(e[n], e[0]);
    e.pop_back();
  }
  return {std::move(e)};
}

BarTuple bar_degeneracy(const FiniteMonoid& m, std::size_t i, const BarTuple& t) {
  if (i > t.level()) throw_index_out_of_range("bar_degeneracy", i, t.level());
  std::vector<std::size_t> e = t.entries;
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(i) + 1, m.unit());
  return {std::move(e)};
}

BarTuple bar_action(const Perm& sigma, const BarTuple& t, bool inverse) {
  if (sigma.level() != t.level()) throw_level_mismatch("bar_action", sigma.level(), t.level());
  std::vector<std::size_t> e(t.entries.size());
  for (std::size_t a = 0; a < e.size(); ++a) {
    const auto s = static_cast<std::size_t>(sigma(a));
    if (inverse) {
      e[a] = t.entries[s];
    } else {
      e[s] = t.entries[a];
    }
  }
  return {std::move(e)};
}

BarTuple bar_insert(const FiniteMonoid& m, std::size_t j, const BarTuple& t) {
  if (j > t.entries.size()) throw_index_out_of_range("bar_insert", j, t.entries.size());
  std::vector<std::size_t> e = t.entries;
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(j), m.unit());
  return {std::move(e)};
}

BarTuple bar_merge(const FiniteMonoid& m, std::size_t j, const BarTuple& t) {
  if (t.level() == 0 || j >= t.level()) throw_index_out_of_range("bar_merge", j, t.level() == 0 ? 0 : t.level() - 1);
  std::vector<std::size_t> e = t.entries;
  e[j] = m.mul(e[j], e[j + 1]);
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  return {std::move(e)};
}

CheckReport check_bar_simplicial(const FiniteMonoid& m, const BarTuple& t, bool reversed_wrap) {
  const std::size_t n = t.level();
  CheckReport report;
  auto d = [&](std::size_t i, const BarTuple& x) { return bar_face(m, i, x, reversed_wrap); };
  auto s = [&](std::size_t i, const BarTuple& x) { return bar_degeneracy(m, i, x); };
  auto label = [](const char* what, std::size_t i, std::size_t j) {
    return std::string(what) + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  };
  if (n >= 2) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        report.require(d(i, d(j, t)) == d(j - 1, d(i, t)), label("d_i d_j = d_{j-1} d_i", i, j));
      }
    }
  }
  for (std::size_t j = 0; j <= n; ++j) {
    const BarTuple sj = s(j, t);
    for (std::size_t i = 0; i <= n + 1; ++i) {
      if (i < j) {
        report.require(d(i, sj) == s(j - 1, d(i, t)), label("d_i s_j = s_{j-1} d_i", i, j));
      } else if (i == j || i == j + 1) {
        report.require(d(i, sj) == t, label("d_i s_j = id", i, j));
      } else {
        report.require(d(i, sj) == s(j, d(i - 1, t)), label("d_i s_j = s_j d_{i-1}", i, j));
      }
    }
    for (std::size_t i = 0; i <= j; ++i) {
      report.require(s(i, sj) == s(j + 1, s(i, t)), label("s_i s_j = s_{j+1} s_i", i, j));
    }
  }
  return report;
}

CheckReport check_bar_cosimplicial(const FiniteMonoid& m, const BarTuple& t) {
  const std::size_t n = t.level();
  CheckReport report;
  auto in = [&](std::size_t j, const BarTuple& x) { return bar_insert(m, j, x); };
  auto mg = [&](std::size_t j, const BarTuple& x) { return bar_merge(m, j, x); };
  auto label = [](const char* what, std::size_t i, std::size_t j) {
    return std::string(what) + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i <= n + 1; ++i) {
    const BarTuple di = in(i, t);
    for (std::size_t j = i + 1; j <= n + 2; ++j) {
      report.require(in(j, di) == in(i, in(j - 1, t)), label("insert_j insert_i = insert_i insert_{j-1}", i, j));
    }
    for (std::size_t j = 0; j <= n; ++j) {
      if (i < j) {
        report.require(mg(j, di) == in(i, mg(j - 1, t)), label("merge_j insert_i = insert_i merge_{j-1}", i, j));
      } else if (i == j || i == j + 1) {
        report.require(mg(j, di) == t, label("merge_j insert_i = id", i, j));
      } else {
        report.require(mg(j, di) == in(i - 1, mg(j, t)), label("merge_j insert_i = insert_{i-1} merge_j", i, j));
      }
    }
  }
  if (n >= 2) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const BarTuple si = mg(i, t);
      for (std::size_t j = i; j + 2 <= n; ++j) {
        report.require(mg(j, si) == mg(i, mg(j + 1, t)), label("merge_j merge_i = merge_i merge_{j+1}", i, j));
      }
    }
  }
  return report;
}

std::string BarConvention::label() const {
  std::string out = variance == BarVariance::Contravariant ? "contravariant" : "covariant";
  out += inverse_action ? ", x_i -> x_sigma(i)" : ", x_i -> x_sigma^-1(i)";
  if (variance == BarVariance::Contravariant) out += reversed_wrap ? ", d_n wraps m_0 m_n" : ", d_n wraps m_n m_0";
  return out;
}

}  // namespace csg
