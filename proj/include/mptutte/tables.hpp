#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "mptutte/perspective.hpp"
#include "mptutte/tutte.hpp"

namespace mptutte {

namespace detail {

inline std::string csv_cell(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
  std::ostringstream os;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ",";
    os << csv_cell(cells[i]);
  }
  os << "\n";
  return os.str();
}

}  // namespace detail

/// Witness table (tables 1 and 4): one row per independent/spanning
/// set with its activity sets, Dawson interval and activity monomial.
/// `with_rcd` adds the rank-codrop column used for perspectives.
inline std::string witness_table_csv(const perspective& p, bool with_rcd) {
  const auto& g = p.ground();
  std::ostringstream os;
  std::vector<std::string> header = {"witness", "int_active", "ext_active"};
  if (with_rcd) header.push_back("rcd");
  header.insert(header.end(), {"bottom", "top", "monomial"});
  os << detail::csv_row(header);
  for (subset b : p.ind_span_sets()) {
    const activity_profile pr = p.profile(b);
    const dawson_interval iv = p.interval_of_witness(b);
    exponents e{};
    e[static_cast<int>(var::x)] = pr.iota_prime;
    e[static_cast<int>(var::y)] = pr.eps;
    e[static_cast<int>(var::z)] = pr.rcd;
    std::vector<std::string> row = {g.render(b), g.render(pr.int_active),
                                    g.render(pr.ext_active)};
    if (with_rcd) row.push_back(std::to_string(pr.rcd));
    row.push_back(g.render(iv.bottom));
    row.push_back(g.render(iv.top));
    row.push_back(polynomial::monomial(1, e).str());
    os << detail::csv_row(row);
  }
  return os.str();
}

/// Activity-set table (table 2): the four active sets and the
/// five-variable monomial of every subset.
inline std::string activity_sets_table_csv(const perspective& p) {
  const auto& g = p.ground();
  std::ostringstream os;
  os << detail::csv_row({"subset", "int", "p", "ext", "q", "monomial"});
  for_each_subset(p.size(), [&](subset a) {
    const activity_profile pr = p.profile(a);
    os << detail::csv_row({g.render(a), g.render(pr.int_active), g.render(pr.p_set),
                           g.render(pr.ext_active), g.render(pr.q_set),
                           five_var_monomial(pr).str()});
  });
  return os.str();
}

/// Expansion-family table (table 3): the four statistics of every
/// subset and its summand in each of the nine families (empty cell when
/// the subset is outside a family's support).
inline std::string families_table_csv(const perspective& p) {
  const auto& g = p.ground();
  std::ostringstream os;
  std::vector<std::string> header = {"subset", "cr", "iota", "nl", "eps"};
  for (const auto& [id, name] : expansion_family_names()) header.push_back(name);
  os << detail::csv_row(header);

  std::vector<std::vector<std::string>> cells(std::size_t(1) << p.size());
  for_each_subset(p.size(), [&](subset a) {
    const activity_profile pr = p.profile(a);
    cells[a.bits()] = {g.render(a), std::to_string(pr.cr_prime),
                       std::to_string(pr.iota_prime), std::to_string(pr.nl),
                       std::to_string(pr.eps)};
    cells[a.bits()].resize(5 + expansion_family_names().size());
  });
  size_t column = 5;
  for (const auto& [id, name] : expansion_family_names()) {
    for (const auto& s : expansion_family(p, id).summands)
      cells[s.set.bits()][column] = s.value.str();
    ++column;
  }
  for (const auto& row : cells) os << detail::csv_row(row);
  return os.str();
}

/// Activity-statistics table (table 5): the five statistics and the
/// five-variable monomial of every subset.
inline std::string statistics_table_csv(const perspective& p) {
  const auto& g = p.ground();
  std::ostringstream os;
  os << detail::csv_row({"subset", "iota_prime", "cr_prime", "eps", "nl", "rcd", "monomial"});
  for_each_subset(p.size(), [&](subset a) {
    const activity_profile pr = p.profile(a);
    os << detail::csv_row({g.render(a), std::to_string(pr.iota_prime),
                           std::to_string(pr.cr_prime), std::to_string(pr.eps),
                           std::to_string(pr.nl), std::to_string(pr.rcd),
                           five_var_monomial(pr).str()});
  });
  return os.str();
}

/// Table reproduction by number (1-5).
inline std::string table_csv(const perspective& p, int which) {
  switch (which) {
    case 1: return witness_table_csv(p, false);
    case 2: return activity_sets_table_csv(p);
    case 3: return families_table_csv(p);
    case 4: return witness_table_csv(p, true);
    case 5: return statistics_table_csv(p);
    default:
      throw std::invalid_argument("table number must be between 1 and 5");
  }
}

}  // namespace mptutte
