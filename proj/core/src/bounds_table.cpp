#include "crossforge/bounds_table.hpp"

#include <sstream>
#include <stdexcept>

#include "crossforge/closed_forms.hpp"
#include "crossforge/lower_bounds.hpp"

namespace crossforge {

std::string BoundsRow::ratio() const {
  if (upper.sign() == 0) return "";
  return (lower_clamped / upper).to_decimal(6);
}

std::vector<BoundsRow> bounds_table(Family family, int m_lo, int m_hi, int n_lo, int n_hi) {
  if (m_lo > m_hi || n_lo > n_hi) throw std::invalid_argument("bounds_table: empty range");
  std::vector<BoundsRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = n_lo; n <= n_hi; ++n) {
      BoundsRow row;
      row.m = m;
      row.n = n;
      row.family = family;
      if (m >= 4) {
        const LowerBound lb = lower_bound(family, m, n);
        row.lower_raw = lb.raw;
        row.lower_clamped = lb.clamped;
      }
      if (family == Family::Path) {
        row.upper = upper_bound_path(m, n);
        row.upper_branch = m <= 3 ? "m<=3" : (m % 2 == 1 ? "odd-m" : "even-m");
        row.upper_exact = m <= 3;
        row.drawing = m <= 3 ? ExactValue(0) : nu_path_drawing(m, n);
      } else {
        const UpperBound ub = upper_bound_cycle_branch(m, n);
        row.upper = ub.value;
        row.upper_branch = to_string(ub.branch);
        row.upper_exact = ub.exact;
        if (m >= 4) {
          row.drawing = nu_cycle_drawing(m, n);
        } else if (m <= 2) {
          row.drawing = ExactValue(0);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream os;
  os << "m,n,family,lower_raw,lower_clamped,upper,ratio,drawing\n";
  for (const auto& r : rows) {
    os << r.m << ',' << r.n << ',' << to_string(r.family) << ',' << r.lower_raw << ',' << r.lower_clamped << ','
       << r.upper << ',' << r.ratio() << ',' << (r.drawing ? r.drawing->to_string() : "") << '\n';
  }
  return os.str();
}

nlohmann::ordered_json bounds_json(const std::vector<BoundsRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json e;
    e["m"] = r.m;
    e["n"] = r.n;
    e["family"] = to_string(r.family);
    e["lower_raw"] = r.lower_raw.to_string();
    e["lower_clamped"] = r.lower_clamped.to_string();
    e["upper"] = r.upper.to_string();
    e["upper_branch"] = r.upper_branch;
    e["upper_exact"] = r.upper_exact;
    e["ratio"] = r.ratio();
    e["drawing"] = r.drawing ? nlohmann::ordered_json(r.drawing->to_string()) : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(e));
  }
  return j;
}

}  // namespace crossforge
