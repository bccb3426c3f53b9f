#include "g2mae/mae.hpp"

#include <stdexcept>

#include "g2mae/invariants.hpp"

namespace g2mae::mae {

std::string covector_name(int idx) {
  if (idx < 0 || idx > 9) throw std::domain_error("covector_name: index out of range");
  return idx < 5 ? "dx" + std::to_string(idx) : "du" + std::to_string(idx - 5);
}

QMatrix darboux_matrix() {
  QMatrix d = QMatrix::identity(10);
  d.at(6, 6) = -1;  // E_{-g1} -> -du_1
  d.at(8, 8) = -1;  // E_{-g3} -> -du_3
  return d;
}

QForm darboux_covector_form(const QForm& m_form) { return pullback(darboux_matrix(), m_form); }

namespace {

// Laplace expansion along the first column, with zero pruning. Entries are
// constants or single u variables, so blowup is bounded by 5! products.
PolyU det_poly(const std::vector<std::vector<PolyU>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return PolyU(Rat(1));
  if (n == 1) return m[0][0];
  PolyU out;
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i, sign = -sign) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<PolyU>> sub;
    sub.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<PolyU> row(m[r].begin() + 1, m[r].end());
      sub.push_back(std::move(row));
    }
    PolyU cof = m[i][0] * det_poly(sub);
    out = sign > 0 ? out + cof : out - cof;
  }
  return out;
}

}  // namespace

PolyU restrict_to_lagrangian(const QForm& omega) {
  if (omega.dim() != 10 || omega.degree() != 5)
    throw std::domain_error("restrict_to_lagrangian: expected a 5-form over the 10 covectors");
  PolyU total;
  for (const auto& [mi, c] : omega.terms()) {
    std::vector<std::vector<PolyU>> m(5, std::vector<PolyU>(5));
    for (int col = 0; col < 5; ++col) {
      const int cov = mi[col];
      for (int row = 0; row < 5; ++row) {
        if (cov < 5) {
          m[row][col] = PolyU(Rat(cov == row ? 1 : 0));
        } else {
          m[row][col] = PolyU::var(row, cov - 5);
        }
      }
    }
    total = total + c * det_poly(m);
  }
  return total;
}

PolyU minor_poly(const std::vector<int>& rows_removed, const std::vector<int>& cols_removed) {
  if (rows_removed.size() != cols_removed.size())
    throw std::domain_error("minor: unequal numbers of removed rows and columns");
  if (rows_removed.size() > 4) throw std::domain_error("minor: at most 4 deletions");
  auto keep = [](const std::vector<int>& removed) {
    std::vector<int> k;
    for (int i = 0; i < 5; ++i) {
      bool drop = false;
      for (int r : removed) {
        if (r < 0 || r > 4) throw std::domain_error("minor: index out of range");
        if (r == i) drop = true;
      }
      if (!drop) k.push_back(i);
    }
    return k;
  };
  const auto rows = keep(rows_removed), cols = keep(cols_removed);
  if (rows.size() + rows_removed.size() != 5 || cols.size() + cols_removed.size() != 5)
    throw std::domain_error("minor: repeated deletion index");
  std::vector<std::vector<PolyU>> m(rows.size(), std::vector<PolyU>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = PolyU::var(rows[i], cols[j]);
  return det_poly(m);
}

PolyU q1_reference() {
  auto u = [](int i, int j) { return PolyU::var(i, j); };
  return Rat(3) * (u(0, 3) * u(0, 3)) + Rat(3) * (u(1, 2) * u(1, 2)) -
         Rat(10) * (u(0, 2) * u(1, 3)) - Rat(3) * (u(1, 1) * u(2, 2)) +
         Rat(10) * (u(0, 1) * u(2, 3)) - Rat(3) * (u(0, 0) * u(3, 3));
}

PolyU q3_reference() {
  auto u = [](int i, int j) { return PolyU::var(i, j); };
  return Rat(2) * (u(0, 2) * u(1, 3)) + u(1, 1) * u(2, 2) + Rat(2) * (u(0, 1) * u(2, 3)) +
         u(0, 0) * u(3, 3) - u(0, 3) * u(0, 3) - Rat(4) * (u(1, 2) * u(0, 3)) -
         u(1, 2) * u(1, 2);
}

namespace {

struct RowSpec {
  std::string short_name;
  // builds the expected minor combination; empty builder = discrepancy row
  PolyU expected;
  std::string expr;
  bool discrepancy;
};

std::vector<MAEEntry> build_catalogue() {
  auto M = [](std::vector<int> rows, std::vector<int> cols) {
    return minor_poly(rows, cols);
  };
  const Rat ten(10), three(3), two(2);

  // Expected minor combinations per row (M^{cols}_{rows}: superscript =
  // columns removed, subscript = rows removed), compared up to one scalar.
  std::vector<RowSpec> spec;
  spec.push_back({"Q1",
                  ten * M({1, 2, 4}, {0, 3, 4}) -
                      three * (M({0, 3, 4}, {0, 3, 4}) + M({1, 2, 4}, {1, 2, 4})),
                  "10*M^{034}_{124} - 3*(M^{034}_{034} + M^{124}_{124})", false});
  spec.push_back({"",
                  ten * M({1, 2}, {0, 3}) - three * (M({0, 3}, {0, 3}) + M({1, 2}, {1, 2})),
                  "10*M^{03}_{12} - 3*(M^{03}_{03} + M^{12}_{12})", false});
  spec.push_back({"L1", PolyU::var(0, 3) + PolyU::var(1, 2), "6*(u03 + u12)", false});
  spec.push_back({"Q2", M({0, 1, 2}, {1, 2, 3}) + M({0, 1, 3}, {0, 2, 3}),
                  "6*(M^{123}_{012} + M^{023}_{013})", false});
  spec.push_back({"", M({0, 4}, {3, 4}) + M({1, 4}, {2, 4}),
                  "-6*(M^{34}_{04} + M^{24}_{14})", false});
  spec.push_back({"", M({0}, {3}) + M({1}, {2}), "6*(M^{3}_{0} + M^{2}_{1})", false});
  // Direct evaluation of the all-dx form is the constant 1; the conventional
  // table says det(u_ij). Reported as computed, flagged.
  spec.push_back({"", PolyU(Rat(1)), "1  [table convention: det(u)]", true});
  spec.push_back({"L2", PolyU::var(4, 4), "u44", false});
  spec.push_back({"", M({4}, {4}), "M^{4}_{4}", false});
  // Direct evaluation of the all-du form is det(u); the table convention says
  // the equation is empty. Reported as computed, flagged.
  spec.push_back({"D", M({}, {}), "det(u)  [table convention: empty]", true});
  spec.push_back({"Q3",
                  two * M({0, 1, 4}, {2, 3, 4}) + two * M({0, 2, 4}, {1, 3, 4}) +
                      M({0, 3, 4}, {0, 3, 4}) + M({1, 2, 4}, {1, 2, 4}),
                  "2*M^{234}_{014} + 2*M^{134}_{024} + M^{034}_{034} + M^{124}_{124}", false});
  spec.push_back({"",
                  two * M({0, 1}, {2, 3}) + two * M({0, 2}, {1, 3}) + M({0, 3}, {0, 3}) +
                      M({1, 2}, {1, 2}),
                  "2*M^{23}_{01} + 2*M^{13}_{02} + M^{03}_{03} + M^{12}_{12}", false});

  const auto five_forms = invariants::twelve_five_forms();
  std::vector<MAEEntry> out;
  for (std::size_t i = 0; i < 12; ++i) {
    MAEEntry e;
    e.name = five_forms[i].name;
    e.short_name = spec[i].short_name;
    e.form = darboux_covector_form(five_forms[i].form);
    e.poly = restrict_to_lagrangian(e.form);
    e.discrepancy = spec[i].discrepancy;
    if (!e.poly.proportional_to(spec[i].expected))
      throw std::logic_error("catalogue: row '" + e.name +
                             "' does not match its minor expression");
    e.minor_expr = spec[i].expr;
    out.push_back(std::move(e));
  }
  // The reference quadratics, exact; each row is defined up to one
  // scalar, so pin the sign to the reference expansion.
  for (auto [idx, reference] : {std::pair<int, PolyU>{0, q1_reference()}, {10, q3_reference()}}) {
    if (out[idx].poly == PolyU() - reference) {
      out[idx].form = out[idx].form.scaled(Rat(-1));
      out[idx].poly = out[idx].poly.scaled(Rat(-1));
    }
    if (out[idx].poly != reference)
      throw std::logic_error("catalogue: row " + std::to_string(idx) +
                             " differs from the reference expansion");
  }
  return out;
}

}  // namespace

const std::vector<MAEEntry>& catalogue() {
  static const std::vector<MAEEntry> cat = build_catalogue();
  return cat;
}

std::vector<std::string> entry_names() {
  std::vector<std::string> names;
  for (const auto& e : catalogue()) {
    names.push_back(e.name);
    if (!e.short_name.empty()) names.push_back(e.short_name);
  }
  return names;
}

const MAEEntry& entry(const std::string& name) {
  for (const auto& e : catalogue())
    if (e.name == name || (!e.short_name.empty() && e.short_name == name)) return e;
  std::string msg = "unknown equation '" + name + "'; valid names:";
  for (const auto& n : entry_names()) msg += " " + n;
  throw std::domain_error(msg);
}

}  // namespace g2mae::mae
