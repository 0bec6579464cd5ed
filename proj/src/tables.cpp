#include <sstream>
#include <stdexcept>

#include "clifflab/classify.hpp"
#include "clifflab/curvature.hpp"
#include "clifflab/spin_reps.hpp"

namespace clifflab {

std::string to_string(Projective p) {
  switch (p) {
    case Projective::no: return "no";
    case Projective::yes: return "yes";
    case Projective::conditional: return "conditional";
  }
  return "no";
}

std::string scal_symbolic(std::int64_t a, int r, const std::string& param, const Rational& kappa) {
  // kappa a k (a k / 4 + 2r - 4) = (kappa a^2 / 4) k (k + 4(2r - 4) / a)
  const Rational coeff = kappa * Rational(a * a, 4);
  const Rational shift = Rational(4 * (2 * r - 4), a);
  std::string s = (coeff == Rational(1) ? std::string() : coeff.str()) + param;
  if (shift.is_zero()) return s + "^2";
  return s + "(" + param + (shift.sign() > 0 ? "+" : "-") + shift.abs().str() + ")";
}

std::string factorize(std::int64_t v) {
  if (v < 1) throw std::invalid_argument("factorize expects a positive integer");
  if (v == 1) return "1";
  std::string out;
  for (std::int64_t p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e == 0) continue;
    if (!out.empty()) out += "·";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (v > 1) out += (out.empty() ? "" : "·") + std::to_string(v);
  return out;
}

namespace {

// Admissible families of the symmetric case analysis, indexed by the free parameter k.
struct Family {
  const char* key;
  const char* fixed;  // parameter carrying the so(r) summand
  std::int64_t fixed_value;
  const char* free;
  const char* label;
  const char* type_of_E;
  Projective projective;
  const char* dual;
  const char* total_space;  // Z over M in the curvature constancy table
};

const Family kFamilies[] = {
    {"case7", "p", 2, "q", "Sp(k+2)/Sp(k)×Sp(2)", "", Projective::no, "Sp(k,2)/Sp(k)×Sp(2)",
     "Sp(k+2)/Sp(k)×Spin(4)"},
    {"case3", "p", 4, "q", "SU(k+4)/S(U(k)×U(4))", "projective", Projective::yes, "SU(k,4)/S(U(k)×U(4))",
     "SU(k+4)/S(U(k)×(Sp(2)·U(1)))"},
    {"case4", "p", 8, "q", "SO(k+8)/SO(k)×SO(8)", "projective if k odd", Projective::conditional,
     "SO0(k,8)/SO(k)×SO(8)", ""},
};

struct Plane {
  const char* key;
  const char* alias;
  const char* dual;
  const char* total_space;
};

const Plane kPlanes[] = {
    {"case8-F4", "OP^2", "F4(-20)/Spin(9)", "F4/Spin(8)"},
    {"case8-E6", "(C⊗O)P^2", "E6(-14)/Spin(10)·U(1)", "E6/Spin(9)·U(1)"},
    {"case8-E7", "(H⊗O)P^2", "E7(-5)/Spin(12)·SU(2)", "E7/Spin(11)·SU(2)"},
    {"case8-E8", "(O⊗O)P^2", "E8(8)/Spin⁺(16)", "E8/Spin(15)"},
};

const char* const kExcluded[] = {"case1", "case2", "case5", "case6", "case9-SU4", "case9-SO"};

TableRow row(int table, int r, std::string space, std::string dim_label) {
  TableRow t;
  t.table = table;
  t.r = r;
  t.r_label = r > 0 ? std::to_string(r) : "arbitrary";
  t.space = std::move(space);
  t.dim_label = std::move(dim_label);
  return t;
}

// Rank and per-k dimension coefficient of an admissible family, confirmed over the scan.
std::pair<int, std::int64_t> family_shape(const Family& f, const ScanBounds& b) {
  const auto& c = candidate(f.key);
  int r = 0;
  std::int64_t coeff = 0;
  for (std::int64_t k = 1; k <= b.max_param; ++k) {
    const Verdict v = check_conditions(c, {{f.fixed, f.fixed_value}, {f.free, k}});
    if (!v.admissible) throw std::logic_error(std::string("family ") + f.key + " is not admissible at k=" + std::to_string(k));
    if (v.dim % k != 0) throw std::logic_error("family dimension is not linear in k");
    if (k == 1) {
      r = *v.r;
      coeff = v.dim;
    } else if (*v.r != r || v.dim != coeff * k) {
      throw std::logic_error("family rank or dimension changes with k");
    }
  }
  return {r, coeff};
}

void require_exclusions(const ScanBounds& b) {
  for (const char* key : kExcluded)
    for (const auto& v : scan(candidate(key), b))
      if (v.admissible) throw std::logic_error(std::string("excluded case ") + key + " has an admissible instance");
}

}  // namespace

std::vector<TableRow> table1_rows() {
  std::vector<TableRow> rows;
  rows.push_back(row(1, 2, "Kähler", "2m, m ≥ 1"));
  auto hk = row(1, 3, "hyper-Kähler", "4q, q ≥ 1");
  hk.r_label = "3 and 4";
  rows.push_back(hk);
  rows.push_back(row(1, 4, "reducible hyper-Kähler", "4(q⁺+q⁻), q⁺ ≥ 1, q⁻ ≥ 1"));
  rows.push_back(row(1, 0, "Cl⁰_r representation space", "multiple of N₀(r)"));
  return rows;
}

std::vector<TableRow> table2_rows() {
  const ScanBounds bounds;
  std::vector<TableRow> rows;
  rows.push_back(row(2, 2, "Kähler", "2m, m ≥ 1"));
  auto qk = row(2, 3, "quaternion-Kähler (QK)", "4q, q ≥ 1");
  qk.type_of_E = "projective if M ≠ HP^q";
  qk.projective = Projective::conditional;
  rows.push_back(qk);
  auto prod = row(2, 4, "product of two QK manifolds", "4(q⁺+q⁻)");
  prod.type_of_E = "projective if M ≠ HP^(q⁺)×HP^(q⁻)";
  prod.projective = Projective::conditional;
  rows.push_back(prod);

  for (int r = 5; r <= 8; ++r) {
    const Case1Result c = case1_n8(r);
    if (c.centralizer_dim != c.expected_centralizer_dim)
      throw std::logic_error("centralizer dimension disagrees with the normalizer in case n = 8");
    auto t = row(2, r, c.table_label, "8");
    t.dim = 8;
    if (r == 6 || r == 8) {
      t.type_of_E = "projective if M non-spin";
      t.projective = Projective::conditional;
    }
    rows.push_back(t);
  }

  require_exclusions(bounds);
  for (const auto& f : kFamilies) {
    const auto [r, coeff] = family_shape(f, bounds);
    // k = 1 is the n = 8 row of the same rank.
    auto t = row(2, r, f.label, std::to_string(coeff) + "k, k ≥ 2");
    t.type_of_E = f.type_of_E;
    t.projective = f.projective;
    t.dim_coeff = coeff;
    t.param = "k";
    t.noncompact_dual = f.dual;
    rows.push_back(t);
  }
  for (const auto& p : kPlanes) {
    const auto& c = candidate(p.key);
    const Verdict v = check_conditions(c, {});
    if (!v.admissible) throw std::logic_error(std::string("exceptional case ") + p.key + " is not admissible");
    auto t = row(2, *v.r, c.label, std::to_string(v.dim));
    t.alias = p.alias;
    t.dim = v.dim;
    t.noncompact_dual = p.dual;
    rows.push_back(t);
  }
  return rows;
}

std::vector<TableRow> table3_rows() {
  std::vector<TableRow> rows;
  auto sas = row(3, 2, "Hodge", "2m, m ≥ 1");
  sas.total_space = "Sasakian";
  sas.fibre = "S^1";
  sas.dim_Z_label = "2m+1";
  rows.push_back(sas);

  auto tw = row(3, 3, "quaternion-Kähler (QK)", "4q, q ≥ 1");
  tw.total_space = "Twistor space";
  tw.fibre = "S^2";
  tw.dim_coeff = 4;
  tw.param = "q";
  tw.dim_Z_label = "4q+2";
  tw.scal_label = scal_symbolic(4, 3, "q");
  rows.push_back(tw);

  // Each factor is a rank 3 structure with curvature forms 4J.
  const std::string prod_scal =
      scal_symbolic(4, 3, "q⁺", Rational(4)) + "+" + scal_symbolic(4, 3, "q⁻", Rational(4));
  auto qs = row(3, 4, "product of two QK manifolds", "4(q⁺+q⁻), q⁺+q⁻ ≥ 1");
  qs.total_space = "Quaternion-Sasakian";
  qs.fibre = "RP^3";
  qs.projective = Projective::conditional;
  qs.dim_Z_label = "4(q⁺+q⁻)+3";
  qs.scal_label = prod_scal;
  rows.push_back(qs);
  auto hh = qs;
  hh.space = "HP^(q⁺)×HP^(q⁻)";
  hh.total_space = "Sp(q⁺+1)×Sp(q⁻+1)/Sp(q⁺)×Sp(q⁻)×Sp(1)";
  hh.fibre = "S^3";
  hh.projective = Projective::no;
  rows.push_back(hh);

  // Symmetric rows of the non-flat table, extended down to k = 1. The rank 7
  // row is absent: Spin(7) holonomy is Ricci-flat, against a positive scal.
  for (const auto& t2 : table2_rows()) {
    if (t2.r < 5 || t2.space == "Riemannian" || t2.space == "QK" || t2.space == "Kähler" ||
        t2.space == "Spin(7) holonomy")
      continue;
    const int r = t2.r;
    auto fibre = [r](bool projective) { return std::string(projective ? "RP^" : "S^") + std::to_string(r - 1); };
    if (t2.dim_coeff > 0) {
      const std::string dz = std::to_string(t2.dim_coeff) + "k+" + std::to_string(r - 1);
      const std::string sc = scal_symbolic(t2.dim_coeff, r, "k");
      if (t2.projective == Projective::conditional) {
        // SO(k+8)/SO(k)×SO(8): projective exactly for odd k.
        auto odd = row(3, r, t2.space, std::to_string(t2.dim_coeff) + "k, k odd ≥ 3");
        odd.total_space = "SO(k+8)/SO(k)×Spin(7)";
        odd.fibre = fibre(true);
        odd.projective = Projective::yes;
        odd.dim_coeff = t2.dim_coeff;
        odd.param = "k";
        odd.dim_Z_label = dz;
        odd.scal_label = sc;
        rows.push_back(odd);
        auto even = odd;
        even.dim_label = std::to_string(t2.dim_coeff) + "k, k = 1 or k even";
        even.total_space = "Spin(k+8)/SO(k)×Spin(7)";
        even.fibre = fibre(false);
        even.projective = Projective::no;
        rows.push_back(even);
        continue;
      }
      auto t = row(3, r, t2.space, std::to_string(t2.dim_coeff) + "k, k ≥ 1");
      for (const auto& f : kFamilies)
        if (t2.space == f.label) t.total_space = f.total_space;
      t.fibre = fibre(t2.projective == Projective::yes);
      t.projective = t2.projective;
      t.dim_coeff = t2.dim_coeff;
      t.param = "k";
      t.dim_Z_label = dz;
      t.scal_label = sc;
      rows.push_back(t);
    } else {
      auto t = row(3, r, t2.space, t2.dim_label);
      for (const auto& p : kPlanes)
        if (t2.alias == p.alias) t.total_space = p.total_space;
      t.fibre = fibre(false);
      t.dim = t2.dim;
      t.dim_Z_label = std::to_string(*t2.dim + r - 1);
      t.scal = scal_formula(*t2.dim, r);
      t.scal_label = factorize(t.scal->num());
      rows.push_back(t);
    }
  }
  return rows;
}

std::vector<TableRow> table_rows(int table) {
  switch (table) {
    case 1: return table1_rows();
    case 2: return table2_rows();
    case 3: return table3_rows();
    default: throw std::invalid_argument("table must be 1, 2 or 3");
  }
}

namespace {

std::string md_cell(const std::string& s) { return s.empty() ? " " : s; }

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + md_cell(c) + " |";
  return out + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string tables_markdown(int table) {
  const auto rows = table_rows(table);
  std::ostringstream os;
  if (table == 1) {
    os << "Table 1. Manifolds with a flat even Clifford structure\n\n";
    os << md_row({"r", "M", "dimension of M"}) << md_row({"---", "---", "---"});
    for (const auto& t : rows) os << md_row({t.r_label, t.space, t.dim_label});
  } else if (table == 2) {
    os << "Table 2. Manifolds with a parallel non-flat even Clifford structure\n\n";
    os << md_row({"r", "type of E", "M", "dimension of M"}) << md_row({"---", "---", "---", "---"});
    for (const auto& t : rows)
      os << md_row({t.r_label, t.type_of_E, t.alias.empty() ? t.space : t.alias + " = " + t.space, t.dim_label});
  } else {
    os << "Table 3. Riemannian submersions with curvature constancy\n\n";
    os << md_row({"r", "Z", "M", "Fibre", "dim(M)", "dim(Z)", "scal(M)"})
       << md_row({"---", "---", "---", "---", "---", "---", "---"});
    for (const auto& t : rows)
      os << md_row({t.r_label, t.total_space, t.space, t.fibre, t.dim_label, t.dim_Z_label, t.scal_label});
  }
  return os.str();
}

std::string tables_csv(int table) {
  const auto rows = table_rows(table);
  std::ostringstream os;
  const std::vector<std::string> header{"table", "r", "type_of_E", "projective", "M", "alias", "Z", "fibre",
                                        "dim_M", "dim_Z", "scal", "noncompact_dual"};
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\r\n";
  };
  line(header);
  for (const auto& t : rows)
    line({std::to_string(t.table), t.r_label, t.type_of_E, to_string(t.projective), t.space, t.alias, t.total_space,
          t.fibre, t.dim_label, t.dim_Z_label, t.scal ? t.scal->str() : t.scal_label, t.noncompact_dual});
  return os.str();
}

}  // namespace clifflab
