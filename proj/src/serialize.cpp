#include "clifflab/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace clifflab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

void check_schema(const Json& j) {
  if (j.contains("schema") && !(j["schema"].is_number_integer() && j["schema"].get<int>() == kSchemaVersion))
    bad("unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
}

}  // namespace

Json rational_to_json(const Rational& q) {
  if (q.is_integer()) return q.num();
  return q.str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(e.what());
    }
  }
  bad("expected an integer or a \"p/q\" string");
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) bad("matrix must have " + std::to_string(n) + " rows");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) bad("matrix row must have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json rep_to_json(const MatrixRep& rep) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["rank"] = rep.rank;
  j["dim"] = rep.dim;
  j["kind"] = to_string(rep.kind);
  if (rep.volume_split)
    j["volume_split"] = {rep.volume_split->first, rep.volume_split->second};
  else
    j["volume_split"] = nullptr;
  Json gens = Json::array();
  for (const auto& g : rep.generators) {
    Json flat = Json::array();
    for (const auto v : g.data()) flat.push_back(v);
    gens.push_back(std::move(flat));
  }
  j["generators"] = std::move(gens);
  return j;
}

MatrixRep rep_from_json(const Json& j) {
  check_schema(j);
  MatrixRep rep;
  rep.rank = static_cast<int>(int_field(j, "rank"));
  const std::int64_t dim = int_field(j, "dim");
  if (rep.rank < 1 || dim < 1) bad("rank and dim must be positive");
  rep.dim = static_cast<std::size_t>(dim);
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("field 'kind' must be a string");
  try {
    rep.kind = rep_kind_from_string(kind.get<std::string>());
  } catch (const std::exception& e) {
    bad(e.what());
  }
  if (j.contains("volume_split") && !j["volume_split"].is_null()) {
    const Json& vs = j["volume_split"];
    if (!vs.is_array() || vs.size() != 2 || !vs[0].is_number_integer() || !vs[1].is_number_integer())
      bad("volume_split must be a pair of integers");
    rep.volume_split = std::pair{vs[0].get<int>(), vs[1].get<int>()};
  }
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) bad("field 'generators' must be an array");
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != rep.dim * rep.dim)
      bad("each generator needs dim*dim = " + std::to_string(rep.dim * rep.dim) + " row-major entries");
    IntMatrix m(rep.dim, rep.dim);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!g[k].is_number_integer()) bad("generator entries must be integers");
      m(k / rep.dim, k % rep.dim) = g[k].get<std::int64_t>();
    }
    rep.generators.push_back(std::move(m));
  }
  if (const auto err = check_rep_invariants(rep)) bad("invalid representation: " + *err);
  return rep;
}

Json structure_to_json(const EvenCliffordStructure& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["rank"] = s.r();
  j["dim"] = s.n();
  Json fam = Json::array();
  for (int a = 1; a <= s.r(); ++a)
    for (int b = a + 1; b <= s.r(); ++b) fam.push_back({{"i", a}, {"j", b}, {"rows", matrix_to_json(s.J.upper(a, b))}});
  j["J"] = std::move(fam);
  return j;
}

EvenCliffordStructure structure_from_json(const Json& j) {
  check_schema(j);
  if (j.is_object() && j.contains("generators")) {
    try {
      return structure_from_rep(rep_from_json(j));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      bad(e.what());
    }
  }
  const std::int64_t r = int_field(j, "rank");
  const std::int64_t n = int_field(j, "dim");
  if (r < 2 || n < 1) bad("a structure needs rank >= 2 and a positive dim");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<RatMatrix> upper(static_cast<std::size_t>(r * (r - 1) / 2));
  std::vector<bool> seen(upper.size(), false);
  const Json& fam = field(j, "J");
  if (!fam.is_array()) bad("field 'J' must be an array");
  for (const auto& e : fam) {
    const std::int64_t a = int_field(e, "i");
    const std::int64_t b = int_field(e, "j");
    if (a < 1 || b > r || a >= b) bad("J entry indices must satisfy 1 <= i < j <= rank");
    const std::size_t slot = pair_index(static_cast<std::size_t>(r), static_cast<std::size_t>(a - 1),
                                        static_cast<std::size_t>(b - 1));
    if (seen[slot]) bad("duplicate J entry (" + std::to_string(a) + "," + std::to_string(b) + ")");
    seen[slot] = true;
    upper[slot] = matrix_from_json(field(e, "rows"), dim);
  }
  for (bool s : seen)
    if (!s) bad("J must list every pair i < j");
  return EvenCliffordStructure{JFamily(dim, static_cast<int>(r), std::move(upper)), std::nullopt};
}

Json element_to_json(const CliffordElement& x) {
  // Same order as the canonical text form.
  std::vector<std::pair<std::vector<int>, Rational>> sorted;
  for (const auto& [m, c] : x.terms()) sorted.emplace_back(indices_from_mask(m), c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  Json terms = Json::array();
  for (const auto& [idx, c] : sorted) terms.push_back({{"blades", idx}, {"num", c.num()}, {"den", c.den()}});
  Json j;
  j["terms"] = std::move(terms);
  j["rank"] = x.rank();
  return j;
}

CliffordElement element_from_json(const Json& j) {
  const std::int64_t r = int_field(j, "rank");
  if (r < 1 || r > kMaxAlgebraRank) bad("element rank out of range");
  const AlgebraSignature sig(static_cast<int>(r));
  CliffordElement x(sig);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("field 'terms' must be an array");
  for (const auto& t : terms) {
    const Json& bl = field(t, "blades");
    if (!bl.is_array()) bad("field 'blades' must be an array");
    std::vector<int> idx;
    for (const auto& v : bl) {
      if (!v.is_number_integer()) bad("blade indices must be integers");
      idx.push_back(v.get<int>());
    }
    const std::int64_t den = int_field(t, "den");
    if (den == 0) bad("zero denominator");
    try {
      x += CliffordElement::blade(sig, idx, Rational(int_field(t, "num"), den));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      bad(e.what());
    }
  }
  return x;
}

CliffordElement element_from_text(const std::string& text, int rank) {
  if (rank < 1 || rank > kMaxAlgebraRank) bad("element rank out of range");
  const AlgebraSignature sig(rank);
  CliffordElement x(sig);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0") return x;
  std::size_t pos = 0;
  const std::string dot = "·";
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      bad("expected '+' or '-' at offset " + std::to_string(pos));
    }
    const std::size_t brace = s.find("e{", pos);
    if (brace == std::string::npos) bad("expected e{...} after offset " + std::to_string(pos));
    std::string coeff = s.substr(pos, brace - pos);
    if (coeff.size() >= dot.size() && coeff.compare(coeff.size() - dot.size(), dot.size(), dot) == 0)
      coeff.erase(coeff.size() - dot.size());
    else if (!coeff.empty() && coeff.back() == '*')
      coeff.pop_back();
    Rational c(1);
    if (!coeff.empty()) {
      try {
        c = Rational::parse(coeff);
      } catch (const std::exception& e) {
        bad(e.what());
      }
    }
    const std::size_t close = s.find('}', brace);
    if (close == std::string::npos) bad("unterminated e{");
    std::vector<int> idx;
    std::stringstream list(s.substr(brace + 2, close - brace - 2));
    for (std::string item; std::getline(list, item, ',');) {
      try {
        std::size_t used = 0;
        idx.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        bad("bad blade index '" + item + "'");
      }
    }
    try {
      x += CliffordElement::blade(sig, idx, c * Rational(sign));
    } catch (const std::exception& e) {
      bad(e.what());
    }
    pos = close + 1;
  }
  return x;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["checks"] = r.checks;
  j["failure_count"] = r.failure_count;
  Json fails = Json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"relation", f.relation}, {"indices", f.indices}, {"residual", f.residual.str()}});
  j["failures"] = std::move(fails);
  Json values = Json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  j["values"] = std::move(values);
  j["notes"] = r.notes;
  return j;
}

Json spectrum_to_json(const std::vector<std::pair<Rational, std::size_t>>& spec) {
  Json out = Json::array();
  for (const auto& [ev, mult] : spec) out.push_back({{"eigenvalue", ev.str()}, {"multiplicity", mult}});
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["candidate"] = v.candidate;
  Json w = Json::object();
  for (const auto& [k, val] : v.witness) w[k] = val;
  j["params"] = std::move(w);
  j["dim"] = v.dim;
  j["r"] = v.r ? Json(*v.r) : Json(nullptr);
  j["n0"] = v.n0 ? Json(*v.n0) : Json(nullptr);
  j["admissible"] = v.admissible;
  j["reason"] = to_string(v.reason);
  return j;
}

Json equivariance_to_json(const EquivarianceResult& e) {
  Json j;
  j["p"] = e.p;
  j["q"] = e.q;
  j["unknowns"] = e.unknowns;
  j["equations"] = e.equations;
  j["solution_dim"] = e.solution_dim;
  j["clifford_compatible"] = e.clifford_compatible;
  j["report"] = report_to_json(e.report);
  return j;
}

Json row_to_json(const TableRow& row) {
  Json j;
  j["table"] = row.table;
  j["r"] = row.r;
  j["r_label"] = row.r_label;
  if (row.table == 2) {
    j["type_of_E"] = row.type_of_E;
    j["projective"] = to_string(row.projective);
  }
  j["M"] = row.space;
  if (!row.alias.empty()) j["alias"] = row.alias;
  if (row.table == 3) {
    j["Z"] = row.total_space;
    j["fibre"] = row.fibre;
  }
  j["dim_M"] = row.dim_label;
  j["dim_value"] = row.dim ? Json(*row.dim) : Json(nullptr);
  if (!row.param.empty()) {
    j["dim_coeff"] = row.dim_coeff;
    j["param"] = row.param;
  }
  if (row.table == 3) {
    j["dim_Z"] = row.dim_Z_label;
    j["scal"] = row.scal_label;
    j["scal_value"] = row.scal ? rational_to_json(*row.scal) : Json(nullptr);
  }
  if (!row.noncompact_dual.empty()) j["noncompact_dual"] = row.noncompact_dual;
  return j;
}

Json table_to_json(int table) {
  Json rows = Json::array();
  for (const auto& row : table_rows(table)) rows.push_back(row_to_json(row));
  return rows;
}

Json tables_json() {
  Json j;
  j["schema"] = kSchemaVersion;
  for (int t = 1; t <= 3; ++t) j["table" + std::to_string(t)] = table_to_json(t);
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace clifflab
