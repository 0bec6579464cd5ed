#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "clifflab/classify.hpp"
#include "clifflab/serialize.hpp"
#include "clifflab/spin_reps.hpp"
#include "clifflab/suites.hpp"

using namespace clifflab;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
}

int cmd_repgen(int rank, const std::string& kind, int copies, std::optional<int> minus, const std::string& out) {
  if (copies < 1) throw UsageError("--copies must be at least 1");
  MatrixRep rep;
  if (rep_kind_from_string(kind) == RepKind::full) {
    if (minus) throw UsageError("--minus applies to even representations only");
    rep = build_clifford_rep(rank, copies);
  } else {
    rep = minus ? build_even_rep(rank, copies, *minus) : build_even_rep(rank, copies);
  }
  emit(dump(rep_to_json(rep)), out);
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& suite, std::uint64_t seed, const std::string& out) {
  const EvenCliffordStructure s = structure_from_json(read_json_file(path));
  const VerificationReport rep = run_structure_suite(s, suite, seed);
  emit(dump(report_to_json(rep)), out);
  return rep.passed() ? kOk : kFailed;
}

int cmd_curvature(const std::string& model, const std::string& check, const std::string& out) {
  const CurvatureCheck c = curvature_check(model, check);
  emit(dump(c.document), out);
  return c.passed ? kOk : kFailed;
}

std::string render_table(int t, const std::string& format) {
  if (format == "markdown") return tables_markdown(t);
  if (format == "csv") return tables_csv(t);
  Json j;
  j["schema"] = kSchemaVersion;
  j["table"] = t;
  j["rows"] = table_to_json(t);
  return dump(j);
}

int cmd_classify(std::optional<int> table, const std::string& format, const std::string& cand,
                 const std::map<std::string, std::optional<std::int64_t>>& flags, const std::string& out) {
  if (table.has_value() == !cand.empty()) throw UsageError("classify needs exactly one of --table or --candidate");
  if (table) {
    emit(render_table(*table, format), out);
    return kOk;
  }
  const SymmetricSpaceCandidate& c = candidate(cand);
  Params params;
  for (const auto& name : c.param_names) {
    const auto it = flags.find(name);
    if (it == flags.end() || !it->second)
      throw UsageError("candidate " + c.key + " needs --" + name + " (" + c.label + ")");
    params[name] = *it->second;
  }
  for (const auto& [name, v] : flags)
    if (v && !params.count(name)) throw UsageError("candidate " + c.key + " takes no --" + name);
  Json j;
  j["schema"] = kSchemaVersion;
  j["label"] = c.label;
  j["dim_formula"] = c.dim_formula;
  j["verdict"] = verdict_to_json(check_conditions(c, params));
  if (c.case_id == 4) {
    const auto p = params.at("p"), q = params.at("q");
    if (p >= 5 && p != 8 && p * q <= 16)
      j["equivariance"] = equivariance_to_json(case4_equivariance(static_cast<int>(p), static_cast<int>(q)));
  }
  emit(dump(j), out);
  return kOk;
}

int cmd_verify_all(std::uint64_t seed, bool timing, const std::string& out) {
  const VerifyAllResult r = verify_all(seed);
  emit(dump(verify_all_json(r, timing)), out);
  return r.passed() ? kOk : kFailed;
}

int cmd_emit_tables(const std::string& dir, const std::string& format) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + dir + "': " + ec.message());
  const std::string ext = format == "csv" ? ".csv" : ".md";
  for (int t = 1; t <= 3; ++t) {
    const std::string path = (fs::path(dir) / ("table" + std::to_string(t) + ext)).string();
    write_text_file(path, format == "csv" ? tables_csv(t) : tables_markdown(t));
  }
  write_text_file((fs::path(dir) / "tables.json").string(), dump(tables_json()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford structure toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string out;
  std::uint64_t seed = 0;

  auto* repgen = app.add_subcommand("repgen", "Build a matrix representation of Cl_r or Cl^0_r");
  int rank = 0, copies = 1;
  std::optional<int> minus;
  std::string kind = "even";
  repgen->add_option("--rank", rank, "Rank r")->required();
  repgen->add_option("--kind", kind, "even or full")->check(CLI::IsMember({"even", "full"}));
  repgen->add_option("--copies", copies, "Irreducible copies (the +1 volume class when r = 0 mod 4)");
  repgen->add_option("--minus", minus, "Copies of the -1 volume class (r = 0 mod 4)");
  repgen->add_option("--out", out, "Output path (stdout by default)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite on a structure file");
  std::string structure, suite;
  verify->add_option("--structure", structure, "Structure or repgen JSON")->required();
  verify->add_option("--suite", suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"relations", "orthogonality", "hodge", "universality"}));
  verify->add_option("--report", out, "Report path (stdout by default)");
  verify->add_option("--seed", seed, "Seed for randomized checks");

  auto* curv = app.add_subcommand("curvature", "Check a model curvature operator");
  std::string model, check = "identities";
  curv->add_option("--model", model, "Model")->required()->check(CLI::IsMember({"s8", "cp4", "hp2", "op2"}));
  curv->add_option("--check", check, "Check")->check(CLI::IsMember({"identities", "cc", "spectrum"}));
  curv->add_option("--out", out, "Output path (stdout by default)");

  auto* cls = app.add_subcommand("classify", "Emit a classification table or a single verdict");
  std::optional<int> table;
  std::string format = "markdown", cand;
  std::map<std::string, std::optional<std::int64_t>> params{{"n", {}}, {"p", {}}, {"q", {}}};
  cls->add_option("--table", table, "Table 1, 2 or 3")->check(CLI::Range(1, 3));
  cls->add_option("--format", format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
  cls->add_option("--candidate", cand, "Candidate key, e.g. case4");
  for (auto& [name, v] : params) cls->add_option("--" + name, v, "Candidate parameter " + name);
  cls->add_option("--out", out, "Output path (stdout by default)");

  auto* all = app.add_subcommand("verify-all", "Run every acceptance suite");
  bool timing = false;
  all->add_option("--seed", seed, "Seed for randomized checks");
  all->add_flag("--timing", timing, "Include wall-clock seconds per suite");
  all->add_option("--out", out, "Report path (stdout by default)");

  auto* emit_tables = app.add_subcommand("emit-tables", "Write table1..3 and tables.json to a directory");
  std::string dir, tformat = "markdown";
  emit_tables->add_option("dir", dir, "Output directory")->required();
  emit_tables->add_option("--format", tformat, "markdown or csv")->check(CLI::IsMember({"markdown", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*repgen) return cmd_repgen(rank, kind, copies, minus, out);
    if (*verify) return cmd_verify(structure, suite, seed, out);
    if (*curv) return cmd_curvature(model, check, out);
    if (*cls) return cmd_classify(table, format, cand, params, out);
    if (*all) return cmd_verify_all(seed, timing, out);
    if (*emit_tables) return cmd_emit_tables(dir, tformat);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
