#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "clifflab/blade.hpp"
#include "clifflab/classify.hpp"
#include "clifflab/curvature.hpp"
#include "clifflab/even_structure.hpp"
#include "clifflab/report.hpp"
#include "clifflab/spin_reps.hpp"

namespace clifflab {

/// Insertion-ordered so emitted files are stable and read naturally.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input file or document.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integers stay JSON integers; other values become "p/q" strings.
[[nodiscard]] Json rational_to_json(const Rational& q);
[[nodiscard]] Rational rational_from_json(const Json& j);

[[nodiscard]] Json matrix_to_json(const RatMatrix& m);  // list of rows
[[nodiscard]] RatMatrix matrix_from_json(const Json& j, std::size_t n);

[[nodiscard]] Json rep_to_json(const MatrixRep& rep);
[[nodiscard]] MatrixRep rep_from_json(const Json& j);

[[nodiscard]] Json structure_to_json(const EvenCliffordStructure& s);
/// Accepts a structure document or a repgen document (the structure is then
/// derived from the representation).
[[nodiscard]] EvenCliffordStructure structure_from_json(const Json& j);

[[nodiscard]] Json element_to_json(const CliffordElement& x);
[[nodiscard]] CliffordElement element_from_json(const Json& j);
/// Inverse of CliffordElement::str(); "*" is accepted for "·".
[[nodiscard]] CliffordElement element_from_text(const std::string& text, int rank);

[[nodiscard]] Json report_to_json(const VerificationReport& r);
[[nodiscard]] Json spectrum_to_json(const std::vector<std::pair<Rational, std::size_t>>& spec);

[[nodiscard]] Json verdict_to_json(const Verdict& v);
[[nodiscard]] Json equivariance_to_json(const EquivarianceResult& e);
[[nodiscard]] Json row_to_json(const TableRow& row);
[[nodiscard]] Json table_to_json(int table);
/// All three tables in one document.
[[nodiscard]] Json tables_json();

[[nodiscard]] Json parse_json_text(const std::string& text);
[[nodiscard]] Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline; throws std::runtime_error naming the path.
void write_text_file(const std::string& path, const std::string& text);
[[nodiscard]] std::string dump(const Json& j);

}  // namespace clifflab
