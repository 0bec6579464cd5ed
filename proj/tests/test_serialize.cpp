#include "doctest.h"

#include "clifflab/serialize.hpp"
#include "clifflab/suites.hpp"

using namespace clifflab;

TEST_CASE("representation round trip") {
  for (const auto& rep : {build_clifford_rep(3, 2), build_even_rep(4, 1, 1), build_even_rep(9, 1)}) {
    const Json j = rep_to_json(rep);
    CHECK(j["schema"] == 1);
    CHECK(j["generators"][0].size() == rep.dim * rep.dim);
    const MatrixRep back = rep_from_json(parse_json_text(dump(j)));
    CHECK(back == rep);
  }
}

TEST_CASE("malformed representations are rejected with ParseError") {
  Json j = rep_to_json(build_clifford_rep(2, 1));
  j["generators"][0][0] = 5;
  CHECK_THROWS_AS((void)rep_from_json(j), ParseError);
  Json k = rep_to_json(build_clifford_rep(2, 1));
  k.erase("dim");
  CHECK_THROWS_AS((void)rep_from_json(k), ParseError);
  Json s = rep_to_json(build_clifford_rep(2, 1));
  s["schema"] = 2;
  CHECK_THROWS_AS((void)rep_from_json(s), ParseError);
  CHECK_THROWS_AS((void)parse_json_text("{not json"), ParseError);
}

TEST_CASE("structure round trip, from either document kind") {
  const EvenCliffordStructure s = structure_from_rep(build_even_rep(5, 1));
  const EvenCliffordStructure back = structure_from_json(parse_json_text(dump(structure_to_json(s))));
  CHECK(back.r() == 5);
  CHECK(back.J.all_upper() == s.J.all_upper());
  const EvenCliffordStructure from_rep = structure_from_json(rep_to_json(build_even_rep(5, 1)));
  CHECK(from_rep.J.all_upper() == s.J.all_upper());

  Json missing = structure_to_json(s);
  missing["J"].erase(missing["J"].size() - 1);
  CHECK_THROWS_AS((void)structure_from_json(missing), ParseError);
}

TEST_CASE("element JSON and text forms") {
  const AlgebraSignature sig(4);
  CliffordElement x = CliffordElement::blade(sig, std::vector<int>{1, 2}, Rational(3, 2));
  x += CliffordElement::blade(sig, std::vector<int>{3}, Rational(-1));
  x += CliffordElement::scalar(sig, Rational(2));
  const Json j = element_to_json(x);
  CHECK(j.dump() ==
        R"({"terms":[{"blades":[],"num":2,"den":1},{"blades":[3],"num":-1,"den":1},{"blades":[1,2],"num":3,"den":2}],"rank":4})");
  CHECK(element_from_json(j) == x);
  CHECK(element_from_text(x.str(), 4) == x);
  CHECK(element_from_text("0", 4).is_zero());
  CHECK(element_from_text("e{1,2} - 2*e{3}", 4) ==
        CliffordElement::blade(sig, std::vector<int>{1, 2}) - CliffordElement::blade(sig, std::vector<int>{3}, Rational(2)));
  CHECK_THROWS_AS((void)element_from_text("+1·e{9}", 4), ParseError);
  CHECK_THROWS_AS((void)element_from_text("+1·e{1", 4), ParseError);
}

TEST_CASE("reports and spectra") {
  VerificationReport r;
  r.suite = "demo";
  r.check(true, "ok", {}, Rational(0));
  r.check(false, "bad", {1, 2}, Rational(1, 3));
  const Json j = report_to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["checks"] == 2);
  CHECK(j["failures"][0]["residual"] == "1/3");
  CHECK(j["failures"][0]["indices"] == Json::array({1, 2}));
  const Json s = spectrum_to_json({{Rational(0), 12}, {Rational(5, 2), 1}});
  CHECK(s[1]["eigenvalue"] == "5/2");
  CHECK(s[0]["multiplicity"] == 12);
}

TEST_CASE("tables.json holds all three tables") {
  const Json t = tables_json();
  CHECK(t["table1"].size() == table1_rows().size());
  CHECK(t["table2"].size() == table2_rows().size());
  CHECK(t["table3"].size() == table3_rows().size());
  bool f4 = false;
  for (const auto& row : t["table3"])
    if (row["M"] == "F4/Spin(9)") {
      f4 = true;
      CHECK(row["scal_value"] == 576);
      CHECK(row["scal"] == "2^6·3^2");
    }
  CHECK(f4);
}

TEST_CASE("structure suites and curvature checks") {
  const EvenCliffordStructure s = structure_from_rep(build_even_rep(7, 1));
  for (const char* name : {"relations", "orthogonality", "hodge", "universality"})
    CHECK(run_structure_suite(s, name, 0).passed());
  CHECK_THROWS_AS((void)run_structure_suite(s, "nope", 0), std::invalid_argument);
  const CurvatureCheck c = curvature_check("cp4", "spectrum");
  CHECK(c.document["spectrum"].size() == 3);
  CHECK(c.document["subspaces"]["kahler_line"]["eigenvalue"] == "20");
  CHECK(curvature_check("hp2", "cc").passed);
  CHECK_THROWS_AS((void)curvature_check("cp9", "cc"), std::invalid_argument);
}
