#include "doctest.h"
#include "rigidity/report.hpp"

using namespace rigidity;

TEST_CASE("decompose reports are deterministic and self-describing") {
  CaseSpec spec;
  spec.gcase = GroupCase{CaseKind::satake, 2, 0, 0, 0, {}};
  ordered_json a = decompose_report(spec);
  ordered_json b = decompose_report(spec);
  CHECK(a.dump() == b.dump());
  CHECK(a["dim_g"] == 21);
  CHECK(a["tolerances"]["residual_tol"] == spec.tol.residual_tol);
  CHECK(a["case"]["kind"] == "satake");
  CHECK(a["components"].size() == 3);
}

TEST_CASE("certify report carries certificate, margins and verdict") {
  CaseSpec spec;
  spec.gcase = GroupCase{CaseKind::diagonal, 2, 1, 3, 2, 1.0};
  ordered_json j = certify_report(spec);
  CHECK(j["verdict"] == "rigid_by_certificate");
  CHECK(j["centralizer"]["dim_in_g"] == 4);
  CHECK(j["centralizer"]["dim_in_k"] == 2);
  CHECK(j["certificate"]["margins"]["1"].get<double>() > 0.0);
  CHECK(j["reference_certificate"]["gamma"] == 1.0);
  CHECK(j["wm"][0]["m"] == 1);
  CHECK(j["wm"][0]["real_dim"] == 8);
  // the echoed reference matrix serializes complex entries as [re, im]
  const auto& entry = j["reference_certificate"]["matrix"][3][3];
  CHECK(entry[0].get<double>() == doctest::Approx(0.0));
  CHECK(entry[1].get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("vanishing cases report no certificate section") {
  CaseSpec spec;
  spec.gcase = GroupCase{CaseKind::ihara_sostar, 3, 0, 0, 0, {}};
  ordered_json j = certify_report(spec);
  CHECK(j["verdict"] == "rigid_by_vanishing");
  CHECK(!j.contains("certificate"));
  CHECK(j["g1_dims"].empty());
}
