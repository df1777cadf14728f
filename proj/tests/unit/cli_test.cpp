#include "doctest.h"
#include "helpers.hpp"

#include "coalg/cli/commands.hpp"
#include "coalg/cli/suites.hpp"

using namespace coalg;
using coalg::test::error_kind;

namespace {

const Workspace& workspace() {
  static const Workspace ws =
      load_workspace({std::string(COALG_TEST_DATA) + "/monoids.coalg", std::string(COALG_TEST_DATA) + "/bimodules.coalg"});
  return ws;
}

}  // namespace

TEST_CASE("workspace contents") {
  const auto& ws = workspace();
  CHECK(ws.theories.count("Sg") == 1);
  CHECK(ws.algebras.at("Z4add").algebra.size() == 4);
  CHECK(ws.coalgebras.count("V_opp") == 1);
  CHECK(ws.bialgebras.count("F3C2") == 1);
  CHECK(ws.kinds_of("Z4add") == std::vector<std::string>{"algebra"});
  CHECK(ws.ring("Z6")->size() == 6);
}

TEST_CASE("workspace errors") {
  Workspace ws;
  CHECK(error_kind([&] { ws.load_text("theory T ops m/2 eqs\ntheory T ops eqs", "dup"); }) == "duplicate-name");
  Workspace ws2;
  CHECK(error_kind([&] { ws2.load_text("coalgebra C = V(nothing, {x})", "ref"); }) == "unknown-name");
  Workspace ws3;
  CHECK(error_kind([&] { ws3.load_text("algebra A : Mon size 2 table m = [0 1 1 0]", "tables"); }) == "missing-table");
}

TEST_CASE("check") {
  const auto& ws = workspace();
  CHECK(cmd_check(ws, "V_Grp_x").verdict() == Verdict::Ok);
  CHECK(cmd_check(ws, "Triv").verdict() == Verdict::Ok);
  const auto bad = cmd_check(ws, "BadMorphism");
  CHECK(bad.verdict() == Verdict::Fail);
  CHECK_FALSE(bad.witnesses.empty());
  CHECK(cmd_check(ws, "Z4add").verdict() == Verdict::Ok);
  CHECK(cmd_check(ws, "LeftZero").verdict() == Verdict::Fail);
  CHECK(cmd_check(ws, "left_projection").verdict() == Verdict::Fail);
  CHECK(cmd_check(ws, "opposite").verdict() == Verdict::Ok);
  CHECK(cmd_check(ws, "Skew_L2").verdict() == Verdict::Fail);
  CHECK(cmd_check(ws, "F3C2").verdict() == Verdict::Ok);
}

TEST_CASE("gphi, vphi and nphi") {
  const auto& ws = workspace();
  const auto gl = cmd_gphi(ws, "group-like", "F2C2", std::nullopt);
  CHECK(gl.verdict() == Verdict::Ok);
  CHECK(gl.details.front().at("members") == Json::array({"1", "x"}));
  CHECK(cmd_gphi(ws, "invariants", "UT", std::nullopt).details.front().at("members") == Json::array({0, 5}));
  CHECK(cmd_gphi(ws, "id_Grp", "V_Grp_xy", 4).verdict() == Verdict::Bounded);
  CHECK(error_kind([&] { cmd_gphi(ws, "id_Grp", "V_Grp_xy", std::nullopt); }) == "bound-required");
  CHECK(cmd_vphi(ws, "opposite", {"a", "b"}, 4).verdict() == Verdict::Bounded);
  CHECK(cmd_nphi(ws, "id_cSem", "L2").verdict() == Verdict::Ok);
  CHECK(error_kind([&] { cmd_nphi(ws, "id_Grp", "C2"); }) != "");
}

TEST_CASE("ew and hopf") {
  const auto& ws = workspace();
  CHECK(cmd_ew(ws, "Z2_Z4", {"Z2_over_Z4", "Z4_over_Z4"}).verdict() == Verdict::Ok);
  CHECK(cmd_ew(ws, "Z2_Z6", {"Z3_over_Z6", "Z6_over_Z6"}).verdict() == Verdict::Ok);
  CHECK(error_kind([&] { cmd_ew(ws, "UT", {"Z2_over_Z4"}); }) == "ring-mismatch");
  CHECK(cmd_hopf(ws, "M2").verdict() == Verdict::Ok);
  CHECK(cmd_hopf(ws, "Dual2").verdict() == Verdict::Ok);
}

TEST_CASE("reports") {
  const auto& ws = workspace();
  const auto a = cmd_hopf(ws, "F2C2").to_json();
  const auto b = cmd_hopf(ws, "F2C2").to_json();
  CHECK(a.dump() == b.dump());
  CHECK(a.at("schema") == 1);
  CHECK(a.at("millis") == 0);
  std::vector<std::string> keys;
  for (const auto& [k, v] : a.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "command", "inputs", "verdict", "details", "witnesses", "millis"});
  CHECK(combine(Verdict::Ok, Verdict::Bounded) == Verdict::Bounded);
  CHECK(combine(Verdict::Fail, Verdict::Bounded) == Verdict::Fail);
}

TEST_CASE("suites") {
  const auto& ws = workspace();
  CHECK(cmd_suite(ws, "paper-examples").verdict() == Verdict::Ok);
  CHECK(cmd_suite(ws, "kan-cogroups").verdict() == Verdict::Ok);
  CHECK(error_kind([&] { cmd_suite(ws, "nosuch"); }) == "unknown-suite");
  CHECK(acceptance_criteria().size() == 10);
}
