#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncosc/run_config.hpp"

using namespace ncosc;

namespace {

RunConfig demo_config() {
  RunConfig cfg;
  cfg.command = Command::spectrum;
  cfg.params = {1.0, 1.0, 0.05, 0.05};
  cfg.irrep = make_irrep(IrrepClass::discrete_plus, 1.0, 1.0, 24.0);
  cfg.j = 1.0;
  cfg.n_max = 12;
  cfg.count = 6;
  return cfg;
}

}  // namespace

TEST_CASE("config serialization round-trips idempotently") {
  RunConfig cfg = demo_config();
  cfg.t_grid = {1.0, 2.0, 4.0};
  cfg.output_path = "out.json";
  const std::string once = cfg.to_json().dump();
  const RunConfig back = RunConfig::from_json(nlohmann::json::parse(once));
  const std::string twice = back.to_json().dump();
  CHECK(once == twice);

  RunConfig cont = demo_config();
  cont.irrep = make_irrep(IrrepClass::continuous, -1.0, -12.0, 11.0, false);
  const std::string c1 = cont.to_json().dump();
  CHECK(c1 == RunConfig::from_json(nlohmann::json::parse(c1)).to_json().dump());
}

TEST_CASE("config validation") {
  RunConfig cfg = demo_config();
  CHECK_NOTHROW(cfg.validate());

  SUBCASE("bad tolerances") {
    cfg.tolerances.jacobi = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
  SUBCASE("bad format") {
    cfg.output_format = "xml";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
  SUBCASE("missing irrep") {
    cfg.irrep.reset();
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
  SUBCASE("perturb-small requires a t grid") {
    cfg.command = Command::perturb_small;
    cfg.t_grid.clear();
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
  SUBCASE("bad params") {
    cfg.params.M = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
  SUBCASE("unknown command string") {
    CHECK_THROWS_AS((void)command_from_string("fourier"), std::invalid_argument);
  }
}

TEST_CASE("run: algebra-check and levi") {
  RunConfig cfg = demo_config();
  cfg.command = Command::algebra_check;
  const RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.report.at("ok").get<bool>());
  CHECK(res.report.at("jacobi_residual").get<double>() <= 1e-12);
  CHECK(res.report.at("derived_dim").get<int>() == 4);

  cfg.command = Command::levi;
  const RunResult levi = run(cfg);
  CHECK(levi.exit_code == 0);
  CHECK(levi.report.at("radical_dim").get<int>() == 7);
  CHECK(levi.report.at("complement_dim").get<int>() == 3);
  CHECK(levi.report.at("sl2r_fingerprint").get<bool>());
}

TEST_CASE("run: spectrum is deterministic") {
  RunConfig cfg = demo_config();
  const RunResult a = run(cfg);
  const RunResult b = run(cfg);
  CHECK(a.exit_code == 0);
  CHECK(a.report.dump() == b.report.dump());  // byte-identical report
  CHECK(a.csv == b.csv);
  CHECK(a.report.at("eigenvalues").size() == 6);
}

TEST_CASE("run: spectrum at z=0 gives omega(n+1) ladder") {
  RunConfig cfg = demo_config();
  cfg.params.theta = 0.0;
  cfg.params.kappa = 0.0;
  const RunResult res = run(cfg);
  const auto ev = res.report.at("eigenvalues").get<std::vector<double>>();
  for (const double e : ev) CHECK(std::abs(e - std::lround(e)) <= 1e-10);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("run: dirac equivalence") {
  RunConfig cfg = demo_config();
  cfg.command = Command::dirac_equivalence;
  cfg.params = {1.0, 0.35, 0.0, 0.0};
  cfg.n_max = 6;
  const RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.report.at("matched").get<bool>());
  CHECK(res.report.at("sign").get<int>() == 1);
  CHECK(res.report.at("diff_plus").get<double>() == 0.0);
}

TEST_CASE("run: converge command") {
  RunConfig cfg = demo_config();
  cfg.command = Command::converge;
  cfg.count = 4;
  cfg.ladder = {{8, 0.0}, {12, 0.0}, {16, 0.0}};
  const RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  const auto conv = res.report.at("converged").get<std::vector<bool>>();
  REQUIRE(conv.size() == 4);
  for (const bool c : conv) CHECK(c);
}

TEST_CASE("run: perturb-small smoke") {
  RunConfig cfg = demo_config();
  cfg.command = Command::perturb_small;
  cfg.count = 4;
  cfg.n_max = 12;
  cfg.t_grid = {0.5, 1.0, 2.0};
  const RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  for (const auto& lev : res.report.at("levels"))
    CHECK(lev.at("slope").get<double>() >= 2.5);
  CHECK(res.csv.rfind("t,j,level_index", 0) == 0);
}
