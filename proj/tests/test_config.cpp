#include <doctest.h>

#include <string>

#include "sbe/config.hpp"
#include "sbe/errors.hpp"

using sbe::ExperimentKind;
using sbe::parse_config_text;

namespace {
std::string error_of(const std::string& text, ExperimentKind kind) {
    try {
        parse_config_text(text, kind, "cfg");
    } catch (const sbe::ConfigError& e) {
        return e.what();
    }
    return "";
}
}  // namespace

TEST_CASE("minimal config parses with defaults filled in") {
    sbe::ExperimentSpec s = parse_config_text(
        "model = ou\n"
        "theta = 1\n"
        "N = 8\n"
        "dt = 0.001\n"
        "T = 0.01\n",
        ExperimentKind::simulate);
    CHECK(s.model.model == sbe::ModelKind::ou);
    CHECK(s.model.theta == 1.0);
    CHECK(s.model.N == 8);
    CHECK(s.paths == 256);
    CHECK(s.seed == 1);
    CHECK(s.out_dir == "out");
    CHECK(s.has("model"));
    CHECK(s.has("dt"));
    CHECK_FALSE(s.has("paths"));
}

TEST_CASE("comments, blank lines and spacing are tolerated") {
    sbe::ExperimentSpec s = parse_config_text(
        "# leading comment\n"
        "\n"
        "model=sbe\n"
        "  theta =  0.75  \n"
        "N = 4\n"
        "dt = 0.0001\n"
        "T = 0.001\n"
        "seed = 99\n",
        ExperimentKind::simulate);
    CHECK(s.model.model == sbe::ModelKind::sbe);
    CHECK(s.model.theta == 0.75);
    CHECK(s.seed == 99);
}

TEST_CASE("lists parse comma-separated values") {
    sbe::ExperimentSpec s = parse_config_text(
        "model = ou\n"
        "theta = 1\n"
        "N = 64\n"
        "dt = 0.001\n"
        "T = 0.01\n"
        "modes = 2, 3, 5\n"
        "M_list = 2,4,8\n"
        "eps_list = 0.125,0.25\n",
        ExperimentKind::simulate);
    CHECK(s.modes == std::vector<int>{2, 3, 5});
    CHECK(s.m_list == std::vector<int>{2, 4, 8});
    REQUIRE(s.eps_list.size() == 2);
    CHECK(s.eps_list[0] == 0.125);
    CHECK(s.eps_list[1] == 0.25);
}

TEST_CASE("error messages carry origin and line number") {
    std::string msg = error_of(
        "model = ou\n"
        "theta = -1\n"
        "N = 4\n"
        "dt = 0.001\n"
        "T = 0.01\n",
        ExperimentKind::simulate);
    CHECK(msg.find("theta must be >= 0") != std::string::npos);

    msg = error_of("model = ou\nbogus = 1\n", ExperimentKind::simulate);
    CHECK(msg.find("cfg:2") != std::string::npos);
    CHECK(msg.find("unknown key 'bogus'") != std::string::npos);
}

TEST_CASE("duplicate keys are rejected with both line numbers") {
    std::string msg = error_of(
        "model = ou\n"
        "theta = 1\n"
        "theta = 2\n",
        ExperimentKind::simulate);
    CHECK(msg.find("duplicate key 'theta' (lines 2 and 3)") != std::string::npos);
}

TEST_CASE("unknown model names list the alternatives") {
    std::string msg = error_of("model = navier\n", ExperimentKind::simulate);
    CHECK(msg.find("unknown model 'navier'") != std::string::npos);
    CHECK(msg.find("ou, sbe, ddt, ss_lattice, ns2d") != std::string::npos);
}

TEST_CASE("malformed lines and values are rejected") {
    CHECK(error_of("model ou\n", ExperimentKind::simulate).find("expected 'key = value'") !=
          std::string::npos);
    CHECK(error_of("= 3\n", ExperimentKind::simulate).find("empty key") != std::string::npos);
    CHECK(error_of("theta =\n", ExperimentKind::simulate).find("empty value") !=
          std::string::npos);
    CHECK(error_of("model = ou\nseed = -4\n", ExperimentKind::simulate)
              .find("seed expects an unsigned integer") != std::string::npos);
    CHECK(error_of("model = ou\nN = 2000000\n", ExperimentKind::simulate)
              .find("N must be in [1, 2^20]") != std::string::npos);
}

TEST_CASE("the step-size rule is enforced at parse time") {
    std::string msg = error_of(
        "model = sbe\n"
        "theta = 1\n"
        "N = 16\n"
        "dt = 0.001\n"
        "T = 0.01\n",
        ExperimentKind::simulate);
    CHECK(msg.find("step-size rule violated") != std::string::npos);
}

TEST_CASE("experiment names round-trip through the registry") {
    for (ExperimentKind k :
         {ExperimentKind::simulate, ExperimentKind::invariance, ExperimentKind::drift_scaling,
          ExperimentKind::cauchy, ExperimentKind::mollifier_cauchy, ExperimentKind::ito_check,
          ExperimentKind::uniqueness, ExperimentKind::ns2d_invariance}) {
        CHECK(sbe::experiment_from_name(sbe::experiment_name(k)) == k);
    }
    CHECK(std::string(sbe::experiment_name(ExperimentKind::drift_scaling)) ==
          "drift-scaling");
    CHECK_THROWS_AS(sbe::experiment_from_name("no-such-thing"), sbe::ConfigError);
}

TEST_CASE("the 2d invariance experiment defaults to its model") {
    sbe::ExperimentSpec s = parse_config_text(
        "sigma = 0.5\n"
        "N = 4\n"
        "dt = 0.0005\n"
        "T = 0.005\n",
        ExperimentKind::ns2d_invariance);
    CHECK(s.model.model == sbe::ModelKind::ns2d);
    CHECK(s.model.sigma == 0.5);
}
