// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

using Json = nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + ACRLAB_CLI_PATH + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kScenarios = ACRLAB_SCENARIOS;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify --json reports the archetype value") {
    const auto r = run("classify " + kScenarios + "/archetype.rxn --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["acr_value"].get<double>() == 1.0);
    CHECK(doc["basin"] == "full-space");
    CHECK(doc["lattice_violations"].empty());
  }

  TEST_CASE("bundled scenarios resolve by name") {
    const auto r = run("classify weak_only.rxn --json");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["basin"] == "null");
  }

  TEST_CASE("ACRLAB_EXAMPLES overrides the scenario directory") {
    const auto dir = std::filesystem::temp_directory_path() / "acrlab_cli_examples";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "archetype.rxn") << "A+B -> 2B ; k=2\nB -> A ; k=6\n";
    const auto r = run("classify archetype.rxn --json", "ACRLAB_EXAMPLES=" + dir.string());
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["acr_value"].get<double>() == doctest::Approx(3));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("atlas --set weak --format json has 17 entries") {
    const auto r = run("atlas --set weak --format json");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).size() == 17);
    const auto s = run("atlas --set static --svg");
    REQUIRE(s.code == 0);
    CHECK(s.out.find("<svg") == 0);
  }

  TEST_CASE("verify weak-only with seed 7") {
    const auto r = run("verify " + kScenarios + "/weak_only.rxn --samples 100 --seed 7");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["converged"] == 0);
    CHECK(doc["moved_closer"] == 100);
    CHECK(doc["seed"] == 7);
    CHECK(doc["lattice_violations"].empty());
  }

  TEST_CASE("identical invocations give identical bytes") {
    for (const std::string args : {"verify subspace.rxn --samples 30 --seed 5", "simulate archetype.rxn --x0 3,2",
                                   "plot three_ray.rxn --grid 8 --csv --range 0.5,3.5 --target A=2"}) {
      CAPTURE(args);
      const auto a = run(args);
      const auto b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      CHECK_FALSE(a.out.empty());
    }
  }

  TEST_CASE("exit codes") {
    CHECK(run("validate 'A -> B ; k=0'").code == 2);
    CHECK(run("classify 'A -> B ; k=1\nB -> C ; k=1'").code == 1);
    CHECK(run("classify does_not_exist.rxn").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("classify archetype.rxn --bogus").code == 2);
    CHECK(run("verify archetype.rxn --samples 0").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("validate archetype.rxn").code == 0);
  }

  TEST_CASE("stdin input") {
    const auto r = run("classify - --json < " + kScenarios + "/subspace.rxn");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["basin"] == "cylinder");
  }

  TEST_CASE("rate override") {
    const auto r = run("classify archetype.rxn --k 3,6 --json");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["acr_value"].get<double>() == doctest::Approx(2));
  }

  TEST_CASE("simulate formats") {
    const auto csv = run("simulate archetype.rxn --x0 3,2");
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("t,A,B\n", 0) == 0);
    const auto js = run("simulate archetype.rxn --x0 3,2 --json");
    REQUIRE(js.code == 0);
    CHECK(Json::parse(js.out)["terminal"] == "converged-to-hyperplane");
    CHECK(run("simulate archetype.rxn").code == 2);
  }

  TEST_CASE("classify then verify is lattice-clean on two-reaction scenarios") {
    for (const char* f : {"archetype.rxn", "weak_only.rxn", "subspace.rxn", "sign_correction.rxn"}) {
      CAPTURE(f);
      const auto c = run(std::string("classify ") + f + " --json");
      REQUIRE(c.code == 0);
      CHECK(Json::parse(c.out)["lattice_violations"].empty());
      const auto v = run(std::string("verify ") + f + " --samples 20 --seed 1");
      REQUIRE(v.code == 0);
      const Json doc = Json::parse(v.out);
      CHECK(doc["lattice_violations"].empty());
      CHECK(doc["agreement_rate"].get<double>() == 1.0);
    }
  }

  TEST_CASE("plot svg") {
    const auto r = run("plot archetype.rxn --grid 10");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("<svg") == 0);
  }
}
