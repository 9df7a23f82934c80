#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "json.hpp"
#include "skein/cli.hpp"

using skein::cli::RunResult;
using skein::cli::run;

TEST_CASE("homfly text output") {
  const RunResult r =
      run({"homfly", "--braid", "1 1 1", "--strands", "2", "--normalized"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1*q^2*r^-2 + -1*q^0*r^-4 + 1*q^-2*r^-2\n");
  CHECK(r.err.empty());
}

TEST_CASE("homfly json output and engine agreement") {
  const RunResult trace = run({"homfly", "--braid", "1 1 1", "--strands", "2",
                               "--normalized", "--format", "json"});
  REQUIRE(trace.exit_code == 0);
  const auto j = nlohmann::json::parse(trace.out);
  CHECK(j["braid"] == "1 1 1");
  CHECK(j["strands"] == 2);
  CHECK(j["writhe"] == 3);
  CHECK(j["components"] == 1);
  CHECK(j["normalized"] == true);
  CHECK(j["engine"] == "trace");
  CHECK(j["value"] == "1*q^2*r^-2 + -1*q^0*r^-4 + 1*q^-2*r^-2");

  // The independent resolver produces the identical value.
  const RunResult resolver = run({"homfly", "--braid", "1 1 1", "--strands",
                                  "2", "--normalized", "--skein", "--format",
                                  "json"});
  REQUIRE(resolver.exit_code == 0);
  const auto k = nlohmann::json::parse(resolver.out);
  CHECK(k["engine"] == "skein");
  CHECK(k["value"] == j["value"]);
}

TEST_CASE("jones output for the hopf link") {
  const RunResult r = run({"jones", "--braid", "1 1", "--strands", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-1*A^-2*B^0 + -1*A^-10*B^0\n");
}

TEST_CASE("quantum trace at an exact root of unity") {
  const RunResult r =
      run({"qtrace", "--diagram", "2,1", "--n", "3", "--m", "6"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("quantum trace symbolic output") {
  const RunResult r = run({"qtrace", "--diagram", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(1*q^1*r^2 + -1*q^1*r^0) / (1*q^2*r^1 + -1*q^0*r^1)\n");
}

TEST_CASE("quantum trace reports poles as input errors") {
  const RunResult r =
      run({"qtrace", "--diagram", "1,1", "--q-re", "1.0", "--r-re", "2.0"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("classify reports a negative witness") {
  const RunResult r = run(
      {"classify", "--q-re", "1.2", "--r-re", "1.9", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "Negative");
  CHECK(j["witness"] == "1,1,1,1,1");
  CHECK(j["witness_trace"].get<double>() < 0.0);
}

TEST_CASE("classify handles exact root of unity flags") {
  const RunResult r =
      run({"classify", "--root-n", "3", "--root-m", "6", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "PositiveRootOfUnity");
  CHECK(j["N"] == 3);
  CHECK(j["l"] == 3);
}

TEST_CASE("indeterminate classification exits with code two") {
  const RunResult r =
      run({"classify", "--q-re", "1.000000001", "--r-re", "2.0"});
  CHECK(r.exit_code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "Indeterminate");
  CHECK(j["reason"].get<std::string>().find("circle parameter") !=
        std::string::npos);
}

TEST_CASE("exclusions prints the certified report") {
  const RunResult r = run({"exclusions"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("no real roots with delta > 2") != std::string::npos);
  CHECK(r.out.find("every exclusion branch is root-free for delta > 2") !=
        std::string::npos);
  CHECK(r.out.find("2 + sqrt(3)") != std::string::npos);
}

TEST_CASE("scan emits a csv grid deterministically") {
  const std::vector<std::string> args = {
      "scan",   "--shape",   "real", "--a-lo",       "1.05", "--a-hi",
      "1.4",    "--a-count", "3",    "--b-lo",       "1.1",  "--b-hi",
      "2.2",    "--b-count", "3",    "--witness-cap", "8",   "--format",
      "csv"};
  const RunResult first = run(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out.rfind("q_re,q_im,r_re,r_im,delta,gamma,verdict,witness,"
                        "trace_value\n",
                        0) == 0);
  // Nine data rows after the header.
  int rows = -1;
  for (char ch : first.out)
    if (ch == '\n') ++rows;
  CHECK(rows == 9);
  // Witness fields are quoted.
  CHECK(first.out.find("\"1,1,1\"") != std::string::npos);

  const RunResult second = run(args);
  CHECK(second.out == first.out);
}

TEST_CASE("solve params returns the matching points") {
  const RunResult r = run({"solve-params", "--delta", "3.134444444444444",
                           "--gamma", "2.665938457979064"});
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["points"].is_array());
  bool found = false;
  for (const auto& p : j["points"]) {
    if (std::abs(p["q_re"].get<double>() - 1.2) < 1e-6 &&
        std::abs(p["r_re"].get<double>() - 1.728) < 1e-5)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("orbit lists the four parameter points") {
  const RunResult r = run({"orbit", "--q-re", "1.2", "--r-re", "1.9"});
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 4);
  CHECK(j[0]["q_re"] == 1.2);
  CHECK(j[0]["r_re"] == 1.9);
}

TEST_CASE("auxiliary subcommands stay wired up") {
  const RunResult jw = run({"jw", "--strands", "3"});
  CHECK(jw.exit_code == 0);
  CHECK(jw.out.find("(1,6),(2,5),(3,4)") != std::string::npos);

  const RunResult idem = run({"idem3"});
  CHECK(idem.exit_code == 0);
  const auto j = nlohmann::json::parse(idem.out);
  CHECK(j["ok"] == true);

  const RunResult rel = run({"relations", "--format", "json"});
  CHECK(rel.exit_code == 0);
  const auto k = nlohmann::json::parse(rel.out);
  CHECK(k.contains("cutdown_omega_one"));
}

TEST_CASE("bad invocations fail with code one") {
  CHECK(run({}).exit_code == 1);
  CHECK(run({"unknown-sub"}).exit_code == 1);
  CHECK(run({"homfly", "--braid", "1 1 1", "--strands", "2", "--format",
             "csv"})
            .exit_code == 1);
  CHECK(run({"homfly", "--braid", "1 1 1"}).exit_code == 1);
  CHECK(run({"qtrace", "--diagram", "3,5"}).exit_code == 1);

  const RunResult r = run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(!r.out.empty());
}
