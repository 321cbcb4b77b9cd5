#include <cmath>
#include <numbers>
#include <string>

#include "doctest.h"
#include "tribessel/batch.hpp"
#include "tribessel/error.hpp"

using namespace tribessel;

namespace {

Settings serial() {
  Settings s;
  s.execution = Execution::serial;
  return s;
}

const char* kMixed = R"({"schema_version": 1, "jobs": [
  {"kind": "triple", "lambda": 0, "l1": 0, "l2": 0, "l3": 0, "k1": 1, "k2": 1, "k3": 1},
  {"kind": "wigner", "symbol": "3j", "j1": 1, "j2": 1, "j3": 0},
  {"kind": "legendre", "l": 2, "m": "-3", "x": 0.5}
]})";

}  // namespace

TEST_SUITE("batch") {
  TEST_CASE("JSON forms") {
    CHECK(parse_batch_json(kMixed).jobs.size() == 3);
    CHECK(parse_batch_json(R"([{"kind": "wigner", "j1": 0, "j2": 0, "j3": 0}])").jobs.size() == 1);
    const auto one = parse_batch_json(R"({"kind": "legendre", "inputs": {"l": 1, "m": "1/2", "x": 0.25}})");
    REQUIRE(one.jobs.size() == 1);
    REQUIRE(one.jobs[0].find("m"));
    CHECK(*one.jobs[0].find("m") == "1/2");
    CHECK(one.jobs[0].find("nothing") == nullptr);
    CHECK(parse_batch_json(R"({"schema_version": 1, "jobs": []})").jobs.empty());
    CHECK_THROWS_AS(parse_batch_json("[{\"l\": 1}]"), InvalidArgument);
    CHECK_THROWS_AS(parse_batch_json("{\"jobs\": 3}"), InvalidArgument);
    CHECK_THROWS(parse_batch_json("not json"));
  }

  TEST_CASE("CSV input") {
    const auto r = parse_batch_csv("kind,lambda,l1,l2,l3,k1,k2,k3,m,l,x\n"
                                   "# comment\n"
                                   "triple,0,1,1,0,1,1,1,,,\n"
                                   "legendre,,,,,,,,-3/2,2,0.5\n");
    REQUIRE(r.jobs.size() == 2);
    CHECK(r.jobs[0].kind == "triple");
    CHECK(r.jobs[0].find("m") == nullptr);
    CHECK(*r.jobs[1].find("m") == "-3/2");
    CHECK_THROWS_AS(parse_batch_csv("lambda,l1\n0,0\n"), InvalidArgument);
  }

  TEST_CASE("mixed jobs") {
    const auto rep = run_batch(parse_batch_json(kMixed), serial());
    REQUIRE(rep.results.size() == 3);
    CHECK(rep.failures == 0);
    CHECK(*rep.results[0].value == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
    CHECK(rep.results[1].exact == "-sqrt(1/3)");
    CHECK(*rep.results[2].value == doctest::Approx(13.25 / 120 * std::pow(3.0, -1.5)).epsilon(1e-13));
  }

  TEST_CASE("errors are captured per job") {
    const auto rep = run_batch(parse_batch_json(R"([
      {"kind": "triple", "l1": 1, "l2": 1, "l3": 1, "k1": 1, "k2": 1, "k3": 1},
      {"kind": "triple", "l1": 0, "l2": 0, "k1": 1, "k2": 1, "k3": 1},
      {"kind": "teapot"},
      {"kind": "wigner", "j1": 1, "j2": 1, "j3": 2}
    ])"), serial());
    CHECK(rep.failures == 3);
    CHECK(rep.results[0].status == Status::domain_error);
    CHECK(rep.results[1].status == Status::invalid_argument);
    CHECK(rep.results[2].status == Status::invalid_argument);
    CHECK_FALSE(rep.results[0].message.empty());
    CHECK(rep.results[3].status == Status::ok);
  }

  TEST_CASE("several methods report their spread") {
    const auto r = evaluate_job(parse_batch_json(R"({"kind": "triple", "lambda": 1, "l1": 1, "l2": 1, "l3": 0,
                                                     "k1": 1, "k2": 1.2, "k3": 0.9, "method": "all"})").jobs[0],
                                serial());
    CHECK(r.status == Status::ok);
    CHECK(r.methods.size() >= 3);
    REQUIRE(r.deviation);
    CHECK(*r.deviation < 1e-6);
  }

  TEST_CASE("a single report reads back as the same job") {
    const auto job = parse_batch_json(R"({"kind": "four", "L": 1, "N": 1, "M": 0, "k1": 2, "k2": 1, "k3": 1.5, "k4": 1})").jobs[0];
    const auto first = evaluate_job(job, serial());
    const auto again = evaluate_job(parse_batch_json(job_to_json(first)).jobs[0], serial());
    CHECK(again.status == Status::ok);
    CHECK(*again.value == *first.value);
    CHECK(job_to_json(again) == job_to_json(first));
  }

  TEST_CASE("output is deterministic and lossless") {
    const auto req = parse_batch_json(kMixed);
    Settings par;
    const auto a = run_batch(req, serial()), b = run_batch(req, par);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_csv(a) == report_to_csv(b));
    for (double v : {std::numbers::pi / 4, 1.0 / 3.0, -2.5e-300, 6.02214076e23})
      CHECK(std::stod(format_double(v)) == v);
    const auto csv = report_to_csv(a);
    CHECK(csv.rfind("index,kind,inputs,status,value", 0) == 0);
    CHECK(csv.find(format_double(std::numbers::pi / 4)) != std::string::npos);
  }

  TEST_CASE("empty batch") {
    const auto rep = run_batch(BatchRequest{}, serial());
    CHECK(rep.results.empty());
    CHECK(report_to_json(rep).find("\"results\": []") != std::string::npos);
  }
}
