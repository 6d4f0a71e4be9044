#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qdga");
  std::ostringstream out, err;
  const int code = qdga::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("diff command") {
  auto r = run({"diff", "-k", "1", "x1"});
  CHECK(r.code == 0);
  CHECK(r.out == "dx1\n");
  r = run({"diff", "-k", "3", "x1", "--mod-ideal"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0\nmember of I_q", 0) == 0);
  r = run({"diff", "-k", "3", "x1*x2", "--mod-ideal", "--preset", "constant"});
  CHECK(r.code == 0);
  CHECK(r.out.find("member of I_q") != std::string::npos);
  r = run({"--format", "json", "diff", "x1"});
  CHECK(nlohmann::json::parse(r.out)["result"]["text"] == "dx1");
  r = run({"diff", "-k", "4", "x1"});
  CHECK(r.code == 2);
}

TEST_CASE("parse errors and config errors exit with code 2") {
  CHECK(run({"diff", "d3x1"}).code == 2);
  CHECK(run({"diff", "x1 +"}).code == 2);
  CHECK(run({"diff", "x1", "--preset", "bogus"}).code == 2);
  CHECK(run({"diff", "x1", "--config", "/nonexistent.json"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("member command") {
  auto r = run({"member", "dx1 (*) dx2 - q*dx2 (*) dx1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rel1(1,2)") != std::string::npos);
  CHECK(run({"member", "d2x1"}).code == 1);
  CHECK(run({"member", "d(x1 x2 x1) d(x2)", "--size-cap", "2"}).code == 3);
}

TEST_CASE("reduce command") {
  CHECK(run({"reduce", "0"}).out == "0\n");
  auto r = run({"reduce", "dx1 dx2", "--preset", "constant", "--letter-order", "descending"});
  CHECK(r.code == 0);
  CHECK(run({"reduce", "dx1", "--letter-order", "sideways"}).code == 2);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--suite", "scalar"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 pass, 0 fail") != std::string::npos);
  auto a = run({"--format", "json", "verify", "--suite", "iterates", "--seed", "5", "--samples", "3"});
  auto b = run({"--format", "json", "verify", "--suite", "iterates", "--seed", "5", "--samples", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)[0]["seed"] == 5);
}
