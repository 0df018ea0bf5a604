#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qsymx/cli.hpp"

using namespace qsymx;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' '))
    s.pop_back();
  return s;
}

// Unsets QSYMX_MAX_DEGREE for the lifetime of the guard unless a value is given.
struct EnvGuard {
  explicit EnvGuard(const char *value = nullptr) {
    if (value)
      setenv("QSYMX_MAX_DEGREE", value, 1);
    else
      unsetenv("QSYMX_MAX_DEGREE");
  }
  ~EnvGuard() { unsetenv("QSYMX_MAX_DEGREE"); }
};

} // namespace

TEST_CASE("eval examples") {
  EnvGuard env;
  auto r = run({"eval", "--char", "zeta-minus", "--basis", "M", "--comp", "1,1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(trim(r.out) == "1/2");
  r = run({"eval", "--char", "zeta-plus", "--basis", "M", "--comp", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(trim(r.out) == "0");
  r = run({"eval", "--char", "zeta-minus", "--perm", "132"});
  CHECK(trim(r.out) == "-1/2");
  r = run({"eval", "--char", "zeta-inv", "--basis", "F", "--comp", "1,1,1"});
  CHECK(trim(r.out) == "-1");
  r = run({"eval", "--char", "zeta-minus", "--basis", "M", "--elem", "M[2] - 1/2*M[1,1]"});
  CHECK(trim(r.out) == "-1/4");
  r = run({"eval", "--char", "zeta-pow:2", "--basis", "M", "--comp", "1,1"});
  CHECK(trim(r.out) == "1");
}

TEST_CASE("verify examples") {
  auto r = run({"verify", "--id", "cg8", "--depth", "standard"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("PASS") != std::string::npos);
  r = run({"verify", "--id", "cg8", "--json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("id") == "cg8");
  CHECK(j.at("status") == "pass");
  CHECK(j.at("cases").get<long>() > 0);
  r = run({"verify", "--all", "--depth", "small"});
  CHECK(r.code == cli::kExitOk);
}

TEST_CASE("algebra commands") {
  auto r = run({"mul", "--basis", "M", "--left", "1", "--right", "1"});
  CHECK(trim(r.out) == "2*M[1,1] + M[2]");
  r = run({"mul", "--basis", "F", "--left", "F[1]", "--right", "1"});
  CHECK(trim(r.out) == "F[1,1] + F[2]");
  r = run({"coproduct", "--basis", "M", "--comp", "2,1"});
  CHECK(trim(r.out) == "M[] (x) M[2,1] + M[2] (x) M[1] + M[2,1] (x) M[]");
  r = run({"antipode", "--basis", "F", "--comp", "1,1"});
  CHECK(trim(r.out) == "F[2]");
  r = run({"convert", "--basis", "M", "--comp", "2", "--to", "F"});
  CHECK(trim(r.out) == "-F[1,1] + F[2]");
  r = run({"convert", "--basis", "F", "--elem", "F[2]", "--to", "M"});
  CHECK(trim(r.out) == "M[1,1] + M[2]");
}

TEST_CASE("decompose and table") {
  EnvGuard env;
  auto r = run({"decompose", "--degree", "9"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("mismatches: 0") != std::string::npos);
  r = run({"decompose", "--degree", "6", "--char", "zeta-inv", "--json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("mismatches") == 0);
  CHECK(j.at("entries").size() == 64u);
  r = run({"table", "--char", "zeta-minus", "--basis", "M", "--degree", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("M[1,1,1]") != std::string::npos);
  r = run({"table", "--char", "zeta", "--basis", "F", "--degree", "4", "--json"});
  CHECK(nlohmann::json::parse(r.out).at("values").size() == 8u);
}

TEST_CASE("degree bound from the environment") {
  {
    EnvGuard env;
    CHECK(run({"table", "--char", "zeta", "--basis", "M", "--degree", "10"}).code == cli::kExitUsage);
  }
  {
    EnvGuard env("10");
    CHECK(run({"table", "--char", "zeta", "--basis", "M", "--degree", "10"}).code == cli::kExitOk);
  }
  {
    EnvGuard env("40");
    const auto r = run({"table", "--char", "zeta", "--basis", "M", "--degree", "2"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.err.find("warning") != std::string::npos);
  }
  {
    EnvGuard env("x");
    CHECK(run({"decompose", "--degree", "2"}).code == cli::kExitUsage);
  }
}

TEST_CASE("usage errors write nothing to stdout") {
  EnvGuard env;
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"eval", "--char", "zeta", "--basis", "M", "--comp", "0,1"},
      {"eval", "--char", "zeta", "--basis", "M", "--comp", "-1"},
      {"eval", "--char", "nope", "--basis", "M", "--comp", "1"},
      {"eval", "--char", "zeta", "--basis", "Q", "--comp", "1"},
      {"eval", "--char", "zeta", "--basis", "M"},
      {"eval", "--char", "zeta-inv", "--perm", "21"},
      {"eval", "--char", "zeta", "--perm", "22"},
      {"mul", "--basis", "M", "--left", "M[1]", "--right", "F[1]"},
      {"convert", "--basis", "M", "--comp", "1", "--to", "X"},
      {"table", "--char", "zeta", "--basis", "M", "--degree", "-1"},
      {"verify", "--id", "nonexistent"},
      {"verify"},
      {"verify", "--all", "--depth", "huge"},
  };
  for (const auto &args : bad) {
    std::string joined;
    for (const auto &a : args)
      joined += a + " ";
    INFO(joined);
    const auto r = run(args);
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("decompose") != std::string::npos);
}

TEST_CASE("json element round trip") {
  const auto x = QSymElement::parse("M[2,1] - 3/2*M[1,1] + M[]");
  CHECK(cli::element_from_json(cli::element_to_json(x)) == x);
  const QSymElement zero(Basis::F);
  CHECK(cli::element_from_json(cli::element_to_json(zero)) == zero);
  for (const char *cmd : {"mul", "antipode", "convert", "coproduct"}) {
    std::vector<std::string> args{cmd, "--basis", "F", "--json"};
    if (std::string(cmd) == "mul")
      args.insert(args.end(), {"--left", "2,1", "--right", "1,2"});
    else
      args.insert(args.end(), {"--comp", "2,1,1"});
    if (std::string(cmd) == "convert")
      args.insert(args.end(), {"--to", "M"});
    const auto r = run(args);
    REQUIRE(r.code == cli::kExitOk);
    if (std::string(cmd) == "coproduct")
      continue;
    const auto j = nlohmann::json::parse(r.out);
    const auto back = cli::element_from_json(j.dump());
    CHECK(cli::element_to_json(back) == j.dump());
  }
  CHECK_THROWS_AS(cli::element_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(cli::element_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(cli::element_from_json(R"({"basis":"M","terms":[{"comp":[0],"coeff":"1"}]})"), std::invalid_argument);
}
