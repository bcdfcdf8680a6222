#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HOWE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(run("").code == 1);
  CHECK(run("enumerate").code == 1);
  CHECK(run("enumerate --p 9").code == 1);
  CHECK(run("enumerate --p 5 --strategy b").code == 1);
  CHECK(run("enumerate --p 11 --format xml").code == 1);
  CHECK(run("frobnicate").code == 1);
}

TEST_CASE("enumerate") {
  const Run r = run("enumerate --p 11 --format json --verify");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["p"] == 11);

  const Run both = run("enumerate --p 13 --strategy both --format json");
  REQUIRE(both.code == 0);
  const auto jb = nlohmann::json::parse(both.out);
  CHECK(jb["agree"] == true);
  CHECK(jb["A"]["n"] == 3);
  CHECK(jb["B"]["n"] == 3);

  CHECK(run("enumerate --p 7 --format json").code == 0);
}

TEST_CASE("table and exists") {
  const Run t = run("table 11 23 --strategy B --verify --format csv");
  CHECK(t.code == 0);
  CHECK(t.out == "p,n,ratio\n11,4,3.462\n13,3,1.573\n17,10,2.345\n19,4,0.672\n23,33,3.125\n");
  CHECK(run("exists 8 60 --verify").code == 0);
  const Run e7 = run("exists --p 7 --format json");
  CHECK(e7.code == 0);
}

TEST_CASE("same seed gives byte-identical JSON") {
  for (const char* args : {"enumerate --p 23 --strategy a --seed 7 --workers 3 --format json",
                           "enumerate --p 31 --strategy b --seed 7 --format json",
                           "table 11 29 --seed 3 --format json"}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
}
