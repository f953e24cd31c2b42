#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SUBSHIFT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SUBSHIFT_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = std::string(SUBSHIFT_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("measure prints exact values") {
    auto r = run("measure " + data("ex531.sub") + " -i 2 -v ab");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump().find("\"1/3\"") != std::string::npos);
  }

  TEST_CASE("classify reports the verdict") {
    auto r = run("classify " + data("chacon.sub"));
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["unique_ergodicity"]["verdict"] == true);
    CHECK(j["unique_ergodicity"]["clause"] == "ii");
    auto f = nlohmann::json::parse(run("classify " + data("fibacc.sub")).out);
    CHECK(f["unique_ergodicity"]["verdict"] == false);
  }

  TEST_CASE("spectral equality classes") {
    auto j = nlohmann::json::parse(run("spectral " + data("ex44ii.sub")).out);
    CHECK(j.dump().find("[1,3]") != std::string::npos);
  }

  TEST_CASE("analyze is deterministic") {
    auto a = run("analyze " + data("ex532.sub"));
    auto b = run("analyze " + data("ex532.sub"));
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }

  TEST_CASE("check passes on a convergent example") {
    auto r = run("check " + data("chacon.sub"));
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["passed"] == true);
  }

  TEST_CASE("exit codes") {
    CHECK(run("matrix " + temp_file("empty.sub", "a -> \nb -> ab\n")).status == 2);
    CHECK(run("matrix " + temp_file("nope.sub", "a -> ab\nb -> a\nc -> c\n")).status == 3);
    CHECK(run("measure " + data("ex531.sub") + " -i 7 -v a").status == 4);
    CHECK(run("measure " + data("ex531.sub") + " -i 2 -v cc").status == 4);
    CHECK(run("simulate " + data("ex531.sub") + " -i 2 -v ab -L 100000000000000000000").status != 0);
    CHECK(run("language " + data("missing.sub")).status == 2);
    CHECK(run("frobnicate").status == 2);
    auto err = nlohmann::json::parse(run("matrix " + temp_file("e.sub", "a -> \n")).out);
    CHECK(err.contains("error"));
  }
}
