#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = forestry::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("prelie of b onto a(b)") {
  auto r = run({"prelie", "--family", "all:a,b", "b", "a(b)"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 a(b(b))\n2 a(b,b)\n");
  auto j = nlohmann::json::parse(run({"prelie", "--json", "b", "a(b)"}).out);
  CHECK(j["terms"].size() == 2);
  CHECK(j["family"] == "all:a,b");
}

TEST_CASE("canon and its round trip") {
  CHECK(run({"canon", "a(b,a)"}).out == "a(a,b)\n");
  for (const char* text : {"a(b,a)", "x(y(z),w)+v", "0", "b+a(c, b(a))", "q_1(q_2,q_1(q_2))"}) {
    std::string once = run({"canon", text}).out;
    once.pop_back();
    CHECK(run({"canon", once}).out == once + "\n");
  }
  auto r = run({"canon"}, "a(b,a)\n\nb+a\n");
  CHECK(r.out == "a(a,b)\na+b\n");
}

TEST_CASE("exit codes") {
  auto r = run({"canon", "a("});
  CHECK(r.code == 2);
  CHECK(r.err.find("offset 2") != std::string::npos);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"prelie", "a"}).code == 2);
  CHECK(run({"prelie", "a+b", "a"}).code == 2);
  CHECK(run({"hall-mul", "--family", "nope", "a", "a"}).code == 2);
  CHECK(run({"hall-mul", "--family", "ladders-1", "1", "1(1,1)"}).code == 2);
  CHECK(run({"check", "no-such-suite"}).code == 2);
  CHECK(run({"check", "prelie-identity", "--family", "interval-ladders:4", "--max-size", "7"}).code == 0);
  CHECK(run({"verify-iso", "phi-upper", "--family", "interval-ladders:3"}).code == 0);
  CHECK(run({"verify-iso", "phi-loop", "--family", "ladders:1,2", "--max-size", "2"}).code == 2);
}

TEST_CASE("Hall commands") {
  CHECK(run({"hall-mul", "--family", "ladders-1", "1", "1"}).out == "1 1(1)\n2 1+1\n");
  CHECK(run({"hall-mul", "--family", "ladders-1", "1", "1", "1"}).out == "1 1(1(1))\n3 1+1(1)\n6 1+1+1\n");
  CHECK(run({"coprod", "a"}).out == "1 0 (x) a\n1 a (x) 0\n");
  CHECK(run({"antipode", "a(b)"}).out == "-1 a(b)\n");
  CHECK(run({"bracket", "b", "a(b)"}).out == "1 a(b(b))\n2 a(b,b)\n-1 b(a(b))\n");
}

TEST_CASE("structure commands") {
  CHECK(run({"aut", "a(b,b)"}).out == "2\n");
  CHECK(run({"convex", "a(b)"}).out == "0\na\na(b)\nb\n");
  auto ideals = nlohmann::json::parse(run({"ideals", "--json", "b(b,a(b))"}).out);
  CHECK(ideals["splits"].size() == 7);
  auto cuts = nlohmann::json::parse(run({"cuts", "--json", "b(b,a(b))"}).out);
  CHECK(cuts["cuts"].size() == 6);
  CHECK(run({"cuts", "a+b"}).code == 2);
}

TEST_CASE("enumerate and closure") {
  auto j = nlohmann::json::parse(run({"enumerate", "--family", "all:1", "--max-size", "7", "--json"}).out);
  std::vector<int> counts;
  for (const auto& level : j["levels"]) counts.push_back(level["count"]);
  CHECK(counts == std::vector<int>{1, 1, 2, 4, 9, 20, 48});
  CHECK(run({"closure", "--max-size", "2", "a(b)"}).out == "a\na(b)\nb\n");
  CHECK(run({"enumerate"}).code == 2);
}

TEST_CASE("morphism commands") {
  auto homs = nlohmann::json::parse(run({"hom", "--json", "1", "1"}).out);
  REQUIRE(homs.size() == 2);
  std::string m0 = homs[0].dump(), m1 = homs[1].dump();
  CHECK(run({"compose", m0, m1}).code == 0);
  CHECK(run({"kernel", "--json", m0}).code == 0);
  CHECK(run({"cokernel", "--json", m1}).code == 0);
  CHECK(run({"compose", m0}).code == 2);
  CHECK(run({"kernel", "{\"source\": 1}"}).code == 2);
}
