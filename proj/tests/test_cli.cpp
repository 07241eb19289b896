#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "commands.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sylowlab::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("info") {
  const auto c6 = run({"info", "cyclic:6"});
  CHECK(c6.code == 0);
  CHECK(c6.out.find("order 6\n") != std::string::npos);
  CHECK(c6.out.find("cyclic yes\n") != std::string::npos);
  CHECK(c6.out.find("abelian yes\n") != std::string::npos);

  const auto s4 = run({"info", "sym:4"});
  CHECK(s4.out.find("order 24\n") != std::string::npos);
  CHECK(s4.out.find("center_order 1\n") != std::string::npos);
  CHECK(s4.out.find("element_orders 1:1 2:9 3:8 4:6\n") != std::string::npos);

  const auto q8 = run({"info", "q8", "--elements"});
  CHECK(q8.out.find("center_order 2\n") != std::string::npos);
  CHECK(q8.out.find("2 i order 4\n") != std::string::npos);

  const auto bad = run({"info", "nosuch:1"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("ParseError") != std::string::npos);
}

TEST_CASE("subgroups and classes") {
  CHECK(lines(run({"subgroups", "sym:3"}).out) == 6);
  CHECK(lines(run({"subgroups", "sym:3", "--order", "2"}).out) == 3);
  CHECK(lines(run({"subgroups", "cyclic:1"}).out) == 1);
  CHECK(lines(run({"subgroups", "sym:4", "--normal"}).out) == 4);
  const auto line = run({"subgroups", "sym:3", "--order", "3"}).out;
  CHECK(line == "order 3 members {0,1,3} normal yes normalizer 6\n");
  const auto capped = run({"subgroups", "cyclic:65"});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("EnumerationCapExceeded") != std::string::npos);

  CHECK(lines(run({"classes", "sym:4"}).out) == 5);
}

TEST_CASE("sylow") {
  CHECK(run({"sylow", "sym:4", "--prime", "2"}).out.find("chain_orders 2,4,8\n") != std::string::npos);
  CHECK(run({"sylow", "sym:4", "--prime", "3"}).out.find("chain_orders 3\n") != std::string::npos);
  CHECK(run({"sylow", "cyclic:9", "--prime", "3"}).out.find("chain_orders 3,9\n") != std::string::npos);
  CHECK(run({"sylow", "sym:4", "--prime", "5"}).code == 2);
  CHECK(run({"sylow", "sym:4", "--prime", "4"}).code == 2);
  CHECK(run({"sylow", "sym:4"}).code == 2);
}

TEST_CASE("decompose") {
  const auto d = run({"decompose", "cyclic:6", "--element", "1", "--a", "2", "--b", "3"});
  CHECK(d.code == 0);
  CHECK(d.out.find("alpha 3 beta 4\n") != std::string::npos);
  CHECK(d.out.find("a_part 3 ") != std::string::npos);
  CHECK(d.out.find("b_part 4 ") != std::string::npos);
  const auto id = run({"decompose", "cyclic:6", "--element", "0", "--a", "1", "--b", "1"});
  CHECK(id.code == 0);
  CHECK(id.out.find("a_part 0 ") != std::string::npos);
  const auto nc = run({"decompose", "cyclic:6", "--element", "1", "--a", "2", "--b", "2"});
  CHECK(nc.code == 2);
  CHECK(nc.err.find("NotCoprime") != std::string::npos);
  CHECK(run({"decompose", "cyclic:6", "--element", "9", "--a", "2", "--b", "3"}).code == 2);
}

TEST_CASE("verify") {
  const auto s4 = run({"verify", "sym:4"});
  CHECK(s4.code == 0);
  CHECK(s4.out.find("FAIL") == std::string::npos);
  CHECK(lines(s4.out) > 50);

  const auto json = run({"verify", "--catalog", "12", "--json"});
  CHECK(json.code == 0);
  std::istringstream in(json.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.size() == 7);
    CHECK(j.contains("theorem_id"));
    CHECK(j["passed"] == true);
    ++n;
  }
  CHECK(n > 100);

  const auto filtered = run({"verify", "sym:4", "--theorems", "S4.I,INTRO.sylow", "--json"});
  std::istringstream fin(filtered.out);
  std::size_t count = 0;
  while (std::getline(fin, line)) {
    const auto id = nlohmann::json::parse(line)["theorem_id"].get<std::string>();
    CHECK((id == "S4.I" || id == "INTRO.sylow"));
    ++count;
  }
  CHECK(count == 6);

  const auto s4_prefix = run({"verify", "sym:4", "--theorems", "S4", "--json"});
  CHECK(s4_prefix.out.find("\"S4.II\"") != std::string::npos);
  CHECK(s4_prefix.out.find("\"S3\"") == std::string::npos);

  CHECK(run({"verify", "nosuch:1"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "sym:3", "--catalog", "5"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("caps from the environment") {
  setenv("SYLOWLAB_CAPS", "100,,", 1);
  CHECK(run({"info", "sym:5"}).code == 2);
  setenv("SYLOWLAB_CAPS", ",70,", 1);
  CHECK(run({"subgroups", "cyclic:65"}).code == 0);
  setenv("SYLOWLAB_CAPS", "x", 1);
  CHECK(run({"info", "cyclic:3"}).code == 2);
  unsetenv("SYLOWLAB_CAPS");
}
