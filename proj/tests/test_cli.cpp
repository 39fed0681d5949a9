#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "astoric/cli.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = astoric::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json output_of(const Outcome& r) {
  REQUIRE(r.code == 0);
  return Json::parse(r.out)["output"];
}

const char* kOrthant = R"({"n":2,"rays":[[1,0],[0,1]]})";

std::string datum(const std::string& terms, const std::string& cone = kOrthant, int box = 4) {
  return R"({"p":2,"e":1,"cone":)" + cone + R"(,"box":)" + std::to_string(box) + R"(,"terms":)" + terms + "}";
}

// one input per subcommand
std::vector<std::pair<std::string, std::string>> samples() {
  const std::string x = datum(R"([[[1,0],[1]],[[0,2],[1]],[[3,1],[1]]])");
  const std::string laurent = R"({"target":{"n":1,"rays":[[1],[-1]]},"cones":[{"n":1,"rays":[[1]]},{"n":1,"rays":[[-1]]},{"n":1,"rays":[]}],"arrows":[[0,2],[1,2]]})";
  return {
      {"reduce-as", R"({"p":2,"e":1,"terms":[[-6,[1]],[-3,[1]],[1,[1]]]})"},
      {"break", R"({"p":3,"e":1,"terms":[[-9,[1]],[-2,[2]]]})"},
      {"tower2-break", R"({"base":{"p":2,"e":1,"terms":[[-1,[1]]]},"coeffs":[{"terms":[]},{"terms":[[-1,[1]]]}]})"},
      {"phi", R"({"p":2,"m":["1","3"],"x":"7","y":"2"})"},
      {"coker-nf", x},
      {"coker-basis", std::string(R"({"p":3,"e":1,"box":3,"cone":)") + kOrthant + "}"},
      {"restrict", R"({"datum":)" + x + R"(,"tau":{"n":2,"rays":[[1,0]]}})"},
      {"vlambda", R"({"datum":)" + x + R"(,"lambda":["1","2"]})"},
      {"heights", R"({"datum":)" + x + R"(,"lambda":["2","3"],"vertices":[["1","1"],["3","1"]]})"},
      {"check-plimit", R"({"p":2,"e":1,"box":9,)" + laurent.substr(1)},
      {"check-map", R"({"p":2,"e":1,"box":16,"map":{"kind":"katz"}})"},
      {"census", std::string(R"({"p":2,"e":1,"box":3,"lambda":["1","1"],"cone":)") + kOrthant + "}"},
      {"splits2-check", R"({"datum":)" + x + "}"},
  };
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reduce-as example") {
  const Outcome r = run({"--p", "2", "--e", "1", "reduce-as", R"({"terms":[[-2,[1]]]})"});
  const Json out = output_of(r);
  CHECK(out["m"] == "1");
  CHECK(out["reduced"]["terms"] == Json::parse(R"([[-1,[1]]])"));
  CHECK(out["split"] == false);
}

TEST_CASE("phi example") {
  const Json out = output_of(run({"phi", "--p", "2", "--m", "1", "--x", "3"}));
  CHECK(out["value"] == "2");
  const Json two = output_of(run({"phi", "--p", "2", "--m", "1", "--m", "3", "--x", "7", "--y", "2"}));
  CHECK(two["value"] == "3");
  CHECK(two["psi"] == "3");
}

TEST_CASE("help exits cleanly") {
  const Outcome r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reduce-as") != std::string::npos);
  CHECK(r.out.find("splits2-check") != std::string::npos);
}

TEST_CASE("listed outputs of the toric subcommands") {
  const Json b = output_of(run({"coker-basis", R"({"p":2,"e":1,"box":3,"cone":{"n":1,"rays":[[1]]}})"}));
  CHECK(b["points"] == Json::parse("[[1],[3]]"));
  CHECK(b["size"] == 2);

  const Json c = output_of(run({"census", R"({"p":2,"e":1,"box":3,"cone":{"n":1,"rays":[[1]]}})"}));
  CHECK(c["count"] == 8);
  CHECK(c["rows"].size() == 8);

  const Json k = output_of(run({"check-map", R"({"p":2,"e":1,"box":64,"map":{"kind":"katz"}})"}));
  CHECK(k["p_faithful"] == true);

  const Json s = output_of(run({"splits2-check", R"({"datum":)" + datum(R"([[[1,1],[1]]])") +
                                                     R"(,"rays":[{"n":2,"rays":[[1,0]]},{"n":2,"rays":[[0,1]]}]})"}));
  CHECK(s["holds"] == false);

  const Json h = output_of(run({"heights", R"({"datum":)" + datum(R"([[[3,1],[1]]])") + R"(,"lambda":["1","1"]})"}));
  CHECK(h["h_lambda"] == "4");
}

TEST_CASE("census csv") {
  const Outcome r = run({"--format", "csv", "census", R"({"p":2,"e":1,"box":1,"cone":{"n":1,"rays":[[1]]},"lambda":["1"]})"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "index,terms,rays,height");
  CHECK(lines[1].rfind("0,", 0) == 0);
  CHECK(run({"--format", "csv", "break", R"({"p":2,"e":1,"terms":[]})"}).code == astoric::cli::kExitInvalidInput);
}

TEST_CASE("exit codes") {
  CHECK(run({"frobnicate"}).code == astoric::cli::kExitUsage);
  CHECK(run({}).code == astoric::cli::kExitUsage);
  CHECK(run({"reduce-as", "{not json"}).code == astoric::cli::kExitInvalidInput);
  CHECK(run({"reduce-as", "[1,2]"}).code == astoric::cli::kExitInvalidInput);
  CHECK(run({"reduce-as", R"({"p":4,"e":1,"terms":[]})"}).code == astoric::cli::kExitInvalidInput);
  CHECK(run({"reduce-as", R"({"p":2,"e":1,"terms":[[99,[1]]],"window":[0,10]})"}).code ==
        astoric::cli::kExitInvalidInput);
  CHECK(run({"reduce-as", "/nonexistent/input.json"}).code == astoric::cli::kExitInvalidInput);
  CHECK(run({"phi", "--m", "1"}).code == astoric::cli::kExitInvalidInput);
  CHECK(run({"phi", "--p", "2", "--m", "1", "--x", "-1"}).code == astoric::cli::kExitInvalidInput);
  CHECK(run({"--window", "nonsense", "reduce-as", R"({"p":2,"e":1,"terms":[]})"}).code ==
        astoric::cli::kExitInvalidInput);
  // the constant term is not known
  const Outcome r = run({"reduce-as", R"({"p":2,"e":1,"terms":[[-2,[1]]],"window":[-4,0],"exact":false})"});
  CHECK(r.code == astoric::cli::kExitPrecision);
  CHECK(r.out.empty());
  CHECK(!r.err.empty());
}

TEST_CASE("file input and defaults") {
  const std::string path = "cli_test_input.json";
  {
    std::ofstream f(path);
    f << R"({"p":2,"e":1,"terms":[[-2,[1]]]})";
  }
  const Outcome from_file = run({"reduce-as", path});
  const Outcome inline_doc = run({"reduce-as", R"({"p":2,"e":1,"terms":[[-2,[1]]]})"});
  std::remove(path.c_str());
  CHECK(from_file.code == 0);
  CHECK(from_file.out == inline_doc.out);

  const Json echoed = Json::parse(run({"--window", "-10,10", "--p", "3", "break", R"({"terms":[[-2,[1]]]})"}).out)["input"];
  CHECK(echoed["p"] == 3);
  CHECK(echoed["window"] == Json::parse("[-10,10]"));
  // document fields win over flags
  const Json doc_wins = Json::parse(run({"--p", "3", "break", R"({"p":2,"e":1,"terms":[[-2,[1]]]})"}).out);
  CHECK(doc_wins["input"]["p"] == 2);
  CHECK(doc_wins["output"]["m"] == "1");
}

TEST_CASE("feeding the echoed input back reproduces the output byte for byte") {
  for (const auto& [cmd, doc] : samples()) {
    CAPTURE(cmd);
    const Outcome first = run({cmd, doc});
    REQUIRE(first.code == 0);
    const Json parsed = Json::parse(first.out);
    CHECK(parsed["command"] == cmd);
    const Outcome second = run({cmd, parsed["input"].dump()});
    REQUIRE(second.code == 0);
    CHECK(second.out == first.out);
    // and it is deterministic
    CHECK(run({cmd, doc}).out == first.out);
  }
}

}  // TEST_SUITE
