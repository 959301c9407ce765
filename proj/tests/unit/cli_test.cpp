#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "gen.hpp"
#include "lgdual/json_io.hpp"

namespace lgdual {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kDraft =
    R"({"space":{"points":{"x":2}},"alpha":"0","beta":"1","levels":[{"r":"0","down":[],"up":["x"]},{"r":"1","down":["x"],"up":[]}]})";
const char* kGroup = R"({"space":{"points":{"a":2,"b":3}},"generators":[{"a":"1/2","b":"1/3"}]})";

TEST(Cli, AdcContains) {
  Outcome o = run({"adc", "--region", R"([{"interval":["1/3","1/2"]}])", "--contains", "1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "false\n");
}

TEST(Cli, DraftRealize) {
  Outcome o = run({"draft", "realize", "--draft", kDraft});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "{\"values\":{\"x\":\"0\"},\"lo\":\"0\",\"hi\":\"1\"}\n");
}

TEST(Cli, LgroupApprox) {
  Outcome o = run({"lgroup", "approx", "--group", kGroup, "--target", R"({"a":"1/2","b":"2/3"})",
                   "--eps", "1/6"});
  ASSERT_EQ(o.code, 0) << o.err;
  io::Json j = io::parse_document(o.out);
  EXPECT_EQ(j["term"], "-g1 + 1");
  EXPECT_EQ(j["error"], "0");
}

TEST(Cli, ValidateReportsAxiom) {
  const char* bad =
      R"({"space":{"points":{"x":3}},"alpha":"1/2","beta":"1","levels":[{"r":"1/2","down":["x"],"up":["x"]},{"r":"1","down":["x"],"up":[]}]})";
  Outcome o = run({"draft", "validate", "--draft", bad});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("D4 violated at r=1/2, s=1/2, point \"x\""), std::string::npos) << o.err;
  const char* structural =
      R"({"space":{"points":{"x":3}},"alpha":"0","beta":"1","levels":[{"r":"1","down":["x"],"up":[]}]})";
  EXPECT_EQ(run({"draft", "validate", "--draft", structural}).code, 1);
  EXPECT_EQ(run({"draft", "validate", "--draft", kDraft}).code, 0);
}

TEST(Cli, PreconditionExitCode) {
  Outcome o = run({"aspace", "separate", "--space", R"({"points":{"a":1}})", "--a", "a", "--b", "a"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("A∩B=∅"), std::string::npos);
  EXPECT_EQ(run({"adc", "--intervals", R"([["0","1/3"],["1/2","1"]])"}).code, 2);
  EXPECT_EQ(run({"lgroup", "eta", "--space", R"({"points":{"a":0}})"}).code, 2);
}

TEST(Cli, MalformedExitCode) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"nonsense"}).code, 1);
  EXPECT_EQ(run({"adc", "--region", "[{"}).code, 1);
  EXPECT_EQ(run({"adc", "--region", "[]", "--contains", "x"}).code, 1);
  EXPECT_EQ(run({"draft", "realize"}).code, 1);
  EXPECT_EQ(run({"draft", "realize", "--in", "/nonexistent/file.json"}).code, 1);
  EXPECT_EQ(run({"pwl", "eval", "--f", R"({"breakpoints":["0"],"pieces":[]})", "--x", "0"}).code, 1);
  EXPECT_EQ(run({"lgroup", "norm", "--values", R"({"a":"1/0"})"}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "adc", "--region", "[]"}).code, 1);
}

TEST(Cli, HelpSucceeds) {
  Outcome o = run({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("draft"), std::string::npos);
}

TEST(Cli, TextFormat) {
  Outcome o = run({"--format", "text", "lgroup", "sw-check", "--group", kGroup});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "ok: true\nseparating: true\ndenominators: true\n");
  Outcome after = run({"lgroup", "sw-check", "--group", kGroup, "--format", "text"});
  EXPECT_EQ(after.out, o.out);
}

TEST(Cli, OutputsAreDeterministic) {
  std::vector<std::vector<std::string>> invocations{
      {"draft", "refine", "--draft", kDraft, "--dense", "6"},
      {"lgroup", "complete", "--group", kGroup},
      {"pwl", "combine", "--f", R"({"breakpoints":["0","1"],"pieces":[{"z1":1,"z2":0}]})", "--g",
       R"({"breakpoints":["0","1"],"pieces":[{"z1":-1,"z2":1}]})", "--op", "∨"},
      {"aspace", "product", "--left", R"({"points":{"a":2}})", "--right", R"({"points":{"b":3}})"},
  };
  for (const auto& args : invocations) {
    Outcome a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(a.out, b.out);
  }
}

// Random byte-level corruptions of valid documents never crash the tool:
// unparsable JSON exits 1, everything else 0, 1 or 2.
TEST(Cli, ExitCodeContractUnderCorruption) {
  testgen::Gen gen(testgen::global_seed());
  struct Case {
    std::vector<std::string> prefix;
    std::string option;
    std::string doc;
    std::vector<std::string> suffix;
  };
  std::vector<Case> cases{
      {{"draft", "realize"}, "--draft", kDraft, {}},
      {{"draft", "validate"}, "--draft", kDraft, {}},
      {{"draft", "refine"}, "--draft", kDraft, {"--lambda", "1/2"}},
      {{"lgroup", "approx"}, "--group", kGroup, {"--target", R"({"a":"1/2","b":"2/3"})", "--eps", "1/6"}},
      {{"lgroup", "complete"}, "--group", kGroup, {}},
      {{"adc"}, "--region", R"([{"interval":["1/3","1/2"]},{"point":"2/3"}])", {"--contains", "6"}},
      {{"pwl", "norm"}, "--f", R"({"breakpoints":["0","1/2","1"],"pieces":[{"z1":-1,"z2":1},{"z1":1,"z2":0}]})", {}},
      {{"aspace", "anormal"}, "--space", R"({"points":{"a":2,"b":0}})", {}},
  };
  const std::string alphabet = "{}[]\":,-/0123456789abxz ";
  for (int trial = 0; trial < 600; ++trial) {
    const Case& c = gen.pick(cases);
    std::string doc = c.doc;
    for (long k = gen.uniform(1, 3); k > 0; --k) {
      std::size_t pos = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(doc.size()) - 1));
      switch (gen.uniform(0, 2)) {
        case 0: doc.erase(pos, 1); break;
        case 1: doc.insert(pos, 1, alphabet[static_cast<std::size_t>(gen.uniform(0, static_cast<long>(alphabet.size()) - 1))]); break;
        default: doc[pos] = alphabet[static_cast<std::size_t>(gen.uniform(0, static_cast<long>(alphabet.size()) - 1))];
      }
    }
    std::vector<std::string> args = c.prefix;
    args.push_back(c.option);
    args.push_back(doc);
    args.insert(args.end(), c.suffix.begin(), c.suffix.end());
    Outcome o = run(args);
    bool parses = io::Json::accept(doc);
    if (!parses) {
      ASSERT_EQ(o.code, 1) << doc << "\n" << o.err;
    } else {
      ASSERT_TRUE(o.code == 0 || o.code == 1 || o.code == 2) << doc << "\n" << o.err;
    }
    if (o.code != 0) ASSERT_FALSE(o.err.empty());
  }
}

}  // namespace
}  // namespace lgdual
