#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <string>

using json = nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(PROHECKE_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string config(const char* name) { return std::string("--config ") + PROHECKE_CONFIGS + "/" + name + ".json"; }

}  // namespace

TEST(Cli, MissingCorootsIsConfigError) {
  Result r = run(config("bad_missing_coroots") + " run");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, MissingFileIsConfigError) { EXPECT_EQ(run("--config /nonexistent.json characters").code, 2); }

TEST(Cli, MalformedArgumentIsInputError) {
  EXPECT_EQ(run(config("gl2") + " length --elt '{\"lam\": [1,'").code, 2);
}

TEST(Cli, CharactersOfGL2) {
  Result r = run(config("gl2") + " characters");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).size(), 6u);
}

TEST(Cli, LengthOfIdentity) {
  Result r = run(config("sl3") + " length --elt '{}'");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["length"], 0);
  EXPECT_TRUE(j["letters"].empty());
}

TEST(Cli, LengthOfTranslation) {
  Result r = run(config("sl2") + " length --elt '{\"lam\": [1]}'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["length"], 2);
}

TEST(Cli, QuadraticRelation) {
  Result r = run(config("sl2") + " mul --a '{\"simple\": 0}' --b '{\"simple\": 0}'");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  // q tau_{n^2} plus one term per point of the coroot image; q = 3 gives two.
  EXPECT_EQ(j.size(), 3u);
  Result m = run(config("sl2") + " mul --ring modp --a '{\"simple\": 0}' --b '{\"simple\": 0}'");
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(json::parse(m.out).size(), 2u);
}

TEST(Cli, Bruhat) {
  Result r = run(config("sl2") + " bruhat --v '{}' --x '{\"lam\": [1]}'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["leq"], true);
}

TEST(Cli, QOverride) {
  Result r = run(config("gl2") + " --q 5 characters");
  ASSERT_EQ(r.code, 0);
  // 16 torus characters, 4 of them trivial on the coroot.
  EXPECT_EQ(json::parse(r.out).size(), 20u);
  EXPECT_EQ(run(config("gl2") + " --q 6 characters").code, 2);
}

TEST(Cli, SupportSkippedWithoutSimplyConnectedDerivedGroup) {
  Result r = run(config("pgl2") + " run --suite section5 --max-length 2 --max-coord 1 --trials 5");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  int skipped = 0;
  for (const auto& e : j["entries"])
    if (e["verdict"] == "skipped") {
      ++skipped;
      EXPECT_NE(e["reason"].get<std::string>().find("hypothesis not satisfied"), std::string::npos);
    }
  EXPECT_GE(skipped, 2);
}

TEST(Cli, UnknownSuite) { EXPECT_EQ(run(config("sl2") + " run --suite nope").code, 2); }

TEST(Cli, ReportsAreReproducible) {
  std::string args = config("gl2") + " run --suite weyl-core --max-length 3 --max-coord 1 --trials 10 --seed 7";
  json a = json::parse(run(args).out), b = json::parse(run(args).out);
  a.erase("header");
  b.erase("header");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["schema"], 1);
}
