#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(PERMCM_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args) {
  CliRun r = run(args + " --json");
  EXPECT_EQ(r.exit_code, 0) << args;
  json parsed = json::parse(r.out);
  // Parsing and re-emitting reproduces the exact bytes.
  EXPECT_EQ(parsed.dump(2) + "\n", r.out) << args;
  return parsed;
}

}  // namespace

TEST(Cli, AnalyzeFrobenius) {
  json j = run_json("analyze -n 7 -g \"(1234567),(124)(365)\"");
  EXPECT_FALSE(j["reflection"]["cm_all_fields"].get<bool>());
  EXPECT_EQ(j["reflection"]["candidate_primes"], json({3, 7}));
  EXPECT_EQ(j["certified_primes"], json({3}));
  EXPECT_EQ(j["reflection"]["order"], 21);
  EXPECT_EQ(j["reflection"]["n_order"], 1);
  EXPECT_EQ(j["reflection"]["index"], 21);
  const json& cert = j["certificates"][0];
  EXPECT_EQ(cert["prime"], 3);
  EXPECT_EQ(cert["inertia_order"], 3);
  EXPECT_EQ(cert["witness"], "(2 3 5)(4 7 6)");
  EXPECT_EQ(cert["partition"], json({{1}, {2, 3, 5}, {4, 6, 7}}));
}

TEST(Cli, AnalyzeByName) {
  json j = run_json("analyze --name A4");
  EXPECT_TRUE(j["reflection"]["cm_all_fields"].get<bool>());
  EXPECT_EQ(j["huffman"]["tag"], "Alternating");
  json c4 = run_json("analyze -n 4 -g \"(1 2 3 4)\"");
  EXPECT_EQ(c4["certified_primes"], json({2}));
}

TEST(Cli, Homology) {
  json a = run_json("homology -n 3 -g \"(1 2 3)\" -p 3");
  EXPECT_TRUE(a["reisner"]["3"]["pass"].get<bool>());
  EXPECT_FALSE(a["reisner"]["3"].contains("failing_face"));

  json b = run_json("homology -n 4 -g \"(1 2 3 4)\" -p 2");
  EXPECT_FALSE(b["reisner"]["2"]["pass"].get<bool>());
  ASSERT_TRUE(b["reisner"]["2"].contains("failing_face"));
  EXPECT_GT(b["reisner"]["2"]["failing_face"]["betti"].get<int>(), 0);
  EXPECT_EQ(b["dims"], json({5, 13, 15, 6}));

  json c = run_json("homology -n 2 -g \"()\" -p 2");
  EXPECT_TRUE(c["reisner"]["2"]["pass"].get<bool>());
  EXPECT_EQ(c["betti"]["2"], json({0, 0, 0}));
}

TEST(Cli, PosetEdges) {
  std::string path = testing::TempDir() + "permcm_edges.tsv";
  ASSERT_EQ(run("homology -n 3 -g \"(1 2 3)\" -p 3 --poset-edges " + path).exit_code, 0);
  FILE* f = fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  int lines = 0;
  for (int ch; (ch = fgetc(f)) != EOF;) lines += ch == '\n';
  fclose(f);
  // Cells 3 + 4 + 2; each edge has two distinct faces, each triangle two
  // or three distinct faces.
  EXPECT_GE(lines, 8);
}

TEST(Cli, Oracle) {
  json d5 = run_json("oracle --name D5 -p 5");
  EXPECT_EQ(d5["verdict"], "CM");
  EXPECT_EQ(d5["total"], 12);
  EXPECT_EQ(d5["rank"], 12);
  json c4 = run_json("oracle -n 4 -g \"(1 2 3 4)\" -p 2");
  EXPECT_EQ(c4["verdict"], "NotCM");
  json dmax = run_json("oracle --name D5 -p 5 --dmax 3");
  EXPECT_EQ(dmax["truncation"], 3);
  EXPECT_EQ(dmax["verdict"], "Inconclusive");
}

TEST(Cli, Catalog) {
  json j = run_json("catalog");
  bool frob = false, diag = false, c6 = false;
  for (const auto& e : j) {
    if (e["name"] == "Frob21") {
      frob = true;
      EXPECT_EQ(e["expected"]["candidate_primes"], json({3, 7}));
      EXPECT_EQ(e["expected"]["certified_primes"], json({3}));
    }
    if (e["name"] == "DiagS3") {
      diag = true;
      EXPECT_EQ(e["degree"], 6);
      EXPECT_TRUE(e["expected"]["cm_all_fields"].get<bool>());
    }
    if (e["name"] == "C6") {
      c6 = true;
      EXPECT_EQ(e["expected"]["bad_primes"], json({2, 3}));
    }
  }
  EXPECT_TRUE(frob && diag && c6);
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run("analyze -n 3 -g \"(1 2\"").exit_code, 1);
  EXPECT_EQ(run("analyze -n 3 -g \"(1 4)\"").exit_code, 1);
  EXPECT_EQ(run("analyze --name NoSuchGroup").exit_code, 1);
  EXPECT_EQ(run("analyze -g \"(1 2)\"").exit_code, 1);
  EXPECT_EQ(run("oracle --name C4 -p 4").exit_code, 1);
  EXPECT_EQ(run("oracle --name C4 -p 2 -p 3").exit_code, 1);
  EXPECT_EQ(run("oracle -n 8 -g \"(1 2)\" -p 2").exit_code, 1);
  EXPECT_EQ(run("homology --name S7 -p 2").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("analyze --bogus-flag").exit_code, 1);
}

TEST(Cli, TextOutput) {
  CliRun r = run("analyze --name C4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("certified bad primes: 2"), std::string::npos);
}
