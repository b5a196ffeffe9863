#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + FANO72_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FANO72_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, TablesMatchGoldenFiles) {
  for (int i = 1; i <= 5; ++i) {
    const auto r = run("tables --which " + std::to_string(i) + " --mode paper --format md");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden("table" + std::to_string(i) + "_paper.md")) << "table " << i;
  }
  EXPECT_EQ(run("tables --which 2 --mode strict").out, golden("table2_strict.md"));
  EXPECT_EQ(run("tables --which 5 --mode strict --format markdown").out, golden("table5_strict.md"));
  EXPECT_EQ(run("tables --which 4 --format csv").out, golden("table4.csv"));
}

TEST(Cli, Table1HasElevenRows) {
  const auto out = run("tables --which 1 --format md").out;
  std::istringstream in(out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) rows += line.rfind("| {", 0) == 0 ? 1 : 0;
  EXPECT_EQ(rows, 11);
}

TEST(Cli, Table4CsvContainsPair) {
  EXPECT_NE(run("tables --which 4 --format csv").out.find("224,8,4"), std::string::npos);
}

TEST(Cli, Table5StrictFootnotes) {
  const auto out = run("tables --which 5 --mode strict").out;
  EXPECT_NE(out.find("[^1]: 90"), std::string::npos);
  EXPECT_NE(out.find("[^2]: 92"), std::string::npos);
}

TEST(Cli, CertifyExitCodes) {
  const auto strict = run("certify --mode strict");
  EXPECT_EQ(strict.code, 0);
  EXPECT_EQ(strict.out.back(), '\n');
  EXPECT_EQ(run("certify --mode paper").code, 0);
  EXPECT_EQ(run("certify --j1-budget-slack 5").code, 1);
  EXPECT_EQ(run("certify --mode nonsense").code, 2);
  EXPECT_EQ(run("certify --j1-budget-slack 1/0").code, 2);
}

TEST(Cli, CertifyIsByteIdentical) {
  const auto a = run("certify", "FANO72_THREADS=1").out;
  const auto b = run("certify", "FANO72_THREADS=4").out;
  const auto c = run("certify", "FANO72_THREADS=0").out;
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(run("certify", "FANO72_THREADS=abc").code, 2);
}

TEST(Cli, Basket) {
  auto r = run("basket --entries 2:1 --degree 145/2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("h0: 39\n"), std::string::npos);
  EXPECT_NE(r.out.find("integral: yes"), std::string::npos);
  r = run("basket --entries - --degree 72");
  EXPECT_NE(r.out.find("h0: 39\n"), std::string::npos);
  r = run("basket --entries 2:1 --degree 72");
  EXPECT_NE(r.out.find("h0: 155/4"), std::string::npos);
  EXPECT_NE(r.out.find("integral: NO"), std::string::npos);
  EXPECT_EQ(run("basket --entries 4:2 --degree 72").code, 2);
  EXPECT_EQ(run("basket --entries 2:1 --degree x").code, 2);
}

TEST(Cli, Calculators) {
  auto r = run("wps --weights 1,6,14,21");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("degree: 42\n"), std::string::npos);
  EXPECT_NE(r.out.find("index: 42\n"), std::string::npos);
  EXPECT_NE(run("km --q 6").out.find("coefficient: 36/11"), std::string::npos);
  EXPECT_EQ(run("km --q 7 --verify 20").code, 0);
  EXPECT_EQ(run("jset --budget 9.5").out, "1 2 3 4 5 6 7 8 9 10 12 14 15 20 30\n");
  EXPECT_EQ(run("jset --budget 3/2 --inclusive").out, "1 2\n");
  EXPECT_EQ(run("wps --weights 1,2,3").code, 2);
  EXPECT_EQ(run("km --q 0").code, 2);
  EXPECT_EQ(run("jset --budget nine").code, 2);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run("tables --which 6").code, 2);
  EXPECT_EQ(run("tables --which 1 --format xml").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
