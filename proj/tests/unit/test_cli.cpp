#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string(CABLEJONES_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return {-1, {}};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), n);
  }
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, PolyByteIdentical) {
  const Result a = cli("poly --knot cable --N 3 --b 0");
  const Result b = cli("poly --knot cable --N 3 --b 0");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"coeffs\""), std::string::npos);
}

TEST(Cli, GrowthCsvDeterministicAcrossThreads) {
  const Result one = cli("growth --knot cable --b 0 --xi 1.0 --N-list 100,200,400 --format csv");
  const Result three = cli("growth --knot cable --b 0 --xi 1.0 --N-list 100,200,400 --format csv --threads 3");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(one.out.rfind("N,rate,limit,gap\n", 0), 0u);
}

TEST(Cli, EvalFig8) {
  const Result r = cli("eval --knot fig8 --N 10 --eta 2.0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"values\""), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("growth --knot cable --xi 0.3 --N 10").code, 2);
  EXPECT_EQ(cli("poly --N").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("verify --suite nope").code, 2);
  EXPECT_EQ(cli("verify --suite rep").code, 0);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, VerifyAsymptoticsReportsCheckFailure) {
  // The floor-law checks for xi = 0.6 disagree with the brute-force argmax.
  EXPECT_EQ(cli("verify --suite asymptotics").code, 1);
}

TEST(Cli, EnvironmentPrecision) {
  const Result r = cli("eval --knot cable --N 4 --xi 1.0");
  const Result env = [] {
    ::setenv("CABLEJONES_DIGITS", "12", 1);
    Result out = cli("eval --knot cable --N 4 --xi 1.0");
    ::unsetenv("CABLEJONES_DIGITS");
    return out;
  }();
  const Result flag = cli("--digits 12 eval --knot cable --N 4 --xi 1.0");
  EXPECT_EQ(env.out, flag.out);
  EXPECT_NE(env.out, r.out);
}
