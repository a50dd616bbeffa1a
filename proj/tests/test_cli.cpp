#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PPT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("generate emits the first-34 window") {
  const RunResult r = run_cli("generate --count 34 --order hyp");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 34);
  CHECK(lines.front() ==
        R"({"index":1,"a":3,"b":4,"c":5,"m":2,"n":1,"class":"A"})");
  CHECK(lines.back() ==
        R"({"index":34,"a":187,"b":84,"c":205,"m":14,"n":3,"class":"D"})");
}

TEST_CASE("generate csv has the fixed header") {
  const RunResult r = run_cli("generate --count 2 --format csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "index,a,b,c,m,n,class");
  CHECK(lines[1] == "1,3,4,5,2,1,A");
}

TEST_CASE("transitions CSV matches the table layout") {
  const RunResult r = run_cli("transitions --n 10000");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "from,X_A,y_A,X_B,y_B,X_C,y_C,X_D,y_D,X_E,y_E,X_F,y_F");
  CHECK(lines[1].substr(0, 11) == "A,997,10,38");  // row A starts X_A=997,y_A=10,X_B=382...
  CHECK(lines[1].find(",382,1,") != std::string::npos);
}

TEST_CASE("coverage") {
  CHECK(run_cli("coverage --n 10000 --order hyp").out == "8182\n");
  CHECK(run_cli("coverage --n 34 --order hyp").out == "none\n");
}

TEST_CASE("kgrams CSV") {
  const RunResult r = run_cli("kgrams --n 34 --order hyp --i-max 6");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "i,unique_count,first_repeat_index");
  CHECK(lines[1] == "1,6,6");
  CHECK(lines[5] == "5,29,27");
  CHECK(lines[6] == "6,29,");
}

TEST_CASE("classify") {
  CHECK(run_cli("classify 3 4 5").out == "A\n");
  CHECK(run_cli("classify 4 3 5").out == "A\n");
  CHECK(run_cli("classify 6 8 10").exit_code == 1);
}

TEST_CASE("reindex") {
  const RunResult r = run_cli("reindex --n 34 --order c-b --format csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 35);
  CHECK(lines[1] == "1,3,4,5,2,1,A");  // c-b = 1
}

TEST_CASE("keystream and events") {
  CHECK(run_cli("keystream --secret-hex 02000101 --len 3").out == "BDB\n");
  CHECK(run_cli("keystream --secret-hex 02000000 --len 5 --emit bits").out ==
        "000001010011100\n");
  CHECK(run_cli("events --secret-hex 02000000 --classes BE --len 6").out == "010011\n");
  const RunResult p = run_cli("events --secret-hex 02000000 --classes A --probability");
  CHECK(p.out == "1661/10000\n");
}

TEST_CASE("verify runs clean at reduced bounds") {
  const RunResult r = run_cli("verify --bound 300 --prime-bound 300");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify: pass") != std::string::npos);
  CHECK(r.out.find("errata") != std::string::npos);
}

TEST_CASE("byte-identical output for identical invocations") {
  const std::string a = run_cli("generate --count 100 --order b-a").out;
  const std::string b = run_cli("generate --count 100 --order b-a").out;
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("generate --no-such-flag").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("keystream --secret-hex 0102").exit_code == 2);  // too short
  CHECK(run_cli("events --secret-hex 02000000 --classes ABCDEF --len 3").exit_code == 2);
}
