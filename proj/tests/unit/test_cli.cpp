#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "heckeho/commands.hpp"
#include "heckeho/json_io.hpp"

using namespace heckeho;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_in_process(std::vector<std::string> args) {
  args.insert(args.begin(), "heckeho");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Run run_binary(const std::string& args) {
  const std::string cmd = std::string(HECKEHO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("heckeho_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const json& j) const {
    const auto p = path_ / name;
    std::ofstream(p) << j.dump();
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

json module_json(std::vector<std::string> J, int a, int lambda, int q) {
  return {{"spec", {{"factors", {3}}, {"torus_rank", 0}, {"q", q}}},
          {"chi", {{"exponents", {{a, a, a}}}, {"torus_exponents", json::array()}, {"J", J}}},
          {"lambda", {lambda}},
          {"field", {{"p", q}, {"m", 1}}}};
}

}  // namespace

TEST_CASE("faces command") {
  auto r = run_in_process({"faces", "--factors", "3", "--q", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 1 + 7);
  CHECK(r.out.rfind("id,nodes,type,closure\n", 0) == 0);
  auto r2 = run_in_process({"faces", "--factors", "2,2", "--q", "3", "--format", "csv"});
  CHECK(count_lines(r2.out) == 1 + 9);
  auto j = json::parse(run_in_process({"faces", "--factors", "3", "--q", "3", "--format", "json"}).out);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("faces").size() == 7);
  CHECK(run_in_process({"faces", "--factors", "3", "--q", "3", "--format", "text"}).code == 0);
}

TEST_CASE("usage and domain errors") {
  auto bad_q = run_in_process({"faces", "--factors", "3", "--q", "6"});
  CHECK(bad_q.code == cli::exit_domain);
  CHECK_FALSE(bad_q.err.empty());
  CHECK(run_in_process({"faces", "--factors", "1", "--q", "3"}).code == cli::exit_domain);
  CHECK(run_in_process({}).code == cli::exit_usage);
  CHECK(run_in_process({"faces"}).code == cli::exit_usage);
  CHECK(run_in_process({"nonsense"}).code == cli::exit_usage);
  CHECK(run_in_process({"faces", "--factors", "3", "--q", "3", "--format", "xml"}).code == cli::exit_usage);
  CHECK(run_in_process({"oracle-check", "--factors", "2", "--q", "9"}).code == cli::exit_domain);
}

TEST_CASE("chars command") {
  auto r = run_in_process({"chars", "--factors", "2", "--q", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 1 + 10);
  CHECK(run_in_process({"chars", "--factors", "3", "--q", "5", "--cap", "5"}).code == cli::exit_domain);
}

TEST_CASE("classify command") {
  TempDir dir;
  auto big = dir.write("big.json", module_json({"s1.0", "s1.1"}, 1, 1, 3));
  auto small = dir.write("small.json", module_json({"s1.1"}, 1, 1, 3));
  auto other = dir.write("other.json", module_json({"s1.1"}, 1, 2, 3));
  auto r = run_in_process({"classify", big, small, "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("mod_iso") == false);
  CHECK(j.at("ho_iso") == true);
  j = json::parse(run_in_process({"classify", big, other, "--format", "json"}).out);
  CHECK(j.at("ho_iso") == false);
  j = json::parse(run_in_process({"classify", big, big, "--format", "json"}).out);
  CHECK(j.at("mod_iso") == true);
  CHECK(j.at("ho_iso") == true);
  auto csv = run_in_process({"classify", big, small, "--format", "csv"});
  CHECK(csv.out.rfind("id_a,id_b,mod_iso,ho_iso,witness\n", 0) == 0);

  auto invalid = dir.write("invalid.json", module_json({"s1.0", "s1.1", "s1.2"}, 1, 1, 3));
  CHECK(run_in_process({"classify", big, invalid}).code == cli::exit_domain);
  auto fin = dir.write("fin.json", json{{"spec", {{"factors", {2}}, {"torus_rank", 0}, {"q", 3}}},
                                        {"chi", {{"exponents", {{0, 0}}}, {"J", {"s1.0"}}}},
                                        {"lambda", {1}},
                                        {"field", {{"p", 3}, {"m", 1}}}});
  auto fr = run_in_process({"classify", fin, fin});
  CHECK(fr.code == cli::exit_domain);
  CHECK(fr.err.find("finite projective dimension") != std::string::npos);
  CHECK(run_in_process({"classify", big}).code == cli::exit_usage);
}

TEST_CASE("sweep command") {
  auto r = run_in_process({"sweep", "--factors", "3", "--q", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0, differ = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    REQUIRE(cols.size() >= 4);
    differ += cols[2] != cols[3];
  }
  CHECK(rows > 0);
  CHECK(differ > 0);
  auto g2 = run_in_process({"sweep", "--factors", "2", "--q", "5", "--format", "json"});
  CHECK(g2.code == 0);
}

TEST_CASE("oracle-check command") {
  auto r = run_in_process({"oracle-check", "--factors", "2", "--q", "3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("disagreements: 0") != std::string::npos);
  auto capped = run_in_process({"oracle-check", "--factors", "3", "--q", "3", "--cap", "5", "--format", "csv"});
  CHECK(capped.code == 0);
  CHECK(capped.err.find("warning:") != std::string::npos);
}

TEST_CASE("binary matches in-process output byte for byte") {
  for (const std::string args : {"faces --factors 3,2 --q 4 --format json", "chars --factors 2,2 --q 3 --format csv",
                                 "sweep --factors 3 --q 3 --format text"}) {
    std::vector<std::string> split;
    std::istringstream ss(args);
    for (std::string a; ss >> a;) split.push_back(a);
    auto a = run_binary(args), b = run_binary(args);
    auto c = run_in_process(split);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
  CHECK(run_binary("faces --factors 3 --q 6").code == cli::exit_domain);
  CHECK(run_binary("").code == cli::exit_usage);
}

TEST_CASE("out option writes a file") {
  const auto path = (std::filesystem::temp_directory_path() / "heckeho_faces_out.csv").string();
  auto r = run_in_process({"faces", "--factors", "2", "--q", "3", "--format", "csv", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "id,nodes,type,closure");
  std::filesystem::remove(path);
}

TEST_CASE("csv quoting") {
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"x\", y") == "\"say \"\"x\"\", y\"");
}
