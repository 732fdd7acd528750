#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "syzygy/corpus.hpp"
#include "syzygy/ideal.hpp"
#include "syzygy/template.hpp"

using namespace syz;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SYZYGY_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_legend(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("#", 0) != 0) out += line + "\n";
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "syzygy-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("template cells") {
  CHECK(classify_cell(2, 0, 0) == Cell::star);
  CHECK(classify_cell(2, 2, 1) == Cell::star);
  CHECK(classify_cell(2, 0, 3) == Cell::dash);
  CHECK(classify_cell(2, 5, 0) == Cell::dash);
  CHECK(classify_cell(2, 2, 2) == Cell::dash);
  CHECK(classify_cell(2, 3, 3) == Cell::zero);
  CHECK(classify_cell(2, 4, 3) == Cell::triup);
  CHECK(classify_cell(2, 5, 4) == Cell::ovoid);
  CHECK(classify_cell(2, 3, 1) == Cell::tridown);
  CHECK_THROWS(render_template(1, 5, 5));
}

TEST_CASE("templates match the golden grids") {
  auto q2 = render_template(2, 14, 9).to_text();
  auto q3 = render_template(3, 17, 9).to_text();
  CHECK(strip_legend(q2) == read_file(std::filesystem::path(SYZYGY_GOLDEN_DIR) / "template_q2.txt"));
  CHECK(strip_legend(q3) == read_file(std::filesystem::path(SYZYGY_GOLDEN_DIR) / "template_q3.txt"));
  CHECK(q2.find("valid when p is good for i") != std::string::npos);
}

TEST_CASE("examples gen round-trips through the parser") {
  auto path = scratch("segre.json");
  auto r = run("examples gen segre 1 1 1 --char 32003 -o " + path.string());
  REQUIRE(r.status == 0);
  auto text = read_file(path);
  auto parsed = ideal_from_json(text);
  CHECK(ideal_to_json(parsed) == text);
  CHECK(parsed == segre_presentation({1, 1, 1}, 32003).ideal);
}

TEST_CASE("betti and audit subcommands") {
  auto path = scratch("ci.json");
  write_ideal_file(path.string(), complete_intersection_quadrics(2, 2).ideal);
  auto b = run("betti " + path.string() + " --jmax 5");
  CHECK(b.status == 0);
  CHECK(b.out.find("1\t.\t2\t.") != std::string::npos);
  auto a = run("audit " + path.string() + " --checks m_bounds,koszul_subadditivity");
  CHECK(a.status == 0);
  CHECK(a.out.find("overall: verified") != std::string::npos);
  auto j = run("audit " + path.string() + " --checks m_bounds --json -");
  CHECK(j.out.find("\"checks\"") != std::string::npos);
  CHECK(run("audit " + path.string() + " --checks nonsense").status != 0);
  auto s = run("splitcheck " + path.string() + " --a 1 --b 1 --jmax 4");
  CHECK(s.status == 0);
  CHECK(s.out.find("verified") != std::string::npos);
  auto k = run("resolve-k " + path.string() + " --n 3");
  CHECK(k.status == 0);
  CHECK(k.out.find("preg_3(k) = 0") != std::string::npos);
}

TEST_CASE("module presentations") {
  auto ideal = scratch("r.json");
  write_ideal_file(ideal.string(), power_hypersurface(2, 2).ideal);
  auto mod = scratch("m.json");
  std::ofstream(mod) << R"({"generator_degrees":[0],"relations":[
    {"degree":1,"components":[[{"coefficient":1,"exponents":[0,1]}]]}]})";
  auto b = run("betti " + ideal.string() + " --module " + mod.string() + " --jmax 4");
  CHECK(b.status == 0);
  // S/(x^2, y): Koszul-type table 1 | 1 (deg 1) + 1 (deg 2) | 1 (deg 3).
  CHECK(b.out.find("0\t1\t1\t.") != std::string::npos);
  CHECK(b.out.find("1\t.\t1\t1") != std::string::npos);
}

TEST_CASE("malformed input reports a location") {
  auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"field":{"characteristic":0},"variables":["x","y"],"generators":[[{"coefficient":1,"exponents":[2]}]]})";
  auto r = run("betti " + bad.string());
  CHECK(r.status == 1);
  CHECK(r.out.find("/generators/0/0/exponents") != std::string::npos);
  auto trunc = scratch("trunc.json");
  std::ofstream(trunc) << R"({"field":)";
  auto t = run("betti " + trunc.string());
  CHECK(t.status == 1);
  CHECK(t.out.find("byte") != std::string::npos);
}

TEST_CASE("goodprimes table") {
  auto r = run("goodprimes 15");
  CHECK(r.status == 0);
  CHECK(r.out.find("9\t5\n") != std::string::npos);
  CHECK(r.out.find("14\t5\n") != std::string::npos);
  CHECK(r.out.find("15\t2\n") != std::string::npos);
}
