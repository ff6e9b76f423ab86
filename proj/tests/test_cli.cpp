#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sphlap2/cli.hpp"
#include "sphlap2/io.hpp"

namespace fs = std::filesystem;
using sphlap2::cli::run;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sphlap2");
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("sphlap2_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  [[nodiscard]] std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("validate") {
  const auto ok = invoke({"validate", "--theta", "0.002,5,1.25"});
  CHECK(ok.status == 0);
  CHECK(ok.out.rfind("valid (C1)", 0) == 0);
  const auto c2 = invoke({"validate", "--theta", "1,-1,1"});
  CHECK(c2.status == 0);
  CHECK(c2.out.rfind("valid (C2)", 0) == 0);
  CHECK(invoke({"validate", "--matern-xi", "5"}).out.rfind("valid (C1)", 0) == 0);

  const auto bad = invoke({"validate", "--theta", "1,-3,1"});
  CHECK(bad.status == 1);
  CHECK(bad.err.rfind("error: DiscriminantViolation:", 0) == 0);
  const auto both = invoke({"validate", "--theta", "1,1,1", "--matern-xi", "2"});
  CHECK(both.status == 2);
  CHECK(both.err.rfind("error: ", 0) == 0);
  CHECK(invoke({"validate"}).status != 0);
}

TEST_CASE("version and help") {
  const auto v = invoke({"--version"});
  CHECK(v.status == 0);
  CHECK(v.out == std::string(sphlap2::cli::kVersion) + "\n");
  CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("precision-fn") {
  const auto r = invoke({"precision-fn", "--theta", "1,1,1", "--h", "1", "--d", "2", "--rmax", "2", "--n", "3",
                         "--normalize"});
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,Q");
  std::getline(in, line);
  CHECK(line == "0,1");
  CHECK(invoke({"precision-fn", "--theta", "1,1,1"}).status == 2);
}

TEST_CASE("simulate is byte-reproducible and feeds variogram") {
  TempDir tmp;
  const auto a = tmp.file("a.csv");
  const auto b = tmp.file("b.csv");
  const auto svg = tmp.file("a.svg");
  REQUIRE(invoke({"simulate", "--matern-xi", "5", "--h", "0.05", "--L", "256", "--seed", "7", "--out", a,
                  "--svg", svg})
              .status == 0);
  REQUIRE(invoke({"simulate", "--matern-xi", "5", "--h", "0.05", "--L", "256", "--seed", "7", "--out", b})
              .status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).size() > 0);
  CHECK(slurp(svg).find("<rect") != std::string::npos);

  const auto v = invoke({"variogram", "--grid", a, "--max-lag", "10", "--model", "matern", "--xi", "5"});
  REQUIRE(v.status == 0);
  std::istringstream in(v.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "lag,gamma_rows,gamma_cols,gamma_avg,gamma_model");
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(sphlap2::io::split_fields(line).size() == 5);
    ++rows;
  }
  CHECK(rows == 11);

  CHECK(invoke({"simulate", "--matern-xi", "5", "--h", "1", "--L", "8"}).status == 2);
  const auto odd = invoke({"simulate", "--matern-xi", "5", "--h", "1", "--L", "9", "--seed", "1"});
  CHECK(odd.status == 1);
  CHECK(odd.err.rfind("error: OddLatticeSize:", 0) == 0);
}

TEST_CASE("simulate repetitions") {
  TempDir tmp;
  const auto stem = tmp.file("f.csv");
  REQUIRE(invoke({"simulate", "--matern-xi", "2", "--h", "0.5", "--L", "8", "--seed", "3", "--reps", "2",
                  "--out", stem})
              .status == 0);
  const auto single = tmp.file("g.csv");
  REQUIRE(invoke({"simulate", "--matern-xi", "2", "--h", "0.5", "--L", "8", "--seed", "4", "--out", single})
              .status == 0);
  CHECK(fs::exists(tmp.file("f_0.csv")));
  CHECK(slurp(tmp.file("f_1.csv")) == slurp(single));
}

TEST_CASE("precision-matrix, energy and predict") {
  TempDir tmp;
  const auto pts = tmp.file("pts.csv");
  {
    std::ofstream f(pts);
    f << "x1,x2,value\n0,0,1\n0.5,0,-1\n30,30,2\n";
  }
  const auto tgt = tmp.file("tgt.csv");
  {
    std::ofstream f(tgt);
    f << "x1,x2\n0,0\n100,100\n";
  }
  const auto dense = invoke({"precision-matrix", "--points", pts, "--matern-xi", "2", "--h", "1"});
  REQUIRE(dense.status == 0);
  CHECK(std::count(dense.out.begin(), dense.out.end(), '\n') == 3);
  const auto sparse = invoke({"precision-matrix", "--points", pts, "--matern-xi", "2", "--h", "1", "--epsilon",
                              "1e-6", "--sparse"});
  REQUIRE(sparse.status == 0);
  CHECK(sparse.out.rfind("i,j,q\n", 0) == 0);
  CHECK(std::count(sparse.out.begin(), sparse.out.end(), '\n') == 6);

  const auto e = invoke({"energy", "--points", pts, "--matern-xi", "2", "--h", "1"});
  REQUIRE(e.status == 0);
  CHECK(sphlap2::io::parse_double(e.out) > 0);

  const auto p = invoke({"predict", "--points", pts, "--targets", tgt, "--matern-xi", "2", "--h", "1"});
  REQUIRE(p.status == 0);
  CHECK(p.out.rfind("x1,x2,mean,variance\n", 0) == 0);
  CHECK(p.out.find("\n100,100,0,") != std::string::npos);

  const auto missing = invoke({"energy", "--points", tmp.file("none.csv"), "--matern-xi", "2", "--h", "1"});
  CHECK(missing.status == 1);
  CHECK(missing.err.rfind("error: IoError:", 0) == 0);
}
