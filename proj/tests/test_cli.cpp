#include "freqfn/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "freqfn");
  std::ostringstream out, err;
  const int code = freqfn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path dir() {
  const auto d = std::filesystem::temp_directory_path() / "freqfn_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& content) {
  const auto p = dir() / name;
  std::ofstream(p) << content;
  return p.string();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("eval prints the exact values") {
  const std::string f2 = write("f2.sf", "-1/1 1/1 1/1\n");
  Outcome o = run({"eval", "--fn", f2, "--x", "2"});
  CHECK(o.code == 0);
  CHECK(o.out == "maximal=1/3\nfrequency=3\nstatus=attained\nwitness=3\n");

  o = run({"eval", "--fn", write("empty.sf", ""), "--x", "0"});
  CHECK(o.code == 0);
  CHECK(o.out == "maximal=0\nfrequency=0\nstatus=zero_function\n");

  o = run({"eval", "--fn", f2, "--x", "1/2"});
  CHECK(o.out == "maximal=1\nfrequency=0\nstatus=zero_by_local_limit\n");

  o = run({"eval", "--fn", f2, "--x", "2", "--aux", "2,1"});
  CHECK(o.out.find("aux_frequency=6/5\n") != std::string::npos);

  o = run({"eval", "--fn", f2, "--x", "2", "--oracle", "--grid", "1024"});
  CHECK(o.code == 0);
  CHECK(o.out.find("oracle_maximal=") != std::string::npos);
  CHECK(o.out.find("oracle_error_bound=") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  const std::string f2 = write("f2.sf", "-1 1 1\n");
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"eval", "--fn", f2}).code == 1);
  CHECK(run({"eval", "--fn", f2, "--x", "0.5"}).code == 1);
  CHECK(run({"eval", "--fn", (dir() / "missing.sf").string(), "--x", "0"}).code == 1);
  const Outcome bad = run({"eval", "--fn", write("bad.sf", "0 1 1\n0 2 1\n"), "--x", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"check", "--suite", "nope", "--fn", f2}).code == 1);
  CHECK(run({"corpus", "--id", "f6", "--out", (dir() / "x.sf").string()}).code == 1);
}

TEST_CASE("check suites report their pass counts") {
  const std::string f7 = write("f7.sf", "-1 0 1\n1 2 100\n");
  const Outcome o = run({"check", "--suite", "prop1", "--fn", f7, "--samples", "200", "--seed", "7"});
  CHECK(o.code == 0);
  CHECK(o.out.find("prop1: 200/200 exact") != std::string::npos);
  for (const char* suite : {"prop2", "monotone", "scale", "oracle", "disc", "thm5", "thm6", "weak"}) {
    CAPTURE(suite);
    CHECK(run({"check", "--suite", suite, "--fn", f7, "--samples", "20"}).code == 0);
  }
}

TEST_CASE("profile, scan and discont output") {
  const std::string f2 = write("f2.sf", "-1 1 1\n");
  Outcome o = run({"profile", "--fn", f2, "--x", "2"});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("segment_index,r_lo,r_hi,alpha,beta\n0,0,1,0,0\n", 0) == 0);

  o = run({"discont", "--fn", write("f7.sf", "-1 0 1\n1 2 100\n")});
  CHECK(o.code == 0);
  CHECK(o.out.find("1,50,100,50\n2,50,100,50\n") != std::string::npos);

  const auto csv = dir() / "scan.csv";
  o = run({"scan", "--fn", f2, "--N", "4", "--step", "1/4", "--out", csv.string()});
  CHECK(o.code == 0);
  CHECK(slurp(csv).rfind("x,maximal,frequency,selected\n-4,1/5,5,0\n", 0) == 0);

  const auto svg = dir() / "density.svg";
  o = run({"density", "--fn", f2, "--C", "2", "--N", "10,20,40,80", "--step", "1/8", "--format", "svg",
           "--out", svg.string()});
  CHECK(o.code == 0);
  CHECK(std::filesystem::exists(svg));
  CHECK(std::filesystem::exists(dir() / "density.csv"));

  o = run({"band", "--fn", f2, "--C", "2", "--N", "8", "--step", "1/4", "--out", (dir() / "band.csv").string()});
  CHECK(o.code == 0);
  CHECK(slurp(dir() / "band.csv").find("# band_extent=0\n") != std::string::npos);

  o = run({"plot", "--fn", f2, "--N", "4", "--step", "1/8", "--kind", "line", "--out",
           (dir() / "line.svg").string()});
  CHECK(o.code == 0);
  CHECK(std::filesystem::exists(dir() / "line.csv"));
}

TEST_CASE("corpus emission and byte-identical reruns") {
  const auto out = dir() / "f5.sf";
  CHECK(run({"corpus", "--id", "f5", "--K", "2", "--out", out.string()}).code == 0);
  CHECK(slurp(out) == "-1 0 1\n3/8 1/2 1\n3/4 1 1\n");

  const std::string f7 = write("f7.sf", "-1 0 1\n1 2 100\n");
  const std::vector<std::string> args = {"check", "--suite", "oracle", "--fn", f7, "--samples", "15", "--seed", "3"};
  CHECK(run(args).out == run(args).out);

  const auto a = dir() / "a.csv", b = dir() / "b.csv";
  run({"scan", "--fn", f7, "--N", "3", "--step", "1/8", "--out", a.string()});
  run({"scan", "--fn", f7, "--N", "3", "--step", "1/8", "--out", b.string()});
  CHECK(slurp(a) == slurp(b));
}
