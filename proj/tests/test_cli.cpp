#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// LIEMULT_CLI_PATH is injected by the build

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& shell_prefix = "") {
  const std::string cmd =
      shell_prefix + std::string(LIEMULT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/liemult_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("info on catalog entries") {
  const RunResult h1 = run("info --catalog heisenberg_1");
  CHECK(h1.exit_code == 0);
  CHECK(contains(h1.out, "t invariant           1"));
  CHECK(contains(h1.out, "main bound            2 <= 2  equality"));
  CHECK(contains(h1.out, "classification        H1"));

  const RunResult a5 = run("info --catalog abelian_5");
  CHECK(a5.exit_code == 0);
  CHECK(contains(a5.out, "not applicable (m = 0)"));
  CHECK(contains(a5.out, "t invariant           0"));
  CHECK(contains(a5.out, "classification        Abelian"));

  CHECK(run("info --catalog nonexistent").exit_code == 2);
  CHECK(run("info").exit_code == 2);
}

TEST_CASE("info exit codes for bad inputs") {
  const std::string bad = temp_file(
      "bad.lie", "dim 3\nfield Q\n0 1 -> 0:1\n0 2 -> 2:1\n");
  const RunResult r = run("info " + bad);
  CHECK(r.exit_code == 3);
  CHECK(contains(r.out, "(0, 1, 2)"));  // the offending triple

  const std::string mangled = temp_file("mangled.lie", "dim x\nfield Q\n");
  CHECK(run("info " + mangled).exit_code == 2);
  CHECK(run("info /nonexistent/path").exit_code == 2);
}

TEST_CASE("construct") {
  const RunResult h1 = run("construct heisenberg 1");
  CHECK(h1.exit_code == 0);
  CHECK(h1.out == "dim 3\nfield Q\n0 1 -> 2:1\n");

  const RunResult empty = run("construct abelian 0");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "dim 0\nfield Q\n");

  CHECK(run("construct heisenberg 0").exit_code == 2);
  CHECK(run("construct heisenberg").exit_code == 2);
  CHECK(run("construct klein 4").exit_code == 2);
  CHECK(run("construct sum heisenberg_1").exit_code == 2);

  const RunResult mod = run("construct heisenberg 1 --field gf:7");
  CHECK(mod.exit_code == 0);
  CHECK(mod.out == "dim 3\nfield GF(7)\n0 1 -> 2:1\n");

  const RunResult fil = run("construct filiform 4");
  CHECK(fil.exit_code == 0);
  CHECK(fil.out == "dim 4\nfield Q\n0 1 -> 2:1\n0 2 -> 3:1\n");
  CHECK(run("construct filiform 2").exit_code == 2);
}

TEST_CASE("construct pipes into info") {
  // construct sum ... | info -   (the t = 2 example: n=5 would be a2)
  const RunResult r =
      run(std::string("construct sum heisenberg_1 abelian_2 | ") +
              LIEMULT_CLI_PATH + " info -",
          "");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dimension n           5"));
  CHECK(contains(r.out, "derived dim m         1"));
  CHECK(contains(r.out, "equality"));
}

TEST_CASE("info with field override") {
  const RunResult r = run("info --catalog heisenberg_1 --field gf:7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "field                 GF(7)"));
  CHECK(contains(r.out, "multiplier dim        2"));
}

TEST_CASE("machine-readable lines are deterministic") {
  const RunResult a = run("--format lines info --catalog filiform_4");
  const RunResult b = run("--format lines info --catalog filiform_4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out,
                 "entry key=filiform_4 field=Q n=4 m=2 center=1 "
                 "l2_cap_center=1 nilpotent=1 class=3"));
  CHECK(contains(a.out, "dim_multiplier=2 t=4"));

  const RunResult s1 =
      run("--format lines sweep --catalog --checks main,batten");
  const RunResult s2 =
      run("--format lines sweep --catalog --checks main,batten");
  CHECK(s1.exit_code == 0);
  CHECK(s1.out == s2.out);
  CHECK(contains(s1.out, "anomalies=0"));
}

TEST_CASE("sweep") {
  const RunResult all = run("sweep --catalog --checks main,batten");
  CHECK(all.exit_code == 0);
  CHECK(contains(all.out, "0 anomalies"));

  const RunResult t = run("--format lines sweep --catalog --checks t-classify");
  CHECK(t.exit_code == 0);
  CHECK(contains(t.out, "key=heisenberg_1 t=1 label=H1"));
  CHECK(contains(t.out, "key=abelian_4 t=0 label=Abelian"));
  CHECK(contains(
      t.out, "key=heisenberg_1_plus_abelian_1 t=2 label=H1PlusLine"));

  const RunResult kun = run("sweep --catalog --checks kunneth");
  CHECK(kun.exit_code == 0);
  CHECK(contains(kun.out, "0 anomalies"));

  const RunResult sr = run("sweep --catalog --checks sr");
  CHECK(sr.exit_code == 0);
  CHECK(contains(sr.out, "0 anomalies"));

  CHECK(run("sweep --checks main").exit_code == 2);          // no scope
  CHECK(run("sweep --catalog --checks bogus").exit_code == 2);
  CHECK(run("sweep --dir /nonexistent --checks main").exit_code == 2);
}

TEST_CASE("sweep over a directory") {
  const std::string dir = "/tmp/liemult_test_dir";
  REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
  temp_file("dir/../liemult_test_dir/one.lie", "dim 3\nfield Q\n0 1 -> 2:1\n");
  temp_file("dir/../liemult_test_dir/two.lie", "dim 2\nfield Q\n");
  const RunResult r = run("--format lines sweep --dir " + dir +
                          " --checks main,batten,t-classify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "key=one t=1 label=H1"));
  CHECK(contains(r.out, "key=two t=0 label=Abelian"));
  CHECK(contains(r.out, "anomalies=0"));

  // a Jacobi-violating file in the scope aborts with exit 3
  temp_file("dir/../liemult_test_dir/bad.lie",
            "dim 3\nfield Q\n0 1 -> 0:1\n0 2 -> 2:1\n");
  CHECK(run("sweep --dir " + dir + " --checks main").exit_code == 3);
  REQUIRE(std::system(("rm " + dir + "/bad.lie").c_str()) == 0);

  // optional env var adds a directory to catalog sweeps
  const RunResult extra =
      run("--format lines sweep --catalog --checks t-classify",
          "LIEMULT_EXTRA_DIR=" + dir + " ");
  CHECK(extra.exit_code == 0);
  CHECK(contains(extra.out, "key=one t=1 label=H1"));
  CHECK(contains(extra.out, "key=heisenberg_1 t=1 label=H1"));
}
