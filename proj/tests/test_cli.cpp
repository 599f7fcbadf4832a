#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "covers/json_io.hpp"

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run(const std::string& args) {
  std::string cmd = std::string(COVERKIT_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path write_fixture(const std::string& name,
                                    const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "coverkit_fixtures";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("cli: group info on valid and invalid parameters") {
  auto q8 = run("group info --m 4 --k 2 --t 2 --r 3");
  CHECK(q8.exit_code == 0);
  CHECK(q8.out.find("|G| = 8") != std::string::npos);
  CHECK(q8.out.find("ord(tau) = mt/gcd(k,m) = 4") != std::string::npos);
  CHECK(q8.out.find("split (k = m): no") != std::string::npos);

  auto bad = run("group info --m 5 --k 5 --t 2 --r 3");
  CHECK(bad.exit_code == 1);

  auto usage = run("group info --m 4");
  CHECK(usage.exit_code == 2);

  auto unknown = run("frobnicate");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("cli: reps list for D_3") {
  auto r = run("reps list --m 3 --k 3 --t 2 --r 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nu = 3") != std::string::npos);
  CHECK(r.out.find("dim 2") != std::string::npos);
}

TEST_CASE("cli: decompose census for D_6") {
  auto r = run("decompose --m 6 --k 6 --t 2 --r 5 --format json");
  CHECK(r.exit_code == 0);
  auto j = covers::io::json::parse(r.out);
  long full = 0, descends = 0;
  for (const auto& b : j.at("blocks"))
    (b.at("kind") == "full" ? full : descends) += 1;
  CHECK(full == 2);
  CHECK(descends == 2);
}

TEST_CASE("cli: json output re-parses byte-identically") {
  for (const std::string args :
       {std::string("group info --m 4 --k 2 --t 2 --r 3 --format json"),
        std::string("reps list --m 3 --k 3 --t 2 --r 2 --format json"),
        std::string("decompose --m 8 --k 4 --t 2 --r 3 --format json"),
        std::string("orbits --m 8 --r 3 --format json"),
        std::string("corollary --m 8 --k 4 --t 2 --r 3 --format json")}) {
    auto r = run(args);
    REQUIRE(r.exit_code == 0);
    auto j = covers::io::json::parse(r.out);
    CHECK(covers::io::dump(j) == r.out);
  }
}

TEST_CASE("cli: abelian check fixtures") {
  // valid double cover of the line
  auto good = write_fixture("bd_good.json", R"({
    "picard": {"rank": 1, "torsion": []},
    "group": {"factors": [2]},
    "labels": [{"class": [2], "g": [1]}],
    "L": [{"chi": [0], "class": [0]}, {"chi": [1], "class": [1]}]
  })");
  auto r1 = run("abelian check --input " + good.string());
  CHECK(r1.exit_code == 0);

  // failed fundamental relation: label class 3
  auto bad = write_fixture("bd_bad.json", R"({
    "picard": {"rank": 1, "torsion": []},
    "group": {"factors": [2]},
    "labels": [{"class": [3], "g": [1]}],
    "L": [{"chi": [0], "class": [0]}, {"chi": [1], "class": [1]}]
  })");
  auto r2 = run("abelian check --input " + bad.string());
  CHECK(r2.exit_code == 1);

  // malformed JSON
  auto broken = write_fixture("bd_broken.json", "{ not json");
  auto r3 = run("abelian check --input " + broken.string());
  CHECK(r3.exit_code == 2);

  // schema violation: missing group
  auto noshape = write_fixture("bd_noshape.json", R"({"picard": {"rank": 1, "torsion": []}})");
  auto r4 = run("abelian check --input " + noshape.string());
  CHECK(r4.exit_code == 2);
}

TEST_CASE("cli: abelian complete emits data that passes check") {
  auto reduced = write_fixture("rbd.json", R"({
    "picard": {"rank": 1, "torsion": []},
    "group": {"factors": [4]},
    "labels": [{"class": [4], "g": [1]}],
    "L": [{"chi": [1], "class": [1]}]
  })");
  auto r = run("abelian complete --input " + reduced.string() + " --format json");
  REQUIRE(r.exit_code == 0);
  auto completed = write_fixture("rbd_completed.json", r.out);
  auto check = run("abelian check --input " + completed.string());
  CHECK(check.exit_code == 0);
  // byte-identical re-emission
  auto j = covers::io::json::parse(r.out);
  CHECK(covers::io::dump(j) == r.out);
}

TEST_CASE("cli: abelian equations and canonical") {
  auto good = write_fixture("bd_eq.json", R"({
    "picard": {"rank": 1, "torsion": []},
    "group": {"factors": [2]},
    "labels": [{"class": [2], "g": [1]}],
    "L": [{"chi": [0], "class": [0]}, {"chi": [1], "class": [1]}]
  })");
  auto r = run("abelian equations --input " + good.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("z(1)^2 = s1") != std::string::npos);

  auto reduced = write_fixture("rbd_canon.json", R"({
    "picard": {"rank": 1, "torsion": []},
    "group": {"factors": [2]},
    "labels": [{"class": [2], "g": [1]}, {"class": [2], "g": [1]}],
    "L": [{"chi": [1], "class": [2]}],
    "K_W": [-2]
  })");
  auto r2 = run("abelian canonical --input " + reduced.string() + " --format json");
  REQUIRE(r2.exit_code == 0);
  auto j = covers::io::json::parse(r2.out);
  CHECK(j.at("K_V_descent") == covers::io::json::array({0}));
}

TEST_CASE("cli: metabelian check") {
  auto pres = write_fixture("mb.json", R"({
    "sigma_orders": [3],
    "tau_orders": [2],
    "action_matrices": [[[2]]],
    "k_vectors": [[0]]
  })");
  CHECK(run("metabelian check --input " + pres.string()).exit_code == 0);

  auto bad = write_fixture("mb_bad.json", R"({
    "sigma_orders": [4],
    "tau_orders": [2],
    "action_matrices": [[[2]]],
    "k_vectors": [[0]]
  })");
  CHECK(run("metabelian check --input " + bad.string()).exit_code == 1);

  auto cover = write_fixture("mb_cover.json", R"({
    "presentation": {
      "sigma_orders": [3],
      "tau_orders": [2],
      "action_matrices": [[[2]]],
      "k_vectors": [[0]]
    },
    "divisor_perms": [[0, 2, 1]],
    "sheaf_perms": [[0, 2, 1]],
    "scalars": [[{"zeta_order": 3, "exponent": 0}]]
  })");
  CHECK(run("metabelian check --input " + cover.string()).exit_code == 0);
}

TEST_CASE("cli: field subcommands") {
  auto d3 = run("field t2 --m 3 --k 3 --r 2 --a y --P 1");
  CHECK(d3.exit_code == 0);
  CHECK(d3.out.find("FAIL") == std::string::npos);

  auto q8 = run("field dicyclic --n 2 --c \"y*(1-y)/(1-2*y)\" --d 1 --f \"y^2/(1-2*y)\"");
  CHECK(q8.exit_code == 0);

  // dicyclic constraint violation
  auto bad = run("field dicyclic --n 2 --c y --d 1 --f y");
  CHECK(bad.exit_code == 1);

  // unparsable rational function
  auto parse_err = run("field t2 --m 3 --k 3 --r 2 --a \"y/(\" --P 1");
  CHECK(parse_err.exit_code == 2);

  auto verify = run("field verify --m 3 --k 3 --t 2 --r 2 "
                    "--f \"y^2-1\" --g \"y,1\" --tau-P \"1\"");
  CHECK(verify.exit_code == 0);
}

TEST_CASE("cli: kummer fixtures") {
  auto one = write_fixture("kummer1.json",
                           R"({"elements": [[["y", 1]]], "n": 2})");
  auto r1 = run("kummer --input " + one.string());
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("Z/2") != std::string::npos);

  auto two = write_fixture(
      "kummer2.json",
      R"({"elements": [[["y", 1]], [["y", 1], ["y-1", 1]]], "n": 2})");
  auto r2 = run("kummer --input " + two.string() + " --format json");
  CHECK(r2.exit_code == 0);
  auto j = covers::io::json::parse(r2.out);
  CHECK(j.at("invariant_factors") == covers::io::json::array({2, 2}));

  auto triv = write_fixture("kummer3.json",
                            R"({"elements": [[["y", 2]]], "n": 2})");
  auto r3 = run("kummer --input " + triv.string());
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("trivial") != std::string::npos);
}
