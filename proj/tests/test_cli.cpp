#include <doctest.h>
#include <unistd.h>

#include <json.hpp>

#include "cli_support.hpp"

using namespace cli_test;
using nlohmann::json;

namespace {

struct Dir {
  fs::path path = scratch("cli");
  ~Dir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return quote((path / name).string()); }
  fs::path file(const std::string& name) const { return path / name; }
};

}  // namespace

TEST_CASE("gen examples") {
  Dir d;
  CHECK(run("gen --family cycle --n 6 -o " + (d / "c6.el")) == 0);
  CHECK(slurp(d.file("c6.el")) == "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
  CHECK(run("gen --family apex_expander --n 4 --d 3 --seed 1 -o " + (d / "g.el")) == 0);
  CHECK(slurp(d.file("g.el")) == "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  CHECK(run("gen --family random_regular --n 5 --d 3 --seed 1") == 2);
  CHECK(run("gen --family nonsense --n 5") == 2);
  CHECK(run("gen --family cycle --n 6 -o /nonexistent/dir/x.el") == 1);
}

TEST_CASE("solve examples and exit codes") {
  Dir d;
  run("gen --family cycle --n 6 -o " + (d / "c6.el"));
  run("gen --family path --n 4 -o " + (d / "p4.el"));
  CHECK(run("solve -i " + (d / "c6.el") + " --oracle exact --out " + (d / "c6.json") + " --tree-out " +
            (d / "c6.tree") + " --dot " + (d / "c6.dot")) == 0);
  const json c6 = json::parse(slurp(d.file("c6.json")));
  CHECK(c6["schema_version"] == 1);
  CHECK(c6["max_congestion"] == 2);
  CHECK(c6["config"]["oracle"] == "exact");
  CHECK_FALSE(c6.contains("timing_ms"));
  CHECK(run("verify -i " + (d / "c6.el") + " --tree " + (d / "c6.tree")) == 0);
  CHECK(slurp(d.file("c6.dot")).rfind("digraph", 0) == 0);

  CHECK(run("solve -i " + (d / "p4.el") + " --oracle exact --out " + (d / "p4.json")) == 0);
  CHECK(json::parse(slurp(d.file("p4.json")))["max_congestion"] == 1);

  spit(d.file("dis.el"), "4 2\n0 1\n2 3\n");
  CHECK(run("solve -i " + (d / "dis.el")) == 3);
  CHECK(run("solve -i " + (d / "missing.el")) == 1);
  spit(d.file("bad.el"), "3 2\n0 1\n0 1\n");
  CHECK(run("solve -i " + (d / "bad.el")) == 1);
  CHECK(run("solve -i " + (d / "c6.el") + " --oracle bogus") == 2);

  CHECK(run("solve -i " + (d / "c6.el") + " --timing --out " + (d / "t.json")) == 0);
  CHECK(json::parse(slurp(d.file("t.json"))).contains("timing_ms"));
}

TEST_CASE("STC_EXACT_LIMIT caps the exact oracle") {
  Dir d;
  run("gen --family cycle --n 6 -o " + (d / "c6.el"));
  CHECK(std::system(("STC_EXACT_LIMIT=5 " + quote(STC_CLI_PATH) + " solve -i " + (d / "c6.el") + " >/dev/null 2>&1")
                        .c_str()) != 0);
  CHECK(std::system(("STC_EXACT_LIMIT=6 " + quote(STC_CLI_PATH) + " solve -i " + (d / "c6.el") + " >/dev/null 2>&1")
                        .c_str()) == 0);
  CHECK(std::system(("STC_EXACT_LIMIT=5 " + quote(STC_CLI_PATH) + " solve --oracle spectral -i " + (d / "c6.el") +
                     " >/dev/null 2>&1")
                        .c_str()) == 0);
}

TEST_CASE("exact examples") {
  Dir d;
  run("gen --family complete --n 4 -o " + (d / "k4.el"));
  run("gen --family cycle --n 9 -o " + (d / "c9.el"));
  run("gen --family complete --n 9 -o " + (d / "k9.el"));
  CHECK(run("exact -i " + (d / "k4.el") + " --out " + (d / "k4.json")) == 0);
  const json k4 = json::parse(slurp(d.file("k4.json")));
  CHECK(k4["stc"] == 3);
  CHECK(k4["tree_count"] == "16");
  CHECK(run("exact -i " + (d / "c9.el") + " --out " + (d / "c9.json")) == 0);
  CHECK(json::parse(slurp(d.file("c9.json")))["stc"] == 2);
  CHECK(run("exact -i " + (d / "k9.el") + " --budget 1000 2>" + (d / "err.txt"), true) == 4);
  CHECK(slurp(d.file("err.txt")).find("4782969") != std::string::npos);
}

TEST_CASE("bounds examples") {
  Dir d;
  run("gen --family cycle --n 6 -o " + (d / "c6.el"));
  run("gen --family complete --n 4 -o " + (d / "k4.el"));
  run("gen --family path --n 100 -o " + (d / "p100.el"));
  CHECK(run("bounds -i " + (d / "c6.el") + " --mode exact --out " + (d / "c6.json")) == 0);
  const json c6 = json::parse(slurp(d.file("c6.json")));
  REQUIRE(c6["certificates"].size() == 3);
  CHECK(c6["certificates"][0]["kind"] == "lemma_lb1");
  CHECK(c6["certificates"][0]["value"] == json{{"num", 2}, {"den", 1}});
  CHECK(c6["certificates"][1]["kind"] == "corollary_lb2");
  CHECK(c6["certificates"][1]["value"] == json{{"num", 2}, {"den", 3}});

  CHECK(run("bounds -i " + (d / "k4.el") + " --mode exact --out " + (d / "k4.json")) == 0);
  CHECK(json::parse(slurp(d.file("k4.json")))["best"]["value"] == json{{"num", 2}, {"den", 1}});

  CHECK(run("bounds -i " + (d / "p100.el") + " --mode search --out " + (d / "p100.json")) == 0);
  const json p100 = json::parse(slurp(d.file("p100.json")));
  bool has_averaging = false;
  for (const auto& c : p100["certificates"])
    if (c["kind"] == "averaging") {
      has_averaging = true;
      CHECK(c["value"] == json{{"num", 1}, {"den", 1}});
    }
  CHECK(has_averaging);
  CHECK(p100["best"]["value"] == json{{"num", 1}, {"den", 1}});
  CHECK(run("bounds -i " + (d / "p100.el") + " --mode exact") == 2);
}

TEST_CASE("verify") {
  Dir d;
  run("gen --family apex_expander --n 4 --d 3 --seed 1 -o " + (d / "g.el"));
  CHECK(run("verify -i " + (d / "g.el") + " --oracle exact >/dev/null") == 0);
  CHECK(run("verify -i " + (d / "g.el") + " --oracle spectral >/dev/null") == 0);
  CHECK(run("verify --small-exhaustive 6 >/dev/null") == 0);
  CHECK(run("verify") == 2);
  // A tree with a non-edge of the graph violates an invariant.
  run("gen --family path --n 4 -o " + (d / "p4.el"));
  spit(d.file("bad.tree"), "0 1\n1 2\n0 3\n");
  CHECK(run("verify -i " + (d / "p4.el") + " --tree " + (d / "bad.tree") + " 2>" + (d / "err.txt"), true) == 5);
  CHECK(slurp(d.file("err.txt")).find("tree_in_graph") != std::string::npos);
  spit(d.file("cyc.tree"), "0 1\n1 2\n0 2\n");
  CHECK(run("verify -i " + (d / "p4.el") + " --tree " + (d / "cyc.tree")) == 5);
}

TEST_CASE("bench examples") {
  Dir d;
  spit(d.file("cycles.toml"), "oracles = [\"exact\"]\n[[instances]]\nfamily = \"cycle\"\nn = [6, 7, 8, 9, 10, 11, 12]\n");
  CHECK(run("bench --spec " + (d / "cycles.toml") + " --out " + (d / "cycles.csv")) == 0);
  std::istringstream rows(slurp(d.file("cycles.csv")));
  std::string line;
  std::getline(rows, line);
  CHECK(line == "n,m,delta,oracle,congestion,stc_or_bound,bound_kind,ratio,height,millis");
  int count = 0;
  while (std::getline(rows, line)) {
    ++count;
    CHECK(line.find(",exact,2,2,exact_stc,1.000000,") != std::string::npos);
    CHECK(line.back() == ',');
  }
  CHECK(count == 7);

  spit(d.file("empty.toml"), "");
  CHECK(run("bench --spec " + (d / "empty.toml") + " --out " + (d / "empty.csv")) == 0);
  CHECK(slurp(d.file("empty.csv")) == "n,m,delta,oracle,congestion,stc_or_bound,bound_kind,ratio,height,millis\n");

  spit(d.file("apex.toml"),
       "[[instances]]\nfamily = \"apex_expander\"\nd = 3\nn = [4, 6]\nseeds = [1]\n");
  CHECK(run("bench --spec " + (d / "apex.toml") + " --out " + (d / "apex.csv")) == 0);
  const std::string apex = slurp(d.file("apex.csv"));
  CHECK(apex.find("5,10,4,exact,") != std::string::npos);
  CHECK(apex.find(",4,exact_stc,") != std::string::npos);

  spit(d.file("bad.toml"), "[[instances]]\nfamily = \"nope\"\nn = 3\n");
  CHECK(run("bench --spec " + (d / "bad.toml")) == 2);
  spit(d.file("syntax.toml"), "[[instances]\n");
  CHECK(run("bench --spec " + (d / "syntax.toml")) == 2);
  CHECK(run("bench --spec " + (d / "missing.toml")) == 1);
}

TEST_CASE("solve and bench outputs are byte-stable") {
  Dir d;
  run("gen --family gnp_connected --n 60 --p 0.08 --seed 3 -o " + (d / "g.el"));
  for (const char* oracle : {"spectral", "exact"}) {
    const std::string in = oracle == std::string("exact") ? "c.el" : "g.el";
    if (in == "c.el") run("gen --family gnp_connected --n 14 --p 0.3 --seed 4 -o " + (d / "c.el"));
    for (const char* out : {"a.json", "b.json"})
      CHECK(run(std::string("solve --oracle ") + oracle + " --seed 9 -i " + (d / in) + " --out " + (d / out)) == 0);
    CHECK(slurp(d.file("a.json")) == slurp(d.file("b.json")));
  }
  spit(d.file("spec.toml"),
       "[[instances]]\nfamily = \"gnp_connected\"\nn = [10, 30]\np = 0.3\nseeds = [1, 2]\noracles = [\"spectral\"]\n");
  for (const char* out : {"a.csv", "b.csv"})
    CHECK(run("bench --spec " + (d / "spec.toml") + " --out " + (d / out)) == 0);
  CHECK(slurp(d.file("a.csv")) == slurp(d.file("b.csv")));
}
