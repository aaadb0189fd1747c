#include "doctest.h"

#include "minlog/cli.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace minlog;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// MINLOG_FORMAT is process state; scope it so a failing check cannot leak it.
struct FormatEnv {
  explicit FormatEnv(const char* value) { setenv("MINLOG_FORMAT", value, 1); }
  ~FormatEnv() { unsetenv("MINLOG_FORMAT"); }
};

std::filesystem::path temp_model_file() {
  auto path = std::filesystem::temp_directory_path() / "minlog_cli_chain.json";
  std::ofstream f(path);
  f << R"({"worlds": ["1", "2"], "leq": [["1", "2"]], "Q": [], "valuation": {"P": ["2"]}})";
  return path;
}

bool ends_with(const std::string& text, const std::string& tail) {
  return text.size() >= tail.size() && text.compare(text.size() - tail.size(), tail.size(), tail) == 0;
}

const std::string kSurveyCsv = "model,DNE,EFQ,LEM,DGP,PP,WLEM,WT,DGPimp\n"
                               "W1,1,1,1,1,1,1,1,1\n"
                               "W1bot,0,0,1,1,1,1,1,1\n"
                               "W2,0,1,0,1,0,1,1,1\n"
                               "W2bot,0,0,1,1,0,1,1,1\n"
                               "W2',0,0,1,1,0,1,0,1\n"
                               "W3,0,1,0,0,0,0,1,1\n"
                               "W3bot,0,0,1,0,0,1,1,1\n"
                               "W3',0,0,1,0,0,1,0,0\n"
                               "W4,0,1,0,0,0,1,1,1\n"
                               "W4bot,0,0,1,0,0,1,1,1\n";

} // namespace

TEST_CASE("table reproduces the survey grid in csv") {
  Run r = cli({"table", "--models", "catalog", "--principles", "fig1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out == kSurveyCsv);
}

TEST_CASE("table output is deterministic and independent of --jobs") {
  Run first = cli({"table", "--models", "full", "--principles", "all", "--format", "json"});
  Run again = cli({"table", "--models", "full", "--principles", "all", "--format", "json"});
  Run parallel = cli({"table", "--models", "full", "--principles", "all", "--format", "json",
                      "--jobs", "8"});
  CHECK(first.code == 0);
  CHECK(first.out == again.out);
  CHECK(first.out == parallel.out);

  Run text = cli({"table"});
  CHECK(text.code == 0);
  for (std::size_t pos = text.out.find('\n'); pos != std::string::npos;
       pos = text.out.find('\n', pos + 1))
    if (pos > 0) CHECK(text.out[pos - 1] != ' ');
}

TEST_CASE("table enumerates structures on request") {
  Run r = cli({"table", "--models", "enumerate:2", "--principles", "EFQ", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "model,EFQ\n"
                 "P1.1-Q0,1\n"
                 "P1.1-Q1,0\n"
                 "P2.1-Q0,1\n"
                 "P2.1-Q1,0\n"
                 "P2.1-Q2,0\n"
                 "P2.1-Q3,0\n"
                 "P2.2-Q0,1\n"
                 "P2.2-Q2,0\n"
                 "P2.2-Q3,0\n");

  CHECK(cli({"table", "--models", "enumerate:x"}).code == 2);
  CHECK(cli({"table", "--models", "enumerate:9"}).code == 2);
}

TEST_CASE("eval reads model files and catalog keys") {
  const std::string file = temp_model_file().string();

  Run forced = cli({"eval", "--model", file, "--world", "1", "--formula", "~~P"});
  CHECK(forced.code == 0);
  CHECK(forced.out == "true\n");

  Run not_forced = cli({"eval", "--model", file, "--world", "1", "--formula", "P"});
  CHECK(not_forced.code == 1);
  CHECK(not_forced.out == "false\n");

  Run keyed = cli({"eval", "--model", "key:W2", "--world", "1", "--formula", "~~P", "--assign",
                   "P=2"});
  CHECK(keyed.code == 0);
  CHECK(keyed.out == "true\n");

  // empty right-hand side assigns the empty extent
  Run empty = cli({"eval", "--model", "key:W1", "--world", "0", "--formula", "~P", "--assign",
                   "P="});
  CHECK(empty.code == 0);

  Run bad_extent = cli({"eval", "--model", "key:W2", "--world", "1", "--formula", "P", "--assign",
                        "P=1"});
  CHECK(bad_extent.code == 2);
  CHECK(bad_extent.err == "error: extent of P is not upward closed\n");

  Run unknown_atom = cli({"eval", "--model", file, "--world", "1", "--formula", "Q"});
  CHECK(unknown_atom.code == 2);
  CHECK(unknown_atom.err == "error: no extent for atom: Q\n");

  Run unknown_world = cli({"eval", "--model", file, "--world", "5", "--formula", "P"});
  CHECK(unknown_world.code == 2);

  Run bad_formula = cli({"eval", "--model", file, "--world", "1", "--formula", "P ->"});
  CHECK(bad_formula.code == 2);
  CHECK(bad_formula.err.find("error: ") == 0);
  CHECK(bad_formula.err.find("line 1, column") != std::string::npos);

  std::filesystem::remove(file);
}

TEST_CASE("classify decides principles and ad-hoc schemas") {
  Run lem = cli({"classify", "--model", "key:W3'", "--principle", "LEM"});
  CHECK(lem.code == 0);
  CHECK(lem.out == "true\n");

  Run wt = cli({"classify", "--model", "key:W3'", "--principle", "WT"});
  CHECK(wt.code == 1);
  CHECK(wt.out == "false\n");

  Run schema = cli({"classify", "--model", "key:W1", "--schema", "p | ~p"});
  CHECK(schema.code == 0);

  Run too_wide =
      cli({"classify", "--model", "key:W1", "--schema", "a | b | c | d | e"});
  CHECK(too_wide.code == 2);
  CHECK(too_wide.err == "error: at most 4 schema variables are supported\n");

  CHECK(cli({"classify", "--model", "key:W1"}).code == 2);
  CHECK(cli({"classify", "--model", "key:nowhere", "--principle", "LEM"}).code == 2);
}

TEST_CASE("separate reports the witness or its absence") {
  Run found = cli({"separate", "--hold", "EFQ", "--fail", "WLEM"});
  CHECK(found.code == 0);
  CHECK(found.out == "witness P3.3-Q0\n"
                     "worlds: 0 1 2\n"
                     "order: 0<=1 0<=2\n"
                     "Q: (none)\n");

  Run none = cli({"separate", "--hold", "DNE", "--fail", "EFQ"});
  CHECK(none.code == 1);
  CHECK(none.out == "none within 4 worlds\n");

  Run json_none = cli({"separate", "--hold", "DNE", "--fail", "EFQ", "--format", "json"});
  CHECK(json_none.code == 1);
  CHECK(nlohmann::json::parse(json_none.out) == nlohmann::json{{"found", false}});

  CHECK(cli({"separate", "--hold", "LEM", "--fail", "LEM"}).code == 2);
  CHECK(cli({"separate", "--hold", "LEM", "--fail", "WT", "--max-worlds", "7"}).code == 2);
}

TEST_CASE("prove maps the three outcomes onto exit codes") {
  Run yes = cli({"prove", "--assume", "p", "--assume", "p -> q", "--goal", "q"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "derivable\n");

  Run no = cli({"prove", "--goal", "p | ~p"});
  CHECK(no.code == 1);
  CHECK(no.out == "not derivable\n");

  Run classical = cli({"prove", "--goal", "((p -> q) -> p) -> p", "--mode", "intuitionistic"});
  CHECK(classical.code == 1);

  Run starved = cli({"prove", "--goal", "(p -> p) & (q -> q)", "--budget", "1"});
  CHECK(starved.code == 2);
  CHECK(starved.out == "budget exceeded\n");

  Run as_json = cli({"prove", "--goal", "p -> p", "--format", "json"});
  CHECK(as_json.code == 0);
  nlohmann::json doc = nlohmann::json::parse(as_json.out);
  CHECK(doc["outcome"] == "derivable");
  CHECK(doc["steps"].get<int>() > 0);
}

TEST_CASE("ledger command prints one line per entry") {
  Run all = cli({"ledger"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out.find("PASS DNE=>PP\n") != std::string::npos);
  CHECK(ends_with(all.out, "\n108/108 entries pass\n"));

  Run hier = cli({"ledger", "--group", "hierarchy"});
  CHECK(hier.code == 0);
  CHECK(ends_with(hier.out, "\n10/10 entries pass\n"));

  Run bogus = cli({"ledger", "--group", "bogus"});
  CHECK(bogus.code == 2);
  CHECK(bogus.err == "error: unknown ledger group: bogus\n");
}

TEST_CASE("audit and report commands summarize their verdicts") {
  Run audit = cli({"audit-fig1"});
  CHECK(audit.code == 0);
  CHECK(audit.out.find("via DNE -> PP -> WT") != std::string::npos);
  CHECK(audit.out.find("by W2'") != std::string::npos);
  CHECK(ends_with(audit.out, "\n56 pairs: 18 proved, 38 separated\n"));
  CHECK(cli({"audit-fig1"}).out == audit.out);

  Run exp = cli({"experiments"});
  CHECK(exp.code == 0);
  CHECK(exp.out.find("FAIL") == std::string::npos);
  CHECK(ends_with(exp.out, "\nall checks pass\n"));

  Run ch = cli({"characterize", "--jobs", "4"});
  CHECK(ch.code == 0);
  CHECK(ch.out.find("structures checked: 172\n") != std::string::npos);
}

TEST_CASE("catalog lists the inventory and renders DOT") {
  Run listing = cli({"catalog"});
  CHECK(listing.code == 0);
  CHECK(listing.out.find("principles:") != std::string::npos);
  CHECK(listing.out.find("models:") != std::string::npos);
  CHECK(listing.out.find("~~phi -> phi") != std::string::npos);
  CHECK(listing.out.find("two-world chain, abnormal top") != std::string::npos);

  Run dot = cli({"catalog", "--dot", "W2'"});
  CHECK(dot.code == 0);
  CHECK(dot.out == "digraph \"W2'\" {\n"
                   "  rankdir=BT;\n"
                   "  \"1\";\n"
                   "  \"2\" [style=filled];\n"
                   "  \"1\" -> \"2\";\n"
                   "}\n");

  CHECK(cli({"catalog", "--dot", "nowhere"}).code == 2);
}

TEST_CASE("MINLOG_FORMAT picks the default format when valid for the verb") {
  {
    FormatEnv env("json");
    Run r = cli({"eval", "--model", "key:W2", "--world", "2", "--formula", "P", "--assign",
                 "P=2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json{{"verdict", true}});
  }
  {
    FormatEnv env("csv"); // not an eval format: falls back to text
    Run r = cli({"eval", "--model", "key:W2", "--world", "2", "--formula", "P", "--assign",
                 "P=2"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");

    Run t = cli({"table"});
    CHECK(t.out.rfind("model,", 0) == 0);
  }
  {
    FormatEnv env("nonsense");
    Run r = cli({"prove", "--goal", "p -> p"});
    CHECK(r.out == "derivable\n");
  }
  // an explicit --format always beats the environment
  {
    FormatEnv env("json");
    Run r = cli({"prove", "--goal", "p -> p", "--format", "text"});
    CHECK(r.out == "derivable\n");
  }
}

TEST_CASE("argument errors exit with code 2 and help with 0") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"prove"}).code == 2);                       // missing required --goal
  CHECK(cli({"prove", "--goal", "p", "--nope"}).code == 2);
  CHECK(cli({"prove", "--goal", "p", "--mode", "fuzzy"}).code == 2);
  CHECK(cli({"table", "--jobs", "0"}).code == 2);

  Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("minlog") != std::string::npos);
  CHECK(cli({"prove", "--help"}).code == 0);
}
