#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wedgi/fixtures.hpp"
#include "wedgi/serialize.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("'") + WEDGI_CLI_PATH + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string graph_path(const std::string& name) {
  return std::string(WEDGI_SOURCE_DIR) + "/graphs/" + name;
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("shipped graph files match the embedded fixtures", "[cli][data]") {
  for (const auto& fx : wedgi::reference_fixtures()) {
    std::string path = graph_path(fx.id + ".json");
    INFO(path);
    wedgi::LoadedGraph loaded = wedgi::graph_from_json(wedgi::ordered_json::parse(slurp(path)));
    REQUIRE(loaded.family == fx.kind);
    REQUIRE(loaded.graph.n() == fx.graph.n());
    for (int v = 0; v < fx.graph.n(); ++v) {
      REQUIRE(loaded.graph.id(v) == fx.graph.id(v));
      REQUIRE(loaded.graph.weight(v) == fx.graph.weight(v));
    }
    REQUIRE(loaded.graph.edges() == fx.graph.edges());
    REQUIRE(loaded.graph.parts() == fx.graph.parts());
  }
}

TEST_CASE("compute prints the table and summary", "[cli]") {
  RunResult r = run_cli("compute --graph '" + graph_path("demo-matching-layers.json") + "'");
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.output, "edge ideal: ("));
  REQUIRE(contains(r.output, "polarized variables: 10"));
  REQUIRE(contains(r.output, "reg 7  pd 3  depth 3  n 6"));
}

TEST_CASE("compute on an edgeless graph stops at the zero ideal", "[cli]") {
  std::string path = temp_path("wedgi_cli_noedges.json");
  spit(path, R"({"vertices": [{"id": "a"}, {"id": "b", "weight": 3}], "edges": []})");
  RunResult r = run_cli("compute --graph '" + path + "'");
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.output, "edge ideal: (0)"));
  REQUIRE(contains(r.output, "(no edges: zero ideal, nothing to resolve)"));
}

TEST_CASE("compute emits table JSON", "[cli]") {
  std::string out = temp_path("wedgi_cli_compute.json");
  RunResult r = run_cli("compute --graph '" + graph_path("path-b.json") + "' --json '" + out + "'");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc["reg"] == 4);
  REQUIRE(doc["pd"] == 4);
  REQUIRE(doc["depth"] == 3);
  REQUIRE(doc["n"] == 7);
  REQUIRE(doc["entries"].is_array());
  REQUIRE(!doc["entries"].empty());
  for (const auto& e : doc["entries"]) {
    REQUIRE(e.contains("i"));
    REQUIRE(e.contains("j"));
    REQUIRE(e.contains("beta"));
    REQUIRE(e["beta"].get<long long>() > 0);
  }
  REQUIRE(!doc.contains("timing_ms"));
}

TEST_CASE("compare on a valid instance reports MATCH and the depth warning", "[cli]") {
  std::string out = temp_path("wedgi_cli_compare.json");
  RunResult r = run_cli("compare --graph '" + graph_path("demo-matching-layers.json") +
                        "' --json '" + out + "'");
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.output, "family:   whisker_layered"));
  REQUIRE(contains(r.output, "hypotheses: satisfied"));
  REQUIRE(contains(r.output, "closed form: reg 7  pd 3  depth 3"));
  REQUIRE(contains(r.output, "oracle:      reg 7  pd 3  depth 3"));
  REQUIRE(contains(r.output, "verdict: MATCH"));
  // The depth discrepancy warning rides along on every family-2 prediction.
  REQUIRE(contains(r.output, "warning: depth: reporting n - pd = 3"));
  REQUIRE(contains(r.output, "published closed form"));

  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc["instance"].is_string());
  REQUIRE(doc["family"] == 2);
  REQUIRE(doc["valid"] == true);
  REQUIRE(doc["violations"].empty());
  REQUIRE(doc["predicted"]["reg"] == 7);
  REQUIRE(doc["oracle"]["reg"] == 7);
  REQUIRE(doc["verdict"] == "MATCH");
  REQUIRE(doc["polarized_vars"] == 10);
  REQUIRE(doc["warnings"].size() == 1);
}

TEST_CASE("compare on a counterexample fixture", "[cli]") {
  // Without --formal the violated hypotheses stop the comparison.
  RunResult bare = run_cli("compare --graph '" + graph_path("path-b.json") + "'");
  REQUIRE(bare.exit_code == 4);
  REQUIRE(contains(bare.output, "hypotheses: violated"));
  REQUIRE(contains(bare.output, "weight: w(x5) = 1 < 2"));
  REQUIRE(contains(bare.output, "--formal"));

  // With --formal the formal values appear and the verdict is explicit.
  RunResult formal = run_cli("compare --graph '" + graph_path("path-b.json") + "' --formal");
  REQUIRE(formal.exit_code == 0);
  REQUIRE(contains(formal.output, "closed form: reg 5  pd 5"));
  REQUIRE(contains(formal.output, "oracle:      reg 4  pd 4"));
  REQUIRE(contains(formal.output, "verdict: HYPOTHESES_VIOLATED"));
}

TEST_CASE("compare without any family information", "[cli]") {
  std::string path = temp_path("wedgi_cli_noparts.json");
  spit(path, R"({"vertices": [{"id": "a"}, {"id": "b", "weight": 2}], "edges": [["a", "b"]]})");
  RunResult r = run_cli("compare --graph '" + path + "'");
  REQUIRE(r.exit_code == 4);
  REQUIRE(contains(r.output, "no partition"));

  // Partitioned but fitting no family and carrying no hint.
  std::string odd = temp_path("wedgi_cli_oddparts.json");
  spit(odd, R"({"vertices": [{"id": "a"}, {"id": "b", "weight": 2}, {"id": "c", "weight": 2}],
                "edges": [["a", "b"], ["c", "a"]],
                "parts": [["a"], ["b"], ["c"]]})");
  RunResult s = run_cli("compare --graph '" + odd + "'");
  REQUIRE(s.exit_code == 4);
  REQUIRE(contains(s.output, "pass --family"));

  // Naming the family unlocks the formal evaluation.
  RunResult t = run_cli("compare --graph '" + odd + "' --family 1 --formal");
  REQUIRE(t.exit_code == 0);
  REQUIRE(contains(t.output, "verdict: HYPOTHESES_VIOLATED"));
}

TEST_CASE("input and budget failures use distinct exit codes", "[cli]") {
  std::string bad = temp_path("wedgi_cli_bad.json");
  spit(bad, "{\"vertices\": [");
  REQUIRE(run_cli("compute --graph '" + bad + "'").exit_code == 2);

  std::string missing = temp_path("wedgi_cli_missing.json");
  fs::remove(missing);
  REQUIRE(run_cli("compute --graph '" + missing + "'").exit_code == 2);

  std::string heavy = temp_path("wedgi_cli_heavy.json");
  spit(heavy, R"({"vertices": [{"id": "a"}, {"id": "b", "weight": 25}], "edges": [["a", "b"]]})");
  RunResult r = run_cli("compute --graph '" + heavy + "'");
  REQUIRE(r.exit_code == 3);
  REQUIRE(contains(r.output, "budget"));

  // The knob moves both ways; cyclic-a polarizes to exactly 8 variables.
  std::string small = graph_path("cyclic-a.json");
  REQUIRE(run_cli("compute --graph '" + small + "' --budget 7").exit_code == 3);
  RunResult ok = run_cli("compute --graph '" + small + "' --budget 8");
  REQUIRE(ok.exit_code == 0);
  REQUIRE(contains(ok.output, "reg 6  pd 2  depth 2  n 4"));

  REQUIRE(run_cli("frobnicate").exit_code == 2);
  REQUIRE(run_cli("compute").exit_code == 2);
  REQUIRE(run_cli("compute --graph x --field p=4").exit_code == 2);
  REQUIRE(run_cli("compute --graph x --field z").exit_code == 2);
}

TEST_CASE("generate reproduces the shipped demo instance", "[cli]") {
  std::string out = temp_path("wedgi_cli_generated.json");
  RunResult r = run_cli("generate --family 2 --sizes 2,2,2 --weights 2,2,1,1,2,2 --out '" + out +
                        "'");
  REQUIRE(r.exit_code == 0);
  REQUIRE(slurp(out) == slurp(graph_path("demo-matching-layers.json")));

  // Stdout mode emits the same document.
  RunResult direct = run_cli("generate --family 2 --sizes 2,2,2 --weights 2,2,1,1,2,2");
  REQUIRE(direct.exit_code == 0);
  REQUIRE(nlohmann::json::parse(direct.output) == nlohmann::json::parse(slurp(out)));
}

TEST_CASE("generate enforces hypotheses only under --strict", "[cli]") {
  RunResult loose = run_cli("generate --family 3 --sizes 1,1,1 --weights 1,2,2");
  REQUIRE(loose.exit_code == 0);

  RunResult strict = run_cli("generate --family 3 --sizes 1,1,1 --weights 1,2,2 --strict");
  REQUIRE(strict.exit_code == 2);
  REQUIRE(contains(strict.output, "violates the family hypotheses"));
  REQUIRE(contains(strict.output, "weight: w(x11) = 1 < 2"));

  RunResult shape = run_cli("generate --family 2 --sizes 2,1 --weights 1,1,1");
  REQUIRE(shape.exit_code == 2);
  REQUIRE(contains(shape.output, "|V_1| <= |V_2|"));
}

TEST_CASE("verify-paper passes on the bundled fixtures", "[cli][slow]") {
  std::string out = temp_path("wedgi_cli_verify.json");
  RunResult r = run_cli("verify-paper --json '" + out + "'");
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.output, "verify-paper: ok"));
  for (const char* id : {"path-a", "path-b", "whisker-a", "whisker-b", "cyclic-a", "cyclic-b"})
    REQUIRE(contains(r.output, std::string(id) + ": oracle"));
  REQUIRE(!contains(r.output, "[bad]"));
  REQUIRE(!contains(r.output, "[expected"));

  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 6);
  for (const auto& entry : doc) {
    REQUIRE(entry["checks"]["oracle"] == true);
    REQUIRE(entry["checks"]["formula"] == true);
    REQUIRE(entry["checks"]["verdict"] == true);
    REQUIRE(entry["verdict"] == "HYPOTHESES_VIOLATED");
  }
}

TEST_CASE("sweep summarizes and exits clean on a theorem box", "[cli]") {
  std::string out = temp_path("wedgi_cli_sweep.json");
  RunResult r = run_cli("sweep --family 1 --max-m 2 --max-t 2 --max-w 2 --json '" + out + "'");
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.output, "sweep: 10 instances, 10 match, 0 mismatch, 0 hypotheses-violated, "
                             "0 skipped over budget"));

  nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc["records"].size() == 10);
  REQUIRE(doc["counts"]["match"] == 10);
  REQUIRE(doc["counts"]["mismatch"] == 0);
  REQUIRE(doc["skipped_over_budget"] == 0);

  REQUIRE(run_cli("sweep --family 9").exit_code == 2);
}

TEST_CASE("JSON output is byte-stable across worker counts and reruns", "[cli]") {
  std::string a = temp_path("wedgi_cli_det_a.json");
  std::string b = temp_path("wedgi_cli_det_b.json");

  std::string base = "compute --graph '" + graph_path("path-b.json") + "'";
  REQUIRE(run_cli(base + " --jobs 1 --json '" + a + "'").exit_code == 0);
  REQUIRE(run_cli(base + " --jobs 4 --json '" + b + "'").exit_code == 0);
  REQUIRE(slurp(a) == slurp(b));

  std::string cmp = "compare --graph '" + graph_path("demo-matching-layers.json") + "'";
  REQUIRE(run_cli(cmp + " --jobs 1 --json '" + a + "'").exit_code == 0);
  REQUIRE(run_cli(cmp + " --jobs 3 --json '" + b + "'").exit_code == 0);
  REQUIRE(slurp(a) == slurp(b));

  // Timing is opt-in precisely because it would break this.
  REQUIRE(run_cli(cmp + " --timing --json '" + a + "'").exit_code == 0);
  nlohmann::json timed = nlohmann::json::parse(slurp(a));
  REQUIRE(timed.contains("timing_ms"));
  REQUIRE(timed["timing_ms"].contains("oracle"));
}

TEST_CASE("prime field mode runs end to end", "[cli]") {
  RunResult r = run_cli("compute --graph '" + graph_path("cyclic-a.json") + "' --field p=2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.output, "reg "));

  RunResult v = run_cli("verify-paper --field p=2");
  REQUIRE(v.exit_code == 0);  // deviations would be findings, not failures
  REQUIRE(contains(v.output, "verify-paper: ok"));
}

TEST_CASE("disabling the cone shortcut is sound on the small fixtures", "[cli][slow]") {
  RunResult r = run_cli("verify-paper --no-prune");
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.output, "whisker-a: skipped under --no-prune (15 polarized variables)"));
  REQUIRE(contains(r.output, "whisker-b: skipped under --no-prune (18 polarized variables)"));
  REQUIRE(contains(r.output, "path-a: oracle reg 7 pd 4 [ok]"));
  REQUIRE(contains(r.output, "prune-parity [ok]"));
  REQUIRE(!contains(r.output, "prune-parity [bad]"));
}
