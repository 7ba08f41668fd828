#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(HOPFKIT_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data(const std::string& name) { return std::string(HOPFKIT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("protected-set reproduces the S3 torus counts") {
  auto r = run("protected-set --group " + data("s3.json") + " --genus 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"flat_count\": 18") != std::string::npos);
  CHECK(r.out.find("\"orbit_count\": 8") != std::string::npos);
}

TEST_CASE("result documents parse as JSON and carry their schema") {
  for (const std::string& args :
       {"protected-set --group " + data("s3.json") + " --genus 1",
        "rep-variety --group " + data("z3.json") + " --genus 1",
        "protected-cat --xmod " + data("xmod_z3_id.json") + " --genus 1",
        "mcg-relations --group " + data("z2.json"),
        "simplicial-levels --xmod " + data("xmod_z3_id.json") + " --genus 1 --levels 1"}) {
    auto r = run(args);
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE(!doc.is_discarded());
    CHECK(doc.contains("schema"));
    CHECK(doc.contains("inputs"));
  }
}

TEST_CASE("output bytes are identical across runs and thread counts") {
  std::string args = "protected-set --group " + data("s3.json") + " --genus 1";
  auto a = run(args + " --threads 1");
  auto b = run(args + " --threads 4");
  auto c = run(args + " --threads 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
}

TEST_CASE("protected-cat commands") {
  SUBCASE("sphere gives the terminal groupoid") {
    auto r = run("protected-cat --xmod " + data("xmod_s3a3.json") + " --genus 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"object_count\": 1") != std::string::npos);
    CHECK(r.out.find("\"morphism_count\": 1") != std::string::npos);
  }
  SUBCASE("torus groupoid of the inclusion crossed module") {
    auto r = run("protected-cat --xmod " + data("xmod_s3a3.json") + " --genus 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"object_count\": 8") != std::string::npos);
    CHECK(r.out.find("\"morphism_count\": 28") != std::string::npos);
    CHECK(r.out.find("\"congruence_discrepancy\": \"\"") != std::string::npos);
  }
  SUBCASE("dot export lists objects as nodes") {
    auto r = run("protected-cat --xmod " + data("xmod_z3_id.json") + " --genus 1 --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("digraph groupoid") != std::string::npos);
  }
}

TEST_CASE("verify-invariance reports the orbit bijection") {
  auto r = run("verify-invariance --graph " + data("graph_fig1_torus.json") + " --group " +
               data("s3.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "bijection verified, 8 orbits\n");
}

TEST_CASE("rep-variety and mcg commands") {
  auto rv = run("rep-variety --group " + data("z2.json") + " --genus 1");
  CHECK(rv.exit_code == 0);
  CHECK(rv.out.find("\"hom_count\": 4") != std::string::npos);
  auto mr = run("mcg-relations --group " + data("s3.json"));
  CHECK(mr.exit_code == 0);
  CHECK(mr.out.find("\"braid_holds\": true") != std::string::npos);
  CHECK(mr.out.find("\"torsion_holds\": true") != std::string::npos);
  auto mo = run("mcg-orbits --group " + data("s3.json"));
  CHECK(mo.exit_code == 0);
  CHECK(mo.out.find("\"orbit_sizes\"") != std::string::npos);
  auto moa = run("mcg-orbits --group " + data("s3.json") + " --aut " + data("aut_torus_twists.json"));
  CHECK(moa.exit_code == 0);
  CHECK(moa.out.find("\"class_count\": 8") != std::string::npos);
  auto sl = run("simplicial-levels --xmod " + data("xmod_s3a3.json") + " --genus 1 --levels 2");
  CHECK(sl.exit_code == 0);
  CHECK(sl.out.find("\"class_counts\"") != std::string::npos);
}

TEST_CASE("validation failures exit nonzero with machine-readable errors") {
  SUBCASE("missing file") {
    auto r = run("protected-set --group /nonexistent.json --genus 1");
    CHECK(r.exit_code == static_cast<int>(6));  // input_error
    CHECK(r.out.find("\"error\"") != std::string::npos);
  }
  SUBCASE("schema violation") {
    auto r = run("protected-set --group " + data("graph_theta.json") + " --genus 1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("schema_violation") != std::string::npos);
  }
}

TEST_CASE("HOPFKIT_SEED is rejected") {
  auto r = run("protected-set --group " + data("s3.json") + " --genus 1", "HOPFKIT_SEED=42");
  CHECK(r.exit_code == 64);
  CHECK(r.out.find("seed_rejected") != std::string::npos);
}
