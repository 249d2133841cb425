#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = blowade::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* const kSuperisolated = "z1*z2*z3 + z1^4 + z2^4 + z3^4";

}  // namespace

TEST_CASE("analyze reports the superisolated example") {
  const auto r = run({"analyze", kSuperisolated});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "input", "options", "result", "diagnostics"});
  CHECK(j["command"] == "analyze");
  CHECK(j["options"]["version"] == "0.1.0");
  CHECK(j["options"]["truncation"] == 64);
  CHECK(j["options"].contains("seed"));
  const Json& res = j["result"];
  CHECK(res["is_blow_ade"] == true);
  CHECK(res["m"] == 1);
  CHECK(res["subtype"]["pure_blow_A1"] == true);
  CHECK(res["zeta"] == Json::parse(R"([{"d":4,"nu":-3}])"));
  REQUIRE(res["points"].size() == 3);
  for (const auto& p : res["points"]) {
    for (const char* key : {"coords", "chart", "type", "milnor", "m", "c"}) CHECK(p.contains(key));
    CHECK(p["type"] == Json::parse(R"({"family":"A","index":1})"));
  }
}

TEST_CASE("classify with custom variable names") {
  const auto r = run({"classify", "--vars", "x2,x3", "x2^2 + x3^5"});
  REQUIRE(r.code == 0);
  const Json res = r.json()["result"];
  CHECK(res["family"] == "A");
  CHECK(res["index"] == 4);

  const auto uv = run({"classify", "--vars", "u,v", "u^3 + v^4"});
  REQUIRE(uv.code == 0);
  CHECK(uv.json()["result"]["family"] == "E");
  CHECK(uv.json()["result"]["index"] == 6);
}

TEST_CASE("zeta of the Morse point") {
  const auto r = run({"zeta", "z1^2+z2^2+z3^2"});
  REQUIRE(r.code == 0);
  const Json res = r.json()["result"];
  CHECK(res["zeta"] == Json::parse(R"([{"d":2,"nu":-1}])"));
  CHECK(res["degree"] == -2);
}

TEST_CASE("zeta entries are sorted by d") {
  const auto r = run({"analyze", "z1^3*z3 + z2^4 + z3^5"});
  REQUIRE(r.code == 0);
  const Json zeta = r.json()["result"]["zeta"];
  REQUIRE(zeta.size() > 1);
  for (std::size_t i = 1; i < zeta.size(); ++i) CHECK(zeta[i - 1]["d"] < zeta[i]["d"]);
}

TEST_CASE("output is byte-deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"analyze", kSuperisolated},
        std::vector<std::string>{"mu-star", kSuperisolated, "--seed", "7"},
        std::vector<std::string>{"deform-check", "z1*z2*z3 + z1^4 + z2^4 + z3^4 + s*z2^4",
                                 "--samples", "0,1/2"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("mu-star embeds seed and heuristic note") {
  const auto r = run({"mu-star", kSuperisolated, "--seed", "11", "--trials", "3"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["options"]["seed"] == 11);
  CHECK(j["result"]["mu3"] == 11);
  CHECK(j["result"]["mu2"] == 4);
  CHECK(j["result"]["mu1"] == 2);
  CHECK(j["result"]["mu2_method"] == "heuristic-generic");
}

TEST_CASE("compare and blowup") {
  const auto c = run({"compare", kSuperisolated,
                      "z1^2*z2 + z1*z2^2 + z1*z2*z3 + 2*z1^4 - z2^4 + 3*z3^4"});
  REQUIRE(c.code == 0);
  CHECK(c.json()["result"]["same_type"] == true);

  const auto b = run({"blowup", "z2^2*z3 - z1^3 + z3^4"});
  REQUIRE(b.code == 0);
  const Json pts = b.json()["result"]["points"];
  REQUIRE(pts.size() == 1);
  CHECK(pts[0]["strict_transform"] == "x1 - x2^3 + x3^2");
  CHECK(pts[0]["principal"]["m"] == 1);
  CHECK(pts[0]["principal"]["chart"] == 3);
}

TEST_CASE("deform-check finds the violation") {
  const auto r = run({"deform-check",
                      "z1*z2^2 + z1*z2*z3 - 2*s*z1*z2*z3 + z1^4 + z2^4 + z3^4", "--samples",
                      "1,1/2,0"});
  REQUIRE(r.code == 0);
  const Json v = r.json()["result"]["first_violation"];
  CHECK(v["s"] == "1/2");
  CHECK(v["flag"] == "reduced");
}

TEST_CASE("user points") {
  const auto r = run({"analyze", kSuperisolated, "--point", "0:0:1", "--point", "0:1:0",
                      "--point", "1:0:0"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"]["points"].size() == 3);
  CHECK(run({"analyze", kSuperisolated, "--point", "1:1:1"}).code == 1);
  CHECK(run({"analyze", kSuperisolated, "--point", "1:x"}).code == 2);
}

TEST_CASE("domain errors exit 1 with a kind tag") {
  const auto r = run({"analyze", "z1^2*z2^2 + z1^5 + z2^5 + z3^5"});
  CHECK(r.code == 1);
  const Json j = r.json();
  CHECK(j["result"].is_null());
  CHECK(j["diagnostics"][0]["kind"] == "non_reduced_tangent_cone");
  CHECK(run({"analyze", "z1*z2*z3"}).json()["diagnostics"][0]["kind"] ==
        "non_isolated_singularity");
  CHECK(run({"classify", "x2 + x3^2"}).code == 1);
  CHECK(run({"zeta", "0"}).code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", kSuperisolated, "--bogus"}).code == 2);
  CHECK(run({"analyze", kSuperisolated, "--truncation", "1"}).code == 2);
  CHECK(run({"analyze", kSuperisolated, "--format", "xml"}).code == 2);
  CHECK(run({"compare", kSuperisolated}).code == 2);
  CHECK(run({"classify", "--vars", "x2", "x2^2 + x3^3"}).code == 2);
  CHECK(run({"deform-check", "z1^3 + s", "--samples", "0,abc"}).code == 2);
  CHECK(run({"analyze", "z1^2 +"}).code == 2);
  CHECK(run({"analyze", "@/nonexistent/file.poly"}).code == 2);
  CHECK(run({"analyze", "--corpus", "/nonexistent/dir"}).code == 2);
}

TEST_CASE("text format") {
  const auto r = run({"zeta", "z1^2+z2^2+z3^2", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("degree: -2") != std::string::npos);
}

TEST_CASE("file input and corpus mode") {
  const auto dir = std::filesystem::temp_directory_path() / "blowade_cli_corpus";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "b.poly") << "# comment\nz1^2 + z2^2 + z3^2\n";
  std::ofstream(dir / "a.poly") << kSuperisolated << '\n';
  std::ofstream(dir / "c.poly") << "z1^2*z2^2 + z1^5 + z2^5 + z3^5\n";
  std::ofstream(dir / "ignored.txt") << "garbage\n";

  const auto single = run({"zeta", "@" + (dir / "b.poly").string()});
  REQUIRE(single.code == 0);
  CHECK(single.json()["result"]["degree"] == -2);

  const auto batch = run({"analyze", "--corpus", dir.string()});
  CHECK(batch.code == 1);
  const Json res = batch.json()["result"];
  REQUIRE(res.size() == 3);
  CHECK(res[0]["file"] == "a.poly");
  CHECK(res[1]["file"] == "b.poly");
  CHECK(res[0]["result"]["is_blow_ade"] == true);
  CHECK(res[2]["result"].is_null());
  CHECK(run({"compare", "--corpus", dir.string()}).code == 2);
  std::filesystem::remove_all(dir);
}
