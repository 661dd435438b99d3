#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "dimonoid/cli.hpp"
#include "support.hpp"

using namespace dimonoid;

namespace {

  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  std::string sample(std::string const& name) {
    return std::string(DIMONOID_SAMPLES_DIR) + "/" + name;
  }

  std::filesystem::path temp_path(std::string const& name) {
    return std::filesystem::temp_directory_path() / ("dimonoid_test_" + name);
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream      in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int shell(std::string const& args) {
    std::string const command =
        std::string("\"") + DIMONOID_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    int const status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  struct EnvGuard {
    explicit EnvGuard(char const* value) {
      if (value == nullptr) {
        ::unsetenv(cli::kWorkersEnv);
      } else {
        ::setenv(cli::kWorkersEnv, value, 1);
      }
    }
    ~EnvGuard() { ::unsetenv(cli::kWorkersEnv); }
  };

}  // namespace

TEST_CASE("check") {
  SECTION("a dimonoid") {
    auto const r = run({"check", sample("lo2_ro2.txt")});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("dimonoid: yes; abelian: yes; commutative: no") != std::string::npos);
  }
  SECTION("a pair failing D3") {
    auto const r = run({"check", sample("o3_o32_not_dimonoid.txt")});
    CHECK(r.code == cli::kExitNegative);
    CHECK(r.out.find("dimonoid: no") != std::string::npos);
    CHECK(r.out.find("fails at") != std::string::npos);
  }
  SECTION("doppelsemigroup mode") {
    auto const r = run({"check", sample("o3_o32_not_dimonoid.txt"), "--mode", "doppelsemigroup"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("doppelsemigroup: yes") != std::string::npos);
  }
  SECTION("a nonassociative table") {
    auto const r = run({"check", sample("nor.txt")});
    CHECK(r.code == cli::kExitNegative);
    CHECK(r.out.find("associative: no (fails at (0, 0, 1))") != std::string::npos);
  }
  SECTION("json") {
    auto const r = run({"check", sample("m31_o3.json"), "--format", "json"});
    CHECK(r.code == cli::kExitOk);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(j["profile"]["commutative"] == true);
    CHECK(j["profile"]["abelian"] == false);
    CHECK(j["dimonoid"]["d1"] == true);
  }
  SECTION("missing file") {
    CHECK(run({"check", sample("missing.txt")}).code == cli::kExitUsage);
  }
}

TEST_CASE("catalog") {
  auto const list = run({"catalog", "list"});
  CHECK(list.code == cli::kExitOk);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n')
        == static_cast<long>(named_structures().size()));
  auto const json = run({"catalog", "list", "--format", "json"});
  CHECK(nlohmann::json::parse(json.out).size() == named_structures().size());

  auto const built = run({"catalog", "build", "LO_3⊣⊢O_3"});
  CHECK(built.code == cli::kExitOk);
  CHECK(std::get<DiStructure>(parse_structure(built.out)) == build_dimonoid("LO3|O3"));
  CHECK(parse_table(run({"catalog", "build", "O(3,2)"}).out) == build_semigroup("O(3,2)"));
  CHECK(run({"catalog", "build", "nosuch"}).code == cli::kExitUsage);
  CHECK(run({"catalog", "build", "O3|O(3,2)"}).code == cli::kExitNegative);
  CHECK(run({"catalog", "build", "O3|O(3,2)", "--mode", "doppelsemigroup"}).code == cli::kExitOk);
  CHECK(run({"catalog", "build", "O3|O(3,2)", "--mode", "unchecked"}).code == cli::kExitOk);
}

TEST_CASE("iso, aut and dual") {
  auto const yes = run({"iso", sample("lob3.txt"), sample("lob3_relabeled.txt")});
  CHECK(yes.code == cli::kExitOk);
  CHECK(yes.out.find("isomorphic: yes") != std::string::npos);
  CHECK(yes.out.find("witness:") != std::string::npos);

  auto const no = run({"iso", sample("lo23_o3.txt"), sample("m31_o3.json")});
  CHECK(no.code == cli::kExitNegative);
  CHECK(no.out.find("isomorphic: no") != std::string::npos);

  CHECK(run({"iso", sample("lob3.txt"), sample("nor.txt")}).code == cli::kExitNegative);
  CHECK(run({"iso", sample("lob3.txt"), sample("lo2_ro2.txt")}).code == cli::kExitUsage);
  CHECK(run({"iso", sample("nor.txt"), sample("lo2_ro2.txt")}).code == cli::kExitUsage);

  auto const aut = run({"aut", sample("lo2_ro2.txt")});
  CHECK(aut.code == cli::kExitOk);
  CHECK(aut.out.rfind("group: C2 (order 2)", 0) == 0);
  auto const aut_json = nlohmann::json::parse(run({"aut", sample("lo23_o3.txt"), "--format", "json"}).out);
  CHECK(aut_json["group"]["name"] == "C1");

  auto const dual = run({"dual", sample("lo2_ro2.txt")});
  CHECK(dual.code == cli::kExitOk);
  auto const d = build_dimonoid("LO2|RO2");
  CHECK(std::get<DiStructure>(parse_structure(dual.out)) == dual_dimonoid(d));
}

TEST_CASE("enumerate") {
  auto const summary = temp_path("summary.json");
  auto const r = run({"enumerate", "--order", "3", "--summary", summary.string()});
  CHECK(r.code == cli::kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 52);
  auto const s = nlohmann::json::parse(slurp(summary));
  CHECK(s["classes"] == 52);
  CHECK(s["labeled_count"] == 267);
  CHECK(r.err.find("enumerated 52") != std::string::npos);
  std::filesystem::remove(summary);

  auto const out = temp_path("classes.jsonl");
  CHECK(run({"enumerate", "--order", "2", "--kind", "doppelsemigroup", "--out", out.string()}).code
        == cli::kExitOk);
  auto const text = slurp(out);
  CHECK(std::count(text.begin(), text.end(), '\n') == 8);
  std::filesystem::remove(out);

  CHECK(run({"enumerate", "--order", "5"}).code == cli::kExitUsage);
  CHECK(run({"enumerate", "--order", "2", "--kind", "monoid"}).code == cli::kExitUsage);
  CHECK(run({"enumerate", "--order", "2", "--out", "/nonexistent/dir/x"}).code == cli::kExitUsage);
  CHECK(run({"enumerate"}).code == cli::kExitUsage);
}

TEST_CASE("worker counts do not change output") {
  auto const one  = run({"enumerate", "--order", "3", "--workers", "1"});
  auto const four = run({"enumerate", "--order", "3", "--workers", "4"});
  CHECK(one.out == four.out);
  auto const c1 = run({"classify", "--order", "3", "--format", "csv", "--workers", "1"});
  auto const c3 = run({"classify", "--order", "3", "--format", "csv", "--workers", "3"});
  CHECK(c1.out == c3.out);
  {
    EnvGuard env("3");
    CHECK(run({"enumerate", "--order", "3"}).out == one.out);
  }
  {
    EnvGuard env("zero");
    CHECK(run({"enumerate", "--order", "2"}).code == cli::kExitUsage);
    // the flag takes priority over the environment
    CHECK(run({"enumerate", "--order", "2", "--workers", "2"}).code == cli::kExitOk);
  }
  CHECK(run({"enumerate", "--order", "2", "--workers", "0"}).code == cli::kExitUsage);
}

TEST_CASE("classify and problem1") {
  auto const md = run({"classify", "--order", "2"});
  CHECK(md.code == cli::kExitOk);
  CHECK(md.out.rfind("| Name |", 0) == 0);
  auto const json = nlohmann::json::parse(run({"classify", "--order", "3", "--format", "json"}).out);
  CHECK(json["summary"]["total"] == 52);
  auto const p1 = nlohmann::json::parse(run({"problem1", "--format", "json"}).out);
  CHECK(p1["rows"].size() == 21);
  CHECK(run({"problem1", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"classify", "--order", "2", "--kind", "semigroup"}).code == cli::kExitOk);
}

TEST_CASE("usage") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  auto const help = run({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("enumerate") != std::string::npos);
}

TEST_CASE("the installed binary reports exit codes") {
  CHECK(shell("check \"" + sample("lo2_ro2.txt") + "\"") == 0);
  CHECK(shell("check \"" + sample("o3_o32_not_dimonoid.txt") + "\"") == 1);
  CHECK(shell("iso \"" + sample("lob3.txt") + "\" \"" + sample("lob3_relabeled.txt") + "\"") == 0);
  CHECK(shell("enumerate --order 9") == 2);
  CHECK(shell("--help") == 0);
}
