#include <doctest.h>

#include <sym3inv/cli.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using sym3::cli::Outcome;
using nlohmann::json;

namespace {

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "sym3inv");
  return sym3::cli::run(args);
}

json report(const Outcome& o) { return json::parse(o.out); }

// Writes a tensor file under the temp directory and removes it on scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& body) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() / ("sym3inv_cli_test_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << body;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

const char* kL6 =
    R"({"format":"sym3-v1","field":"rational","components":["3/5","0","0","6/5","0","-4/5","0","1/2","0","-1/2"]})";

}  // namespace

TEST_CASE("witness L6 reports the exact values and passes") {
  const auto o = run({"witness", "--case", "L6"});
  REQUIRE(o.exit_code == 0);
  const json r = report(o);
  CHECK(r["command"] == "witness");
  CHECK(r["pass"] == true);
  CHECK(r["results"]["checks"].size() == 11);
  for (const auto& c : r["results"]["checks"]) CHECK(c["pass"] == true);
  CHECK(r["results"]["invariants"]["I4"] == "37/2");
  CHECK(r["results"]["invariants"]["L6"] == "-2");
  CHECK(r.contains("wall_time_seconds"));
  CHECK(r["parameters"]["case"] == "L6");
}

TEST_CASE("every witness case passes") {
  for (const char* c : {"L6", "J6", "L4", "K4", "M6", "J4"}) {
    INFO(c);
    CHECK(run({"witness", "--case", c}).exit_code == 0);
  }
}

TEST_CASE("witness options") {
  const auto k4 = report(run({"witness", "--case", "K4"}));
  for (const auto& c : k4["results"]["checks"]) CHECK(c["error"].get<double>() <= 1e-10);

  const auto m6 = run({"witness", "--case", "M6", "--a", "0.7071067811865476", "--b", "0.7071067811865476", "--c",
                       "0", "--d", "1"});
  CHECK(m6.exit_code == 0);
  CHECK(report(m6)["results"]["shares_reference_values"] == true);
  CHECK(std::abs(report(m6)["results"]["invariants"]["M6"].get<double>() - 625) <= 1e-9);

  const auto other = run({"witness", "--case", "M6", "--a", "1", "--b", "2", "--c", "3", "--d", "0.5"});
  CHECK(other.exit_code == 0);
  CHECK(report(other)["results"]["shares_reference_values"] == false);
  CHECK(report(other)["results"]["invariants"]["L4"] == 2250.0);  // 750 a b c d

  const auto j4 = run({"witness", "--case", "J4", "--theta", "0.785398163397448"});
  CHECK(j4.exit_code == 0);
  CHECK(std::abs(report(j4)["results"]["samples"][0]["M6"].get<double>() - 2.25) <= 1e-9);

  CHECK(run({"witness", "--case", "J4", "--theta", "4"}).exit_code == sym3::cli::kUsage);
  CHECK(run({"witness", "--case", "L6", "--theta", "1"}).exit_code == sym3::cli::kUsage);
  CHECK(run({"witness", "--case", "M6", "--a", "1"}).exit_code == sym3::cli::kUsage);
  CHECK(run({"witness", "--case", "Q7"}).exit_code == sym3::cli::kUsage);
}

TEST_CASE("J4 family reports the printed M6 closed form as disagreeing without failing") {
  const auto o = run({"witness", "--case", "J4"});
  CHECK(o.exit_code == 0);
  const auto forms = report(o)["results"]["printed_closed_forms"];
  CHECK(forms["J4"]["agrees"] == true);
  CHECK(forms["M6"]["agrees"] == false);
}

TEST_CASE("verify-syzygies: five zero residuals") {
  const auto o = run({"verify-syzygies", "--samples", "100", "--seed", "7"});
  REQUIRE(o.exit_code == 0);
  const auto rel = report(o)["results"]["relations"];
  REQUIRE(rel.size() == 5);
  for (const auto& r : rel) CHECK(r["max_abs_residual"] == "0");
}

TEST_CASE("invariants: exact and decimal output, error exit codes") {
  TempFile l6(kL6);
  const auto exact = run({"invariants", l6.path(), "--exact"});
  REQUIRE(exact.exit_code == 0);
  CHECK(report(exact)["results"]["invariants"]["I4"] == "37/2");
  const auto dec = run({"invariants", l6.path()});
  CHECK(report(dec)["results"]["invariants"]["I4"] == 18.5);

  TempFile nine(R"({"format":"sym3-v1","field":"rational","components":["1","2","3","4","5","6","7","8","9"]})");
  const auto bad = run({"invariants", nine.path()});
  CHECK(bad.exit_code == sym3::cli::kMalformedInput);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());

  TempFile not_json("{ components: ");
  CHECK(run({"invariants", not_json.path()}).exit_code == sym3::cli::kMalformedInput);

  TempFile flt(R"({"format":"sym3-v1","field":"float","components":[1,2,3,4,5,6,7,8,9,10]})");
  const auto mismatch = run({"invariants", flt.path(), "--exact"});
  CHECK(mismatch.exit_code == sym3::cli::kFieldMismatch);
  CHECK(mismatch.out.empty());
  CHECK(run({"invariants", flt.path()}).exit_code == 0);

  CHECK(run({"invariants", "/nonexistent/file.json"}).exit_code == sym3::cli::kUnreadableFile);
}

TEST_CASE("usage errors and help") {
  CHECK(run({"transmogrify"}).exit_code == sym3::cli::kUsage);
  CHECK(run({}).exit_code == sym3::cli::kUsage);
  CHECK(run({"verify-syzygies", "--samples", "10"}).exit_code == sym3::cli::kUsage);  // no --seed
  CHECK(run({"discover", "--degree", "10"}).exit_code == sym3::cli::kUsage);
  CHECK(run({"prop31"}).exit_code == sym3::cli::kUsage);
  CHECK(run({"isotropy-check"}).exit_code == sym3::cli::kUsage);
  CHECK(run({"discover", "--basis", "12", "--seed", "1"}).exit_code == sym3::cli::kUsage);
  CHECK(run({"discover", "--degree", "7", "--seed", "1"}).exit_code == sym3::cli::kUsage);

  const auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("Exit codes") != std::string::npos);
  CHECK(help.out.find("field mismatch") != std::string::npos);
}

TEST_CASE("decompose and reconstruct") {
  TempFile l6(kL6);
  const auto d = report(run({"decompose", l6.path()}));
  CHECK(d["results"]["vector"] == json::array({"1", "0", "0"}));
  CHECK(d["results"]["deviator"]["D133"] == "-1");
  CHECK(d["pass"] == true);

  const auto r = report(run({"reconstruct", l6.path()}));
  CHECK(r["results"]["I8"]["direct"] == "-9");
  CHECK(r["results"]["I8"]["difference"] == "0");
  CHECK(r["results"]["K6"]["difference"] == "0");

  TempFile pure_d(R"({"format":"sym3-v1","field":"rational","components":["1","0","0","0","0","-1","0","0","0","0"]})");
  const auto deg = report(run({"reconstruct", pure_d.path()}));
  CHECK(deg["results"]["degenerate"]["J2_zero"] == true);
  CHECK(deg["results"]["degenerate"]["K6_denominator_zero"] == true);
  CHECK(deg["pass"] == true);
}

TEST_CASE("discover, isotropy-check and prop31 reports") {
  const auto d = report(run({"discover", "--basis", "13", "--degree", "10", "--seed", "1"}));
  CHECK(d["results"]["relation_count"] == 2);
  CHECK(d["results"]["builtin_relations_in_span"]["I8-elimination"] == true);
  CHECK(d["results"]["builtin_relations_in_span"]["K6-elimination"] == true);
  CHECK(d["pass"] == true);

  const auto iso = run({"isotropy-check", "--seed", "1", "--samples", "100"});
  CHECK(iso.exit_code == 0);

  const auto failing = run({"prop31", "--seed", "1", "--starts", "1", "--iters", "1", "--samples", "0"});
  CHECK(failing.exit_code == sym3::cli::kCheckFailed);
  CHECK(report(failing)["pass"] == false);
}

TEST_CASE("reports are deterministic apart from wall time") {
  const auto strip = [](Outcome o) {
    json r = report(o);
    r.erase("wall_time_seconds");
    return r.dump();
  };
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify-syzygies", "--samples", "20", "--seed", "3"},
        std::vector<std::string>{"prop31", "--seed", "4", "--starts", "5", "--iters", "50", "--samples", "100"},
        std::vector<std::string>{"discover", "--degree", "6", "--seed", "2"},
        std::vector<std::string>{"witness", "--case", "J4"}}) {
    CHECK(strip(run(args)) == strip(run(args)));
  }
}
