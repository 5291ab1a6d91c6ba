// Drives the installed binary through its subcommands and asserts the exit
// code contract: 0 success, 1 input error, 2 infeasible, 3 mismatch,
// 4 self-test failure. Invoke with the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  } else {
    std::cout << "ok: " << what << "\n";
  }
}

int run(const std::string& command) {
  const int status = std::system(command.c_str());
#ifdef _WIN32
  return status;
#else
  return WEXITSTATUS(status);
#endif
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_exit_codes <subcluster-binary>\n";
    return 2;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";
  const fs::path dir = fs::temp_directory_path() / "subcluster_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto at = [&dir](const char* name) { return (dir / name).string(); };
  const std::string quiet = " > " + at("stdout.txt") + " 2> " + at("stderr.txt");

  // no subcommand -> input error
  expect(run(bin + quiet) == 1, "bare invocation is an input error");

  // a small two-component instance: counterexample generator, saved to disk
  const std::string instance = at("instance.json");
  expect(run(bin + " counterexample --n 12 --t 0.5 --eps 0.01 --k 4 --threshold 10 --out " +
             at("ce.json") + " --save-instance " + instance + quiet) == 0,
         "counterexample at a clear ratio exits 0");
  expect(fs::exists(instance), "counterexample saves the instance file");
  expect(fs::exists(at("ce.json")), "counterexample writes its report");

  // an unmeetable threshold flips the verdict to a mismatch
  expect(run(bin + " counterexample --n 12 --t 0.5 --eps 0.01 --k 4 --threshold 1e15 --out " +
             at("ce2.json") + quiet) == 3,
         "counterexample below threshold exits 3");

  // cluster: feasible run
  const std::string report = at("report.json");
  expect(run(bin + " cluster --instance " + instance + " --algo agsa --k 3 --out " + report +
             quiet) == 0,
         "feasible clustering exits 0");

  // brute force is at least as cheap on the same instance
  expect(run(bin + " cluster --instance " + instance + " --algo brute --k 3 --out " +
             at("brute.json") + quiet) == 0,
         "brute-force clustering exits 0");
  {
    const auto fast = nlohmann::json::parse(slurp(report));
    const auto best = nlohmann::json::parse(slurp(at("brute.json")));
    expect(best["cost"].get<double>() <= fast["cost"].get<double>() + 1e-9,
           "brute-force cost lower-bounds the greedy cost");
  }

  // infeasible k (max_k for n=12, t=0.5 is 7)
  expect(run(bin + " cluster --instance " + instance + " --algo agsa --k 60 --out " +
             at("infeasible.json") + quiet) == 2,
         "k beyond the feasibility range exits 2");
  {
    const auto doc = nlohmann::json::parse(slurp(at("infeasible.json")));
    expect(doc["feasible"] == false && doc["certificate"].is_null(),
           "infeasible run still writes a report with a null certificate");
  }

  // unknown algorithm / unreadable instance -> input errors
  expect(run(bin + " cluster --instance " + instance + " --algo nope --out " + at("x.json") +
             quiet) == 1,
         "unknown algorithm exits 1");
  expect(run(bin + " cluster --instance " + at("missing.json") + " --algo gsa --out " +
             at("x.json") + quiet) == 1,
         "missing instance file exits 1");

  // verify: clean report passes, tampered report fails
  expect(run(bin + " verify --instance " + instance + " --report " + report + quiet) == 0,
         "verification of our own report exits 0");
  {
    auto doc = nlohmann::json::parse(slurp(report));
    doc["cost"] = doc["cost"].get<double>() + 5.0;
    std::ofstream out(at("tampered.json"));
    out << doc.dump(2) << "\n";
  }
  expect(run(bin + " verify --instance " + instance + " --report " + at("tampered.json") +
             quiet) == 3,
         "tampered cost exits 3");

  // selftest: tiny battery, deterministic stdout, guarded n-max
  const std::string selftest_cmd =
      bin + " selftest --n-max 6 --seeds 2 --k-max 3";
  expect(run(selftest_cmd + " > " + at("st1.txt") + " 2> " + at("e1.txt")) == 0,
         "small self-test battery exits 0");
  expect(run(selftest_cmd + " > " + at("st2.txt") + " 2> " + at("e2.txt")) == 0,
         "self-test battery is repeatable");
  expect(slurp(at("st1.txt")) == slurp(at("st2.txt")),
         "self-test stdout is byte-identical across runs");
  expect(run(bin + " selftest --n-max 13" + quiet) == 1,
         "n-max beyond the enumeration guard is refused");

  std::cout << (g_failures == 0 ? "all CLI checks passed" : "CLI checks FAILED") << "\n";
  return g_failures == 0 ? 0 : 1;
}
