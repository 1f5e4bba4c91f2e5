// Golden-file regression tests for the CLI: each case runs the binary with a
// fixed flag set and compares the JSON report byte for byte against the file
// under tests/golden/. Determinism (two identical runs, identical bytes) is
// part of the check.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int failures = 0;

void expect_golden(const std::string& name, const std::string& args,
                   int want_exit) {
  RunResult first = run(args);
  RunResult second = run(args);
  std::string golden_path = std::string(GOLDEN_DIR) + "/" + name + ".json";
  std::string want = read_file(golden_path);
  bool ok = true;
  if (first.exit_code != want_exit) {
    std::cout << "FAIL " << name << ": exit code " << first.exit_code
              << ", expected " << want_exit << "\n";
    ok = false;
  }
  if (first.output != second.output) {
    std::cout << "FAIL " << name << ": output is not deterministic\n";
    ok = false;
  }
  if (want.empty()) {
    std::cout << "FAIL " << name << ": missing golden file " << golden_path
              << "\n";
    ok = false;
  } else if (first.output != want) {
    std::cout << "FAIL " << name << ": output differs from " << golden_path
              << "\n";
    ok = false;
  }
  if (ok) {
    std::cout << "PASS " << name << "\n";
  } else {
    ++failures;
  }
}

void expect_exit(const std::string& name, const std::string& args,
                 int want_exit) {
  RunResult r = run(args);
  if (r.exit_code == want_exit) {
    std::cout << "PASS " << name << "\n";
  } else {
    std::cout << "FAIL " << name << ": exit code " << r.exit_code
              << ", expected " << want_exit << "\n";
    ++failures;
  }
}

}  // namespace

int main() {
  expect_golden("cohomology_l_sl2_w3",
                "cohomology --variant l --g sl2 --window 3 --format json", 0);
  expect_golden("cohomology_frakw_w3",
                "cohomology --variant frak-w --window 3 --format json", 0);
  expect_golden("cohomology_frakl_sl2_w3",
                "cohomology --variant frak-l --g sl2 --window 3 --format json",
                0);
  expect_golden("verify_lhat_sl2_w2",
                "verify --variant l-hat --g sl2 --window 2 --max-k 2 "
                "--format json",
                0);
  expect_golden("module_trivial_w2",
                "module --lambda 1/2 --v trivial --g sl2 --window 2 "
                "--guard 1 --check-omega --format json",
                0);
  expect_golden("dbar_r4", "dbar --range 4 --format json", 0);
  expect_golden("lemma22_sl2_k2",
                "lemma22 --g sl2 --kmax 2 --imax 2 --format json", 0);

  // exit-code contract
  expect_exit("bad_window", "verify --variant l-hat --g sl2 --window 0", 2);
  expect_exit("bad_gspec", "verify --variant l-hat --g nosuch --window 2", 2);
  expect_exit("bad_cohomology_window",
              "cohomology --variant l --g sl2 --window 2", 2);
  expect_exit("centerful_cohomology",
              "cohomology --variant l-hat --g sl2 --window 3", 2);
  expect_exit("bad_lambda", "module --lambda 0.5 --v trivial --g sl2", 2);

  std::cout << (failures == 0 ? "GOLDEN: all cases pass" : "GOLDEN: failures")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
