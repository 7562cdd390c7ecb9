// End-to-end checks of the command-line surface: exit codes, certificate
// round-trips and byte-identical reruns.  argv[1] is the binary, argv[2]
// the fixture directory.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "stlogic/model.hpp"
#include "stlogic/parse.hpp"
#include "stlogic/semantics.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
  if (!ok) ++failures;
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& command) {
  const std::string wrapped = command + " 2>&1";
  FILE* pipe = popen(wrapped.c_str(), "r");
  if (!pipe) return {127, "popen failed"};
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : 128, output};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_test <binary> <fixtures-dir>\n";
    return 2;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";
  const std::string fixtures = std::string("\"") + argv[2] + "\"";
  const std::string fixtures_raw = argv[2];

  // Classical explosion holds: exit 0.
  expect(run(bin + " check --logic classical --mode st \"a, ~a => b\"").exit_code == 0,
         "classical explosion exits 0");

  // Minimal strict-tolerant witness fails with a certificate: exit 1.
  {
    const RunResult r =
        run(bin + " check --logic minimal --mode st --max-worlds 2 \"=> ~a -> (a -> b)\"");
    expect(r.exit_code == 1, "minimal witness exits 1");
    expect(r.output.find("fails") != std::string::npos, "verdict line mentions fails");
    expect(r.output.find("kind minimal") != std::string::npos, "certificate printed inline");
  }

  // Countermodel that does not exist within the bound: exit 2.
  expect(run(bin + " countermodel --logic intuitionistic --mode st --max-worlds 3 "
                   "\"a, ~a => b\"").exit_code == 2,
         "inconclusive countermodel search exits 2");

  // check (not refutation-seeking) reports holds-up-to-bound with exit 0.
  {
    const RunResult r = run(bin + " check --logic intuitionistic --mode st --max-worlds 3 "
                                  "\"a, ~a => b\"");
    expect(r.exit_code == 0, "bounded check with no countermodel exits 0");
    expect(r.output.find("holds-up-to-bound") != std::string::npos,
           "bounded verdict names the bound");
  }

  // Parse errors: exit 3.
  expect(run(bin + " check --logic classical --mode st \"a & => b\"").exit_code == 3,
         "malformed payload exits 3");
  expect(run(bin + " check --logic sorta --mode st \"=> a\"").exit_code == 3,
         "unknown logic exits 3");
  expect(run(bin + " eval no-such-file.model a").exit_code == 3, "missing model file exits 3");

  // Multi-succedent reduction self-check prints both verdicts.
  {
    const RunResult r = run(bin + " check --logic classical --mode st \"=> a, ~a\"");
    expect(r.exit_code == 0, "classical multi-succedent validity exits 0");
    expect(r.output.find("(reduced)") != std::string::npos, "reduced verdict reported");
  }

  // Certificate round-trip through --cert-out.
  {
    const std::filesystem::path cert =
        std::filesystem::temp_directory_path() / "stlogic_cert_test.model";
    std::filesystem::remove(cert);
    const RunResult r = run(bin + " countermodel --logic minimal --mode tarskian --max-worlds 2 "
                                  "\"=> ~~(~a -> (a -> b))\" --cert-out \"" +
                            cert.string() + "\"");
    expect(r.exit_code == 1, "countermodel written with exit 1");
    std::ifstream in(cert);
    expect(in.good(), "certificate file exists");
    if (in.good()) {
      const stlogic::Interpretation m = stlogic::load_model(in);
      expect(stlogic::validate(m).empty(), "certificate re-validates");
      expect(!stlogic::is_true(m, stlogic::parse_formula("~~(~a -> (a -> b))")),
             "certificate refutes the formula on reload");
    }
    std::filesystem::remove(cert);
  }

  // eval on a fixture model.
  {
    const RunResult r = run(bin + " eval " + fixtures + "/glivenko_witness.model" +
                            " \"~~(~a -> (a -> b))\"");
    expect(r.exit_code == 0, "eval exits 0");
    expect(r.output.find("w1 = 0") != std::string::npos, "eval prints per-world values");
    expect(r.output.find("true: no") != std::string::npos, "eval prints truth flag");
  }

  // Suite passes on the shipped fixtures and fails under the diagnostics.
  expect(run(bin + " suite --fixtures " + fixtures).exit_code == 0, "suite exits 0");
  expect(run(bin + " suite --fixtures " + fixtures + " --weaken-implication").exit_code == 1,
         "weakened implication suite exits 1");
  expect(run(bin + " suite --fixtures " + fixtures + " --pin-bottom").exit_code == 1,
         "pinned bot suite exits 1");

  // Determinism: identical invocations produce byte-identical output.
  {
    const std::string cmd = bin + " random-test --property reduction --trials 50 --seed 9";
    const RunResult first = run(cmd);
    const RunResult second = run(cmd);
    expect(first.exit_code == 0, "random-test reduction passes");
    expect(first.output == second.output, "random-test output is byte-identical across runs");
    const std::string check_cmd =
        bin + " check --logic minimal --mode st --max-worlds 2 \"=> ~a -> (a -> b)\"";
    expect(run(check_cmd).output == run(check_cmd).output,
           "check output is byte-identical across runs");
  }

  // Unknown property: exit 3.
  expect(run(bin + " random-test --property nonsense").exit_code == 3,
         "unknown property exits 3");

  std::error_code ec;
  std::filesystem::directory_iterator it(fixtures_raw, ec);
  expect(!ec, "fixtures directory is reachable");

  if (failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cout << failures << " cli check(s) failed\n";
  return 1;
}
