// One PASS/FAIL line per acceptance criterion. The last criterion runs the
// command-line `verify` end to end, so the CLI path is the first argument.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>

#include "checks.hpp"

namespace {

downup::verify::Outcome verify_command(const std::string& cli) {
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen((cli + " verify 2>&1").c_str(), "r");
  if (!pipe) return {false, "cannot start " + cli};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) return {false, "verify exited abnormally:\n" + out};
  if (out.find("FAIL ") != std::string::npos) return {false, "verify reported a failure:\n" + out};
  for (int k = 1; k <= 8; ++k)
    if (out.find("PASS criterion " + std::to_string(k) + ":") == std::string::npos)
      return {false, "verify output lacks criterion " + std::to_string(k)};
  if (elapsed.count() > 300) return {false, "verify took " + std::to_string(elapsed.count()) + " s"};
  std::size_t lines = 0;
  for (char c : out) lines += c == '\n';
  return {true, std::to_string(lines - 1) + " named checks in " + std::to_string(elapsed.count()) + " s"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: downup_acceptance <path to downup>\n";
    return 2;
  }
  auto checks = downup::verify::acceptance_checks();
  checks.push_back({"criterion 9: verify end to end under 5 minutes", [cli = std::string(argv[1])] {
                      return verify_command(cli);
                    }});

  int failed = 0;
  for (const auto& check : checks) {
    const auto r = downup::verify::run_check(check);
    failed += !r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << std::fixed << std::setprecision(2)
              << r.seconds << " s] " << r.detail << "\n";
  }
  std::cout << (checks.size() - failed) << "/" << checks.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
