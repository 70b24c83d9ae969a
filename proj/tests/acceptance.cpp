// One line per acceptance criterion; exit status is nonzero if any fails.
// argv[1] is the path of the command-line tool, used for the determinism run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "toroidal/rootsys.hpp"
#include "toroidal/weylmod.hpp"

using namespace toroidal;
using namespace toroidal::weylmod;

namespace {

struct Instance {
  Instance(char t, int l, int n) : space(fock::Lattice(rootsys::build_root_system(t, l), n)), model(space) {}
  FockSpace space;
  WeylModel model;
};

std::string summary(const Report& r) {
  long long checked = 0;
  for (const auto& c : r.checks) checked += c.checked;
  for (const auto& c : r.checks) {
    if (!c.pass) return c.name + ": " + c.detail;
  }
  return std::to_string(r.checks.size()) + " checks, " + std::to_string(checked) + " cases";
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int failures = 0;

void line(int k, const std::string& title, bool pass, const std::string& detail, double secs) {
  if (!pass) ++failures;
  char t[32];
  std::snprintf(t, sizeof t, "%.1fs", secs);
  std::cout << "criterion " << k << " [" << (pass ? "PASS" : "FAIL") << "] " << title << " (" << t << "): " << detail
            << std::endl;
}

void run(int k, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::pair<bool, std::string> res;
  try {
    res = body();
  } catch (const std::exception& e) {
    res = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  line(k, title, res.first, res.second, secs);
}

std::pair<bool, std::string> from(const Report& r) { return {r.passed(), summary(r)}; }

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  Instance a1('A', 1, 2);

  run(1, "bracket fidelity, A1 n=2 E_max=6 m-bar in [-2,2], 200 pairs", [&] {
    SliceConfig cfg;
    auto t0 = std::chrono::steady_clock::now();
    Report r = bracket_check(a1.space, cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool enough = !r.checks.empty() && r.checks[0].checked >= 200LL * 1515;
    return std::pair<bool, std::string>{r.passed() && enough && secs < 120,
                                        summary(r) + (secs < 120 ? "" : ", over two minutes")};
  });

  run(2, "presentation R1-R9 on the same slice", [&] {
    SliceConfig cfg;
    return from(presentation_check(a1.model, cfg));
  });

  run(3, "highest-weight relations on v", [&] { return from(highest_weight_check(a1.model, 6)); });

  run(4, "lemma action, r <= 6, |a| <= 3, n = 2 and n = 3", [&] {
    Report r = lemma_action_check(a1.model, 6, 3);
    r.append(zhat_check(a1.model, 6, 3));
    Instance a1n3('A', 1, 3);
    r.append(lemma_action_check(a1n3.model, 6, 3));
    return from(r);
  });

  run(5, "character chain (a)-(c), A1 order 6 and A2 order 5", [&] {
    Report r = character_check(a1.model, 6, 2);
    Instance a2('A', 2, 2);
    r.append(character_check(a2.model, 5, 2));
    return from(r);
  });

  run(6, "Garland identities r = 1..3 and the bridge for s <= 8", [&] {
    Report r = garland_identity_check(a1.model, 3);
    r.append(garland_bridge_check(8));
    return from(r);
  });

  run(7, "symmetric-function identities", [&] { return from(symfun_check()); });

  run(8, "automorphism: 100 bracket pairs and composition", [&] {
    return from(automorphism_check(a1.space.algebra(), 100, 1));
  });

  run(9, "determinism of the full suite and character files", [&] {
    if (cli.empty()) return std::pair<bool, std::string>{false, "no command-line tool given"};
    std::vector<std::string> cmds{"verify all", "char L0 --format csv", "char Vfock --format json",
                                  "char Wloc-spanning --format json", "char closed-form --format csv",
                                  "fock-dims --format csv"};
    std::size_t bytes = 0;
    for (std::size_t i = 0; i < cmds.size(); ++i) {
      std::string out[2];
      for (int pass = 0; pass < 2; ++pass) {
        std::string path = "determinism_" + std::to_string(i) + "_" + std::to_string(pass) + ".out";
        std::string cmd = "\"" + cli + "\" " + cmds[i] + " --out " + path;
        int rc = std::system(cmd.c_str());
        if (rc != 0) return std::pair<bool, std::string>{false, "'" + cmds[i] + "' exited with " + std::to_string(rc)};
        out[pass] = slurp(path);
        std::remove(path.c_str());
      }
      if (out[0] != out[1] || out[0].empty()) {
        return std::pair<bool, std::string>{false, "'" + cmds[i] + "' differs between runs"};
      }
      bytes += out[0].size();
    }
    return std::pair<bool, std::string>{true, std::to_string(cmds.size()) + " outputs, " + std::to_string(bytes) +
                                                  " bytes each run, identical"};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
