#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toroidal/errors.hpp"
#include "toroidal/rootsys.hpp"
#include "toroidal/weylmod.hpp"

using namespace toroidal;
using weylmod::CharTable;

namespace {

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBadConfig = 3,
  kSliceExhausted = 4,
  kNotSimplyLaced = 5,
  kOutput = 6,
  kInternal = 7,
};

const char* kExitHelp =
    "Exit codes:\n"
    "  0  success, every check passed\n"
    "  1  at least one check failed\n"
    "  2  command-line parse error\n"
    "  3  invalid configuration (type/rank, n, windows, suite or table name)\n"
    "  4  slice too small; the message names the minimal E_max\n"
    "  5  root system is not of type A, D or E\n"
    "  6  output file could not be written\n"
    "  7  internal error\n";

struct RunConfig {
  std::string type = "A";
  int rank = 1;
  int nvars = 2;
  int emax = 6;
  int order = 6;
  int window = 2;
  std::string mwindow = "-2:2";
  std::string format = "json";
  std::string out;
  std::uint32_t seed = 1;
  std::optional<int> rmax;
  int kmax = 3;
  int samples = 200;
  int per_family = 8;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ConfigError("--mwindow expects LO:HI, got '" + s + "'");
  try {
    std::size_t used = 0;
    int lo = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw ConfigError("bad --mwindow");
    std::string rest = s.substr(colon + 1);
    int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw ConfigError("bad --mwindow");
    if (lo > hi) throw ConfigError("--mwindow is empty: " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ConfigError("--mwindow expects LO:HI, got '" + s + "'");
  }
}

struct Context {
  explicit Context(const RunConfig& c)
      : cfg(c), space(fock::Lattice(rootsys::build_root_system(type_char(c), c.rank), c.nvars)), model(space) {
    if (c.emax < 0) throw ConfigError("--emax must be nonnegative");
    if (c.order < 0) throw ConfigError("--order must be nonnegative");
    if (c.window < 0) throw ConfigError("--window must be nonnegative");
    if (c.samples < 1 || c.per_family < 1) throw ConfigError("sample counts must be positive");
    mwin.assign(c.nvars - 1, parse_range(c.mwindow));
  }
  static char type_char(const RunConfig& c) {
    if (c.type.size() != 1) throw ConfigError("--type must be a single letter A-G");
    if (c.nvars < 2) throw ConfigError("--nvars must be at least 2");
    return c.type[0];
  }
  RunConfig cfg;
  fock::FockSpace space;
  weylmod::WeylModel model;
  std::vector<std::pair<int, int>> mwin;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  f << text;
  if (!f) throw std::ios_base::failure("cannot write " + cfg.out);
}

Report run_suite(const Context& ctx, const std::string& suite) {
  const RunConfig& c = ctx.cfg;
  weylmod::SuiteOptions opt;
  opt.slice.emax = c.emax;
  opt.slice.mwindow = ctx.mwin;
  opt.slice.samples = c.samples;
  opt.slice.per_family = c.per_family;
  opt.slice.seed = c.seed;
  opt.rmax = c.rmax.value_or(-1);
  opt.kmax = c.kmax;
  opt.order = c.order;
  opt.window = c.window;
  return weylmod::run_suite(ctx.model, suite, opt);
}

CharTable make_table(const Context& ctx, const std::string& which) {
  const RunConfig& c = ctx.cfg;
  if (which == "L0") return weylmod::l_zero_char(ctx.space, c.order);
  if (which == "L0-closed-form") return weylmod::l_zero_closed_form(ctx.space, c.order);
  if (which == "Vfock") return weylmod::fock_character(ctx.space, c.order, ctx.mwin);
  if (which == "Wloc-spanning") return weylmod::spanning_character(ctx.space, c.order, c.window);
  if (which == "Wloc-local") return weylmod::local_fock_character(ctx.model, c.order, c.window);
  if (which == "closed-form") return weylmod::closed_form(ctx.space, c.order, c.window, true);
  throw ConfigError("unknown table '" + which + "'");
}

std::string fock_dims_csv(const Context& ctx) {
  const int n = ctx.cfg.nvars;
  series::Series ch = ctx.space.graded_character(ctx.cfg.emax, ctx.mwin).forget_weights();
  std::vector<std::vector<int>> cols;
  std::vector<int> m(n - 1);
  for (int i = 0; i < n - 1; ++i) m[i] = ctx.mwin[i].first;
  while (true) {
    cols.push_back(m);
    int i = n - 2;
    while (i >= 0 && m[i] == ctx.mwin[i].second) {
      m[i] = ctx.mwin[i].first;
      --i;
    }
    if (i < 0) break;
    ++m[i];
  }
  std::ostringstream os;
  os << "energy";
  for (const auto& col : cols) {
    os << ",m=(";
    for (int i = 0; i < n - 1; ++i) os << (i ? ";" : "") << col[i];
    os << ")";
  }
  os << "\n";
  for (int e = 0; e <= ctx.cfg.emax; ++e) {
    os << e;
    for (const auto& col : cols) {
      std::vector<int> exp{e};
      exp.insert(exp.end(), col.begin(), col.end());
      os << "," << to_string(ch.coeff(exp));
    }
    os << "\n";
  }
  return os.str();
}

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--type", c.type, "Root system type letter")->capture_default_str();
  app->add_option("--rank", c.rank, "Root system rank")->capture_default_str();
  app->add_option("--nvars", c.nvars, "Number of loop variables n (>= 2)")->capture_default_str();
  app->add_option("--emax", c.emax, "Energy bound of the Fock slice")->capture_default_str();
  app->add_option("--order", c.order, "q-order of character tables")->capture_default_str();
  app->add_option("--window", c.window, "Degree bound for q2..qn in local-module tables")->capture_default_str();
  app->add_option("--mwindow", c.mwindow, "m-bar window LO:HI, applied to every slot")->capture_default_str();
  app->add_option("--out", c.out, "Write output to this file instead of stdout");
  app->add_option("--seed", c.seed, "Seed for sampled relations")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toroidal Weyl module toolkit: verification suites and character tables"};
  app.footer(kExitHelp);
  app.require_subcommand(1);
  RunConfig cfg;
  std::string suite;
  std::string which;

  auto* verify = app.add_subcommand("verify", "Run a verification suite; JSON lines, one check per line");
  add_common(verify, cfg);
  verify->add_option("suite_pos", suite,
                     "brackets | presentation | highest-weight | lemma-action | garland | characters | symfun | "
                     "automorphism | all");
  verify->add_option("--suite", suite, "Same as the positional argument");
  verify->add_option("--rmax", cfg.rmax, "Largest r (garland: 3, lemma-action: 6)");
  verify->add_option("--kmax", cfg.kmax, "Largest |a| in lemma-action")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Sampled pairs for brackets / automorphism")->capture_default_str();
  verify->add_option("--per-family", cfg.per_family, "Sampled instances per relation family")->capture_default_str();

  auto* chr = app.add_subcommand("char", "Emit a character table");
  add_common(chr, cfg);
  chr->add_option("table", which, "L0 | L0-closed-form | Vfock | Wloc-spanning | Wloc-local | closed-form")->required();
  chr->add_option("--format", cfg.format, "json | csv")->capture_default_str();

  auto* dims = app.add_subcommand("fock-dims", "Dimensions of V(0) by energy (rows) and m-bar (columns)");
  add_common(dims, cfg);
  dims->add_option("--format", cfg.format, "csv (table) | json (character series)");

  auto* sym = app.add_subcommand("symfun-check", "Symmetric-function identity suite");
  sym->add_option("--out", cfg.out, "Write output to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*sym) {
      Report r = weylmod::symfun_check();
      emit(cfg, r.to_jsonl());
      return r.passed() ? kOk : kCheckFailed;
    }
    Context ctx(cfg);
    if (*verify) {
      if (suite.empty()) throw ConfigError("verify needs a suite name");
      Report r = run_suite(ctx, suite);
      emit(cfg, r.to_jsonl());
      return r.passed() ? kOk : kCheckFailed;
    }
    if (*chr) {
      CharTable t = make_table(ctx, which);
      if (cfg.format == "json") {
        emit(cfg, t.to_json() + "\n");
      } else if (cfg.format == "csv") {
        emit(cfg, t.to_csv());
      } else {
        throw ConfigError("--format must be json or csv");
      }
      return kOk;
    }
    if (*dims) {
      if (dims->count("--format") == 0 || cfg.format == "csv") {
        emit(cfg, fock_dims_csv(ctx));
      } else if (cfg.format == "json") {
        emit(cfg, ctx.space.graded_character(cfg.emax, ctx.mwin).to_json() + "\n");
      } else {
        throw ConfigError("--format must be json or csv");
      }
      return kOk;
    }
  } catch (const SliceExhausted& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kSliceExhausted;
  } catch (const NotSimplyLaced& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kNotSimplyLaced;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return kOutput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
