// gibbsmix: point evaluations, figure sweeps and the verification suite.
// Talks to the engine exclusively through the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gibbs/gibbs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitVerify = 3;

int exit_code_for(gibbs_status status) {
  switch (status) {
    case GIBBS_OK: return kExitOk;
    case GIBBS_ERR_INVALID_ARGUMENT:
    case GIBBS_ERR_IO: return kExitUsage;
    default: return kExitNumeric;
  }
}

int fail(gibbs_status status) {
  std::cerr << "gibbsmix: " << gibbs_status_name(status) << ": " << gibbs_last_error()
            << '\n';
  return exit_code_for(status);
}

std::string fmt(double x) {
  char buf[64];
  if (gibbs_format_number(x, buf, sizeof buf) != GIBBS_OK) return "nan";
  return buf;
}

struct ScenarioFlags {
  int n = 2;
  std::string colors = "with";
  std::string stat = "all";
};

gibbs_labels labels_of(const std::string& s) {
  return s == "without" ? GIBBS_WITHOUT_COLORS : GIBBS_WITH_COLORS;
}

// Reads flat key=value lines; '#' starts a comment.
std::optional<std::vector<std::pair<std::string, std::string>>> read_config(
    const std::string& path, std::string& error) {
  std::ifstream in(path);
  if (!in) {
    error = "cannot read config file '" + path + "'";
    return std::nullopt;
  }
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      error = path + ":" + std::to_string(lineno) + ": expected key=value";
      return std::nullopt;
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

const std::map<std::string, std::set<std::string>> kFlagsBySubcommand = {
    {"point", {"n", "colors", "stat", "beta", "length"}},
    {"sweep",
     {"n", "colors", "beta", "length", "sweep", "from", "to", "steps", "spacing", "out",
      "threads"}},
    {"verify", {"profile", "oracle-nmax"}},
};

// Splices config values in front of the user's own flags; with TakeLast
// semantics the command line wins on conflict.
std::optional<std::vector<std::string>> expand_config(std::vector<std::string> args,
                                                      std::string& error) {
  std::optional<std::string> config;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!config) return rest;
  const auto entries = read_config(*config, error);
  if (!entries) return std::nullopt;
  std::size_t sub = 1;
  while (sub < rest.size() && !kFlagsBySubcommand.count(rest[sub])) ++sub;
  if (sub == rest.size()) return rest;
  const auto& known = kFlagsBySubcommand.at(rest[sub]);
  std::vector<std::string> injected;
  for (const auto& [key, value] : *entries) {
    bool anywhere = false;
    for (const auto& [name, flags] : kFlagsBySubcommand) anywhere |= flags.count(key) > 0;
    if (!anywhere) {
      error = "unknown config key '" + key + "'";
      return std::nullopt;
    }
    if (!known.count(key)) continue;
    injected.push_back("--" + key);
    injected.push_back(value);
  }
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(sub) + 1, injected.begin(),
              injected.end());
  return rest;
}

int run_point(const ScenarioFlags& sc, double beta, double length) {
  std::vector<std::pair<std::string, gibbs_statistics>> stats;
  if (sc.stat == "all") {
    stats = {{"bose", GIBBS_BOSE}, {"fermi", GIBBS_FERMI}};
    if (sc.colors == "with") stats.emplace_back("dist", GIBBS_DISTINGUISHABLE);
  } else if (sc.stat == "bose") {
    stats = {{"bose", GIBBS_BOSE}};
  } else if (sc.stat == "fermi") {
    stats = {{"fermi", GIBBS_FERMI}};
  } else {
    stats = {{"dist", GIBBS_DISTINGUISHABLE}};
  }

  std::string out;
  bool header = false;
  for (const auto& [name, stat] : stats) {
    gibbs_report* report = nullptr;
    const gibbs_status st =
        gibbs_report_create(sc.n, labels_of(sc.colors), stat, beta, length, &report);
    if (st != GIBBS_OK) return fail(st);
    auto get = [&](gibbs_report_field f) {
      double v = 0.0;
      gibbs_report_get(report, f, &v);
      return v;
    };
    if (!header) {
      out += "n=" + std::to_string(sc.n) + "\ncolors=" + sc.colors + "\n";
      out += "beta=" + fmt(get(GIBBS_FIELD_BETA)) + "\n";
      out += "length=" + fmt(get(GIBBS_FIELD_LENGTH)) + "\n";
      out += "q=" + fmt(get(GIBBS_FIELD_Q)) + "\n";
      header = true;
    }
    for (int f = GIBBS_FIELD_Z_UNMIXED; f < GIBBS_FIELD_COUNT; ++f) {
      const auto field = static_cast<gibbs_report_field>(f);
      out += name + "." + gibbs_report_field_name(field) + "=" + fmt(get(field)) + "\n";
    }
    gibbs_report_destroy(report);
  }
  std::cout << out;
  return kExitOk;
}

int run_verify(const std::string& profile, int oracle_n_max) {
  gibbs_verification* v = nullptr;
  const gibbs_status st = gibbs_verify_run(profile.c_str(), oracle_n_max, &v);
  if (st != GIBBS_OK) return fail(st);
  int failed = 0;
  std::printf("%-4s  %-56s  %-18s  %-18s  %s\n", "ok", "check", "measured", "threshold",
              "detail");
  for (std::size_t i = 0; i < gibbs_verification_count(v); ++i) {
    gibbs_check c{};
    gibbs_verification_get(v, i, &c);
    failed += c.passed ? 0 : 1;
    std::printf("%-4s  %-56s  %-18s  %-18s  %s\n", c.passed ? "PASS" : "FAIL", c.name,
                fmt(c.measured).c_str(), fmt(c.threshold).c_str(), c.detail);
  }
  std::printf("%d check(s) failed\n", failed);
  gibbs_verification_destroy(v);
  return failed == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  std::string config_error;
  auto args = expand_config(std::vector<std::string>(argv, argv + argc), config_error);
  if (!args) {
    std::cerr << "gibbsmix: " << config_error << '\n';
    return kExitUsage;
  }

  CLI::App app{"Mixing entropy and work for few-particle quantum gases"};
  app.name("gibbsmix");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--config", "Flat key=value file mirroring the flags")->type_name("FILE");

  const std::vector<std::string> stat_choices{"bose", "fermi", "dist", "all"};
  const std::vector<std::string> color_choices{"with", "without"};

  ScenarioFlags point_sc;
  double point_beta = 0.0;
  double point_length = 0.0;
  auto* point = app.add_subcommand("point", "Evaluate one (beta, l) point");
  point->add_option("--n", point_sc.n, "Particle number (even)")->capture_default_str();
  point->add_option("--colors", point_sc.colors, "Internal labels")
      ->check(CLI::IsMember(color_choices))
      ->capture_default_str();
  point->add_option("--stat", point_sc.stat, "Statistics")
      ->check(CLI::IsMember(stat_choices))
      ->capture_default_str();
  point->add_option("--beta", point_beta, "Inverse temperature")->required();
  point->add_option("--length", point_length, "Trap width")->required();

  ScenarioFlags sweep_sc;
  std::optional<double> sweep_beta;
  std::optional<double> sweep_length;
  std::string swept;
  double from = 0.0;
  double to = 0.0;
  int steps = 50;
  std::string spacing = "geometric";
  std::string out_path;
  int threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Sweep beta or l and write CSV");
  sweep->add_option("--n", sweep_sc.n, "Particle number (even)")->capture_default_str();
  sweep->add_option("--colors", sweep_sc.colors, "Internal labels")
      ->check(CLI::IsMember(color_choices))
      ->capture_default_str();
  sweep->add_option("--beta", sweep_beta, "Fixed inverse temperature (length sweeps)");
  sweep->add_option("--length", sweep_length, "Fixed trap width (beta sweeps)");
  sweep->add_option("--sweep", swept, "Swept parameter")
      ->check(CLI::IsMember({"beta", "length"}))
      ->required();
  sweep->add_option("--from", from, "Grid start")->required();
  sweep->add_option("--to", to, "Grid stop")->required();
  sweep->add_option("--steps", steps, "Grid points")->capture_default_str();
  sweep->add_option("--spacing", spacing, "Grid spacing")
      ->check(CLI::IsMember({"linear", "geometric"}))
      ->capture_default_str();
  sweep->add_option("--out", out_path, "Output CSV path")->required();
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string profile = "default";
  int oracle_n_max = 0;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--profile", profile, "Tolerance profile")
      ->check(CLI::IsMember({"default", "quick"}))
      ->capture_default_str();
  verify->add_option("--oracle-nmax", oracle_n_max, "Force the oracle level cutoff");

  try {
    std::vector<std::string> reversed(args->rbegin(), args->rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (point->parsed()) return run_point(point_sc, point_beta, point_length);

  if (sweep->parsed()) {
    gibbs_sweep_request req{};
    req.n_particles = sweep_sc.n;
    req.labels = labels_of(sweep_sc.colors);
    req.swept = swept == "beta" ? GIBBS_SWEEP_BETA : GIBBS_SWEEP_LENGTH;
    const std::optional<double>& fixed = swept == "beta" ? sweep_length : sweep_beta;
    if (!fixed) {
      std::cerr << "gibbsmix: sweeping " << swept << " needs --"
                << (swept == "beta" ? "length" : "beta") << '\n';
      return kExitUsage;
    }
    req.fixed = *fixed;
    req.start = from;
    req.stop = to;
    req.count = steps;
    req.spacing = spacing == "linear" ? GIBBS_SPACING_LINEAR : GIBBS_SPACING_GEOMETRIC;
    req.threads = threads;
    const gibbs_status st = gibbs_sweep_write_csv(&req, out_path.c_str());
    return st == GIBBS_OK ? kExitOk : fail(st);
  }

  return run_verify(profile, oracle_n_max);
}
