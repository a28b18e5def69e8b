// Command-line front end. Talks to the engine exclusively through the public C
// interface; all parsing of weights, rationals and configs happens behind it.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "fseries/fseries.h"

namespace {

constexpr int kUsageError = 2;

struct Args {
  std::string pair;
  std::string mu;
  std::string kappa = "auto";
  std::string cutoff = "auto";
  std::string tiebreak;
  std::string format = "text";
};

fs_pair* load_pair(const std::string& spec) {
  // a name with no path separator or .json suffix refers to the builtin set
  const bool looks_like_file =
      spec.find('/') != std::string::npos || spec.find(".json") != std::string::npos;
  fs_pair* pair = looks_like_file ? fs_pair_load_file(spec.c_str())
                                  : fs_pair_builtin(spec.c_str());
  if (!pair)
    std::fprintf(stderr, "error [%s]: %s\n", fs_last_error_kind(), fs_last_error());
  return pair;
}

int finish(int rc, char* out) {
  if (out) {
    std::fputs(out, stdout);
    fs_string_free(out);
  } else if (rc != 0) {
    std::fprintf(stderr, "error [%s]: %s\n", fs_last_error_kind(), fs_last_error());
  }
  return rc == 0 ? 0 : 1;
}

void add_common(CLI::App* cmd, Args& args, bool with_mu) {
  cmd->add_option("--pair", args.pair, "builtin pair name or config file path")
      ->required();
  if (with_mu)
    cmd->add_option("--mu", args.mu, "k-dominant integral weight, comma-separated t* coordinates")
        ->required();
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-type multiplicity tables for cohomologically induced families"};
  app.require_subcommand(1);
  Args args;

  CLI::App* describe = app.add_subcommand("describe", "print the validated pair data");
  add_common(describe, args, false);

  CLI::App* parabolic =
      app.add_subcommand("parabolic", "print the minimal parabolic split for mu");
  add_common(parabolic, args, true);
  parabolic->add_option("--tiebreak", args.tiebreak,
                        "comma-separated permutation of the t*-basis rows");

  CLI::App* table = app.add_subcommand("table", "k-type table with verdicts");
  add_common(table, args, true);
  table->add_option("--kappa", args.kappa, "highest weight in h* coordinates, or 'auto'");
  table->add_option("--cutoff", args.cutoff,
                    "norm cutoff as a rational, or 'auto' for 16*|mu+2rho|^2+16");
  table->add_option("--tiebreak", args.tiebreak,
                    "comma-separated permutation of the t*-basis rows");

  CLI::App* verify = app.add_subcommand("verify", "run the full check battery");
  add_common(verify, args, true);
  verify->add_option("--kappa", args.kappa, "highest weight in h* coordinates, or 'auto'");
  verify->add_option("--cutoff", args.cutoff,
                     "norm cutoff as a rational, or 'auto' for 16*|mu+2rho|^2+16");
  verify->add_option("--tiebreak", args.tiebreak,
                     "comma-separated permutation of the t*-basis rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  fs_pair* pair = load_pair(args.pair);
  if (!pair) return 1;

  char* out = nullptr;
  int rc = 0;
  if (describe->parsed()) {
    rc = fs_describe(pair, args.format.c_str(), &out);
  } else if (parabolic->parsed()) {
    rc = fs_parabolic(pair, args.mu.c_str(), args.tiebreak.c_str(), args.format.c_str(),
                      &out);
  } else if (table->parsed()) {
    rc = fs_table(pair, args.mu.c_str(), args.kappa.c_str(), args.cutoff.c_str(),
                  args.tiebreak.c_str(), args.format.c_str(), &out);
  } else {
    rc = fs_verify(pair, args.mu.c_str(), args.kappa.c_str(), args.cutoff.c_str(),
                   args.tiebreak.c_str(), args.format.c_str(), &out);
  }
  const int exit_code = finish(rc, out);
  fs_pair_free(pair);
  return exit_code;
}
