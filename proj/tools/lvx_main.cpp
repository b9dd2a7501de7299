// Command line front end. Talks to the solver exclusively through the C
// API so the binary exercises the same surface external embedders get.
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "latticevortex.h"

namespace {

lvx_config* load_config(const std::string& path, const std::string& output_dir) {
  char err[512];
  lvx_config* cfg = nullptr;
  lvx_status st = lvx_config_load(path.c_str(), &cfg, err, sizeof err);
  if (st != LVX_OK) {
    std::fprintf(stderr, "lvx: %s: %s\n", lvx_status_name(st), err);
    return nullptr;
  }
  if (!output_dir.empty() &&
      lvx_config_set_output_dir(cfg, output_dir.c_str()) != LVX_OK) {
    std::fprintf(stderr, "lvx: bad output directory\n");
    lvx_config_free(cfg);
    return nullptr;
  }
  return cfg;
}

int cmd_run(const std::string& path, const std::string& output_dir, bool quiet) {
  lvx_config* cfg = load_config(path, output_dir);
  if (!cfg) return 1;
  char err[512];
  lvx_run_result* res = nullptr;
  lvx_status st = lvx_run(cfg, &res, err, sizeof err);
  lvx_config_free(cfg);
  if (st != LVX_OK) {
    std::fprintf(stderr, "lvx: %s: %s\n", lvx_status_name(st), err);
    return 1;
  }
  const int code = lvx_run_exit_code(res);
  if (code != 0)
    std::fprintf(stderr, "%s", lvx_run_summary(res));
  else if (!quiet)
    std::fprintf(stdout, "%s", lvx_run_summary(res));
  lvx_run_result_free(res);
  return code == 0 ? 0 : 1;
}

int cmd_verify(const std::string& path, bool quiet) {
  lvx_config* cfg = load_config(path, "");
  if (!cfg) return 1;
  char err[512];
  lvx_verify_result* res = nullptr;
  lvx_status st = lvx_verify(cfg, &res, err, sizeof err);
  lvx_config_free(cfg);
  if (st != LVX_OK) {
    std::fprintf(stderr, "lvx: %s: %s\n", lvx_status_name(st), err);
    return 1;
  }
  const int failures = lvx_verify_failures(res);
  if (!quiet || failures != 0)
    std::fprintf(failures ? stderr : stdout, "%s", lvx_verify_table(res));
  if (!quiet)
    std::fprintf(stdout, "%d/%d checks passed\n",
                 lvx_verify_checks(res) - failures, lvx_verify_checks(res));
  lvx_verify_result_free(res);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vortex solutions of discrete Chern-Simons and Abelian Higgs "
               "equations on finite lattice domains"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lvx_version()));

  std::string config_path, output_dir;
  bool quiet = false;

  CLI::App* run = app.add_subcommand("run", "solve and write artifacts");
  run->add_option("config", config_path, "JSON config file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("-o,--output-dir", output_dir, "override output directory");
  run->add_flag("-q,--quiet", quiet, "suppress the summary on success");

  CLI::App* verify = app.add_subcommand("verify", "run the property battery");
  verify->add_option("config", config_path, "JSON config file")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_flag("-q,--quiet", quiet, "only report failures");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(run)) return cmd_run(config_path, output_dir, quiet);
  return cmd_verify(config_path, quiet);
}
