// spinweave: batch runner for spin-network transfer, metrology and gate
// experiments.
//
//   spinweave run freqscan --n 8 --grid 256 --coupling-disorder 0.4 --seed 7 --out scan
//   spinweave emit-network rotation --phases 1,2,3 --out rot.json
//   spinweave load-network rot.json
//
// Exit codes: 0 success, 2 invalid configuration or malformed file,
// 3 numerical flag (leakage, ambiguous bit, incomplete arrival).

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "runner.hpp"

namespace sw = spinweave;
namespace cli = spinweave::cli;

namespace {

void add_model_options(CLI::App& app, cli::RunConfig& c) {
  app.add_option("--n", c.n, "chain length N (or segment length for block)")->check(CLI::PositiveNumber);
  app.add_option("--lambda", c.lambda, "coupling scale lambda")->check(CLI::PositiveNumber);
  app.add_option("--phi", c.phi, "flux or holonomy phi");
  app.add_option("--theta", c.theta, "holonomy or linked-chain theta");
  app.add_option("--phases", c.phases, "beta,gamma,delta of the rotation network")->delimiter(',');
  app.add_option("--R", c.link, "link index R (1..N-1)")->check(CLI::PositiveNumber);
}

void emit(const cli::RunResult& r, const std::string& out) {
  const std::string summary = r.summary.dump(2) + "\n";
  if (!out.empty()) {
    sw::write_text_file(out + ".csv", sw::records_to_csv(r.records));
    sw::write_text_file(out + ".json", summary);
  }
  std::cout << summary;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-network transfer, metrology and gate experiments"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file with [run] options");

  cli::RunConfig cfg;
  auto* run = app.add_subcommand("run", "run one experiment, write <out>.csv and <out>.json");
  run->add_option("experiment", cfg.experiment, "experiment name")
      ->required()
      ->check(CLI::IsMember(cli::experiment_names()));
  add_model_options(*run, cfg);
  run->add_option("--kappa", cfg.kappa, "gradient strength kappa");
  run->add_option("--omega", cfg.omega, "solid angle; sets kappa = lambda/tan(omega/2)");
  run->add_option("--bits", cfg.bits, "rounds of chain-length bit extraction")->check(CLI::Range(1, 30));
  run->add_option("--grid", cfg.grid, "sweep points")->check(CLI::PositiveNumber);
  run->add_option("--timing-jitter", cfg.timing_jitter, "timing error fraction")->check(CLI::Range(0.0, 0.999999));
  run->add_option("--coupling-disorder", cfg.coupling_disorder, "coupling error fraction")
      ->check(CLI::Range(0.0, 0.999999));
  run->add_option("--offset", cfg.offset, "uniform field offset b");
  run->add_option("--seed", cfg.seed, "base seed");
  run->add_option("--out", cfg.out, "output prefix");
  run->add_option("--time", cfg.time, "evolution time (transfer, gates) or total time T (holonomy)");
  run->add_option("--steps", cfg.steps, "time steps for the adiabatic run")->check(CLI::PositiveNumber);
  run->add_option("--pair", cfg.pair, "1-based sites i,j of the two excitations")->delimiter(',');
  run->add_option("--max-n", cfg.max_n, "largest chain length the frequency search considers")
      ->check(CLI::Range(2, 4096));
  run->add_option("--network", cfg.network, "network JSON for transfer");

  cli::RunConfig net_cfg;
  std::string builder, net_out;
  auto* emit_net = app.add_subcommand("emit-network", "write a network JSON file");
  emit_net->add_option("builder", builder, "network builder")->required()->check(CLI::IsMember(cli::builder_names()));
  add_model_options(*emit_net, net_cfg);
  emit_net->add_option("--out", net_out, "output file (stdout when omitted)");

  std::string load_path;
  auto* load_net = app.add_subcommand("load-network", "validate a network JSON file");
  load_net->add_option("file", load_path, "network JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::invalid_config;
  }

  try {
    if (*run) {
      const cli::RunResult r = cli::run(cfg);
      emit(r, cfg.out);
      return r.exit_code;
    }
    if (*emit_net) {
      const sw::NetworkSpec spec = cli::build_named_network(builder, net_cfg);
      if (net_out.empty())
        std::cout << sw::network_to_json(spec).dump(2) << "\n";
      else
        sw::save_network(net_out, spec);
      return cli::ok;
    }
    const sw::NetworkSpec spec = sw::load_network(load_path);
    const sw::SubspaceOperator h = sw::assemble(spec);
    std::cout << sw::json{{"schema", cli::summary_schema},
                          {"n_sites", spec.n_sites()},
                          {"edges", spec.edges().size()},
                          {"ports", sw::network_to_json(spec)["ports"]},
                          {"hermiticity_defect", sw::hermiticity_defect(h.matrix())}}
                     .dump(2)
              << "\n";
    return cli::ok;
  } catch (const sw::Error& e) {
    std::cerr << "spinweave: " << e.what() << "\n";
    return cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "spinweave: " << e.what() << "\n";
    return cli::invalid_config;
  }
}
