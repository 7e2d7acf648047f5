// Command-line front end: interval signal in, amplitude-spectrum bounds out.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ivdft/run.hpp"

int main(int argc, char** argv) {
  using namespace ivdft;

  CLI::App app{"Bounds on the DFT amplitude spectrum of an interval-valued signal"};
  app.set_version_flag("--version", std::string(kToolVersion));

  RunConfig config;
  std::string input;
  std::string output;
  std::string schema = "lo-hi";
  std::size_t k_min = 0, k_max = 0;

  const std::map<std::string, RunMethod> methods{{"box", RunMethod::box},
                                                 {"selective", RunMethod::selective},
                                                 {"brute", RunMethod::brute},
                                                 {"both", RunMethod::both}};
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv},
                                                    {"json", OutputFormat::json}};

  app.add_option("--input,-i", input, "Input CSV, one sample per row")->required();
  app.add_option("--schema", schema, "Column layout: lo-hi, value-halfwidth or value")
      ->check(CLI::IsMember({"lo-hi", "value-halfwidth", "value"}))
      ->capture_default_str();
  auto* precision = app.add_option("--precision", "Half-width applied to every value (schema value)");
  app.add_option("--method,-m", config.method, "box, selective, brute or both")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case))
      ->default_str("selective");
  auto* kmin = app.add_option("--k-min", k_min, "First frequency index (default 1)");
  auto* kmax = app.add_option("--k-max", k_max, "Last frequency index (default N/2 - 1)");
  app.add_option("--format,-f", config.format, "csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("csv");
  app.add_flag("--plot", config.plot, "Also write <output>.svg with the bound curves");
  app.add_flag("--paper-compat-min", config.paper_compat_min,
               "Take the lower bound as the smallest hull-vertex norm");
  app.add_option("--mc-samples", config.mc_samples,
                 "Monte-Carlo samples for a verification report (0 disables)");
  app.add_option("--seed", config.seed, "Seed for Monte-Carlo sampling")->capture_default_str();
  app.add_option("--output,-o", output, "Output path; stdout when omitted");
  app.add_option("--workers", config.workers, "Worker threads, 0 = hardware concurrency")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  config.input = input;
  config.output = output;
  config.schema = *parse_schema(schema);
  if (*precision) config.precision = precision->as<double>();
  if (*kmin) config.k_min = k_min;
  if (*kmax) config.k_max = k_max;

  return run(config, std::cout, std::cerr);
}
