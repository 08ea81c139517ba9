#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scalg/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Full centres of module algebras over finite-dimensional Hopf algebras"};
  app.require_subcommand(1);
  std::string file;
  std::string out;

  auto* verify = app.add_subcommand("verify", "Run every applicable axiom suite");
  verify->add_option("file", file, "Input .scalg document")->required();
  auto* centre = app.add_subcommand("centre", "Compute the full centre and its YD structure");
  centre->add_option("file", file, "Input .scalg document")->required();
  centre->add_option("--out", out, "Write the centre as a ydalgebra document");
  auto* dbl = app.add_subcommand("double", "Build and verify the Drinfeld double");
  dbl->add_option("file", file, "Input .scalg document")->required();
  auto* cross = app.add_subcommand("crosscheck", "Run the cross-pipeline oracles");
  cross->add_option("file", file, "Input .scalg document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  std::vector<std::string> args{file};
  if (!out.empty()) {
    args.push_back("--out");
    args.push_back(out);
  }
  auto result = scalg::run(command, args);
  std::cout << result.text;
  return result.exit_code;
}
