#include <iostream>

#include "cyclerad/cli/config.hpp"
#include "cyclerad/cli/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Geometrically localized homology cycles under the l2-radius"};
  cyclerad::cli::RunConfig cfg;
  try {
    cfg = cyclerad::cli::parse_args(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cyclerad::cli::kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cyclerad::cli::kInputError;
  }
  return cyclerad::cli::run(cfg);
}
