#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sympindex/errors.hpp"
#include "sympindex/fixtures.hpp"
#include "sympindex/json_io.hpp"

/* Regenerates the shipped configuration files from the in-repo searches.
 * Output is byte-stable, so a diff against fixtures/ is a meaningful test. */
int main(int argc, char** argv) {
  if (const char* env = std::getenv("SYMPINDEX_PRECISION"))
    sympindex::set_default_precision(std::atoi(env));

  CLI::App app{"regenerate the bundled example configurations"};
  std::string out = "fixtures";
  app.add_option("--out", out, "output directory");
  CLI11_PARSE(app, argc, argv);

  try {
    std::filesystem::create_directories(out);
    for (const auto& f : sympindex::builtin_fixtures()) {
      auto path = std::filesystem::path(out) / (f.name + ".json");
      std::ofstream os(path, std::ios::binary);
      if (!os) throw sympindex::InputError("cannot write " + path.string());
      os << sympindex::config_to_json(f.cfg);
      std::cout << path.string() << "\n";
    }
  } catch (const sympindex::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
