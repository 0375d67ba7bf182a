// analyze: run the commands of a scenario file and write a deterministic
// report (and optional per-stratum orbit CSVs).
//
//   analyze input.scn [--out report.txt] [--csv-dir DIR] [--seed N]
//
// Exit codes: 0 success, 1 bad input (parse/validation/IO), 2 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cstar/error.hpp"
#include "cstar/report.hpp"
#include "cstar/scenario.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) cstar::fail(cstar::Err::IOError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) cstar::fail(cstar::Err::IOError, "cannot write '" + path + "'");
  out << content;
  if (!out) cstar::fail(cstar::Err::IOError, "short write to '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplicative-holonomy analyzer"};
  std::string input;
  std::string outPath;
  std::string csvDir;
  std::uint64_t seed = 1;
  app.add_option("scenario", input, "scenario file")->required();
  app.add_option("--out", outPath, "write the report here instead of stdout");
  app.add_option("--csv-dir", csvDir, "directory for orbit_<stratum>.csv files");
  app.add_option("--seed", seed, "seed for the numeric probes");
  CLI11_PARSE(app, argc, argv);

  try {
    cstar::Scenario sc = cstar::parseScenario(slurp(input));
    cstar::Report rep = cstar::runScenario(sc, seed);
    std::string text = cstar::renderReport(rep);
    if (outPath.empty())
      std::cout << text;
    else
      spill(outPath, text);
    if (!csvDir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(csvDir, ec);
      if (ec) cstar::fail(cstar::Err::IOError, "cannot create '" + csvDir + "'");
      for (const auto& orbit : rep.orbits)
        spill((std::filesystem::path(csvDir) / ("orbit_" + orbit.stratum + ".csv")).string(),
              cstar::renderOrbitCsv(orbit));
    }
    return 0;
  } catch (const cstar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == cstar::Err::Internal ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
