#pragma once

// Runs the commands requested by a scenario and renders the results as a
// deterministic key=value report plus optional per-stratum orbit CSV files.
// Same scenario + same seed => byte-identical output.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cstar/scenario.hpp"

namespace cstar {

struct ReportSection {
  std::string title;  // rendered as [title]
  std::vector<std::pair<std::string, std::string>> entries;
  void put(const std::string& key, const std::string& value) { entries.emplace_back(key, value); }
};

struct OrbitCsv {
  std::string stratum;            // file stem: orbit_<stratum>.csv
  std::size_t ell = 0;            // number of angle columns
  std::vector<std::vector<double>> rows;  // wrapped angles in [0,1)
};

struct Report {
  std::vector<ReportSection> sections;
  std::vector<OrbitCsv> orbits;
};

Report runScenario(const Scenario& sc, std::uint64_t seed);

std::string renderReport(const Report& r);
std::string renderOrbitCsv(const OrbitCsv& csv);

// Formatting helpers shared with the tests.
std::string fmtDouble(double x);
std::string fmtComplex(double re, double im);

}  // namespace cstar
