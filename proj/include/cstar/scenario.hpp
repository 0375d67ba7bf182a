#pragma once

// Scenario files drive the CLI.  Line oriented; '#' starts a comment:
//
//   field d=2
//   component D1 residue=0+1*i
//   period    P1 exponent=1/2
//   stratum   S1 = D1,D2
//   run classify endos boundary kummer 3 probe points=100000 bins=32
//
// Names are [A-Za-z_][A-Za-z0-9_]*, unique across the file; strata reference
// component names.  Number literals follow the grammar in literal.hpp.

#include <optional>
#include <string>
#include <vector>

#include "cstar/literal.hpp"

namespace cstar {

struct ComponentDecl {
  std::string name;
  QuadComplex residue;
};

struct PeriodDecl {
  std::string name;
  QuadComplex exponent;
};

struct StratumDecl {
  std::string name;
  std::vector<std::string> components;
};

struct ProbeSettings {
  int points = 100000;
  int bins = 32;
  int radius = 20;
  int steps = 20000;
  int subdiv = 512;
  bool operator==(const ProbeSettings&) const = default;
};

struct Scenario {
  FieldContext field;
  bool fieldDeclared = false;
  std::vector<ComponentDecl> components;
  std::vector<PeriodDecl> periods;
  std::vector<StratumDecl> strata;

  bool doClassify = false;
  bool doEndos = false;
  bool doAut2 = false;
  bool doBoundary = false;
  bool doProbe = false;
  std::optional<Int> kummerN;
  ProbeSettings probe;
};

Scenario parseScenario(const std::string& text);

}  // namespace cstar
