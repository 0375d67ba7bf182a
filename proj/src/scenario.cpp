#include "cstar/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cstar/error.hpp"

namespace cstar {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool validName(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> splitWs(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Everything after the first occurrence of `key` (e.g. "residue=") on the line.
std::string tailAfter(const std::string& line, const std::string& key, int lineNo) {
  auto pos = line.find(key);
  if (pos == std::string::npos)
    fail(Err::ParseError,
         "line " + std::to_string(lineNo) + ": expected '" + key + "...'");
  return trim(line.substr(pos + key.size()));
}

int parseSmallInt(const std::string& s, const std::string& what, int lineNo) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(Err::ParseError,
         "line " + std::to_string(lineNo) + ": bad " + what + " '" + s + "'");
  long v = 0;
  try {
    v = std::stol(s);
  } catch (const std::exception&) {
    fail(Err::ParseError, "line " + std::to_string(lineNo) + ": " + what + " out of range");
  }
  if (v < 0 || v > 100000000)
    fail(Err::ParseError, "line " + std::to_string(lineNo) + ": " + what + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Scenario parseScenario(const std::string& text) {
  Scenario sc;
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream is(text);
    std::string raw;
    int no = 0;
    while (std::getline(is, raw)) {
      ++no;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      raw = trim(raw);
      if (!raw.empty()) lines.emplace_back(no, raw);
    }
  }

  // The field declaration scopes every literal in the file, so resolve it
  // before touching any residue/exponent text.
  bool sawField = false;
  for (const auto& [no, line] : lines) {
    auto toks = splitWs(line);
    if (toks.empty() || toks[0] != "field") continue;
    if (sawField) fail(Err::DuplicateField, "line " + std::to_string(no) + ": field declared twice");
    sawField = true;
    std::string rhs = tailAfter(line, "d=", no);
    sc.field = FieldContext::make(static_cast<std::uint64_t>(parseSmallInt(rhs, "field discriminant", no)));
    sc.fieldDeclared = true;
  }

  std::set<std::string> names;
  auto claimName = [&](const std::string& n, int no) {
    if (!validName(n))
      fail(Err::ParseError, "line " + std::to_string(no) + ": bad name '" + n + "'");
    if (!names.insert(n).second)
      fail(Err::ParseError, "line " + std::to_string(no) + ": duplicate name '" + n + "'");
  };

  bool sawRun = false;
  for (const auto& [no, line] : lines) {
    auto toks = splitWs(line);
    const std::string& head = toks[0];
    if (head == "field") continue;
    if (head == "component") {
      if (toks.size() < 2) fail(Err::ParseError, "line " + std::to_string(no) + ": component needs a name");
      claimName(toks[1], no);
      sc.components.push_back({toks[1], parseCplxLit(tailAfter(line, "residue=", no), sc.field)});
    } else if (head == "period") {
      if (toks.size() < 2) fail(Err::ParseError, "line " + std::to_string(no) + ": period needs a name");
      claimName(toks[1], no);
      sc.periods.push_back({toks[1], parseCplxLit(tailAfter(line, "exponent=", no), sc.field)});
    } else if (head == "stratum") {
      if (toks.size() < 2) fail(Err::ParseError, "line " + std::to_string(no) + ": stratum needs a name");
      claimName(toks[1], no);
      auto eq = line.find('=');
      if (eq == std::string::npos)
        fail(Err::ParseError, "line " + std::to_string(no) + ": stratum needs '= D1,D2,...'");
      StratumDecl st;
      st.name = toks[1];
      std::string rhs = line.substr(eq + 1);
      std::string item;
      std::istringstream is(rhs);
      while (std::getline(is, item, ',')) {
        item = trim(item);
        if (item.empty())
          fail(Err::ParseError, "line " + std::to_string(no) + ": empty component name in stratum");
        st.components.push_back(item);
      }
      if (st.components.empty())
        fail(Err::ParseError, "line " + std::to_string(no) + ": stratum lists no components");
      sc.strata.push_back(std::move(st));
    } else if (head == "run") {
      if (sawRun) fail(Err::ParseError, "line " + std::to_string(no) + ": second run line");
      sawRun = true;
      std::size_t i = 1;
      if (toks.size() < 2) fail(Err::ParseError, "line " + std::to_string(no) + ": run lists no commands");
      while (i < toks.size()) {
        const std::string& cmd = toks[i];
        if (cmd == "classify") {
          sc.doClassify = true;
          ++i;
        } else if (cmd == "endos") {
          sc.doEndos = true;
          ++i;
        } else if (cmd == "aut2") {
          sc.doAut2 = true;
          ++i;
        } else if (cmd == "boundary") {
          sc.doBoundary = true;
          ++i;
        } else if (cmd == "kummer") {
          if (i + 1 >= toks.size())
            fail(Err::ParseError, "line " + std::to_string(no) + ": kummer needs an order");
          int n = parseSmallInt(toks[i + 1], "kummer order", no);
          if (n < 1) fail(Err::InvalidOrder, "kummer order must be >= 1");
          sc.kummerN = Int(n);
          i += 2;
        } else if (cmd == "probe") {
          sc.doProbe = true;
          ++i;
          while (i < toks.size() && toks[i].find('=') != std::string::npos) {
            auto eq = toks[i].find('=');
            std::string key = toks[i].substr(0, eq);
            int val = parseSmallInt(toks[i].substr(eq + 1), "probe setting " + key, no);
            if (key == "points")
              sc.probe.points = val;
            else if (key == "bins")
              sc.probe.bins = val;
            else if (key == "radius")
              sc.probe.radius = val;
            else if (key == "steps")
              sc.probe.steps = val;
            else if (key == "subdiv")
              sc.probe.subdiv = val;
            else
              fail(Err::ParseError, "line " + std::to_string(no) + ": unknown probe setting '" + key + "'");
            ++i;
          }
        } else {
          fail(Err::ParseError, "line " + std::to_string(no) + ": unknown command '" + cmd + "'");
        }
      }
    } else {
      fail(Err::ParseError, "line " + std::to_string(no) + ": unknown directive '" + head + "'");
    }
  }

  std::set<std::string> compNames;
  for (const auto& c : sc.components) compNames.insert(c.name);
  for (const auto& st : sc.strata)
    for (const auto& n : st.components)
      if (!compNames.count(n))
        fail(Err::UnknownName, "stratum " + st.name + " references unknown component '" + n + "'");

  if (!sawRun) fail(Err::ParseError, "scenario has no run line");
  return sc;
}

}  // namespace cstar
