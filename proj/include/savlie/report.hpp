#pragma once

#include <map>
#include <string>
#include <vector>

#include "savlie/algebra.hpp"

namespace savlie {

// One suite entry of a run report. `anchor` is a neutral one-line statement
// of the mathematical fact the suite exercises.
struct Suite {
  std::string name;
  std::string anchor;
  bool passed = true;
  long cases_checked = 0;
  int certified_window = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  std::map<std::string, std::string> extras;  // rendered verbatim, sorted

  static Suite from_sweep(const SweepReport& r, std::string anchor);
};

struct RunReport {
  std::string command;
  std::map<std::string, std::string> config;
  std::uint64_t seed = 0;
  std::vector<Suite> suites;
  std::vector<std::string> conventions;

  bool all_passed() const;
  void add(Suite s) { suites.push_back(std::move(s)); }

  std::string to_text() const;
  std::string to_json() const;  // byte-stable for golden tests
};

// The reading conventions adopted by this implementation, embedded in every
// report so downstream readers see exactly which choices a run used.
std::vector<std::string> convention_notes();

}  // namespace savlie
