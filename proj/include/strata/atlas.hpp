#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/signature.hpp"

namespace strata {

// All generic signatures of one degree: pairs of non-crossing matchings
// whose blue-red interleaving graph is a perfect matching.
std::vector<Signature> enumerate_generic(int degree);

// Closure of the generic set under contracting moves, keyed by
// codimension.  Feasible at desk scale for degree <= 4.
struct Atlas {
  int degree = 0;
  std::map<int, std::vector<Signature>> by_codim;

  int count(int codim) const {
    auto it = by_codim.find(codim);
    return it == by_codim.end() ? 0 : static_cast<int>(it->second.size());
  }
  int total() const {
    int t = 0;
    for (auto& [c, v] : by_codim) t += static_cast<int>(v.size());
    return t;
  }
  int max_codim() const { return by_codim.empty() ? -1 : by_codim.rbegin()->first; }
};

Atlas enumerate_all(int degree, int jobs = 1);

// Alternating sum over codimensions, sum (-1)^k N_k.
int euler_sum(const Atlas& atlas);

// Census table: per codimension the count, with the generic row split
// by M/F/S/FS class.
struct CensusRow {
  int codim = 0;
  int count = 0;
  int m = 0, f = 0, s = 0, fs = 0;  // generic row only
};
std::vector<CensusRow> census(const Atlas& atlas);
std::string census_report(const Atlas& atlas);

// Orbits of one codimension bucket under the full shift group.
std::vector<std::vector<Signature>> shift_families(const std::vector<Signature>& sigs);

}  // namespace strata
