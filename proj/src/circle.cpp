#include "strata/circle.hpp"

namespace strata {

namespace {

void matchings_rec(std::vector<Label>& pool, std::vector<Chord>& acc,
                   std::vector<std::vector<Chord>>& out) {
  if (pool.empty()) {
    out.push_back(acc);
    return;
  }
  Label first = pool.front();
  for (std::size_t j = 1; j < pool.size(); ++j) {
    std::vector<Label> rest;
    rest.reserve(pool.size() - 2);
    for (std::size_t k = 1; k < pool.size(); ++k)
      if (k != j) rest.push_back(pool[k]);
    acc.emplace_back(first, pool[j]);
    matchings_rec(rest, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Chord>> all_matchings(const std::vector<Label>& labels) {
  std::vector<std::vector<Chord>> out;
  std::vector<Label> pool = labels;
  std::vector<Chord> acc;
  matchings_rec(pool, acc, out);
  return out;
}

std::vector<std::vector<Chord>> noncrossing_matchings(const std::vector<Label>& labels, int n) {
  std::vector<std::vector<Chord>> out;
  for (auto& m : all_matchings(labels))
    if (is_noncrossing(m, n)) out.push_back(m);
  return out;
}

}  // namespace strata
