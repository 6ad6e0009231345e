#include "strata/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "strata/moves.hpp"

namespace strata {

std::vector<Signature> enumerate_generic(int degree) {
  if (degree < 2 || degree > 8)
    throw SignatureError("generic enumeration supports degrees 2..8");
  const int n = 4 * degree;
  std::vector<Label> evens, odds;
  for (int x = 0; x < n; x += 2) evens.push_back(x);
  for (int x = 1; x < n; x += 2) odds.push_back(x);
  auto blues = noncrossing_matchings(evens, n);
  auto reds = noncrossing_matchings(odds, n);

  std::vector<Signature> out;
  std::set<std::string> seen;
  for (const auto& b : blues)
    for (const auto& r : reds) {
      SignatureData d;
      d.degree = degree;
      d.blue = b;
      d.red = r;
      if (auto s = Signature::try_make(std::move(d)))
        if (seen.insert(s->key()).second) out.push_back(std::move(*s));
    }
  std::sort(out.begin(), out.end());
  return out;
}

Atlas enumerate_all(int degree, int jobs) {
  if (degree < 2 || degree > 6)
    throw SignatureError("full closure supports degrees 2..6");
  Atlas atlas;
  atlas.degree = degree;
  std::set<std::string> seen;
  std::vector<Signature> frontier = enumerate_generic(degree);
  for (const auto& s : frontier) {
    seen.insert(s.key());
    atlas.by_codim[0].push_back(s);
  }
  // Close upward by contraction, one codimension level at a time; the
  // worklist expansion is pure, so levels can fan out across threads.
  while (!frontier.empty()) {
    std::vector<std::vector<Signature>> produced(frontier.size());
    auto expand = [&](std::size_t i) { produced[i] = all_contractions(frontier[i]); };
    if (jobs > 1) {
      std::vector<std::thread> pool;
      std::atomic<std::size_t> next{0};
      for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
          for (std::size_t i = next.fetch_add(1); i < frontier.size(); i = next.fetch_add(1))
            expand(i);
        });
      for (auto& t : pool) t.join();
    } else {
      for (std::size_t i = 0; i < frontier.size(); ++i) expand(i);
    }
    std::vector<Signature> next_frontier;
    for (auto& batch : produced)
      for (auto& s : batch)
        if (seen.insert(s.key()).second) {
          atlas.by_codim[s.codimension()].push_back(s);
          next_frontier.push_back(std::move(s));
        }
    frontier = std::move(next_frontier);
  }
  for (auto& [c, v] : atlas.by_codim) std::sort(v.begin(), v.end());
  return atlas;
}

int euler_sum(const Atlas& atlas) {
  int sum = 0;
  for (auto& [c, v] : atlas.by_codim) sum += (c % 2 == 0 ? 1 : -1) * static_cast<int>(v.size());
  return sum;
}

std::vector<CensusRow> census(const Atlas& atlas) {
  std::vector<CensusRow> rows;
  for (auto& [c, v] : atlas.by_codim) {
    CensusRow row;
    row.codim = c;
    row.count = static_cast<int>(v.size());
    if (c == 0)
      for (const auto& s : v) switch (classify(s).kind) {
          case SignatureKind::M: ++row.m; break;
          case SignatureKind::F: ++row.f; break;
          case SignatureKind::S: ++row.s; break;
          case SignatureKind::FS: ++row.fs; break;
        }
    rows.push_back(row);
  }
  return rows;
}

std::string census_report(const Atlas& atlas) {
  std::ostringstream os;
  os << "degree " << atlas.degree << " census\n";
  os << "codim  count  M  F  S  FS\n";
  for (const auto& row : census(atlas)) {
    os << row.codim << "      " << row.count;
    if (row.codim == 0)
      os << "  " << row.m << "  " << row.f << "  " << row.s << "  " << row.fs;
    os << "\n";
  }
  os << "euler alternating sum: " << euler_sum(atlas) << "\n";
  return os.str();
}

std::vector<std::vector<Signature>> shift_families(const std::vector<Signature>& sigs) {
  std::set<std::string> assigned;
  std::vector<std::vector<Signature>> families;
  for (const auto& s : sigs) {
    if (assigned.count(s.key())) continue;
    std::vector<Signature> orbit;
    std::set<std::string> keys;
    for (int k = 0; k < s.labels(); ++k) {
      Signature t = s.shifted(k);
      if (keys.insert(t.key()).second) orbit.push_back(std::move(t));
    }
    for (const auto& t : orbit) assigned.insert(t.key());
    std::sort(orbit.begin(), orbit.end());
    families.push_back(std::move(orbit));
  }
  return families;
}

}  // namespace strata
