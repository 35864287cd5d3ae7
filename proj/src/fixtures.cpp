#include "lagnp/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef LAGNP_DATA_DIR
#define LAGNP_DATA_DIR "data"
#endif

namespace lagnp::fixtures {

namespace {

std::vector<std::vector<std::uint64_t>> read_csv(const std::string& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::vector<std::vector<std::uint64_t>> rows;
  std::string line;
  bool header_skipped = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_skipped) {  // column names
      header_skipped = true;
      continue;
    }
    std::vector<std::uint64_t> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stoull(cell));
    if (row.size() != columns)
      throw std::runtime_error("bad fixture row in " + path + ": " + line);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::uint64_t> read_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::vector<std::uint64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(std::stoull(line));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<criteria::Triple> read_triples(const std::string& path) {
  std::vector<criteria::Triple> out;
  for (const auto& r : read_csv(path, 3)) out.push_back({r[0], r[1], r[2]});
  std::sort(out.begin(), out.end(), criteria::TripleOrder{});
  return out;
}

}  // namespace

bool Fixtures::omega_contains(const criteria::Triple& t) const {
  return std::any_of(omega.begin(), omega.end(), [&](const OmegaRow& row) {
    return row.n == t.n && row.k == t.k && row.s == t.s;
  });
}

std::string default_data_dir() {
  if (const char* env = std::getenv("LAGNP_DATA_DIR"); env && *env) return env;
  return LAGNP_DATA_DIR;
}

Fixtures load(const std::string& data_dir) {
  const std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
  const std::string fx = dir + "/fixtures/";
  Fixtures f;
  for (const auto& r : read_csv(fx + "t_pairs.csv", 2)) f.t_pairs.emplace_back(r[0], r[1]);
  for (const auto& r : read_csv(fx + "table1.csv", 3)) f.table1.push_back({r[0], 2, r[1], r[2]});
  for (const auto& r : read_csv(fx + "table2.csv", 3)) f.table2.push_back({r[0], 2, r[1], r[2]});
  for (const auto& r : read_csv(fx + "table3.csv", 4)) f.table3.push_back({r[0], r[1], r[2], r[3]});
  for (const auto& r : read_csv(fx + "omega.csv", 4)) f.omega.push_back({r[0], r[1], r[2], r[3]});
  f.s2 = read_triples(fx + "s2.csv");
  f.s3 = read_triples(fx + "s3.csv");
  f.s4 = read_triples(fx + "s4.csv");
  f.thm3 = read_triples(fx + "thm3.csv");
  f.s_gt9 = read_triples(fx + "s_gt9.csv");
  f.inner_exceptions = read_triples(fx + "inner_exceptions.csv");
  for (unsigned k = 3; k <= 8; ++k)
    f.dk_printed[k] = read_list(fx + "d" + std::to_string(k) + ".txt");
  f.najman_path = dir + "/najman_excerpt.txt";
  return f;
}

}  // namespace lagnp::fixtures
