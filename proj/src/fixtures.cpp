#include "cubmono/fixtures.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "cubmono/error.hpp"

namespace cubmono {

using nlohmann::json;

std::string default_data_dir() { return CUBMONO_DEFAULT_DATA_DIR; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

constexpr const char* kMatrixNames[] = {"Omega", "H1", "H2", "G1", "G2"};

std::array<const LatticeMap*, 5> slots(const PaperMatrices& m) { return {&m.omega, &m.h1, &m.h2, &m.g1, &m.g2}; }

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FixtureLoad, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::FixtureLoad, path + ": " + e.what());
  }
}

LatticeMap parse_matrix(const json& rows, const std::string& name) {
  if (!rows.is_array() || rows.size() != kRank) throw Error(ErrorKind::FixtureLoad, name + " must have 7 rows");
  LatticeMap m;
  for (int r = 0; r < kRank; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != kRank)
      throw Error(ErrorKind::FixtureLoad, name + " row " + std::to_string(r) + " must have 7 entries");
    for (int c = 0; c < kRank; ++c) {
      if (!row[c].is_number_integer()) throw Error(ErrorKind::FixtureLoad, name + " has a non-integer entry");
      m(r, c) = row[c].get<int>();
    }
  }
  return m;
}

std::complex<double> parse_value(const json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw Error(ErrorKind::FixtureLoad, "node value must be [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<FixtureNode> parse_nodes(const json& j) {
  std::vector<FixtureNode> nodes(j.size());
  for (const auto& [key, node] : j.items()) {
    const int k = std::stoi(key);
    if (k < 1 || k > static_cast<int>(nodes.size())) throw Error(ErrorKind::FixtureLoad, "node keys must be 1..n");
    nodes[k - 1] = {node.at("label").get<std::string>(), parse_value(node.at("value"))};
  }
  return nodes;
}

std::vector<int> parse_arrows(const json& arrows, std::size_t n) {
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::vector<bool> moved(n, false), hit(n, false);
  for (const auto& a : arrows) {
    const int from = a.at(0).get<int>() - 1, to = a.at(1).get<int>() - 1;
    if (from < 0 || to < 0 || from >= static_cast<int>(n) || to >= static_cast<int>(n) || moved[from] || hit[to])
      throw Error(ErrorKind::FixtureLoad, "arrows do not form a permutation");
    moved[from] = hit[to] = true;
    perm[from] = to;
  }
  std::vector<bool> image(n, false);
  for (int v : perm) {
    if (image[v]) throw Error(ErrorKind::FixtureLoad, "arrows do not form a permutation");
    image[v] = true;
  }
  return perm;
}

}  // namespace

std::string canonical_matrix_text(const PaperMatrices& m) {
  std::string out;
  const auto s = slots(m);
  for (int k = 0; k < 5; ++k) {
    out += kMatrixNames[k];
    out += '=';
    for (int i = 0; i < kRank * kRank; ++i) {
      if (i) out += ',';
      out += std::to_string(s[k]->m[i]);
    }
    out += ';';
  }
  return out;
}

PaperMatrices load_paper_matrices(const std::string& path) {
  const json j = read_json(path);
  PaperMatrices m;
  try {
    const auto& mats = j.at("matrices");
    m.omega = parse_matrix(mats.at("Omega"), "Omega");
    m.h1 = parse_matrix(mats.at("H1"), "H1");
    m.h2 = parse_matrix(mats.at("H2"), "H2");
    m.g1 = parse_matrix(mats.at("G1"), "G1");
    m.g2 = parse_matrix(mats.at("G2"), "G2");
  } catch (const json::exception& e) {
    throw Error(ErrorKind::FixtureLoad, path + ": " + e.what());
  }

  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical_matrix_text(m))));
  const std::string expected = "fnv1a64:" + std::string(hex);
  const std::string stored = j.value("checksum", "");
  if (stored != expected)
    throw Error(ErrorKind::FixtureLoad, "checksum mismatch: file has '" + stored + "', entries give '" + expected + "'");

  const auto s = slots(m);
  for (int k = 0; k < 5; ++k)
    if (!s[k]->is_valid())
      throw Error(ErrorKind::FixtureLoad, std::string(kMatrixNames[k]) + " does not preserve the form and K");
  return m;
}

PaperMatrices load_paper_matrices() { return load_paper_matrices(default_data_dir() + "/fixtures/paper_matrices.json"); }

LoopFixtures load_loop_fixtures(const std::string& path) {
  const json j = read_json(path);
  LoopFixtures f;
  try {
    f.root_nodes = parse_nodes(j.at("root_nodes"));
    f.flex_nodes = parse_nodes(j.at("flex_nodes"));
    for (const auto& [name, loop] : j.at("loops").items())
      f.loops[name] = {parse_arrows(loop.at("root_arrows"), f.root_nodes.size()),
                       parse_arrows(loop.at("flex_arrows"), f.flex_nodes.size())};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::FixtureLoad, path + ": " + e.what());
  }
  return f;
}

LoopFixtures load_loop_fixtures() { return load_loop_fixtures(default_data_dir() + "/fixtures/loop_permutations.json"); }

int nearest_node(const std::vector<FixtureNode>& nodes, std::complex<double> v, double tol) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (std::abs(nodes[i].value - v) < tol) return static_cast<int>(i);
  return -1;
}

bool agrees_with_fixture(const std::vector<std::complex<double>>& values, const std::vector<int>& perm,
                         const std::vector<FixtureNode>& nodes, const std::vector<int>& node_perm, double tol,
                         std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (values.size() != nodes.size() || perm.size() != values.size()) return fail("size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int from = nearest_node(nodes, values[i], tol);
    const int to = nearest_node(nodes, values[perm[i]], tol);
    if (from < 0 || to < 0) return fail("value " + std::to_string(i) + " matches no fixture node");
    if (node_perm[from] != to)
      return fail(nodes[from].label + " goes to " + nodes[to].label + ", expected " + nodes[node_perm[from]].label);
  }
  return true;
}

}  // namespace cubmono
