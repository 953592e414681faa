#pragma once

// Transcribed reference data: the five printed lattice maps (checksummed) and
// the loop permutations of the root and flex diagrams.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubmono/lattice.hpp"

namespace cubmono {

/// Directory holding fixtures/…; fixed at configure time.
std::string default_data_dir();

std::uint64_t fnv1a64(std::string_view bytes);

struct PaperMatrices {
  LatticeMap omega, h1, h2, g1, g2;
};

/// "Omega=v,v,…;H1=…;…" over the 49 row-major entries of each map.
std::string canonical_matrix_text(const PaperMatrices& m);

/// Loads and checks the matrix fixture: shape, "fnv1a64:<hex>" checksum of the
/// canonical text, form preservation and K fixed. Throws FixtureLoad.
PaperMatrices load_paper_matrices(const std::string& path);
PaperMatrices load_paper_matrices();

struct FixtureNode {
  std::string label;
  std::complex<double> value;
};

struct LoopArrows {
  std::vector<int> root_perm;  // on root nodes, 0-based
  std::vector<int> flex_perm;  // on flex nodes, 0-based
};

struct LoopFixtures {
  std::vector<FixtureNode> root_nodes;
  std::vector<FixtureNode> flex_nodes;
  std::map<std::string, LoopArrows> loops;
};

/// Throws FixtureLoad if a loop's arrows do not form a permutation.
LoopFixtures load_loop_fixtures(const std::string& path);
LoopFixtures load_loop_fixtures();

/// Index of the node within `tol` of v, or −1.
int nearest_node(const std::vector<FixtureNode>& nodes, std::complex<double> v, double tol);

/// Checks that a computed permutation of `values` (value i ends at value
/// perm[i]) agrees with the fixture permutation of `nodes`. On mismatch,
/// `why` names the first offending value.
bool agrees_with_fixture(const std::vector<std::complex<double>>& values, const std::vector<int>& perm,
                         const std::vector<FixtureNode>& nodes, const std::vector<int>& node_perm, double tol,
                         std::string* why = nullptr);

}  // namespace cubmono
