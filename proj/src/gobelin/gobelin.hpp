#pragma once

#include <vector>

#include "koszul/koszul.hpp"

namespace gobelin {

enum class Which { G1, G2, G1Dual, G2Dual };
const char* to_string(Which w);

// Total complex truncated after degree J + 1 so that degrees 0..J are exact
// in both directions. Differentials are d_1 .. d_{J+1} over B (for duals the
// B-transposes, delta^k = d_{k+1}^T).
struct GobelinComplex {
  Which which = Which::G1;
  std::size_t max_degree = 0;
  std::vector<std::size_t> ranks;  // over B, degrees 0..J+1
  std::vector<BMatrix> differentials;
  ScalarComplex complex;
  std::vector<Subquotient> homology;  // degrees 0..J

  std::vector<std::size_t> dims() const;
};

// Blocks of the G2 differentials: phi_j is (2j-1) x 2j, psi_j is 2j x (2j+1).
BMatrix phi(const SyzygyPair& s, std::size_t j);
BMatrix psi(const SyzygyPair& s, std::size_t j);
// 2x2 differentials of G1.
BMatrix c_psi(const SyzygyPair& s);
BMatrix c_phi(const SyzygyPair& s);

GobelinComplex build_g1(const SyzygyPair& s, std::size_t max_degree);
GobelinComplex build_g2(const SyzygyPair& s, std::size_t max_degree);
GobelinComplex dual_of(const GobelinComplex& c);
GobelinComplex build(const SyzygyPair& s, Which which, std::size_t max_degree);

// Position of b_1 in degree k of G2 (number of a-slots).
std::size_t g2_a_count(std::size_t k);
// Scalar matrices of the chain maps iota_k: G1_k -> G2_k and
// sigma_k: G2_k -> G2_{k-2}.
Matrix iota_matrix(const FiniteAlgebra& b, std::size_t k);
Matrix sigma_matrix(const FiniteAlgebra& b, std::size_t k);

struct LesDegree {
  std::size_t k = 0;
  std::size_t dim_g1 = 0, dim_g2 = 0;
  std::size_t rank_iota = 0, rank_sigma = 0, rank_boundary = 0;
};

struct LesReport {
  std::vector<LesDegree> degrees;
  // iota_k, sigma_k and boundary_k (H_{k-1}(G2) -> H_k(G1)) on coset bases.
  std::vector<Matrix> iota, sigma, boundary;
  std::vector<Check> checks;
};

// Builds G1 and G2 to degree J, the induced maps and the boundary maps from
// their closed formulas, compares the latter with a snake-lemma computation,
// and checks exactness as subspace equality at every node up to J.
LesReport les_maps(const SyzygyPair& s, std::size_t max_degree);
LesReport les_maps(const SyzygyPair& s, const GobelinComplex& g1, const GobelinComplex& g2);

// Closed forms for the homology of G1 and its dual, and the short exact
// sequences describing the even degrees.
std::vector<Check> g1_closed_forms(const SyzygyPair& s, const KoszulData& k, const GobelinComplex& g1,
                                   const GobelinComplex& g1dual);

}  // namespace gobelin
