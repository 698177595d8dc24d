#pragma once

#include <cstdint>
#include <vector>

#include "gobelin/gobelin.hpp"

namespace gobelin {

// A chain X_0, X_1, ... with X_j = (X_{j-1} tauA : tauB) in H1, stored up to
// the first index `stab` with X_stab = X_{stab+1}. Later terms equal X_stab.
struct Flag {
  std::vector<Submodule> terms;
  std::size_t stab = 0;

  const Submodule& at(std::size_t j) const { return terms[std::min(j, stab)]; }
  const Submodule& limit() const { return terms[stab]; }
  std::vector<std::size_t> dims() const;
};

// L, F use (I tau2 : tau1); the primed flags swap the syzygies.
struct FlagReport {
  Flag L, F, Lp, Fp;
};

// I -> (I tau2 : tau1) in H1, or the primed map when `primed`.
Submodule flag_map(const SyzygyPair& s, const KoszulData& k, const Submodule& ideal, bool primed);
// NotStabilized when no repetition occurs within max_steps iterations.
Flag iterate_flag(const SyzygyPair& s, const KoszulData& k, const Submodule& start, bool primed,
                  std::size_t max_steps);
// max_steps = 0 selects nu + 2.
FlagReport compute_flags(const SyzygyPair& s, const KoszulData& k, std::size_t max_steps = 0);

// Nesting, stabilization within nu steps, (f1, f2) contained in every term
// from j = 1 on, and the swap symmetry of primed and unprimed flags.
std::vector<Check> flag_structure(const SyzygyPair& s, const KoszulData& k, const FlagReport& fr);
// Fixed points of the flag maps built from seeded random ideals lie between
// the limits. The limits themselves are fixed points.
std::vector<Check> fixed_point_extremality(const SyzygyPair& s, const KoszulData& k, const FlagReport& fr,
                                           std::size_t trials, std::uint64_t seed);
// Successive quotient dimensions are monotone.
std::vector<Check> flag_gap_monotonicity(const FlagReport& fr);
// dim F_j/L_j = dim F'_j/L'_j and the matching intersection quotients.
std::vector<Check> phi_psi_dims(const FlagReport& fr);

// Outcome of an identity checked under both placements of the primes.
struct VariantResult {
  bool unprimed_first = false;  // as printed in the statement
  bool swapped = false;         // primes exchanged
  std::vector<Check> checks;   // common checks plus one summary line
  std::vector<Check> details;  // failing lines of each placement
  std::string verdict() const;
};

// Dimension identities of the four-term sequences for the even and odd
// hyperhomology of G2, 1 <= j <= (J - 1) / 2, plus degrees 0 and 1.
VariantResult cdos_check(const SyzygyPair& s, const KoszulData& k, const FlagReport& fr, const GobelinComplex& g1,
                         const GobelinComplex& g2);
// Image of the restriction H^{2j}(G2*) -> H^{2j}(G1*) against the classes
// whose first coordinate lies in L_j cap L'_1 (statement) or L_1 cap L'_j.
VariantResult dual_image_check(const SyzygyPair& s, const KoszulData& k, const FlagReport& fr,
                               const GobelinComplex& g1dual, const GobelinComplex& g2dual);

}  // namespace gobelin
