#ifndef POSOP_ORACLE_HPP
#define POSOP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "posop/decide.hpp"
#include "posop/multivar.hpp"

namespace posop {

struct SampleSpec {
    int degree_bound = 2;
    unsigned squares = 2;
    unsigned height = 5;  // integer coefficients in [-height, height]
    unsigned trials = 100;
    std::uint64_t seed = 1;
};

/// Throws std::invalid_argument unless every bound is positive.
void validate(const SampleSpec& sampling);

struct SosSample {
    UniPoly f;
    std::vector<UniPoly> roots;  // f = sum of roots[j]^2
};

/// Seed of trial `index` derived from a base seed.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

SosSample random_sos(const SampleSpec& sampling, std::mt19937_64& rng);
SosSample random_sos(const SampleSpec& sampling);

/// Samples cone members of degree <= d and decides exactly whether the image
/// leaves the cone. Returns the first counterexample found.
std::optional<Witness> falsify_preservation(const WeylOp& t, int d, Cone cone, const SampleSpec& sampling);

/// Recomputes everything in the witness exactly.
bool verify_witness(const WeylOp& t, const Witness& w, Cone cone);

/// Multivariate sample sum_j g_j^2 with supp g_j in {beta <= alpha}.
struct MvSosSample {
    MultiPoly f;
    std::vector<MultiPoly> roots;
};

MvSosSample random_mv_sos(const Exponent& alpha, const SampleSpec& sampling, std::mt19937_64& rng);

/// Random SOS(n) inputs with the image evaluated on the grid {-R..R}^n.
/// Falsification only.
std::optional<MvWitness> mv_falsify_preservation(const MultiWeylOp& t, const Exponent& alpha,
                                                 const SampleSpec& sampling, unsigned grid_radius = 2);

} // namespace posop

#endif
