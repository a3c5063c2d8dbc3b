#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gci/ambient.hpp"

namespace gci {

struct ModuliCount {
    std::int64_t h0_F = 0;
    std::int64_t group_dim = 0;    // sum over factors of (n_i + 1)^2
    std::int64_t trivial_dim = 0;  // scalar subgroup acting trivially on H^0(L[d])
    std::int64_t params_F = 0;
    std::int64_t h0_tau = 0;
    std::int64_t params_tau = 0;
    std::int64_t total = 0;
    std::vector<std::string> notes;
};

// Parameters of the family: sections F of L[d] modulo the product of GL's,
// then sections tau of M[-e]|_Y up to scale. L and M live on Q.
ModuliCount moduli_parameter_count(const AmbientPtr& ambient, const LineBundle& L, int d, const LineBundle& M, int e,
                                   std::int64_t h0_tau);

// Hodge numbers of the crepant resolution Z of X / iota for an involution
// with fixed locus a disjoint union of smooth curves, computed through the
// blow-up of X along the fixed curves and the Lefschetz fixed point formula.
struct QuotientHodgeReport {
    std::int64_t h2_X = 0, h3_X = 0;
    std::vector<std::int64_t> genera;
    std::int64_t h2_tilde = 0;   // h2_X + #curves
    std::int64_t h3_tilde = 0;   // h3_X + sum 2 g_i
    std::int64_t chi_fixed = 0;  // sum over exceptional P^1-bundles of 2 (2 - 2 g_i)
    std::int64_t t3 = 0;         // trace of the involution on H^3 of the blow-up
    std::int64_t a = 0, b = 0;   // +1 / -1 eigenspace dimensions on H^3
    std::int64_t h2_Z = 0, h3_Z = 0, h21_Z = 0;
    std::vector<std::string> assumptions;
};

QuotientHodgeReport quotient_hodge(std::int64_t h2_X, std::int64_t h3_X, const std::vector<std::int64_t>& genera);

// Genus of a smooth curve of bidegree (a, b) on P^1 x P^1.
std::int64_t bidegree_genus(std::int64_t a, std::int64_t b);

// Expected number of intersection points of hypersurfaces of the given degrees
// in P^n, n = degrees.size() (must match ambient_dim).
std::int64_t bezout_count(const std::vector<std::int64_t>& degrees, int ambient_dim);

}  // namespace gci
