#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gci/ambient.hpp"
#include "gci/polynomial.hpp"

namespace gci {

using Dim = std::uint64_t;

// h^q(P^n, O(k)) for q = 0..n.
std::vector<Dim> bott_dims(int n, int k);

// h^r(P, O(bundle)) for r = 0..dim P, assembled factor by factor.
std::vector<Dim> cohomology_dims(const LineBundle& bundle);

// Monomials of the given multidegree, graded lex (largest first).
std::vector<Exponents> h0_basis(const LineBundle& bundle);

struct CohGroup {
    LineBundle bundle;
    int degree = 0;  // r in H^r
    Dim dimension = 0;
    // q_i per factor with sum r, when exactly one Kunneth summand is populated.
    std::vector<int> concentration;
    // Cech factor for H^1 bases.
    std::optional<std::size_t> cech_factor;
    // Present when basis support exists. Elements are exponent vectors with
    // negative entries on the Cech factor.
    std::optional<std::vector<Exponents>> basis;

    MultiPoly basis_element(std::size_t i, Field field = Field::rationals()) const;
    std::vector<bool> laurent_flags() const;
};

// H^r with its Kunneth bookkeeping but no basis.
CohGroup describe_cohomology(const LineBundle& bundle, int r);

// H^1 concentrated on the P^1 factor t, with basis
//   m * u0^{-j} * u1^{k_t + j},  m in h0_basis(other factors), j = 1 .. -k_t - 1,
// ordered m outer, j inner. Requires k_t <= -2 and all other degrees >= 0.
CohGroup h1_cech_basis(const LineBundle& bundle, std::size_t t);

// As h1_cech_basis, but a vanishing H^1 yields an empty group instead of an
// error. Used for the two ends of a multiplication map.
CohGroup h1_cech_group(const LineBundle& bundle, std::size_t t);

Dim binomial(Dim n, Dim k);

}  // namespace gci
