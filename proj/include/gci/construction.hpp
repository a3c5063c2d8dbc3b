#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gci/multmap.hpp"
#include "gci/polynomial.hpp"

namespace gci {

// A class in H^1(P, (L^-1 M)[-d-e]) represented on U0 ∩ U1 as
//   q = sum_{j=1}^{d+e-1} q_j * z0^{-j} * z1^{-d-e+j},
// with each q_j a section of L^-1 M pulled back to P (degree 0 on z).
struct CechClass {
    AmbientPtr ambient;
    std::size_t factor = 0;
    int d = 1, e = 1;
    std::vector<MultiPoly> coefficients;  // q_1 .. q_{d+e-1}

    CechClass(AmbientPtr ambient, std::size_t factor, int d, int e, std::vector<MultiPoly> coefficients);

    // Degrees of L^-1 M on P with the z-entry set to 0.
    const std::vector<int>& coefficient_degrees() const { return coefficients.front().degrees(); }
    MultiPoly representative() const;
    CechClass scaled(const Coefficient& c) const;
};

// Coordinates are taken in the h1_cech_basis order (Q-monomial outer, j inner).
CechClass cech_class_from_vector(const CohGroup& source, int d, int e, const std::vector<mpq_class>& coords);
CechClass cech_class_from_vector(const CohGroup& source, int d, int e, const IntegerVector& coords);

// Fq split by z0-exponent k: tau0 collects k <= -e, tau1 is minus the part
// with k >= 0, and middle is what remains, so Fq = tau0 - tau1 + middle.
struct SplitResult {
    MultiPoly product;
    MultiPoly tau0;
    MultiPoly tau1;
    MultiPoly middle;
};

SplitResult split_tau(const MultiPoly& F, const CechClass& q);

struct GciSystem {
    AmbientPtr ambient;
    std::size_t factor = 0;
    int d = 1, e = 1;
    MultiPoly F;
    MultiPoly G;
    MultiPoly H;
    MultiPoly A;
    std::optional<CechClass> provenance;
};

// Builds G = z0^N tau0, H = -z1^N tau1, A = (z0 z1)^N q with N = d + e - 1.
// Throws PreconditionError when q is not in ker F_1 (nonzero middle) or when
// H^1(Q, L^-1 M) != 0.
GciSystem emit_equations(const MultiPoly& F, const CechClass& q);

// A F - z1^N G - z0^N H == 0 exactly.
bool verify_syzygy(const GciSystem& sys);

struct FiberRestriction {
    AmbientPtr base;  // Q
    MultiPoly F, G, H, A;
    // Which pairs cut out the fiber: "F,H" when z1 != 0, "F,G" when z0 != 0.
    std::vector<std::string> generating_pairs;
};

FiberRestriction restrict_fiber(const GciSystem& sys, const mpq_class& z0, const mpq_class& z1);

// Every z-coefficient of G and H equals the bilinear expansion
// sum f_i q_j reconstructed from F and the provenance class.
bool base_locus_membership(const GciSystem& sys);

}  // namespace gci
