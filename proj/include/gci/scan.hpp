#pragma once

#include <cstdint>
#include <vector>

#include "gci/polynomial.hpp"

namespace gci {

struct ScanReport {
    std::uint32_t prime = 0;
    std::size_t codim = 0;
    std::uint64_t point_count = 0;
    std::uint64_t zero_count = 0;
    // Coordinates of each flagged point in global variable order, first
    // nonzero coordinate of each factor normalized to 1.
    std::vector<std::vector<std::uint32_t>> flagged;
};

inline constexpr std::uint64_t kScanPointBudget = 10'000'000;

// Number of F_p-points of a product of projective spaces; throws
// BudgetExceeded once it passes `budget`.
std::uint64_t projective_point_count(const Ambient& ambient, std::uint32_t p, std::uint64_t budget = kScanPointBudget);

// Enumerates every F_p-rational point of the ambient, keeps the common zeros
// of `equations`, and flags those where the Jacobian with respect to all
// affine-cone coordinates has rank < codim. A clean scan is evidence of
// smoothness over F_p at the rational points only.
ScanReport singular_scan_mod_p(const std::vector<MultiPoly>& equations, const AmbientPtr& ambient, std::uint32_t p,
                               std::size_t codim, unsigned workers = 1);

}  // namespace gci
