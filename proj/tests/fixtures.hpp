#pragma once

// Shared test instances: the P^4 x P^1 Calabi-Yau data, the toy P^1 x P^1
// instance, and the reducible P^2 x (P^1)^3 family.

#include <string>
#include <vector>

#include "gci/construction.hpp"
#include "gci/poly_parse.hpp"

namespace fixtures {

inline gci::AmbientPtr cy_ambient() {
    return gci::make_ambient(gci::Ambient({{4, {"y0", "y1", "y2", "y3", "y4"}}, {1, {"z0", "z1"}}}, 1));
}

inline gci::AmbientPtr cy_base() { return gci::make_ambient(cy_ambient()->without_factor(1)); }

inline const char* kP0 = "y0^2+y1^2+y2^2+y3^2+y4^2";
inline const char* kP1 = "y0^2+y4^2";
inline const char* kP2 = "y1^2+y3^2";
inline const char* kP3 = "y0^2+y1^2-y2^2-y3^2-y4^2";

inline gci::MultiPoly cy_P(const gci::AmbientPtr& a, int i) {
    const char* src[] = {kP0, kP1, kP2, kP3};
    return gci::parse_poly(src[i], a, {2, 0});
}

inline std::string cy_F_text() {
    return std::string("(") + kP0 + ")*z0^3 + (" + kP1 + ")*z0^2*z1 + (" + kP2 + ")*z0*z1^2 + (" + kP3 + ")*z1^3";
}

inline gci::MultiPoly cy_F(const gci::AmbientPtr& a) { return gci::parse_poly(cy_F_text(), a, {2, 3}); }

// q = Q0 z0^-3 z1^-1 + Q1 z0^-2 z1^-2 + Q2 z0^-1 z1^-3 with Q = (y0, y1, y2),
// so q_1 = Q2, q_2 = Q1, q_3 = Q0.
inline gci::CechClass cy_q(const gci::AmbientPtr& a) {
    return {a, 1, 3, 1,
            {gci::parse_poly("y2", a, {1, 0}), gci::parse_poly("y1", a, {1, 0}), gci::parse_poly("y0", a, {1, 0})}};
}

inline gci::AmbientPtr toy_ambient() {
    return gci::make_ambient(gci::Ambient({{1, {"y0", "y1"}}, {1, {"z0", "z1"}}}, 1));
}

inline gci::MultiPoly toy_F(const gci::AmbientPtr& a) { return gci::parse_poly("y0*z0^2 + y1*z1^2", a, {1, 2}); }

inline gci::CechClass toy_q(const gci::AmbientPtr& a, int j) {
    // q = z0^-j z1^-4+j
    std::vector<gci::MultiPoly> cs(3, gci::parse_poly("0", a, {0, 0}));
    cs[j - 1] = gci::parse_poly("1", a, {0, 0});
    return {a, 1, 2, 2, cs};
}

}  // namespace fixtures
