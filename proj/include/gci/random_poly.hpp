#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "gci/polynomial.hpp"

namespace gci {

// Seeded "general position" instances: std::mt19937_64, whose output
// sequence is fixed by the standard, and coefficients (draw % 19) - 9 in
// [-9, 9], one draw per basis monomial in graded-lex order.
inline constexpr const char* kPrngName = "mt19937_64";

class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}
    int coefficient() { return static_cast<int>(engine_() % 19) - 9; }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

MultiPoly random_section(const AmbientPtr& ambient, const std::vector<int>& degrees, InstanceRng& rng);

}  // namespace gci
