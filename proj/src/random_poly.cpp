#include "gci/random_poly.hpp"

#include "gci/cohomology.hpp"

namespace gci {

MultiPoly random_section(const AmbientPtr& ambient, const std::vector<int>& degrees, InstanceRng& rng) {
    MultiPoly p(ambient, degrees);
    for (const auto& m : h0_basis(LineBundle(ambient, degrees))) p.add_term(m, Coefficient(rng.coefficient()));
    return p;
}

}  // namespace gci
