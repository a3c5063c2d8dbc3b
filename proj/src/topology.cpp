#include "gci/topology.hpp"

#include "gci/cohomology.hpp"
#include "gci/errors.hpp"
#include "gci/multmap.hpp"

namespace gci {

ModuliCount moduli_parameter_count(const AmbientPtr& ambient, const LineBundle& L, int d, const LineBundle& M, int e,
                                   std::int64_t h0_tau) {
    if (!ambient->distinguished()) throw ValidationError("ambient has no distinguished P^1 factor");
    if (!(*L.ambient() == *M.ambient())) throw ValidationError("L and M live on different ambients");
    (void)e;
    std::size_t t = *ambient->distinguished();
    LineBundle ld = lift_bundle(L, ambient, t, d);
    ModuliCount m;
    m.h0_F = static_cast<std::int64_t>(cohomology_dims(ld).at(0));
    for (const auto& f : ambient->factors()) m.group_dim += (f.dim + 1) * (f.dim + 1);
    bool trivial_bundle = true;
    for (int k : ld.degrees()) trivial_bundle = trivial_bundle && k == 0;
    // Scalars (lambda_1, ..., lambda_r) act on H^0(O(k_1, ..., k_r)) by
    // prod lambda_i^{k_i}; the kernel of that character has codimension 1.
    std::int64_t torus = static_cast<std::int64_t>(ambient->num_factors());
    m.trivial_dim = trivial_bundle ? torus : torus - 1;
    m.params_F = m.h0_F - (m.group_dim - m.trivial_dim);
    m.h0_tau = h0_tau;
    m.params_tau = h0_tau - 1;
    m.total = m.params_F + m.params_tau;
    m.notes.push_back("trivially acting subgroup: kernel of the character of the scalar torus on H^0(L[d]), dim " +
                      std::to_string(m.trivial_dim));
    if (m.params_F < 0 || m.params_tau < 0) m.notes.push_back("negative parameter count: configuration is degenerate");
    return m;
}

QuotientHodgeReport quotient_hodge(std::int64_t h2_X, std::int64_t h3_X, const std::vector<std::int64_t>& genera) {
    if (h3_X < 2) throw PreconditionError("h^3(X) must be at least 2 for a Calabi-Yau threefold");
    QuotientHodgeReport r;
    r.h2_X = h2_X;
    r.h3_X = h3_X;
    r.genera = genera;
    std::int64_t c = static_cast<std::int64_t>(genera.size());
    r.h2_tilde = h2_X + c;
    r.h3_tilde = h3_X;
    for (auto g : genera) {
        if (g < 0) throw ValidationError("curve genus must be nonnegative");
        r.h3_tilde += 2 * g;
        r.chi_fixed += 2 * (2 - 2 * g);
    }
    // Lefschetz: chi(fixed) = sum (-1)^i tr(iota^* | H^i) with b1 = b5 = 0 and
    // iota trivial on H^0, H^2, H^4 = (H^2)^dual, H^6.
    r.t3 = 2 + 2 * r.h2_tilde - r.chi_fixed;
    if ((r.h3_tilde + r.t3) % 2 != 0)
        throw PreconditionError("inconsistent input: h^3 of the blow-up and the trace t3 have different parity");
    r.a = (r.h3_tilde + r.t3) / 2;
    r.b = r.h3_tilde - r.a;
    if (r.b < 0) throw PreconditionError("inconsistent input: negative -1 eigenspace on H^3");
    if ((r.a - 2) % 2 != 0) throw PreconditionError("inconsistent input: h^3(Z) - 2 is odd");
    r.h2_Z = r.h2_tilde;
    r.h3_Z = r.a;
    r.h21_Z = (r.a - 2) / 2;
    r.assumptions = {"b1 = b5 = 0 (Calabi-Yau threefold)",
                     "involution acts trivially on H^0, H^2, H^4, H^6",
                     "fixed locus is a disjoint union of smooth curves; exceptional divisors are P^1-bundles",
                     "h^{3,0}(Z) = 1"};
    if (genera.empty()) r.assumptions.push_back("no fixed curves: a free quotient lies outside the fixed-curve setting");
    return r;
}

std::int64_t bidegree_genus(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw ValidationError("bidegree must be nonnegative");
    if (a == 0 || b == 0) return 0;
    return (a - 1) * (b - 1);
}

std::int64_t bezout_count(const std::vector<std::int64_t>& degrees, int ambient_dim) {
    if (static_cast<int>(degrees.size()) != ambient_dim)
        throw ValidationError("Bezout count needs one degree per ambient dimension");
    std::int64_t r = 1;
    for (auto k : degrees) {
        if (k < 0) throw ValidationError("degrees must be nonnegative");
        if (__builtin_mul_overflow(r, k, &r)) throw std::overflow_error("Bezout count overflows");
    }
    return r;
}

}  // namespace gci
