#include "gci/construction.hpp"

#include "gci/cohomology.hpp"
#include "gci/errors.hpp"

namespace gci {

CechClass::CechClass(AmbientPtr amb, std::size_t t, int d_, int e_, std::vector<MultiPoly> coeffs)
    : ambient(std::move(amb)), factor(t), d(d_), e(e_), coefficients(std::move(coeffs)) {
    if (d < 1 || e < 1) throw PreconditionError("the construction needs d >= 1 and e >= 1");
    if (static_cast<int>(coefficients.size()) != d + e - 1)
        throw ValidationError("a Cech class needs d+e-1 = " + std::to_string(d + e - 1) + " coefficients, got " +
                              std::to_string(coefficients.size()));
    const auto& deg = coefficients.front().degrees();
    for (const auto& c : coefficients) {
        if (!(*c.ambient() == *ambient)) throw ValidationError("Cech coefficient on a different ambient");
        if (c.degrees() != deg) throw ValidationError("Cech coefficients have unequal degrees");
        if (c.has_negative_exponents()) throw ValidationError("Cech coefficients must be global sections on Q");
        if (c.field() != coefficients.front().field()) throw ValidationError("Cech coefficients mix fields");
    }
    if (deg.at(factor) != 0) throw ValidationError("Cech coefficients must not involve the z factor");
}

MultiPoly CechClass::representative() const {
    std::vector<int> deg = coefficient_degrees();
    deg[factor] = -d - e;
    std::vector<bool> lf(ambient->num_factors(), false);
    lf[factor] = true;
    Field f = coefficients.front().field();
    MultiPoly q(ambient, deg, f, lf);
    std::size_t u0 = ambient->var_offset(factor);
    for (int j = 1; j <= d + e - 1; ++j) {
        Exponents z(ambient->num_vars(), 0);
        z[u0] = -j;
        z[u0 + 1] = -d - e + j;
        q = q + coefficients[j - 1] * MultiPoly::monomial(ambient, z, Coefficient::one(f), lf);
    }
    return q;
}

CechClass CechClass::scaled(const Coefficient& c) const {
    std::vector<MultiPoly> cs;
    for (const auto& x : coefficients) cs.push_back(x.scaled(c));
    return {ambient, factor, d, e, std::move(cs)};
}

CechClass cech_class_from_vector(const CohGroup& source, int d, int e, const std::vector<mpq_class>& coords) {
    if (!source.basis || !source.cech_factor) throw PreconditionError("source group has no Cech basis");
    if (coords.size() != source.basis->size()) throw ValidationError("coordinate vector has wrong length");
    const AmbientPtr& amb = source.bundle.ambient();
    std::size_t t = *source.cech_factor;
    if (source.bundle.degree(t) != -d - e) throw ValidationError("source bundle is not (L^-1 M)[-d-e]");
    std::vector<int> deg = source.bundle.degrees();
    deg[t] = 0;
    std::vector<MultiPoly> qs(static_cast<std::size_t>(d + e - 1), MultiPoly(amb, deg));
    std::size_t u0 = amb->var_offset(t);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        Exponents m = (*source.basis)[i];
        int j = -m[u0];
        m[u0] = m[u0 + 1] = 0;
        qs[j - 1].add_term(m, Coefficient(coords[i]));
    }
    return {amb, t, d, e, std::move(qs)};
}

CechClass cech_class_from_vector(const CohGroup& source, int d, int e, const IntegerVector& coords) {
    std::vector<mpq_class> q(coords.begin(), coords.end());
    return cech_class_from_vector(source, d, e, q);
}

SplitResult split_tau(const MultiPoly& F, const CechClass& q) {
    std::size_t t = q.factor;
    if (!(*F.ambient() == *q.ambient)) throw ValidationError("F and q live on different ambients");
    if (F.degrees().at(t) != q.d)
        throw ValidationError("F has z-degree " + std::to_string(F.degrees()[t]) + " but the class expects d = " +
                              std::to_string(q.d));
    if (F.has_negative_exponents()) throw ValidationError("F must be a global section");
    MultiPoly prod = F * q.representative();
    std::size_t u0 = F.ambient()->var_offset(t);
    int e = q.e;
    MultiPoly tau0 = prod.filter_terms([&](const Exponents& x) { return x[u0] <= -e; });
    MultiPoly middle = prod.filter_terms([&](const Exponents& x) { return x[u0] > -e && x[u0] < 0; });
    MultiPoly tau1 = -prod.filter_terms([&](const Exponents& x) { return x[u0] >= 0; });
    return {prod, tau0, tau1, middle};
}

static MultiPoly z_power(const AmbientPtr& amb, std::size_t t, int a, int b, Field f) {
    Exponents z(amb->num_vars(), 0);
    z[amb->var_offset(t)] = a;
    z[amb->var_offset(t) + 1] = b;
    return MultiPoly::monomial(amb, z, Coefficient::one(f));
}

// Clears the Laurent flags of a product that must be a global section.
static MultiPoly as_section(const MultiPoly& p, const char* what) {
    if (p.has_negative_exponents())
        throw std::logic_error(std::string(what) + " has negative exponents");
    MultiPoly r(p.ambient(), p.degrees(), p.field());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c);
    return r;
}

GciSystem emit_equations(const MultiPoly& F, const CechClass& q) {
    const AmbientPtr& amb = q.ambient;
    std::size_t t = q.factor;
    // Hypothesis of the construction: H^1(Q, L^-1 M) = 0.
    AmbientPtr base = make_ambient(amb->without_factor(t));
    std::vector<int> lm = q.coefficient_degrees();
    lm.erase(lm.begin() + static_cast<long>(t));
    auto h = cohomology_dims(LineBundle(base, lm));
    if (h.size() > 1 && h[1] != 0)
        throw PreconditionError("hypothesis H^1(Q, L^-1 (x) M) = 0 fails: h^1(Q, O" + to_string(lm) +
                                ") = " + std::to_string(h[1]));

    SplitResult s = split_tau(F, q);
    if (!s.middle.is_zero())
        throw PreconditionError("q not in ker(F_1): middle summand " + s.middle.to_string() + " is nonzero");
    int n = q.d + q.e - 1;
    Field f = F.field();
    GciSystem sys{amb,
                  t,
                  q.d,
                  q.e,
                  F,
                  as_section(z_power(amb, t, n, 0, f) * s.tau0, "G"),
                  as_section(-(z_power(amb, t, 0, n, f) * s.tau1), "H"),
                  as_section(z_power(amb, t, n, n, f) * q.representative(), "A"),
                  q};
    if (!verify_syzygy(sys)) throw std::logic_error("emitted system violates A F = z1^N G + z0^N H");
    return sys;
}

bool verify_syzygy(const GciSystem& sys) {
    int n = sys.d + sys.e - 1;
    Field f = sys.F.field();
    MultiPoly lhs = sys.A * sys.F;
    MultiPoly rhs = z_power(sys.ambient, sys.factor, 0, n, f) * sys.G + z_power(sys.ambient, sys.factor, n, 0, f) * sys.H;
    if (lhs.degrees() != rhs.degrees()) return false;
    return (lhs - rhs).is_zero();
}

FiberRestriction restrict_fiber(const GciSystem& sys, const mpq_class& z0, const mpq_class& z1) {
    if (z0 == 0 && z1 == 0) throw ValidationError("(0,0) is not a point of P^1");
    AmbientPtr base = make_ambient(sys.ambient->without_factor(sys.factor));
    Field f = sys.F.field();
    std::vector<Coefficient> pt{Coefficient::from_rational(z0, f), Coefficient::from_rational(z1, f)};
    auto restrict = [&](const MultiPoly& p) { return p.substitute_factor(sys.factor, pt).drop_factor(sys.factor, base); };
    FiberRestriction r{base, restrict(sys.F), restrict(sys.G), restrict(sys.H), restrict(sys.A), {}};
    if (z1 != 0) r.generating_pairs.push_back("F,H");
    if (z0 != 0) r.generating_pairs.push_back("F,G");
    return r;
}

bool base_locus_membership(const GciSystem& sys) {
    if (!sys.provenance) throw PreconditionError("system has no provenance class");
    const CechClass& q = *sys.provenance;
    std::size_t t = sys.factor;
    int d = sys.d, n = sys.d + sys.e - 1;
    std::vector<MultiPoly> f;
    for (int i = 0; i <= d; ++i) f.push_back(sys.F.coeff_of(t, i, d - i));
    // Coefficient of z0^k in Fq (k = i - j), as a sum of f_i q_j.
    auto bilinear = [&](int k) {
        std::vector<int> deg = f.front().degrees();
        for (std::size_t i = 0; i < deg.size(); ++i) deg[i] += q.coefficient_degrees()[i];
        MultiPoly s(sys.ambient, deg, sys.F.field());
        for (int i = 0; i <= d; ++i) {
            int j = i - k;
            if (j >= 1 && j <= n) s = s + f[i] * q.coefficients[j - 1];
        }
        return s;
    };
    for (int a = 0; a <= d - 1; ++a) {
        if (sys.G.degrees() != sys.H.degrees()) return false;
        MultiPoly g = sys.G.coeff_of(t, a, d - 1 - a);
        MultiPoly h = sys.H.coeff_of(t, a, d - 1 - a);
        MultiPoly bg = bilinear(a - n), bh = bilinear(a);
        if (g.degrees() != bg.degrees() || !(g - bg).is_zero()) return false;
        if (h.degrees() != bh.degrees() || !(h - bh).is_zero()) return false;
    }
    return true;
}

}  // namespace gci
