#include "gci/cohomology.hpp"

#include <stdexcept>

#include "gci/errors.hpp"

namespace gci {

Dim binomial(Dim n, Dim k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (Dim i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: r is C(n-k+i, i)
        if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<Dim>(r);
}

std::vector<Dim> bott_dims(int n, int k) {
    if (n < 1) throw ValidationError("projective space dimension must be >= 1");
    std::vector<Dim> h(static_cast<std::size_t>(n) + 1, 0);
    if (k >= 0) h[0] = binomial(static_cast<Dim>(n) + k, n);
    if (k <= -n - 1) h[n] = binomial(static_cast<Dim>(-k - 1), n);
    return h;
}

static Dim checked_mul(Dim a, Dim b) {
    Dim r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cohomology dimension exceeds 64 bits");
    return r;
}

static Dim checked_add(Dim a, Dim b) {
    Dim r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cohomology dimension exceeds 64 bits");
    return r;
}

std::vector<Dim> cohomology_dims(const LineBundle& bundle) {
    const Ambient& amb = *bundle.ambient();
    std::vector<Dim> acc{1};
    for (std::size_t i = 0; i < amb.num_factors(); ++i) {
        std::vector<Dim> h = bott_dims(amb.factor(i).dim, bundle.degree(i));
        std::vector<Dim> next(acc.size() + h.size() - 1, 0);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < h.size(); ++b)
                if (acc[a] && h[b]) next[a + b] = checked_add(next[a + b], checked_mul(acc[a], h[b]));
        acc = std::move(next);
    }
    return acc;
}

// Exponent vectors of degree k in n+1 variables, lex largest first.
static void monomials_of_degree(int nvars, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (int x = left; x >= 0; --x) {
            e[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    rec(rec, 0, k);
}

std::vector<Exponents> h0_basis(const LineBundle& bundle) {
    const Ambient& amb = *bundle.ambient();
    for (int k : bundle.degrees())
        if (k < 0) throw ValidationError("h0_basis needs nonnegative degrees, got " + to_string(bundle.degrees()));
    std::vector<Exponents> acc{Exponents{}};
    for (std::size_t i = 0; i < amb.num_factors(); ++i) {
        std::vector<std::vector<int>> mons;
        monomials_of_degree(amb.factor(i).dim + 1, bundle.degree(i), mons);
        std::vector<Exponents> next;
        next.reserve(acc.size() * mons.size());
        for (const auto& a : acc)
            for (const auto& m : mons) {
                Exponents e = a;
                e.insert(e.end(), m.begin(), m.end());
                next.push_back(std::move(e));
            }
        acc = std::move(next);
    }
    return acc;
}

std::vector<bool> CohGroup::laurent_flags() const {
    std::vector<bool> f(bundle.ambient()->num_factors(), false);
    if (cech_factor) f[*cech_factor] = true;
    return f;
}

MultiPoly CohGroup::basis_element(std::size_t i, Field field) const {
    if (!basis) throw PreconditionError("cohomology group has no basis support");
    return MultiPoly::monomial(bundle.ambient(), basis->at(i), Coefficient::one(field), laurent_flags());
}

CohGroup describe_cohomology(const LineBundle& bundle, int r) {
    const Ambient& amb = *bundle.ambient();
    CohGroup g{bundle, r, 0, {}, std::nullopt, std::nullopt};
    auto dims = cohomology_dims(bundle);
    if (r < 0 || static_cast<std::size_t>(r) >= dims.size()) return g;
    g.dimension = dims[r];
    if (g.dimension == 0) return g;
    // Each factor contributes in exactly one degree (0 or n_i) or not at all,
    // so a nonzero group comes from a unique summand iff the split of r is unique.
    std::vector<int> conc;
    for (std::size_t i = 0; i < amb.num_factors(); ++i) {
        auto h = bott_dims(amb.factor(i).dim, bundle.degree(i));
        int q = h[0] ? 0 : amb.factor(i).dim;
        conc.push_back(q);
    }
    int total = 0;
    for (int q : conc) total += q;
    if (total == r) g.concentration = conc;
    return g;
}

CohGroup h1_cech_basis(const LineBundle& bundle, std::size_t t) {
    const Ambient& amb = *bundle.ambient();
    if (t >= amb.num_factors() || amb.factor(t).dim != 1)
        throw PreconditionError("Cech factor " + std::to_string(t) + " is not a P^1");
    int kt = bundle.degree(t);
    if (kt > -2)
        throw PreconditionError("H^1 on the Cech factor needs degree <= -2 there, bundle is " +
                                to_string(bundle.degrees()));
    std::vector<int> rest = bundle.degrees();
    rest[t] = 0;
    for (std::size_t i = 0; i < rest.size(); ++i)
        if (rest[i] < 0)
            throw PreconditionError("H^1 of " + to_string(bundle.degrees()) +
                                    " is not concentrated in the Cech factor summand");
    auto ms = h0_basis(LineBundle(bundle.ambient(), rest));
    std::size_t u0 = amb.var_offset(t);
    std::vector<Exponents> basis;
    for (const auto& m : ms)
        for (int j = 1; j <= -kt - 1; ++j) {
            Exponents e = m;
            e[u0] = -j;
            e[u0 + 1] = kt + j;
            basis.push_back(std::move(e));
        }
    CohGroup g{bundle, 1, basis.size(), std::vector<int>(amb.num_factors(), 0), t, std::move(basis)};
    g.concentration[t] = 1;
    return g;
}

CohGroup h1_cech_group(const LineBundle& bundle, std::size_t t) {
    if (cohomology_dims(bundle).at(1) == 0) {
        CohGroup g = describe_cohomology(bundle, 1);
        g.cech_factor = t;
        g.basis = std::vector<Exponents>{};
        return g;
    }
    return h1_cech_basis(bundle, t);
}

}  // namespace gci
