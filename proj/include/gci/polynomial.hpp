#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gci/ambient.hpp"
#include "gci/coefficient.hpp"

namespace gci {

// One exponent per variable of the ambient, in global variable order.
using Exponents = std::vector<int>;

// Graded lex, largest first: y0^2 precedes y0*y1 precedes y1^2.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, Coefficient, GradedLexGreater>;

// Sparse multihomogeneous polynomial on a product of projective spaces.
//
// Every term has per-factor exponent sum equal to the declared degree on that
// factor. Negative exponents are accepted only on factors flagged Laurent;
// those flags are set by the cohomology code paths (Cech representatives
// and chart sections), never by ordinary section input.
class MultiPoly {
public:
    MultiPoly(AmbientPtr ambient, std::vector<int> degrees, Field field = Field::rationals(),
              std::vector<bool> laurent = {});

    static MultiPoly monomial(AmbientPtr ambient, const Exponents& exps, Coefficient c,
                              std::vector<bool> laurent = {});
    static MultiPoly constant(AmbientPtr ambient, Coefficient c);
    static MultiPoly variable(AmbientPtr ambient, const std::string& name, Field field = Field::rationals());

    const AmbientPtr& ambient() const { return ambient_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<bool>& laurent() const { return laurent_; }
    Field field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool has_negative_exponents() const;

    // Accumulates c into the term with the given exponents; validates
    // multihomogeneity and Laurent permission.
    void add_term(const Exponents& exps, const Coefficient& c);
    Coefficient coefficient(const Exponents& exps) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Coefficient& c) const;
    bool operator==(const MultiPoly& o) const;

    // Coefficient of u0^a u1^b on the P^1 factor `factor`, as a polynomial of
    // degree 0 on that factor.
    MultiPoly coeff_of(std::size_t factor, int a, int b) const;

    Coefficient evaluate(std::span<const Coefficient> point) const;
    MultiPoly partial_derivative(std::size_t var) const;
    MultiPoly reduce_mod_p(std::uint32_t p) const;

    // Substitute values for the coordinates of `factor`; the result has
    // degree 0 there.
    MultiPoly substitute_factor(std::size_t factor, std::span<const Coefficient> values) const;
    // Re-home a polynomial of degree 0 on `factor` onto `target`, which must
    // equal ambient().without_factor(factor).
    MultiPoly drop_factor(std::size_t factor, const AmbientPtr& target) const;
    // Inverse of drop_factor: embed into `target`, where this polynomial's
    // ambient equals target->without_factor(factor).
    MultiPoly lift_to(const AmbientPtr& target, std::size_t factor) const;

    MultiPoly with_laurent(std::size_t factor) const;
    // Terms whose exponent vector satisfies pred, same declared degrees.
    MultiPoly filter_terms(const std::function<bool(const Exponents&)>& pred) const;

    std::string to_string() const;

private:
    AmbientPtr ambient_;
    std::vector<int> degrees_;
    Field field_;
    std::vector<bool> laurent_;
    TermMap terms_;

    void check_compatible(const MultiPoly& o, bool same_degrees) const;
};

std::string monomial_to_string(const Ambient& ambient, const Exponents& exps);

}  // namespace gci
