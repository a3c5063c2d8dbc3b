#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "gci/cohomology.hpp"
#include "gci/polynomial.hpp"

namespace gci {

template <typename T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

using RationalMatrix = Matrix<mpq_class>;
using IntegerVector = std::vector<mpz_class>;

// Multiplication by a section between two H^1 groups with Cech bases on the
// same P^1 factor. Columns index the source basis, rows the target basis.
struct MultMap {
    MultiPoly multiplier;
    CohGroup source;
    CohGroup target;
    std::size_t factor = 0;
    RationalMatrix matrix;
};

// Entry (i, j) is the coefficient of target monomial i in
// multiplier * source monomial j, keeping only terms with both exponents on
// the Cech factor negative (the part that survives in H^1; with the
// coboundary delta(t0, t1) = t0 - t1 everything else is a coboundary).
MultMap build_mult_map(const MultiPoly& multiplier, const CohGroup& source, const CohGroup& target,
                       std::size_t factor, unsigned workers = 1);

struct KernelBasis {
    // Primitive integer vectors, positive leading entry, in reduced echelon
    // order (strictly increasing leading positions).
    std::vector<IntegerVector> vectors;
    std::size_t rank = 0;
};

std::size_t matrix_rank(const RationalMatrix& m);
KernelBasis kernel_basis(const RationalMatrix& m);
KernelBasis kernel_basis(const MultMap& map);
std::size_t cokernel_dim(const MultMap& map);

// Canonical basis of the row span: reduced echelon, each row primitive with
// positive leading entry. Two vector families span the same space iff their
// canonical bases coincide.
std::vector<IntegerVector> canonical_span(const std::vector<IntegerVector>& vectors, std::size_t length);

// The map F_1 : H^1(P, (L^-1 M)[-d-e]) -> H^1(P, M[-e]) for F in H^0(L[d]).
// F lives on P with a distinguished P^1; L and M are bundles on Q = P minus
// that factor.
MultMap build_f1(const MultiPoly& F, const LineBundle& L, const LineBundle& M, int d, int e,
                 unsigned workers = 1);
std::size_t full_f1_kernel_dim(const MultiPoly& F, const LineBundle& L, const LineBundle& M, int d, int e);

// Extend a bundle on Q to P = Q x P^1 by inserting degree `deg_t` at factor t.
LineBundle lift_bundle(const LineBundle& on_q, const AmbientPtr& p, std::size_t t, int deg_t);

}  // namespace gci
