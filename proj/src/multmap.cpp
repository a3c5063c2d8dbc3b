#include "gci/multmap.hpp"

#include <map>
#include <thread>

#include "gci/errors.hpp"

namespace gci {

LineBundle lift_bundle(const LineBundle& on_q, const AmbientPtr& p, std::size_t t, int deg_t) {
    if (!(p->without_factor(t) == *on_q.ambient()))
        throw ValidationError("bundle does not live on the base Q of this ambient");
    std::vector<int> d = on_q.degrees();
    d.insert(d.begin() + static_cast<long>(t), deg_t);
    return {p, d};
}

MultMap build_mult_map(const MultiPoly& multiplier, const CohGroup& source, const CohGroup& target,
                       std::size_t factor, unsigned workers) {
    if (!multiplier.field().is_rational()) throw ValidationError("multiplication maps need a rational multiplier");
    if (multiplier.has_negative_exponents()) throw ValidationError("multiplier must be a global section");
    if (!source.basis || !target.basis) throw PreconditionError("multiplication map needs Cech bases on both ends");
    if (source.cech_factor != factor || target.cech_factor != factor)
        throw PreconditionError("source and target bases must use the same Cech factor");
    LineBundle expected = source.bundle.tensor(LineBundle(multiplier.ambient(), multiplier.degrees()));
    if (!(expected == target.bundle))
        throw ValidationError("target bundle " + to_string(target.bundle.degrees()) + " is not source " +
                              to_string(source.bundle.degrees()) + " twisted by " +
                              to_string(multiplier.degrees()));

    const Ambient& amb = *multiplier.ambient();
    std::size_t u0 = amb.var_offset(factor);
    std::map<Exponents, std::size_t> row_of;
    for (std::size_t i = 0; i < target.basis->size(); ++i) row_of.emplace((*target.basis)[i], i);

    MultMap map{multiplier, source, target, factor, RationalMatrix(target.dimension, source.dimension)};
    auto fill_column = [&](std::size_t j) {
        const Exponents& s = (*source.basis)[j];
        Exponents e(s.size());
        for (const auto& [m, c] : multiplier.terms()) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = m[v] + s[v];
            if (e[u0] >= 0 || e[u0 + 1] >= 0) continue;
            auto it = row_of.find(e);
            // Every doubly-negative monomial of the right degree is a target basis element.
            if (it == row_of.end()) throw std::logic_error("product monomial missing from target basis");
            map.matrix(it->second, j) += c.rational();
        }
    };
    std::size_t cols = source.dimension;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cols ? cols : 1)));
    if (workers == 1) {
        for (std::size_t j = 0; j < cols; ++j) fill_column(j);
    } else {
        // Disjoint column stripes; each worker writes only its own entries.
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t j = w; j < cols; j += workers) fill_column(j);
            });
        for (auto& th : pool) th.join();
    }
    return map;
}

namespace {

// Rows of m scaled to integers; row scaling leaves the kernel unchanged.
Matrix<mpz_class> clear_row_denominators(const RationalMatrix& m) {
    Matrix<mpz_class> r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols; ++j) {
            mpq_class x = m(i, j) * l;
            r(i, j) = x.get_num();
        }
    }
    return r;
}

// Fraction-free (Bareiss) forward elimination in place. Pivot: first column
// with a nonzero entry at or below the current row, first such row.
// Returns the pivot columns; rows [0, pivots.size()) are in echelon form.
std::vector<std::size_t> bareiss_echelon(Matrix<mpz_class>& a) {
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t p = row;
        while (p < a.rows && a(p, col) == 0) ++p;
        if (p == a.rows) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(p, j), a(row, j));
        for (std::size_t i = row + 1; i < a.rows; ++i) {
            for (std::size_t j = col + 1; j < a.cols; ++j) {
                a(i, j) = a(row, col) * a(i, j) - a(i, col) * a(row, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, col) = 0;
        }
        prev = a(row, col);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

IntegerVector primitive(std::vector<mpq_class> v) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector r(v.size());
    mpz_class g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpq_class x = v[i] * l;
        r[i] = x.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
    }
    if (g == 0) return r;
    int sign = 1;
    for (const auto& x : r)
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    for (auto& x : r) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        if (sign < 0) x = -x;
    }
    return r;
}

}  // namespace

std::size_t matrix_rank(const RationalMatrix& m) {
    auto a = clear_row_denominators(m);
    return bareiss_echelon(a).size();
}

std::vector<IntegerVector> canonical_span(const std::vector<IntegerVector>& vectors, std::size_t length) {
    // Gauss-Jordan over Q; sizes here are tiny.
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& v : vectors) {
        if (v.size() != length) throw ValidationError("vector length mismatch");
        rows.emplace_back(v.begin(), v.end());
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < length && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        mpq_class inv = 1 / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            mpq_class f = rows[i][col];
            for (std::size_t j = col; j < length; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    std::vector<IntegerVector> out;
    for (auto& row : rows) out.push_back(primitive(std::move(row)));
    return out;
}

KernelBasis kernel_basis(const RationalMatrix& m) {
    auto a = clear_row_denominators(m);
    auto pivots = bareiss_echelon(a);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<IntegerVector> raw;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(m.cols, 0);
        v[free] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            std::size_t pc = pivots[k];
            mpq_class s = 0;
            for (std::size_t j = pc + 1; j < m.cols; ++j)
                if (v[j] != 0 && a(k, j) != 0) s += mpq_class(a(k, j)) * v[j];
            v[pc] = -s / mpq_class(a(k, pc));
        }
        raw.push_back(primitive(std::move(v)));
    }
    KernelBasis kb{canonical_span(raw, m.cols), pivots.size()};
    // Exactness is part of the contract, not a statistical property.
    for (const auto& v : kb.vectors)
        for (std::size_t i = 0; i < m.rows; ++i) {
            mpq_class s = 0;
            for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
            if (s != 0) throw std::logic_error("kernel vector fails M v = 0");
        }
    return kb;
}

KernelBasis kernel_basis(const MultMap& map) { return kernel_basis(map.matrix); }

std::size_t cokernel_dim(const MultMap& map) { return map.target.dimension - matrix_rank(map.matrix); }

MultMap build_f1(const MultiPoly& F, const LineBundle& L, const LineBundle& M, int d, int e, unsigned workers) {
    const AmbientPtr& p = F.ambient();
    if (!p->distinguished()) throw ValidationError("ambient has no distinguished P^1 factor");
    std::size_t t = *p->distinguished();
    LineBundle ld = lift_bundle(L, p, t, d);
    if (F.degrees() != ld.degrees())
        throw ValidationError("F has degree " + to_string(F.degrees()) + " but L[d] is " + to_string(ld.degrees()));
    LineBundle src = lift_bundle(L.dual().tensor(M), p, t, -d - e);
    LineBundle tgt = lift_bundle(M, p, t, -e);
    return build_mult_map(F, h1_cech_group(src, t), h1_cech_group(tgt, t), t, workers);
}

std::size_t full_f1_kernel_dim(const MultiPoly& F, const LineBundle& L, const LineBundle& M, int d, int e) {
    MultMap m = build_f1(F, L, M, d, e);
    return m.source.dimension - matrix_rank(m.matrix);
}

}  // namespace gci
