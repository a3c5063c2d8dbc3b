#include "gci/scan.hpp"

#include <algorithm>
#include <thread>

#include "gci/errors.hpp"

namespace gci {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Polynomial flattened for fast evaluation over F_p.
struct CompactPoly {
    std::vector<std::vector<std::pair<u32, int>>> monomials;  // (var, exponent), exponent > 0
    std::vector<u32> coeffs;
};

CompactPoly compact(const MultiPoly& p) {
    CompactPoly c;
    for (const auto& [e, k] : p.terms()) {
        std::vector<std::pair<u32, int>> m;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) m.emplace_back(static_cast<u32>(v), e[v]);
        c.monomials.push_back(std::move(m));
        c.coeffs.push_back(k.residue());
    }
    return c;
}

u64 eval(const CompactPoly& poly, const std::vector<std::vector<u64>>& powers, u32 p) {
    u64 sum = 0;
    for (std::size_t t = 0; t < poly.coeffs.size(); ++t) {
        u64 x = poly.coeffs[t];
        for (const auto& [v, k] : poly.monomials[t]) {
            x = x * powers[v][k] % p;
            if (!x) break;
        }
        sum += x;
    }
    return sum % p;
}

std::size_t rank_mod_p(std::vector<std::vector<u64>> m, u32 p) {
    std::size_t rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t r = rank;
        while (r < m.size() && m[r][c] == 0) ++r;
        if (r == m.size()) continue;
        std::swap(m[r], m[rank]);
        u64 inv = mod_inverse(static_cast<u32>(m[rank][c]), p);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (!m[i][c]) continue;
            u64 f = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

// Normalized representatives of P^n(F_p): first nonzero coordinate is 1.
std::vector<std::vector<u32>> projective_points(int n, u32 p) {
    std::vector<std::vector<u32>> pts;
    for (int lead = 0; lead <= n; ++lead) {
        int free = n - lead;
        u64 count = 1;
        for (int k = 0; k < free; ++k) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            std::vector<u32> pt(static_cast<std::size_t>(n) + 1, 0);
            pt[lead] = 1;
            u64 r = idx;
            for (int k = n; k > lead; --k) {
                pt[k] = static_cast<u32>(r % p);
                r /= p;
            }
            pts.push_back(std::move(pt));
        }
    }
    return pts;
}

}  // namespace

std::uint64_t projective_point_count(const Ambient& ambient, std::uint32_t p, std::uint64_t budget) {
    u64 total = 1;
    for (const auto& f : ambient.factors()) {
        u64 q = 0, pw = 1;
        for (int k = 0; k <= f.dim; ++k) {
            q += pw;  // 1 + p + ... + p^n
            if (__builtin_mul_overflow(pw, p, &pw)) throw BudgetExceeded("point count overflows");
        }
        if (__builtin_mul_overflow(total, q, &total) || total > budget)
            throw BudgetExceeded("scan over F_" + std::to_string(p) + " exceeds the budget of " +
                                 std::to_string(budget) + " points");
    }
    return total;
}

ScanReport singular_scan_mod_p(const std::vector<MultiPoly>& equations, const AmbientPtr& ambient, std::uint32_t p,
                               std::size_t codim, unsigned workers) {
    Field::mod(p);
    ScanReport report{p, codim, projective_point_count(*ambient, p), 0, {}};

    std::vector<CompactPoly> eqs;
    std::vector<std::vector<CompactPoly>> jac;
    int max_exp = 1;
    for (const auto& eq : equations) {
        if (!(*eq.ambient() == *ambient)) throw ValidationError("scan equation lives on a different ambient");
        if (eq.has_negative_exponents()) throw ValidationError("scan equations must be global sections");
        MultiPoly r = eq.reduce_mod_p(p);
        for (const auto& [e, c] : r.terms())
            for (int x : e) max_exp = std::max(max_exp, x);
        eqs.push_back(compact(r));
        std::vector<CompactPoly> row;
        for (std::size_t v = 0; v < ambient->num_vars(); ++v) row.push_back(compact(r.partial_derivative(v)));
        jac.push_back(std::move(row));
    }

    std::vector<std::vector<std::vector<u32>>> factor_points;
    for (const auto& f : ambient->factors()) factor_points.push_back(projective_points(f.dim, p));

    struct Shard {
        u64 zeros = 0;
        std::vector<std::pair<u64, std::vector<u32>>> flagged;
    };
    workers = std::max(1u, workers);
    std::vector<Shard> shards(workers);
    u64 total = report.point_count;
    std::size_t nv = ambient->num_vars();

    auto run = [&](unsigned w) {
        Shard& out = shards[w];
        std::vector<u32> coords(nv);
        std::vector<std::vector<u64>> powers(nv, std::vector<u64>(static_cast<std::size_t>(max_exp) + 1));
        u64 begin = total * w / workers, end = total * (w + 1) / workers;
        for (u64 idx = begin; idx < end; ++idx) {
            // Mixed radix, factor 0 most significant.
            u64 r = idx;
            for (std::size_t f = factor_points.size(); f-- > 0;) {
                const auto& pts = factor_points[f];
                const auto& pt = pts[r % pts.size()];
                r /= pts.size();
                std::copy(pt.begin(), pt.end(), coords.begin() + static_cast<long>(ambient->var_offset(f)));
            }
            for (std::size_t v = 0; v < nv; ++v) {
                powers[v][0] = 1;
                for (int k = 1; k <= max_exp; ++k) powers[v][k] = powers[v][k - 1] * coords[v] % p;
            }
            bool zero = true;
            for (const auto& eq : eqs)
                if (eval(eq, powers, p) != 0) {
                    zero = false;
                    break;
                }
            if (!zero) continue;
            ++out.zeros;
            std::vector<std::vector<u64>> m;
            for (const auto& row : jac) {
                std::vector<u64> vals;
                for (const auto& d : row) vals.push_back(eval(d, powers, p));
                m.push_back(std::move(vals));
            }
            if (rank_mod_p(std::move(m), p) < codim) out.flagged.emplace_back(idx, coords);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    std::vector<std::pair<u64, std::vector<u32>>> all;
    for (auto& s : shards) {
        report.zero_count += s.zeros;
        all.insert(all.end(), s.flagged.begin(), s.flagged.end());
    }
    std::sort(all.begin(), all.end());
    for (auto& [i, c] : all) report.flagged.push_back(std::move(c));
    return report;
}

}  // namespace gci
