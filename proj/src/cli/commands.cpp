#include "gci/cli/commands.hpp"

#include <algorithm>

#include "gci/cohomology.hpp"
#include "gci/errors.hpp"
#include "gci/multmap.hpp"
#include "gci/scan.hpp"
#include "gci/topology.hpp"

namespace gci::cli {
namespace {

using oj = nlohmann::ordered_json;

oj num(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

oj num(const mpq_class& q) {
    if (q.get_den() == 1) return num(q.get_num());
    return q.get_str();
}

class Job {
public:
    explicit Job(const JobConfig& cfg) : cfg_(cfg), inst_(resolve(cfg)) {
        rep_.config = echo_config(cfg, inst_);
        rep_.seed = cfg.seed;
        rep_.notes = cfg.notes;
        if (!cfg.random.empty()) {
            std::string names;
            for (const auto& [k, v] : cfg.random) names += (names.empty() ? "" : ", ") + k;
            rep_.notes.push_back("random sections " + names + " drawn from seed " + std::to_string(cfg.seed) +
                                 " with coefficients in [-9, 9]");
        }
    }

    Report& report() { return rep_; }

    void cohomology() {
        oj rows = oj::array();
        auto add = [&](const std::string& label, const LineBundle& b) {
            oj h = oj::array();
            for (Dim x : cohomology_dims(b)) h.push_back(x);
            rows.push_back(oj{{"label", label}, {"degrees", b.degrees()}, {"h", h}});
        };
        if (cfg_.has_bundles) {
            std::size_t t = inst_.t;
            const LineBundle &L = *inst_.L, &M = *inst_.M;
            add("L[d]", lift_bundle(L, inst_.P, t, inst_.d));
            add("(L^-1 M)[-d-e]", lift_bundle(L.dual().tensor(M), inst_.P, t, -inst_.d - inst_.e));
            add("M[-e]", lift_bundle(M, inst_.P, t, -inst_.e));
            add("L^-1 M on Q", L.dual().tensor(M));
        }
        for (const auto& deg : cfg_.extra_bundles) add("O" + to_string(deg), LineBundle(inst_.P, deg));
        if (rows.empty()) throw ValidationError("cohomology needs bundles or options.bundles");
        rep_.sections.push_back({"cohomology", oj{{"bundles", rows}}});
    }

    void kernel() {
        const MultMap& m = f1();
        const KernelBasis& k = ker();
        auto group = [](const CohGroup& g) {
            oj basis = oj::array();
            for (std::size_t i = 0; i < g.dimension; ++i) basis.push_back(g.basis_element(i).to_string());
            return oj{{"bundle", g.bundle.degrees()}, {"dimension", g.dimension}, {"basis", basis}};
        };
        oj entries = oj::array();
        for (std::size_t i = 0; i < m.matrix.rows; ++i) {
            oj row = oj::array();
            for (std::size_t j = 0; j < m.matrix.cols; ++j) row.push_back(num(m.matrix(i, j)));
            entries.push_back(row);
        }
        oj basis = oj::array();
        for (const auto& v : k.vectors) {
            oj row = oj::array();
            for (const auto& x : v) row.push_back(num(x));
            basis.push_back(row);
        }
        LineBundle lm = inst_.L->dual().tensor(*inst_.M);
        Dim h1 = hypothesis_h1();
        oj d;
        d["hypothesis"] = oj{{"bundle", lm.degrees()}, {"h1", h1}, {"holds", h1 == 0}};
        d["source"] = group(m.source);
        d["target"] = group(m.target);
        d["matrix"] = oj{{"rows", m.matrix.rows}, {"cols", m.matrix.cols}, {"entries", entries}};
        d["rank"] = k.rank;
        d["kernel_dim"] = k.vectors.size();
        d["lower_bound"] = m.source.dimension > m.target.dimension ? m.source.dimension - m.target.dimension : 0;
        d["cokernel_dim"] = cokernel_dim(m);
        d["kernel_basis"] = basis;
        rep_.sections.push_back({"kernel", d});
    }

    void equations() {
        const GciSystem& s = system();
        SplitResult sp = split_tau(s.F, *s.provenance);
        oj q = oj::array();
        for (const auto& c : s.provenance->coefficients) q.push_back(c.to_string());
        oj d;
        d["q_source"] = q_source_;
        d["q"] = q;
        d["q_representative"] = s.provenance->representative().to_string();
        d["N"] = s.d + s.e - 1;
        d["split"] = oj{{"product", sp.product.to_string()},
                        {"tau0", sp.tau0.to_string()},
                        {"tau1", sp.tau1.to_string()},
                        {"middle", sp.middle.to_string()}};
        d["F"] = s.F.to_string();
        d["G"] = s.G.to_string();
        d["H"] = s.H.to_string();
        d["A"] = s.A.to_string();
        syzygy_ = verify_syzygy(s);
        d["syzygy"] = *syzygy_;
        d["base_locus_membership"] = base_locus_membership(s);
        oj fibers = oj::array();
        for (const auto& [a, b] : cfg_.fibers) {
            FiberRestriction fr = restrict_fiber(s, mpq_class(a), mpq_class(b));
            fibers.push_back(oj{{"point", oj::array({a, b})},
                                {"F", fr.F.to_string()},
                                {"G", fr.G.to_string()},
                                {"H", fr.H.to_string()},
                                {"A", fr.A.to_string()},
                                {"generating_pairs", fr.generating_pairs}});
        }
        d["fibers"] = fibers;
        rep_.sections.push_back({"equations", d});
    }

    void scan() {
        if (cfg_.primes.empty()) throw ValidationError("scan needs at least one prime (--prime or options.primes)");
        const MultiPoly& F = need_F();
        std::vector<std::pair<std::string, std::vector<MultiPoly>>> systems = {{"Y", {F}}};
        if (system_available()) {
            const GciSystem& s = system();
            systems.push_back({"X", {s.F, s.G, s.H}});
        } else {
            rep_.notes.push_back("scan: no class q available, only Y = (F) is scanned");
        }
        oj runs = oj::array();
        for (auto p : cfg_.primes) {
            for (const auto& [name, eqs] : systems) {
                std::size_t c = eqs.size() == 1 ? 1 : 2;
                ScanReport r = singular_scan_mod_p(eqs, inst_.P, p, c, cfg_.workers);
                oj flagged = oj::array();
                for (const auto& pt : r.flagged) flagged.push_back(pt);
                runs.push_back(oj{{"system", name},
                                  {"equations", name == "Y" ? oj::array({"F"}) : oj::array({"F", "G", "H"})},
                                  {"codim", c},
                                  {"prime", p},
                                  {"points", r.point_count},
                                  {"zeros", r.zero_count},
                                  {"flagged_count", r.flagged.size()},
                                  {"flagged", flagged}});
            }
        }
        rep_.sections.push_back({"scan", oj{{"runs", runs}}});
    }

    void moduli() {
        need_bundles();
        std::int64_t h0_tau;
        if (cfg_.h0_tau) {
            h0_tau = *cfg_.h0_tau;
        } else {
            h0_tau = static_cast<std::int64_t>(ker().vectors.size());
        }
        ModuliCount m = moduli_parameter_count(inst_.P, *inst_.L, inst_.d, *inst_.M, inst_.e, h0_tau);
        oj d;
        d["h0_F"] = m.h0_F;
        d["group_dim"] = m.group_dim;
        d["trivial_dim"] = m.trivial_dim;
        d["params_F"] = m.params_F;
        d["h0_tau"] = m.h0_tau;
        d["h0_tau_source"] = cfg_.h0_tau ? "config" : "dim ker F_1";
        d["params_tau"] = m.params_tau;
        d["total"] = m.total;
        d["notes"] = m.notes;
        rep_.sections.push_back({"moduli", d});
    }

    void quotient() {
        if (!cfg_.h2 || !cfg_.h3) throw ValidationError("quotient needs options.h2 and options.h3");
        QuotientHodgeReport q = quotient_hodge(*cfg_.h2, *cfg_.h3, cfg_.genera.value_or(std::vector<std::int64_t>{}));
        oj d;
        d["h2_X"] = q.h2_X;
        d["h3_X"] = q.h3_X;
        d["genera"] = q.genera;
        d["h2_tilde"] = q.h2_tilde;
        d["h3_tilde"] = q.h3_tilde;
        d["chi_fixed"] = q.chi_fixed;
        d["t3"] = q.t3;
        d["a"] = q.a;
        d["b"] = q.b;
        d["h2_Z"] = q.h2_Z;
        d["h3_Z"] = q.h3_Z;
        d["h21_Z"] = q.h21_Z;
        d["assumptions"] = q.assumptions;
        rep_.sections.push_back({"quotient", d});
    }

    void summary(const std::vector<std::string>& stages) {
        oj d;
        d["stages"] = stages;
        if (syzygy_) d["syzygy"] = *syzygy_;
        rep_.sections.push_back({"summary", d});
    }

    std::vector<std::string> default_pipeline() const {
        std::vector<std::string> s;
        if (cfg_.has_bundles || !cfg_.extra_bundles.empty()) s.push_back("cohomology");
        if (inst_.F) {
            s.push_back("kernel");
            if (cfg_.h0_tau) s.push_back("moduli");
            if (!cfg_.primes.empty()) s.push_back("scan");
            s.push_back("equations");
        }
        if (cfg_.h2 && cfg_.h3) s.push_back("quotient");
        return s;
    }

private:
    const JobConfig& cfg_;
    Instance inst_;
    Report rep_;
    std::optional<MultMap> f1_;
    std::optional<KernelBasis> ker_;
    std::optional<GciSystem> sys_;
    std::string q_source_;
    std::optional<bool> syzygy_;

    void need_bundles() const {
        if (!cfg_.has_bundles) throw ValidationError("this command needs bundles {L, M, d, e}");
    }

    const MultiPoly& need_F() const {
        need_bundles();
        if (!inst_.F) throw ValidationError("this command needs sections.F or sections.f");
        return *inst_.F;
    }

    Dim hypothesis_h1() const {
        auto dims = cohomology_dims(inst_.L->dual().tensor(*inst_.M));
        return dims.size() > 1 ? dims[1] : 0;
    }

    const MultMap& f1() {
        if (!f1_) f1_ = build_f1(need_F(), *inst_.L, *inst_.M, inst_.d, inst_.e, cfg_.workers);
        return *f1_;
    }

    const KernelBasis& ker() {
        if (!ker_) ker_ = kernel_basis(f1());
        return *ker_;
    }

    bool system_available() {
        if (inst_.q) return true;
        return hypothesis_h1() == 0 && !ker().vectors.empty();
    }

    const GciSystem& system() {
        if (sys_) return *sys_;
        const MultiPoly& F = need_F();
        if (inst_.q) {
            q_source_ = "config";
            sys_ = emit_equations(F, *inst_.q);
        } else {
            if (hypothesis_h1() != 0) {
                LineBundle lm = inst_.L->dual().tensor(*inst_.M);
                throw PreconditionError("hypothesis H^1(Q, L^-1 (x) M) = 0 fails: h^1(Q, O" + to_string(lm.degrees()) +
                                        ") = " + std::to_string(hypothesis_h1()));
            }
            const KernelBasis& k = ker();
            if (k.vectors.empty()) throw PreconditionError("ker(F_1) = 0: there is no class q to build G, H, A from");
            q_source_ = "kernel basis vector 0";
            sys_ = emit_equations(F, cech_class_from_vector(f1().source, inst_.d, inst_.e, k.vectors[0]));
        }
        return *sys_;
    }
};

void run_stage(Job& job, const std::string& s) {
    if (s == "cohomology")
        job.cohomology();
    else if (s == "kernel")
        job.kernel();
    else if (s == "equations")
        job.equations();
    else if (s == "scan")
        job.scan();
    else if (s == "moduli")
        job.moduli();
    else if (s == "quotient")
        job.quotient();
    else
        throw ValidationError("unknown command '" + s + "'");
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"cohomology", "kernel", "equations", "scan",
                                                   "moduli",     "quotient", "example"};
    return names;
}

Report run_command(const std::string& command, const JobConfig& cfg) {
    Job job(cfg);
    job.report().command = command;
    if (command == "example") {
        std::vector<std::string> stages = cfg.pipeline.empty() ? job.default_pipeline() : cfg.pipeline;
        for (const auto& s : stages) run_stage(job, s);
        job.summary(stages);
    } else {
        run_stage(job, command);
    }
    return std::move(job.report());
}

}  // namespace gci::cli
