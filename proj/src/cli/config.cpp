#include "gci/cli/config.hpp"

#include <fstream>
#include <regex>
#include <set>

#include "gci/errors.hpp"
#include "gci/poly_parse.hpp"
#include "gci/random_poly.hpp"

namespace gci::cli {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ValidationError("config " + path + ": " + what);
}

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) fail(path, "unknown key '" + k + "'");
}

std::int64_t get_int(const json& v, const std::string& path) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    fail(path, "expected an integer");
}

int get_small_int(const json& v, const std::string& path) {
    std::int64_t x = get_int(v, path);
    if (x < -1'000'000 || x > 1'000'000) fail(path, "integer out of range");
    return static_cast<int>(x);
}

std::uint64_t get_u64(const json& v, const std::string& path) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (!s.empty() && s.size() <= 20 && s.find_first_not_of("0123456789") == std::string::npos) {
            try {
                return std::stoull(s);
            } catch (const std::out_of_range&) {
            }
        }
    }
    fail(path, "expected a nonnegative 64-bit integer");
}

std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

std::vector<int> get_int_list(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_small_int(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> get_string_list(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_string(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

// Rational written as an integer or an "a/b" string.
std::string get_rational(const json& v, const std::string& path) {
    std::string s;
    if (v.is_number_integer())
        s = v.dump();
    else if (v.is_string())
        s = v.get<std::string>();
    else
        fail(path, "expected an integer or a rational string");
    static const std::regex re("-?[0-9]+(/[0-9]*[1-9][0-9]*)?");
    if (!std::regex_match(s, re)) fail(path, "malformed rational '" + s + "'");
    mpq_class q(s);
    q.canonicalize();
    return q.get_str();
}

bool is_identifier(const std::string& s) {
    static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
    return std::regex_match(s, re);
}

const std::set<std::string> kStages = {"cohomology", "kernel", "equations", "scan", "moduli", "quotient"};

}  // namespace

JobConfig parse_config(const json& j) {
    JobConfig c;
    check_keys(j, "", {"schema_version", "name", "ambient", "bundles", "sections", "options"});
    if (!j.contains("schema_version")) fail("", "missing schema_version");
    if (get_int(j["schema_version"], "schema_version") != kSchemaVersion)
        fail("schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
    if (j.contains("name")) c.name = get_string(j["name"], "name");

    if (!j.contains("ambient")) fail("", "missing ambient");
    const json& a = j["ambient"];
    check_keys(a, "ambient", {"factors", "distinguished"});
    if (!a.contains("factors") || !a["factors"].is_array() || a["factors"].empty())
        fail("ambient.factors", "expected a nonempty array");
    for (std::size_t i = 0; i < a["factors"].size(); ++i) {
        std::string p = "ambient.factors[" + std::to_string(i) + "]";
        const json& f = a["factors"][i];
        check_keys(f, p, {"dim", "vars"});
        if (!f.contains("dim")) fail(p, "missing dim");
        FactorSpec fs;
        fs.dim = get_small_int(f["dim"], p + ".dim");
        if (fs.dim < 1 || fs.dim > 64) fail(p + ".dim", "dimension must be in 1..64");
        if (f.contains("vars")) {
            fs.vars = get_string_list(f["vars"], p + ".vars");
            for (const auto& v : fs.vars)
                if (!is_identifier(v)) fail(p + ".vars", "'" + v + "' is not an identifier");
        }
        c.factors.push_back(std::move(fs));
    }
    if (a.contains("distinguished")) {
        std::int64_t t = get_int(a["distinguished"], "ambient.distinguished");
        if (t < 0 || static_cast<std::size_t>(t) != c.factors.size() - 1)
            fail("ambient.distinguished", "the distinguished P^1 must be the last factor");
        c.distinguished = static_cast<std::size_t>(t);
    }

    if (j.contains("bundles")) {
        const json& b = j["bundles"];
        check_keys(b, "bundles", {"L", "M", "d", "e"});
        for (const char* k : {"L", "M", "d", "e"})
            if (!b.contains(k)) fail("bundles", std::string("missing ") + k);
        if (!c.distinguished) fail("ambient.distinguished", "required when bundles are given");
        c.has_bundles = true;
        c.L = get_int_list(b["L"], "bundles.L");
        c.M = get_int_list(b["M"], "bundles.M");
        c.d = get_small_int(b["d"], "bundles.d");
        c.e = get_small_int(b["e"], "bundles.e");
        if (c.L.size() != c.factors.size() - 1 || c.M.size() != c.factors.size() - 1)
            fail("bundles", "L and M need one degree per factor of Q");
        if (c.d < 1) fail("bundles.d", "must be >= 1");
        if (c.e < 1) fail("bundles.e", "must be >= 1");
    }

    if (j.contains("sections")) {
        const json& s = j["sections"];
        check_keys(s, "sections", {"F", "f", "q", "random"});
        if (!c.has_bundles) fail("sections", "bundles are required to read sections");
        if (s.contains("F") && s.contains("f")) fail("sections", "give either F or f, not both");
        if (s.contains("F")) c.F_text = get_string(s["F"], "sections.F");
        if (s.contains("f")) {
            c.f_list = get_string_list(s["f"], "sections.f");
            if (static_cast<int>(c.f_list->size()) != c.d + 1)
                fail("sections.f", "expected d + 1 = " + std::to_string(c.d + 1) + " coefficients");
        }
        if (s.contains("q")) {
            if (!c.F_text && !c.f_list) fail("sections.q", "q requires F");
            c.q_list = get_string_list(s["q"], "sections.q");
            if (static_cast<int>(c.q_list->size()) != c.d + c.e - 1)
                fail("sections.q", "expected d + e - 1 = " + std::to_string(c.d + c.e - 1) + " coefficients");
        }
        if (s.contains("random")) {
            const json& r = s["random"];
            if (!r.is_object()) fail("sections.random", "expected an object of name -> degrees");
            for (const auto& [k, v] : r.items()) {
                if (!is_identifier(k)) fail("sections.random", "'" + k + "' is not an identifier");
                auto deg = get_int_list(v, "sections.random." + k);
                if (deg.size() != c.factors.size()) fail("sections.random." + k, "one degree per factor of P");
                for (int x : deg)
                    if (x < 0) fail("sections.random." + k, "degrees must be nonnegative");
                c.random[k] = deg;
            }
        }
    }

    if (j.contains("options")) {
        const json& o = j["options"];
        check_keys(o, "options", {"seed", "primes", "h2", "h3", "genera", "h0_tau", "bundles", "fibers", "pipeline",
                                  "notes", "workers"});
        if (o.contains("seed")) c.seed = get_u64(o["seed"], "options.seed");
        if (o.contains("primes")) {
            if (!o["primes"].is_array()) fail("options.primes", "expected an array");
            for (std::size_t i = 0; i < o["primes"].size(); ++i) {
                std::uint64_t p = get_u64(o["primes"][i], "options.primes[" + std::to_string(i) + "]");
                if (p >= (1ull << 31) || !is_odd_prime(static_cast<std::uint32_t>(p)))
                    fail("options.primes", std::to_string(p) + " is not an odd prime below 2^31");
                c.primes.push_back(static_cast<std::uint32_t>(p));
            }
        }
        if (o.contains("h2")) c.h2 = get_int(o["h2"], "options.h2");
        if (o.contains("h3")) c.h3 = get_int(o["h3"], "options.h3");
        if (o.contains("genera")) {
            if (!o["genera"].is_array()) fail("options.genera", "expected an array");
            std::vector<std::int64_t> g;
            for (std::size_t i = 0; i < o["genera"].size(); ++i)
                g.push_back(get_int(o["genera"][i], "options.genera[" + std::to_string(i) + "]"));
            c.genera = g;
        }
        if (o.contains("h0_tau")) c.h0_tau = get_int(o["h0_tau"], "options.h0_tau");
        if (o.contains("bundles")) {
            if (!o["bundles"].is_array()) fail("options.bundles", "expected an array of degree lists");
            for (std::size_t i = 0; i < o["bundles"].size(); ++i) {
                auto deg = get_int_list(o["bundles"][i], "options.bundles[" + std::to_string(i) + "]");
                if (deg.size() != c.factors.size()) fail("options.bundles", "one degree per factor of P");
                c.extra_bundles.push_back(deg);
            }
        }
        if (o.contains("fibers")) {
            if (!o["fibers"].is_array()) fail("options.fibers", "expected an array of [z0, z1] points");
            for (std::size_t i = 0; i < o["fibers"].size(); ++i) {
                std::string p = "options.fibers[" + std::to_string(i) + "]";
                const json& pt = o["fibers"][i];
                if (!pt.is_array() || pt.size() != 2) fail(p, "expected [z0, z1]");
                auto z0 = get_rational(pt[0], p), z1 = get_rational(pt[1], p);
                if (z0 == "0" && z1 == "0") fail(p, "(0 : 0) is not a point of P^1");
                c.fibers.emplace_back(z0, z1);
            }
        }
        if (o.contains("pipeline")) {
            c.pipeline = get_string_list(o["pipeline"], "options.pipeline");
            for (const auto& s : c.pipeline)
                if (!kStages.count(s)) fail("options.pipeline", "unknown stage '" + s + "'");
        }
        if (o.contains("notes")) c.notes = get_string_list(o["notes"], "options.notes");
        if (o.contains("workers")) {
            std::int64_t w = get_int(o["workers"], "options.workers");
            if (w < 1 || w > 256) fail("options.workers", "must be in 1..256");
            c.workers = static_cast<unsigned>(w);
        }
    }
    return c;
}

JobConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

void apply_overrides(JobConfig& cfg, const Overrides& o) {
    if (o.seed) cfg.seed = *o.seed;
    if (!o.primes.empty()) {
        for (auto p : o.primes)
            if (!is_odd_prime(p)) throw ValidationError("--prime " + std::to_string(p) + " is not an odd prime");
        cfg.primes = o.primes;
    }
}

Instance resolve(const JobConfig& cfg) {
    Instance inst;
    std::vector<ProjectiveFactor> fs;
    for (const auto& f : cfg.factors) fs.push_back({f.dim, f.vars});
    inst.P = make_ambient(Ambient(std::move(fs), cfg.distinguished));
    if (!cfg.has_bundles) return inst;

    inst.t = *cfg.distinguished;
    inst.Q = make_ambient(inst.P->without_factor(inst.t));
    inst.L = LineBundle(inst.Q, cfg.L);
    inst.M = LineBundle(inst.Q, cfg.M);
    inst.d = cfg.d;
    inst.e = cfg.e;

    InstanceRng rng(cfg.seed);
    for (const auto& [name, deg] : cfg.random) {
        if (inst.P->find_var(name)) throw ValidationError("random section name '" + name + "' shadows a variable");
        inst.named.emplace(name, random_section(inst.P, deg, rng));
    }
    ParseOptions opts;
    opts.named = &inst.named;

    auto on_p = [&](const std::vector<int>& q_deg, int z_deg) {
        std::vector<int> deg = q_deg;
        deg.insert(deg.begin() + static_cast<long>(inst.t), z_deg);
        return deg;
    };
    std::size_t z0 = inst.P->var_offset(inst.t);
    if (cfg.F_text) {
        inst.F = parse_poly(*cfg.F_text, inst.P, on_p(cfg.L, cfg.d), opts);
    } else if (cfg.f_list) {
        MultiPoly F(inst.P, on_p(cfg.L, cfg.d));
        for (int i = 0; i <= cfg.d; ++i) {
            MultiPoly fi = parse_poly((*cfg.f_list)[static_cast<std::size_t>(i)], inst.P, on_p(cfg.L, 0), opts);
            Exponents ex(inst.P->num_vars(), 0);
            ex[z0] = i;
            ex[z0 + 1] = cfg.d - i;
            F = F + fi * MultiPoly::monomial(inst.P, ex, Coefficient::one(Field::rationals()));
        }
        inst.F = F;
    }
    if (cfg.q_list) {
        std::vector<int> lm;
        for (std::size_t i = 0; i < cfg.L.size(); ++i) lm.push_back(cfg.M[i] - cfg.L[i]);
        std::vector<MultiPoly> cs;
        for (const auto& s : *cfg.q_list) cs.push_back(parse_poly(s, inst.P, on_p(lm, 0), opts));
        inst.q = CechClass(inst.P, inst.t, cfg.d, cfg.e, std::move(cs));
    }
    return inst;
}

nlohmann::ordered_json echo_config(const JobConfig& cfg, const Instance& inst) {
    using oj = nlohmann::ordered_json;
    oj out;
    out["schema_version"] = kSchemaVersion;
    if (cfg.name) out["name"] = *cfg.name;
    oj factors = oj::array();
    for (const auto& f : inst.P->factors()) factors.push_back(oj{{"dim", f.dim}, {"vars", f.vars}});
    out["ambient"]["factors"] = factors;
    if (cfg.distinguished) out["ambient"]["distinguished"] = *cfg.distinguished;
    if (cfg.has_bundles) out["bundles"] = oj{{"L", cfg.L}, {"M", cfg.M}, {"d", cfg.d}, {"e", cfg.e}};
    if (inst.F || !cfg.random.empty()) {
        oj s = oj::object();
        if (inst.F) {
            oj f = oj::array();
            for (int i = 0; i <= inst.d; ++i) f.push_back(inst.F->coeff_of(inst.t, i, inst.d - i).to_string());
            s["f"] = f;
        }
        if (inst.q) {
            oj q = oj::array();
            for (const auto& c : inst.q->coefficients) q.push_back(c.to_string());
            s["q"] = q;
        }
        if (!cfg.random.empty()) {
            oj r = oj::object();
            for (const auto& [k, v] : cfg.random) r[k] = v;
            s["random"] = r;
        }
        out["sections"] = s;
    }
    oj o = oj::object();
    o["seed"] = cfg.seed;
    if (!cfg.primes.empty()) o["primes"] = cfg.primes;
    if (cfg.h2) o["h2"] = *cfg.h2;
    if (cfg.h3) o["h3"] = *cfg.h3;
    if (cfg.genera) o["genera"] = *cfg.genera;
    if (cfg.h0_tau) o["h0_tau"] = *cfg.h0_tau;
    if (!cfg.extra_bundles.empty()) o["bundles"] = cfg.extra_bundles;
    if (!cfg.fibers.empty()) {
        oj pts = oj::array();
        for (const auto& [a, b] : cfg.fibers) pts.push_back(oj::array({a, b}));
        o["fibers"] = pts;
    }
    if (!cfg.pipeline.empty()) o["pipeline"] = cfg.pipeline;
    if (!cfg.notes.empty()) o["notes"] = cfg.notes;
    if (cfg.workers != 1) o["workers"] = cfg.workers;
    out["options"] = o;
    return out;
}

}  // namespace gci::cli
