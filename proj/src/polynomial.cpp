#include "gci/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gci/errors.hpp"

namespace gci {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(AmbientPtr ambient, std::vector<int> degrees, Field field, std::vector<bool> laurent)
    : ambient_(std::move(ambient)), degrees_(std::move(degrees)), field_(field), laurent_(std::move(laurent)) {
    if (!ambient_) throw ValidationError("polynomial without ambient");
    if (degrees_.size() != ambient_->num_factors())
        throw ValidationError("polynomial degree vector " + gci::to_string(degrees_) + " does not match " +
                              std::to_string(ambient_->num_factors()) + " factors");
    if (laurent_.empty()) laurent_.assign(ambient_->num_factors(), false);
    if (laurent_.size() != ambient_->num_factors()) throw ValidationError("Laurent flag vector has wrong length");
}

MultiPoly MultiPoly::monomial(AmbientPtr ambient, const Exponents& exps, Coefficient c, std::vector<bool> laurent) {
    if (exps.size() != ambient->num_vars()) throw ValidationError("exponent vector has wrong length");
    std::vector<int> deg(ambient->num_factors(), 0);
    for (std::size_t v = 0; v < exps.size(); ++v) deg[ambient->factor_of_var(v)] += exps[v];
    if (laurent.empty()) {
        laurent.assign(ambient->num_factors(), false);
        for (std::size_t v = 0; v < exps.size(); ++v)
            if (exps[v] < 0) laurent[ambient->factor_of_var(v)] = true;
    }
    Field f = c.field();
    MultiPoly p(std::move(ambient), deg, f, std::move(laurent));
    p.add_term(exps, c);
    return p;
}

MultiPoly MultiPoly::constant(AmbientPtr ambient, Coefficient c) {
    Exponents e(ambient->num_vars(), 0);
    return monomial(std::move(ambient), e, std::move(c));
}

MultiPoly MultiPoly::variable(AmbientPtr ambient, const std::string& name, Field field) {
    auto v = ambient->find_var(name);
    if (!v) throw ValidationError("unknown variable '" + name + "'");
    Exponents e(ambient->num_vars(), 0);
    e[*v] = 1;
    return monomial(std::move(ambient), e, Coefficient::one(field));
}

bool MultiPoly::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

void MultiPoly::add_term(const Exponents& exps, const Coefficient& c) {
    if (exps.size() != ambient_->num_vars()) throw ValidationError("exponent vector has wrong length");
    if (c.field() != field_) throw ValidationError("coefficient field does not match polynomial field");
    if (c.is_zero()) return;
    std::vector<long> deg(degrees_.size(), 0);
    for (std::size_t v = 0; v < exps.size(); ++v) {
        std::size_t f = ambient_->factor_of_var(v);
        if (exps[v] < 0 && !laurent_[f])
            throw ValidationError("negative exponent on " + ambient_->var_name(v) + " in a non-Laurent polynomial");
        deg[f] += exps[v];
    }
    for (std::size_t f = 0; f < degrees_.size(); ++f)
        if (deg[f] != degrees_[f])
            throw ValidationError("inhomogeneous term " + monomial_to_string(*ambient_, exps) + ": degree " +
                                  std::to_string(deg[f]) + " on factor " + std::to_string(f) + ", expected " +
                                  std::to_string(degrees_[f]));
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Coefficient MultiPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Coefficient::zero(field_) : it->second;
}

void MultiPoly::check_compatible(const MultiPoly& o, bool same_degrees) const {
    if (!(*ambient_ == *o.ambient_)) throw ValidationError("polynomials live on different ambients");
    if (field_ != o.field_) throw ValidationError("polynomials have different coefficient fields");
    if (same_degrees && degrees_ != o.degrees_)
        throw ValidationError("degree mismatch: " + gci::to_string(degrees_) + " vs " + gci::to_string(o.degrees_));
}

static std::vector<bool> merge_laurent(const std::vector<bool>& a, const std::vector<bool>& b) {
    std::vector<bool> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] || b[i];
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o, true);
    MultiPoly r(ambient_, degrees_, field_, merge_laurent(laurent_, o.laurent_));
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o, false);
    std::vector<int> deg(degrees_.size());
    for (std::size_t i = 0; i < deg.size(); ++i)
        if (__builtin_add_overflow(degrees_[i], o.degrees_[i], &deg[i]))
            throw std::overflow_error("degree overflow in polynomial product");
    MultiPoly r(ambient_, deg, field_, merge_laurent(laurent_, o.laurent_));
    Exponents e(ambient_->num_vars());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v)
                if (__builtin_add_overflow(ea[v], eb[v], &e[v]))
                    throw std::overflow_error("exponent overflow in polynomial product");
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Coefficient& c) const {
    MultiPoly r(ambient_, degrees_, field_, laurent_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return *ambient_ == *o.ambient_ && degrees_ == o.degrees_ && field_ == o.field_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::coeff_of(std::size_t factor, int a, int b) const {
    if (factor >= ambient_->num_factors() || ambient_->factor(factor).dim != 1)
        throw ValidationError("coeff_of needs a P^1 factor");
    std::size_t u0 = ambient_->var_offset(factor);
    std::vector<int> deg = degrees_;
    deg[factor] = 0;
    std::vector<bool> lf = laurent_;
    lf[factor] = false;
    MultiPoly r(ambient_, deg, field_, lf);
    if (a + b != degrees_[factor]) return r;
    for (const auto& [e, c] : terms_) {
        if (e[u0] == a && e[u0 + 1] == b) {
            Exponents f = e;
            f[u0] = f[u0 + 1] = 0;
            r.terms_.emplace(std::move(f), c);
        }
    }
    return r;
}

static Coefficient power(const Coefficient& x, int n) {
    Coefficient base = x, result = Coefficient::one(x.field());
    if (n < 0) {
        if (x.is_zero()) throw PreconditionError("zero assigned to a variable with a negative exponent");
        base = Coefficient::one(x.field()) / x;
        n = -n;
    }
    for (; n; n >>= 1) {
        if (n & 1) result *= base;
        base *= base;
    }
    return result;
}

Coefficient MultiPoly::evaluate(std::span<const Coefficient> point) const {
    if (point.size() != ambient_->num_vars())
        throw ValidationError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                              std::to_string(ambient_->num_vars()));
    for (std::size_t v = 0; v < point.size(); ++v) {
        if (point[v].field() != field_) throw ValidationError("evaluation point field mismatch");
        if (laurent_[ambient_->factor_of_var(v)] && point[v].is_zero())
            throw PreconditionError("zero assigned to Laurent variable " + ambient_->var_name(v));
    }
    Coefficient sum = Coefficient::zero(field_);
    for (const auto& [e, c] : terms_) {
        Coefficient t = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) t *= power(point[v], e[v]);
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var) const {
    if (var >= ambient_->num_vars()) throw ValidationError("derivative variable out of range");
    std::size_t f = ambient_->factor_of_var(var);
    for (const auto& [e, c] : terms_)
        if (e[var] < 0)
            throw ValidationError("cannot differentiate a Laurent exponent of " + ambient_->var_name(var));
    std::vector<int> deg = degrees_;
    deg[f] -= 1;
    MultiPoly r(ambient_, deg, field_, laurent_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Coefficient::from_integer(e[var], field_));
    }
    return r;
}

MultiPoly MultiPoly::reduce_mod_p(std::uint32_t p) const {
    Field f = Field::mod(p);
    MultiPoly r(ambient_, degrees_, f, laurent_);
    for (const auto& [e, c] : terms_) {
        Coefficient x = c.reduce_mod(p);
        if (!x.is_zero()) r.terms_.emplace(e, x);
    }
    return r;
}

MultiPoly MultiPoly::substitute_factor(std::size_t factor, std::span<const Coefficient> values) const {
    const auto& fac = ambient_->factor(factor);
    if (values.size() != fac.vars.size()) throw ValidationError("substitution needs one value per coordinate");
    std::size_t off = ambient_->var_offset(factor);
    std::vector<int> deg = degrees_;
    deg[factor] = 0;
    std::vector<bool> lf = laurent_;
    lf[factor] = false;
    MultiPoly r(ambient_, deg, field_, lf);
    for (const auto& [e, c] : terms_) {
        Coefficient t = c;
        Exponents f = e;
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (e[off + k] != 0) t *= power(values[k], e[off + k]);
            f[off + k] = 0;
        }
        r.add_term(f, t);
    }
    return r;
}

MultiPoly MultiPoly::drop_factor(std::size_t factor, const AmbientPtr& target) const {
    if (!(*target == ambient_->without_factor(factor)))
        throw ValidationError("drop_factor target is not the ambient with that factor removed");
    if (degrees_[factor] != 0) throw ValidationError("cannot drop a factor of nonzero degree");
    std::vector<int> deg;
    std::vector<bool> lf;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        if (i != factor) {
            deg.push_back(degrees_[i]);
            lf.push_back(laurent_[i]);
        }
    std::size_t off = ambient_->var_offset(factor), n = ambient_->factor(factor).vars.size();
    MultiPoly r(target, deg, field_, lf);
    for (const auto& [e, c] : terms_) {
        Exponents f;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (v >= off && v < off + n) {
                if (e[v] != 0) throw ValidationError("term involves the dropped factor");
                continue;
            }
            f.push_back(e[v]);
        }
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

MultiPoly MultiPoly::lift_to(const AmbientPtr& target, std::size_t factor) const {
    if (!(target->without_factor(factor) == *ambient_))
        throw ValidationError("lift target does not match this polynomial's ambient");
    std::vector<int> deg = degrees_;
    std::vector<bool> lf = laurent_;
    deg.insert(deg.begin() + static_cast<long>(factor), 0);
    lf.insert(lf.begin() + static_cast<long>(factor), false);
    std::size_t off = target->var_offset(factor), n = target->factor(factor).vars.size();
    MultiPoly r(target, deg, field_, lf);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.insert(f.begin() + static_cast<long>(off), n, 0);
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

MultiPoly MultiPoly::with_laurent(std::size_t factor) const {
    MultiPoly r = *this;
    r.laurent_.at(factor) = true;
    return r;
}

MultiPoly MultiPoly::filter_terms(const std::function<bool(const Exponents&)>& pred) const {
    MultiPoly r(ambient_, degrees_, field_, laurent_);
    for (const auto& [e, c] : terms_)
        if (pred(e)) r.terms_.emplace(e, c);
    return r;
}

std::string monomial_to_string(const Ambient& ambient, const Exponents& exps) {
    std::string s;
    for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] == 0) continue;
        if (!s.empty()) s += '*';
        s += ambient.var_name(v);
        if (exps[v] != 1) s += '^' + std::to_string(exps[v]);
    }
    return s.empty() ? "1" : s;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_to_string(*ambient_, e);
        bool neg = c.is_negative_printed();
        Coefficient mag = neg ? -c : c;
        std::string body;
        if (mono == "1")
            body = mag.to_string();
        else if (mag.is_one())
            body = mono;
        else
            body = mag.to_string() + "*" + mono;
        if (first)
            os << (neg ? "-" : "") << body;
        else
            os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

}  // namespace gci
