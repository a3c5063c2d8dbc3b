#include "gci/ambient.hpp"

#include <set>
#include <sstream>

#include "gci/errors.hpp"

namespace gci {

Ambient::Ambient(std::vector<ProjectiveFactor> factors, std::optional<std::size_t> distinguished)
    : factors_(std::move(factors)), distinguished_(distinguished) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto& f = factors_[i];
        if (f.dim < 1) throw ValidationError("factor " + std::to_string(i) + " must have dimension >= 1");
        if (f.vars.empty()) {
            for (int j = 0; j <= f.dim; ++j) f.vars.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
        }
        if (static_cast<int>(f.vars.size()) != f.dim + 1)
            throw ValidationError("factor " + std::to_string(i) + " needs " + std::to_string(f.dim + 1) +
                                  " variable names");
        offsets_.push_back(var_names_.size());
        for (const auto& v : f.vars) {
            if (v.empty()) throw ValidationError("empty variable name");
            if (!seen.insert(v).second) throw ValidationError("duplicate variable name '" + v + "'");
            var_names_.push_back(v);
            var_factor_.push_back(i);
        }
    }
    if (distinguished_) {
        if (*distinguished_ >= factors_.size()) throw ValidationError("distinguished factor index out of range");
        if (factors_[*distinguished_].dim != 1) throw ValidationError("distinguished factor must be a P^1");
    }
}

Ambient Ambient::with_default_names(const std::vector<int>& dims, std::optional<std::size_t> distinguished) {
    std::vector<ProjectiveFactor> fs;
    for (int n : dims) fs.push_back({n, {}});
    return Ambient(std::move(fs), distinguished);
}

int Ambient::dimension() const {
    int n = 0;
    for (const auto& f : factors_) n += f.dim;
    return n;
}

std::optional<std::size_t> Ambient::find_var(const std::string& name) const {
    for (std::size_t v = 0; v < var_names_.size(); ++v)
        if (var_names_[v] == name) return v;
    return std::nullopt;
}

Ambient Ambient::without_factor(std::size_t i) const {
    if (i >= factors_.size()) throw ValidationError("factor index out of range");
    std::vector<ProjectiveFactor> fs;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        if (k != i) fs.push_back(factors_[k]);
    std::optional<std::size_t> dist;
    if (distinguished_ && *distinguished_ != i) dist = *distinguished_ > i ? *distinguished_ - 1 : *distinguished_;
    return Ambient(std::move(fs), dist);
}

LineBundle::LineBundle(AmbientPtr ambient, std::vector<int> degrees)
    : ambient_(std::move(ambient)), degrees_(std::move(degrees)) {
    if (!ambient_) throw ValidationError("line bundle without ambient");
    if (degrees_.size() != ambient_->num_factors())
        throw ValidationError("bundle has " + std::to_string(degrees_.size()) + " degrees but ambient has " +
                              std::to_string(ambient_->num_factors()) + " factors");
}

LineBundle LineBundle::tensor(const LineBundle& other) const {
    if (!(*ambient_ == *other.ambient_)) throw ValidationError("tensor of bundles on different ambients");
    std::vector<int> d(degrees_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = degrees_[i] + other.degrees_[i];
    return {ambient_, d};
}

LineBundle LineBundle::dual() const {
    std::vector<int> d(degrees_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = -degrees_[i];
    return {ambient_, d};
}

LineBundle canonical_bundle(const AmbientPtr& ambient) {
    std::vector<int> d;
    for (const auto& f : ambient->factors()) d.push_back(-f.dim - 1);
    return {ambient, d};
}

bool cy_condition(const LineBundle& L, int d, const LineBundle& M, int e) {
    if (!(*L.ambient() == *M.ambient())) throw ValidationError("L and M live on different ambients");
    const auto& q = *L.ambient();
    for (std::size_t i = 0; i < q.num_factors(); ++i)
        if (L.degree(i) + M.degree(i) != q.factor(i).dim + 1) return false;
    return d - e == 2;
}

std::string to_string(const std::vector<int>& degrees) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
    os << ')';
    return os.str();
}

}  // namespace gci
