#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gci {

struct ProjectiveFactor {
    int dim = 1;
    std::vector<std::string> vars;  // dim + 1 homogeneous coordinates

    bool operator==(const ProjectiveFactor&) const = default;
};

// An ordered product of projective spaces P^{n_1} x ... x P^{n_r}, optionally
// with one P^1 factor singled out as the "z" line of P = Q x P^1.
class Ambient {
public:
    Ambient(std::vector<ProjectiveFactor> factors,
            std::optional<std::size_t> distinguished = std::nullopt);

    // Factor i of dimension dims[i] gets variables x{i}_0 ... x{i}_n.
    static Ambient with_default_names(const std::vector<int>& dims,
                                      std::optional<std::size_t> distinguished = std::nullopt);

    std::size_t num_factors() const { return factors_.size(); }
    std::size_t num_vars() const { return var_names_.size(); }
    const ProjectiveFactor& factor(std::size_t i) const { return factors_.at(i); }
    const std::vector<ProjectiveFactor>& factors() const { return factors_; }
    std::optional<std::size_t> distinguished() const { return distinguished_; }
    int dimension() const;

    // Global index of the first variable of factor i.
    std::size_t var_offset(std::size_t i) const { return offsets_.at(i); }
    std::size_t factor_of_var(std::size_t v) const { return var_factor_.at(v); }
    const std::string& var_name(std::size_t v) const { return var_names_.at(v); }
    std::optional<std::size_t> find_var(const std::string& name) const;

    // Q for P = Q x P^1: the same factors with factor i removed.
    Ambient without_factor(std::size_t i) const;

    bool operator==(const Ambient& other) const {
        return factors_ == other.factors_ && distinguished_ == other.distinguished_;
    }

private:
    std::vector<ProjectiveFactor> factors_;
    std::optional<std::size_t> distinguished_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> var_factor_;
    std::vector<std::string> var_names_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

inline AmbientPtr make_ambient(Ambient a) { return std::make_shared<const Ambient>(std::move(a)); }

class LineBundle {
public:
    LineBundle(AmbientPtr ambient, std::vector<int> degrees);

    const AmbientPtr& ambient() const { return ambient_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(std::size_t i) const { return degrees_.at(i); }

    LineBundle tensor(const LineBundle& other) const;
    LineBundle dual() const;

    bool operator==(const LineBundle& other) const {
        return *ambient_ == *other.ambient_ && degrees_ == other.degrees_;
    }

private:
    AmbientPtr ambient_;
    std::vector<int> degrees_;
};

// Degrees -n_i - 1 on each factor.
LineBundle canonical_bundle(const AmbientPtr& ambient);

// L and M live on Q. True iff M[-e] restricted to Y = (F), F in H^0(L[d]),
// is the anticanonical bundle of Y: L + M = (n_i + 1)_i and d - e = 2.
bool cy_condition(const LineBundle& L, int d, const LineBundle& M, int e);

std::string to_string(const std::vector<int>& degrees);

}  // namespace gci
