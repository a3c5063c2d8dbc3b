#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gci/construction.hpp"

namespace gci::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

struct FactorSpec {
    int dim = 1;
    std::vector<std::string> vars;  // empty: default names
};

// A job as read from the JSON config, before any polynomial is parsed.
struct JobConfig {
    std::optional<std::string> name;
    std::vector<FactorSpec> factors;
    std::optional<std::size_t> distinguished;

    bool has_bundles = false;
    std::vector<int> L, M;  // on Q
    int d = 0, e = 0;

    std::optional<std::string> F_text;
    std::optional<std::vector<std::string>> f_list;  // f_0 .. f_d, f_i the coefficient of z0^i z1^(d-i)
    std::optional<std::vector<std::string>> q_list;  // q_1 .. q_(d+e-1), q_j the coefficient of z0^-j
    std::map<std::string, std::vector<int>> random;  // name -> degrees on P, drawn in name order

    std::uint64_t seed = 0;
    std::vector<std::uint32_t> primes;
    std::optional<std::int64_t> h2, h3;
    std::optional<std::vector<std::int64_t>> genera;
    std::optional<std::int64_t> h0_tau;
    std::vector<std::vector<int>> extra_bundles;                  // on P
    std::vector<std::pair<std::string, std::string>> fibers;      // points (z0 : z1)
    std::vector<std::string> pipeline;
    std::vector<std::string> notes;
    unsigned workers = 1;
};

// Throws ValidationError with the offending key path.
JobConfig parse_config(const nlohmann::json& j);
JobConfig load_config_file(const std::string& path);

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::vector<std::uint32_t> primes;
};
void apply_overrides(JobConfig& cfg, const Overrides& o);

// Polynomial data of a job on P = Q x P^1.
struct Instance {
    AmbientPtr P, Q;
    std::size_t t = 0;
    std::optional<LineBundle> L, M;
    int d = 0, e = 0;
    std::optional<MultiPoly> F;
    std::optional<CechClass> q;
    std::map<std::string, MultiPoly> named;
};

Instance resolve(const JobConfig& cfg);

// Canonical config: default names spelled out, F echoed as its f list and q as
// canonical strings. Running a job from its echo reproduces the echo.
nlohmann::ordered_json echo_config(const JobConfig& cfg, const Instance& inst);

}  // namespace gci::cli
