#include "gci/cli/examples.hpp"

#include "gci/errors.hpp"

namespace gci::cli {
namespace {

// Calabi-Yau threefold in P^4 x P^1 cut out by an anticanonical section of
// O(3, -1) restricted to a (2, 3) hypersurface.
const char* kAnderson = R"({
  "schema_version": 1,
  "name": "anderson-2.2.2",
  "ambient": {
    "factors": [{"dim": 4, "vars": ["y0", "y1", "y2", "y3", "y4"]}, {"dim": 1, "vars": ["z0", "z1"]}],
    "distinguished": 1
  },
  "bundles": {"L": [2], "M": [3], "d": 3, "e": 1},
  "sections": {
    "F": "(y0^2+y1^2+y2^2+y3^2+y4^2)*z0^3 + (y0^2+y4^2)*z0^2*z1 + (y1^2+y3^2)*z0*z1^2 + (y0^2+y1^2-y2^2-y3^2-y4^2)*z1^3",
    "q": ["y2", "y1", "y0"]
  },
  "options": {
    "primes": [7],
    "h2": 2,
    "h3": 94,
    "genera": [2, 8],
    "fibers": [[1, 0], [0, 1], [1, 1]],
    "pipeline": ["cohomology", "kernel", "moduli", "quotient", "scan", "equations"],
    "notes": ["q = y0 z0^-3 z1^-1 + y1 z0^-2 z1^-2 + y2 z0^-1 z1^-3"]
  }
})";

// Reducible hypersurface f = x0 g0 + x1 g1 on P^2 x (P^1)^3.
const char* kReducible = R"({
  "schema_version": 1,
  "name": "reducible-1.7",
  "ambient": {
    "factors": [
      {"dim": 2, "vars": ["w0", "w1", "w2"]},
      {"dim": 1, "vars": ["x0", "x1"]},
      {"dim": 1, "vars": ["u0", "u1"]},
      {"dim": 1, "vars": ["v0", "v1"]}
    ],
    "distinguished": 3
  },
  "bundles": {"L": [0, 1, 1], "M": [3, 1, 1], "d": 4, "e": 2},
  "sections": {
    "F": "x0*g0 + x1*g1",
    "random": {"g0": [0, 0, 1, 4], "g1": [0, 0, 1, 4]}
  },
  "options": {
    "seed": 17,
    "primes": [7],
    "pipeline": ["cohomology", "kernel", "scan", "equations"],
    "notes": ["e is taken as +2, so that M[-e] = O(3,1,1,-2) has h^1 = 10*2*2*1 = 40"]
  }
})";

const char* kToy = R"({
  "schema_version": 1,
  "name": "toy",
  "ambient": {
    "factors": [{"dim": 1, "vars": ["y0", "y1"]}, {"dim": 1, "vars": ["z0", "z1"]}],
    "distinguished": 1
  },
  "bundles": {"L": [1], "M": [1], "d": 2, "e": 2},
  "sections": {"F": "y0*z0^2 + y1*z1^2", "q": ["0", "1", "0"]},
  "options": {
    "primes": [7],
    "fibers": [[1, 0], [0, 1]],
    "pipeline": ["cohomology", "kernel", "scan", "equations"]
  }
})";

}  // namespace

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names = {"anderson-2.2.2", "reducible-1.7", "toy"};
    return names;
}

nlohmann::json example_config(const std::string& name) {
    if (name == "anderson-2.2.2") return nlohmann::json::parse(kAnderson);
    if (name == "reducible-1.7") return nlohmann::json::parse(kReducible);
    if (name == "toy") return nlohmann::json::parse(kToy);
    std::string list;
    for (const auto& n : example_names()) list += (list.empty() ? "" : ", ") + n;
    throw ValidationError("unknown example '" + name + "'; available examples: " + list);
}

}  // namespace gci::cli
