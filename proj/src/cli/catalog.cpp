#include <wcurv/catalog.hpp>
#include <wcurv/error.hpp>

namespace wcurv {

namespace {

constexpr const char* kMinkowski = R"yaml(name: minkowski
coordinates: [t, x, y, z]
signature: "-+++"
metric:
  - [-1]
  - [0, 1]
  - [0, 0, 1]
  - [0, 0, 0, 1]
fluid_velocity: [1, 0, 0, 0]
xi: [1, 0, 0, 0]
evaluation:
  ranges:
    t: {min: -1, max: 1, count: 3}
    x: {min: -1, max: 1, count: 3}
  fixed: {y: 0.5, z: -0.5}
)yaml";

constexpr const char* kSchwarzschild = R"yaml(name: schwarzschild
coordinates: [t, r, theta, phi]
parameters: {M: 1}
signature: "-+++"
metric:
  - ["-(1-2*M/r)"]
  - [0, "1/(1-2*M/r)"]
  - [0, 0, "r^2"]
  - [0, 0, 0, "r^2*sin(theta)^2"]
fluid_velocity: ["1/sqrt(1-2*M/r)", 0, 0, 0]
xi: [1, 0, 0, 0]
evaluation:
  ranges:
    r: {min: 3, max: 10, count: 8}
    theta: {min: "pi/4", max: "pi/2", count: 2}
  fixed: {t: 0, phi: 0}
  exclude: ["r-2*M", "sin(theta)"]
)yaml";

constexpr const char* kDeSitter = R"yaml(name: de_sitter_static
coordinates: [t, r, theta, phi]
parameters: {H: 0.1}
signature: "-+++"
metric:
  - ["-(1-H^2*r^2)"]
  - [0, "1/(1-H^2*r^2)"]
  - [0, 0, "r^2"]
  - [0, 0, 0, "r^2*sin(theta)^2"]
fluid_velocity: ["1/sqrt(1-H^2*r^2)", 0, 0, 0]
xi: [1, 0, 0, 0]
constants: {lambda: "3*H^2", kappa: 1}
evaluation:
  ranges:
    r: {min: 1, max: 8, count: 8}
    theta: {min: "pi/4", max: "pi/2", count: 2}
  fixed: {t: 0, phi: 0}
  exclude: ["1-H*r", "sin(theta)", "r"]
)yaml";

constexpr const char* kFrw = R"yaml(name: frw_flat_powerlaw
coordinates: [t, x, y, z]
parameters: {n: "2/3"}
signature: "-+++"
metric:
  - [-1]
  - [0, "t^(2*n)"]
  - [0, 0, "t^(2*n)"]
  - [0, 0, 0, "t^(2*n)"]
fluid_velocity: [1, 0, 0, 0]
xi: [0, 1, 0, 0]
evaluation:
  ranges:
    t: {min: 0.5, max: 2, count: 4}
  fixed: {x: 0, y: 0, z: 0}
  exclude: ["t"]
)yaml";

constexpr const char* kEinsteinStatic = R"yaml(name: einstein_static
coordinates: [t, chi, theta, phi]
parameters: {R0: 1}
signature: "-+++"
metric:
  - [-1]
  - [0, "R0^2"]
  - [0, 0, "R0^2*sin(chi)^2"]
  - [0, 0, 0, "R0^2*sin(chi)^2*sin(theta)^2"]
fluid_velocity: [1, 0, 0, 0]
xi: [1, 0, 0, 0]
constants: {lambda: "1/R0^2", kappa: 1}
evaluation:
  ranges:
    chi: {min: 0.5, max: 2.5, count: 5}
    theta: {min: "pi/4", max: "pi/2", count: 2}
  fixed: {t: 0, phi: 0}
  exclude: ["sin(chi)", "sin(theta)"]
)yaml";

constexpr const char* kReissnerNordstrom = R"yaml(name: reissner_nordstrom
coordinates: [t, r, theta, phi]
parameters: {M: 1, Q: 0.5}
signature: "-+++"
metric:
  - ["-(1-2*M/r+Q^2/r^2)"]
  - [0, "1/(1-2*M/r+Q^2/r^2)"]
  - [0, 0, "r^2"]
  - [0, 0, 0, "r^2*sin(theta)^2"]
xi: [1, 0, 0, 0]
faraday:
  - [0]
  - ["-Q/r^2", 0]
  - [0, 0, 0]
  - [0, 0, 0, 0]
constants: {lambda: 0, kappa: 2}
evaluation:
  ranges:
    r: {min: 4, max: 10, count: 7}
    theta: {min: "pi/4", max: "pi/2", count: 2}
  fixed: {t: 0, phi: 0}
  exclude: ["r^2-2*M*r+Q^2", "sin(theta)"]
)yaml";

std::vector<CatalogEntry> build() {
  return {
      {"minkowski", "flat spacetime in Cartesian coordinates", kMinkowski,
       {{{-5, 5}, {-5, 5}, {-5, 5}, {-5, 5}}}},
      {"schwarzschild", "vacuum black hole of mass M, static observers", kSchwarzschild,
       {{{-5, 5}, {2.5, 20}, {0.3, 2.8}, {0, 6}}}},
      {"de_sitter_static", "de Sitter in static coordinates with Lambda = 3 H^2", kDeSitter,
       {{{-5, 5}, {0.5, 9}, {0.3, 2.8}, {0, 6}}}},
      {"frw_flat_powerlaw", "spatially flat FRW with a(t) = t^n, comoving fluid", kFrw,
       {{{0.3, 5}, {-5, 5}, {-5, 5}, {-5, 5}}}},
      {"einstein_static", "Einstein static universe of radius R0", kEinsteinStatic,
       {{{-5, 5}, {0.3, 2.8}, {0.3, 2.8}, {0, 6}}}},
      {"reissner_nordstrom", "charged black hole with radial electric field F_tr = Q/r^2",
       kReissnerNordstrom, {{{-5, 5}, {2.5, 20}, {0.3, 2.8}, {0, 6}}}},
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw InputError("unknown catalog metric '" + std::string(name) + "'");
}

MetricFile catalog_metric(std::string_view name) {
  return parse_metric_file(catalog_entry(name).document);
}

}  // namespace wcurv
