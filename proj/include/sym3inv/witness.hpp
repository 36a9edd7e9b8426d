#pragma once

// Witness tensors whose invariant values separate the basis members. The
// expected values live in data/witnesses/*.json and are compiled in.

#include <sym3inv/invariants.hpp>

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sym3 {

enum class WitnessCase { L6, J6, L4, K4, M6, J4 };

std::optional<WitnessCase> witness_case_from_name(std::string_view name);
std::string_view witness_case_name(WitnessCase c);

/// The fixture JSON for a case, as stored in data/witnesses.
const nlohmann::json& witness_fixture(WitnessCase c);

struct WitnessOptions {
  std::optional<double> theta;                // J4 only, in [0, pi]
  std::optional<std::array<double, 4>> abcd;  // M6 only
};

struct WitnessCheck {
  std::string label;     // e.g. "I2" or "J4(theta=0.785398)"
  nlohmann::json expected;
  nlohmann::json computed;
  double error = 0.0;    // absolute, or relative for nonzero decimal targets
  bool pass = false;
};

struct WitnessResult {
  WitnessCase which;
  std::vector<WitnessCheck> checks;
  nlohmann::json details;  // invariant tables and informational notes
  bool pass = false;
};

/// Builds the case's tensor(s), computes all invariants and compares them with
/// the fixture. Throws std::invalid_argument when an option does not apply to
/// the case or theta lies outside [0, pi].
WitnessResult run_witness(WitnessCase c, const WitnessOptions& options = {});

/// The one-parameter J4 family A(theta).
Sym3Tensor<double> j4_family(double theta);

/// The M6 family: u = (5a, 5b, 5c) and D123 = d with all other deviator
/// components zero.
template <class S>
HarmonicParts<S> m6_family(const S& a, const S& b, const S& c, const S& d) {
  HarmonicParts<S> h;
  h.deviator.c[4] = d;
  h.vector = Vec3<S>{{S(5 * a), S(5 * b), S(5 * c)}};
  return h;
}

nlohmann::json check_to_json(const WitnessCheck& check);

}  // namespace sym3
