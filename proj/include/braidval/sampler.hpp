#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "braidval/braid.hpp"
#include "braidval/rep.hpp"
#include "braidval/rng.hpp"

namespace braidval {

// ceil(32 ln 2 / delta^2), the sample count that brings the two-sided
// Chernoff failure probability below 1/4
std::uint64_t chernoff_samples(double delta);

// Reduced state of the control qubit after the controlled-U circuit on
// |+>|psi>; equals (1 + sigma_X Re<psi|U|psi> + sigma_Y Im<psi|U|psi>)/2.
Eigen::Matrix2cd controlled_reduced_state(const Matrix& u, const Vector& psi);

// One Hadamard-test draw; X and Y come from two independent runs of the
// controlled circuit, measured along sigma_X and sigma_Y respectively.
// Throws std::invalid_argument for a non-unitary input or unnormalized state.
struct HadamardSample {
  int x;
  int y;
};
HadamardSample hadamard_test(const Matrix& u, const Vector& psi, Rng& rng);

enum class SampleMode {
  ControlledCircuit,  // simulate the joint control (x) block state per draw
  Bernoulli           // shortcut using the known matrix element
};

struct EstimatorOptions {
  double delta = 0.1;
  std::uint64_t min_samples = 0;  // callers may only raise M above the bound
  SampleMode mode = SampleMode::ControlledCircuit;
  bool keep_samples = false;
};

struct EstimatorRun {
  double delta = 0;
  std::uint64_t samples = 0;
  Complex phase_correction{1, 0};
  Complex mean{0, 0};      // (1/M) sum (X_j + i Y_j), exact integer sums
  Complex estimate{0, 0};  // phase-corrected mean, modulus clamped to 1
  double abs_estimate = 0;  // |mean| clamped to [0,1]
  std::vector<std::pair<std::int8_t, std::int8_t>> xy;  // kept on request
};

// Additive approximation of H^{(k)}(trace closure)/[k]^{n-1}: sample lambda
// with probability s_lambda d_lambda, a uniform path, then Hadamard-test the
// diagonal matrix element.
EstimatorRun estimate_homflypt(const BraidWord& b, const RootParams& p,
                               const EstimatorOptions& opt, Rng& rng);

enum class JonesRoute { ViaPlatConjugation, Direct };

// Additive approximation of |J(generalized closure)| / [2]^{p+r-1}, by
// either the conjugated-plat reduction or the direct mixture over the
// residual trace strands.
EstimatorRun estimate_jones_closure(const BraidWord& b, const ClosureSpec& spec, int ell,
                                    const EstimatorOptions& opt, JonesRoute route, Rng& rng);

// Replays the register-encoded evolution (rows, axial-distance registers,
// with the column/shape registers materialized and uncomputed inside the
// isometry) against the tableau-basis representation on every basis state.
struct RegisterEncodingReport {
  double max_deviation = 0;   // max amplitude difference across basis states
  double w_roundtrip_dev = 0; // W then W^{-1} away from the identity
  int states_checked = 0;
  bool pass = false;  // max_deviation < 1e-9
};
RegisterEncodingReport verify_register_encoding(const BraidWord& b, const RootParams& p);

}  // namespace braidval
