#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "braidval/braid.hpp"
#include "braidval/rep.hpp"

namespace braidval {

// Two-qubit gates on adjacent pairs, applied first to last. Parsed gates are
// normalized to unit determinant (a global phase, invisible to amplitudes).
struct QuantumCircuit {
  int qubits = 1;
  struct Gate {
    Eigen::Matrix4cd u;
    int pos;  // acts on qubits (pos, pos+1), 1-based
  };
  std::vector<Gate> gates;

  // Line format: `qubits <n>`, then per gate either
  //   gate <pos> <name>                    with name in {cz, cnot, swap-like}
  //   gate <pos> <32 reals>                re,im pairs row-major
  // Blank lines and lines starting with # are skipped.
  static QuantumCircuit parse(std::string_view text);

  Matrix unitary() const;  // 2^n x 2^n, qubit 1 most significant
};

// cz   = diag(1,1,1,-1)
// cnot = |00><00| + |01><01| + |10><11| + |11><10|
// swap-like = iSWAP: |00><00| + i|01><10| + i|10><01| + |11><11|
// (each returned with the unit-determinant normalization applied)
Eigen::Matrix4cd builtin_gate(std::string_view name);

// Computational tableaux |t_{x_1} ... t_{x_n}> of shape [2n,2n], indexed by
// bit string with qubit 1 most significant. Requires ell >= 5, ell != 6.
std::vector<Tableau> qubit_basis(int n, int ell);

struct CompilerOptions {
  int net_depth = 4;     // exhaustive enumeration depth for the base net
  int beam_width = 2000;  // 0 disables the beam refinement
  int beam_depth = 28;
  int sk_depth = 0;  // group-commutator recursion levels on top of the net
  int dense_cap = 4096;
};

struct GateApproximation {
  std::vector<BraidLetter> word;  // in B_8
  double full_dist;      // phase-aligned operator distance on the whole block
  double subspace_dist;  // same, restricted to the encoded 4-dim subspace
};

// Best word over the net (+ beam refinement, + optional commutator
// recursion) for V embedded as V (+) phase-adjusted identity in the [4,4]
// block. Never throws on a missed target; achieved distances are reported.
GateApproximation approximate_gate(const Eigen::Matrix4cd& v, int ell, double eps,
                                   const CompilerOptions& opt = {});

struct GateLog {
  int pos;
  std::size_t word_length;
  double full_dist;
  double subspace_dist;
};

struct CompiledBraid {
  BraidWord braid;  // on 4n strands
  int qubits = 0;
  int ell = 0;
  double eps_target = 0;
  double eps_achieved = 0;  // operator distance on the encoded subspace, whole circuit
  double eps_budget = 0;    // telescoped sum of per-gate full-block distances
  bool target_met = false;  // eps_achieved <= eps_target
  std::vector<GateLog> gate_log;
};

CompiledBraid compile_circuit(const QuantumCircuit& c, int ell, double eps,
                              const CompilerOptions& opt = {});

struct VerifyReport {
  double amp_circuit_sq = 0;  // |<0..0|U|0..0>|^2 from the statevector product
  double amp_braid_sq = 0;    // |J(plat(b))|^2 / [2]^{2n-1}
  double gap = 0;
  double eps_achieved = 0;  // recomputed subspace operator distance
  bool pass = false;        // gap <= max(eps_achieved, 1e-9)
};

// Recomputes everything from the braid itself, so a corrupted word shows its
// true gap.
VerifyReport verify_compiled(const CompiledBraid& cb, const QuantumCircuit& c);

// Phase-aligned operator distance min_phase ||A - c B||_inf restricted to the
// given columns (all columns when cols is empty).
double aligned_distance(const Matrix& a, const Matrix& b, const std::vector<int>& cols = {});

}  // namespace braidval
