#pragma once

#include "braidval/braid.hpp"
#include "braidval/rep.hpp"
#include "braidval/young.hpp"

namespace braidval {

// Ocneanu Markov trace tr_{k ell} on H_n(q), evaluated as the weighted sum of
// per-block matrix traces. Each block trace is accumulated by applying the
// word to basis vectors, so memory stays O(d_lambda).
Complex markov_trace(const BraidWord& b, const RootParams& p);
Complex markov_trace(const TangleWord& w, const RootParams& p);
Complex markov_trace(const TangleWord& w, BlockCache& cache);

// Exponent-normalized trace [k]^{n-1} q^{-(k+1)e(b)/2} tr(b); invariant under
// both Markov moves.
Complex normalized_trace(const BraidWord& b, const RootParams& p);

struct InvariantValue {
  Complex value;          // complex invariant; phase meaningful only for trace closures
  double normalization;   // [k]^{n-1} or [2]^{p+r-1}
  double normalized_abs;  // |value| / normalization, in [0, 1]
  RootParams params;
  ClosureSpec closure;
};

// One-variable HOMFLYPT of the trace closure at q = e^{2 pi i/ell}.
InvariantValue homflypt_trace_closure(const BraidWord& b, const RootParams& p);

// |Jones| of the generalized closure (k = 2): the normalized trace of
// (x b y) omega_1 omega_3 ... omega_{2p-1}. Plat and trace closures are the
// r = 0 and p = 0 specializations.
InvariantValue jones_generalized_closure(const BraidWord& b, const ClosureSpec& spec,
                                         const RootParams& p);

// <t_{2p}| pi_{[p,p]}(b) |t_{2p}> for b on 2p strands; the plat closure's
// Jones value is [2]^{p-1} times its absolute value.
Complex plat_amplitude(const BraidWord& b, const RootParams& p);
Complex plat_amplitude(const BraidWord& b, BlockCache& cache);

// Brute-force Kauffman bracket over all 2^m crossing resolutions of the
// closed diagram, evaluated at A = e^{-i pi/(2 ell)}; returns |J| of the
// closure. Exponential time by design; throws std::length_error above the
// crossing cap.
double kauffman_oracle(const ClosureSpec& spec, const BraidWord& b, int ell,
                       int max_crossings = 20);

}  // namespace braidval
