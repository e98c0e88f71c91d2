#include "braidval/invariants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace braidval {

namespace {

BraidWord fold_framing(const BraidWord& b, const ClosureSpec& spec) {
  BraidWord out = b;
  if (spec.x.strands == b.strands && !spec.x.letters.empty()) out = spec.x * out;
  if (spec.y.strands == b.strands && !spec.y.letters.empty()) out.append(spec.y);
  return out;
}

Complex block_trace(const IrrepBlock& block, const TangleWord& w) {
  Complex sum = 0;
  std::vector<Complex> amps(block.dimension());
  for (int idx = 0; idx < block.dimension(); ++idx) {
    std::fill(amps.begin(), amps.end(), Complex(0, 0));
    amps[idx] = 1.0;
    block.apply_tangle(w, amps);
    sum += amps[idx];
  }
  return sum;
}

}  // namespace

Complex markov_trace(const TangleWord& w, BlockCache& cache) {
  const RootParams& p = cache.params();
  const int n = w.strands();
  MarkovWeightTable table(n, p);
  Complex total = 0;
  for (const WeightEntry& e : table.entries())
    total += e.weight * block_trace(cache.block(e.lambda), w);
  return total;
}

Complex markov_trace(const TangleWord& w, const RootParams& p) {
  BlockCache cache(p);
  return markov_trace(w, cache);
}

Complex markov_trace(const BraidWord& b, const RootParams& p) {
  return markov_trace(TangleWord(b, {}), p);
}

Complex normalized_trace(const BraidWord& b, const RootParams& p) {
  const int n = b.strands;
  const Complex phase = p.q_pow_half(-static_cast<long>(p.k + 1) * b.exponent_sum());
  return std::pow(quantum_integer(p.k, p.ell), n - 1) * phase * markov_trace(b, p);
}

InvariantValue homflypt_trace_closure(const BraidWord& b, const RootParams& p) {
  const double norm = std::pow(quantum_integer(p.k, p.ell), b.strands - 1);
  const Complex value = normalized_trace(b, p);
  return {value, norm, std::abs(value) / norm, p, ClosureSpec::trace(b.strands)};
}

InvariantValue jones_generalized_closure(const BraidWord& b, const ClosureSpec& spec,
                                         const RootParams& p) {
  if (p.k != 2)
    throw std::invalid_argument("jones_generalized_closure: requires k = 2");
  spec.validate(b.strands);
  const BraidWord folded = fold_framing(b, spec);
  std::vector<int> cups;
  for (int i = 1; i <= spec.p; ++i) cups.push_back(2 * i - 1);
  const TangleWord tangle(folded, std::move(cups));
  const int n = b.strands;
  const Complex phase = p.q_pow_half(-3L * folded.exponent_sum());
  const Complex value =
      std::pow(p.two_q, n - 1) * phase * markov_trace(tangle, p);
  const double norm = std::pow(p.two_q, spec.p + spec.r - 1);
  return {value, norm, std::abs(value) / norm, p, spec};
}

Complex plat_amplitude(const BraidWord& b, BlockCache& cache) {
  if (b.strands % 2 != 0)
    throw std::invalid_argument("plat_amplitude: even strand count required");
  const int p2 = b.strands / 2;
  const IrrepBlock& block = cache.block(YoungDiagram({p2, p2}));
  const int idx = block.index_of(plat_tableau(b.strands));
  return block.matrix_element(idx, b, idx);
}

Complex plat_amplitude(const BraidWord& b, const RootParams& p) {
  BlockCache cache(p);
  return plat_amplitude(b, cache);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Crossing {
  int in1, in2;    // arcs entering from above at positions i, i+1
  int out1, out2;  // arcs leaving below
  int sign;
};

}  // namespace

double kauffman_oracle(const ClosureSpec& spec, const BraidWord& b, int ell, int max_crossings) {
  spec.validate(b.strands);
  const BraidWord folded = fold_framing(b, spec);
  const int n = folded.strands;
  const int m = static_cast<int>(folded.length());
  if (m > max_crossings) throw std::length_error("kauffman_oracle: crossing cap exceeded");
  if (ell < 3) throw std::invalid_argument("kauffman_oracle: ell must be >= 3");

  // Arc segments of the braid diagram read top to bottom.
  std::vector<Crossing> crossings;
  crossings.reserve(m);
  std::vector<int> top(n), cur(n);
  int arcs = 0;
  for (int i = 0; i < n; ++i) top[i] = cur[i] = arcs++;
  for (const BraidLetter& l : folded.letters) {
    const int i = l.index - 1;
    Crossing c{cur[i], cur[i + 1], arcs++, arcs++, l.sign};
    cur[i] = c.out1;
    cur[i + 1] = c.out2;
    crossings.push_back(c);
  }

  const Complex a_var = std::polar(1.0, -std::numbers::pi / (2.0 * ell));
  const Complex loop = -(a_var * a_var) - 1.0 / (a_var * a_var);

  // powers of A for exponents -m..m and of the loop value
  std::vector<Complex> apow(2 * m + 1);
  for (int e = -m; e <= m; ++e) apow[e + m] = std::pow(a_var, e);
  std::vector<Complex> dpow(n + 2 * m + 2);
  dpow[0] = 1.0;
  for (size_t i = 1; i < dpow.size(); ++i) dpow[i] = dpow[i - 1] * loop;

  Complex bracket = 0;
  const std::uint64_t states = std::uint64_t(1) << m;
  for (std::uint64_t state = 0; state < states; ++state) {
    UnionFind uf(arcs);
    int exponent = 0;
    for (int c = 0; c < m; ++c) {
      const Crossing& cr = crossings[c];
      if ((state >> c) & 1) {
        // horizontal smoothing (cup-cap)
        uf.unite(cr.in1, cr.in2);
        uf.unite(cr.out1, cr.out2);
        exponent -= cr.sign;
      } else {
        // vertical smoothing (identity tangle)
        uf.unite(cr.in1, cr.out1);
        uf.unite(cr.in2, cr.out2);
        exponent += cr.sign;
      }
    }
    for (int i = 0; i < 2 * spec.p; i += 2) {
      uf.unite(top[i], top[i + 1]);
      uf.unite(cur[i], cur[i + 1]);
    }
    for (int i = 2 * spec.p; i < n; ++i) uf.unite(top[i], cur[i]);
    int loops = 0;
    for (int i = 0; i < arcs; ++i)
      if (uf.find(i) == i) ++loops;
    bracket += apow[exponent + m] * dpow[loops - 1];
  }

  // Writhe correction is a unit phase at |A| = 1; it drops in the absolute
  // value, which is all that is orientation-independent for plat and
  // generalized closures.
  return std::abs(bracket);
}

}  // namespace braidval
