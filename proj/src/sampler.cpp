#include "braidval/sampler.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace braidval {

std::uint64_t chernoff_samples(double delta) {
  if (!(delta > 0)) throw std::invalid_argument("chernoff_samples: delta must be positive");
  return static_cast<std::uint64_t>(std::ceil(32.0 * std::log(2.0) / (delta * delta)));
}

Eigen::Matrix2cd controlled_reduced_state(const Matrix& u, const Vector& psi) {
  const auto d = psi.size();
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("controlled_reduced_state: dimension mismatch");
  if ((u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("controlled_reduced_state: input is not unitary");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("controlled_reduced_state: state is not normalized");
  // joint state (|0>|psi> + |1>U|psi>)/sqrt(2), control traced back out
  Vector v0 = psi / std::sqrt(2.0);
  Vector v1 = (u * psi) / std::sqrt(2.0);
  Eigen::Matrix2cd rho;
  rho(0, 0) = v0.squaredNorm();
  rho(1, 1) = v1.squaredNorm();
  rho(0, 1) = (v1.adjoint() * v0)(0, 0);
  rho(1, 0) = std::conj(rho(0, 1));
  return rho;
}

HadamardSample hadamard_test(const Matrix& u, const Vector& psi, Rng& rng) {
  HadamardSample s{};
  {
    const Eigen::Matrix2cd rho = controlled_reduced_state(u, psi);
    // P(X=+1) = <+|rho|+>
    const double p_plus = 0.5 * (1.0 + (rho(0, 1) + rho(1, 0)).real());
    s.x = rng.pm_one(p_plus);
  }
  {
    const Eigen::Matrix2cd rho = controlled_reduced_state(u, psi);
    // P(Y=+1) = <+i|rho|+i>
    const double p_plus = 0.5 * (1.0 + (Complex(0, 1) * (rho(0, 1) - rho(1, 0))).real());
    s.y = rng.pm_one(p_plus);
  }
  return s;
}

namespace {

// <t_idx| pi(b) |t_idx> read off the reduced control state of the simulated
// controlled-braid circuit on C (x) V_lambda
Complex controlled_diagonal_element(const IrrepBlock& block, const BraidWord& b, int idx) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Complex> v0(block.dimension(), Complex(0, 0));
  std::vector<Complex> v1(block.dimension(), Complex(0, 0));
  v0[idx] = inv_sqrt2;
  v1[idx] = inv_sqrt2;
  block.apply_word(b, v1);
  Complex rho10 = 0;  // <0-half | 1-half> = z/2
  for (size_t i = 0; i < v0.size(); ++i) rho10 += std::conj(v0[i]) * v1[i];
  return 2.0 * rho10;
}

struct DrawContext {
  BlockCache* cache;
  SampleMode mode;
  std::map<std::pair<YoungDiagram, int>, Complex> memo;

  Complex element(const YoungDiagram& shape, const BraidWord& b, int idx) {
    if (mode == SampleMode::ControlledCircuit)
      return controlled_diagonal_element(cache->block(shape), b, idx);
    const auto key = std::make_pair(shape, idx);
    auto it = memo.find(key);
    if (it == memo.end())
      it = memo.emplace(key, cache->block(shape).matrix_element(idx, b, idx)).first;
    return it->second;
  }
};

struct Accumulator {
  long long sum_x = 0, sum_y = 0;
  std::vector<std::pair<std::int8_t, std::int8_t>> xy;

  void add(Complex z, Rng& rng, bool keep) {
    const int x = rng.pm_one(0.5 * (1.0 + z.real()));
    const int y = rng.pm_one(0.5 * (1.0 + z.imag()));
    sum_x += x;
    sum_y += y;
    if (keep) xy.emplace_back(static_cast<std::int8_t>(x), static_cast<std::int8_t>(y));
  }

  Complex mean(std::uint64_t m) const {
    return Complex(static_cast<double>(sum_x) / m, static_cast<double>(sum_y) / m);
  }
};

Complex clamp_modulus(Complex z, double cap) {
  const double a = std::abs(z);
  return a > cap ? z * (cap / a) : z;
}

}  // namespace

EstimatorRun estimate_homflypt(const BraidWord& b, const RootParams& p,
                               const EstimatorOptions& opt, Rng& rng) {
  const int n = b.strands;
  MarkovWeightTable table(n, p);
  YoungGraph graph(n, p);
  BlockCache cache(p);
  DrawContext ctx{&cache, opt.mode, {}};

  EstimatorRun run;
  run.delta = opt.delta;
  run.samples = std::max(chernoff_samples(opt.delta), opt.min_samples);
  run.phase_correction = p.q_pow_half(-static_cast<long>(p.k + 1) * b.exponent_sum());

  Accumulator acc;
  for (std::uint64_t j = 0; j < run.samples; ++j) {
    const YoungDiagram& lambda = table.sample_shape(rng);
    const Tableau t = graph.sample_tableau(lambda, rng);
    const IrrepBlock& block = cache.block(lambda);
    acc.add(ctx.element(lambda, b, block.index_of(t)), rng, opt.keep_samples);
  }
  run.mean = acc.mean(run.samples);
  run.estimate = clamp_modulus(run.phase_correction * run.mean, 1.0);
  run.abs_estimate = std::min(std::abs(run.mean), 1.0);
  run.xy = std::move(acc.xy);
  return run;
}

EstimatorRun estimate_jones_closure(const BraidWord& b, const ClosureSpec& spec, int ell,
                                    const EstimatorOptions& opt, JonesRoute route, Rng& rng) {
  RootParams p(2, ell);
  spec.validate(b.strands);
  BraidWord folded = b;
  if (spec.x.strands == b.strands && !spec.x.letters.empty()) folded = spec.x * folded;
  if (spec.y.strands == b.strands && !spec.y.letters.empty()) folded.append(spec.y);

  BlockCache cache(p);
  DrawContext ctx{&cache, opt.mode, {}};

  EstimatorRun run;
  run.delta = opt.delta;
  run.samples = std::max(chernoff_samples(opt.delta), opt.min_samples);

  Accumulator acc;
  if (route == JonesRoute::ViaPlatConjugation) {
    const int pprime = spec.p + spec.r;
    const BraidWord c = conjugator_braid(spec.p, spec.r);
    const BraidWord embedded = c.inverse() * include_strands(folded, spec.r) * c;
    const YoungDiagram shape({pprime, pprime});
    const int idx = cache.block(shape).index_of(plat_tableau(2 * pprime));
    for (std::uint64_t j = 0; j < run.samples; ++j)
      acc.add(ctx.element(shape, embedded, idx), rng, opt.keep_samples);
  } else {
    MarkovWeightTable table(spec.r, p);
    YoungGraph graph(spec.r, p);
    const std::optional<Tableau> left =
        spec.p > 0 ? std::optional<Tableau>(plat_tableau(2 * spec.p)) : std::nullopt;
    for (std::uint64_t j = 0; j < run.samples; ++j) {
      const YoungDiagram& mu = table.sample_shape(rng);
      Tableau t = graph.sample_tableau(mu, rng);
      if (left) t = embed_tensor(*left, t, p);
      const IrrepBlock& block = cache.block(t.shape());
      acc.add(ctx.element(t.shape(), folded, block.index_of(t)), rng, opt.keep_samples);
    }
  }
  run.mean = acc.mean(run.samples);
  run.estimate = clamp_modulus(run.mean, 1.0);
  run.abs_estimate = std::min(std::abs(run.mean), 1.0);
  run.xy = std::move(acc.xy);
  return run;
}

namespace {

// register-level basis state: the row word, then the axial-distance word
struct RegKey {
  std::vector<int> rows;
  std::vector<long> dvals;
  auto operator<=>(const RegKey&) const = default;
};
using RegSuper = std::map<RegKey, Complex>;

std::vector<long> axial_word(const std::vector<int>& rows) {
  // replay the row word to recover columns, then d_i = c_i - c_{i+1} - (r_i - r_{i+1})
  std::vector<int> fill(rows.size() + 2, 0), cols(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) cols[i] = ++fill[rows[i]];
  std::vector<long> d(rows.size() >= 1 ? rows.size() - 1 : 0);
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    d[i] = static_cast<long>(cols[i]) - cols[i + 1] - (rows[i] - rows[i + 1]);
  return d;
}

// U'_i with amplitudes instantiated from the projection form:
// alpha_d = q - (1+q) a(d), beta_d = -(1+q) sqrt(a(d)(1-a(d)))
void apply_uprime(int i, int sign, const RootParams& p, RegSuper& state) {
  RegSuper out;
  const Complex one_plus_q = 1.0 + p.q;
  for (const auto& [key, amp] : state) {
    const long d = key.dvals[i - 1];
    const double a = a_coefficient(d, p);
    // a is exactly 0 or 1 whenever the swapped state has no support (same
    // row, same column, or a partner outside the restricted graph); the
    // tolerance keeps floating-point residue from spawning ghost branches
    const bool diagonal = a < 1e-9 || a > 1.0 - 1e-9;
    Complex alpha = p.q - one_plus_q * a;
    Complex beta =
        diagonal ? Complex(0, 0) : -one_plus_q * std::sqrt(std::max(0.0, a * (1.0 - a)));
    if (sign < 0) {
      alpha = std::conj(alpha);
      beta = std::conj(beta);
    }
    out[key] += alpha * amp;
    if (diagonal) continue;
    RegKey partner = key;
    std::swap(partner.rows[i - 1], partner.rows[i]);
    if (i >= 2) partner.dvals[i - 2] += d;
    partner.dvals[i - 1] = -d;
    if (i < static_cast<int>(key.dvals.size())) partner.dvals[i] += d;
    out[partner] += beta * amp;
  }
  state = std::move(out);
}

}  // namespace

RegisterEncodingReport verify_register_encoding(const BraidWord& b, const RootParams& p) {
  const int n = b.strands;
  RegisterEncodingReport report;
  BlockCache cache(p);
  for (const YoungDiagram& lambda : enumerate_diagrams(n, p)) {
    const IrrepBlock& block = cache.block(lambda);
    for (int idx = 0; idx < block.dimension(); ++idx) {
      const Tableau& t = block.tableau(idx);

      // W: the column and shape registers are computed from the rows and
      // uncomputed again, leaving exactly the axial-distance word
      RegSuper state;
      state[RegKey{t.rows(), axial_word(t.rows())}] = 1.0;

      // W then W^{-1} must reproduce the bare row encoding
      for (const auto& [key, amp] : state) {
        const double dev = (key.dvals == axial_word(key.rows))
                               ? std::abs(amp - Complex(1, 0))
                               : std::abs(amp);
        report.w_roundtrip_dev = std::max(report.w_roundtrip_dev, dev);
      }

      // rho(b): the braid letters act through U'_i, reversed for the column
      // convention
      for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
        apply_uprime(it->index, it->sign, p, state);

      // pi(b) on the same basis vector
      std::vector<Complex> amps(block.dimension(), Complex(0, 0));
      amps[idx] = 1.0;
      block.apply_word(b, amps);

      // decode the register superposition back into the tableau basis;
      // branches that W^{-1} cannot uncompute count as leakage
      std::vector<Complex> decoded(block.dimension(), Complex(0, 0));
      for (const auto& [key, amp] : state) {
        if (key.dvals != axial_word(key.rows)) {
          report.max_deviation = std::max(report.max_deviation, std::abs(amp));
          continue;
        }
        const int target = block.index_of(key.rows);
        if (target < 0) {
          report.max_deviation = std::max(report.max_deviation, std::abs(amp));
          continue;
        }
        decoded[target] += amp;
      }
      for (int i = 0; i < block.dimension(); ++i)
        report.max_deviation = std::max(report.max_deviation, std::abs(decoded[i] - amps[i]));
      ++report.states_checked;
    }
  }
  report.pass = report.max_deviation < 1e-9;
  return report;
}

}  // namespace braidval
