#include "braidval/compiler.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "braidval/invariants.hpp"

namespace braidval {

namespace {

void require_valid_root(int ell) {
  if (ell < 5 || ell == 6)
    throw std::invalid_argument("excluded root: compilation requires ell >= 5, ell != 6");
}

Eigen::Matrix4cd normalize_det(Eigen::Matrix4cd u) {
  if ((u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("gate matrix is not unitary");
  const double theta = std::arg(u.determinant());
  return std::polar(1.0, -theta / 4.0) * u;
}

}  // namespace

Eigen::Matrix4cd builtin_gate(std::string_view name) {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Identity();
  if (name == "cz") {
    g(3, 3) = -1.0;
  } else if (name == "cnot") {
    g.setZero();
    g(0, 0) = g(1, 1) = 1.0;
    g(2, 3) = g(3, 2) = 1.0;
  } else if (name == "swap-like") {
    g.setZero();
    g(0, 0) = g(3, 3) = 1.0;
    g(1, 2) = g(2, 1) = Complex(0, 1);
  } else {
    throw std::invalid_argument("unknown built-in gate '" + std::string(name) + "'");
  }
  return normalize_det(g);
}

QuantumCircuit QuantumCircuit::parse(std::string_view text) {
  QuantumCircuit c;
  bool have_qubits = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', line_start), text.size());
    std::string line(text.substr(line_start, eol - line_start));
    const std::size_t here = line_start;
    line_start = eol + 1;
    std::istringstream is(line);
    std::string tok;
    if (!(is >> tok) || tok[0] == '#') continue;
    if (tok == "qubits") {
      if (!(is >> c.qubits) || c.qubits < 1)
        throw ParseError("qubits: positive integer expected", here);
      have_qubits = true;
    } else if (tok == "gate") {
      if (!have_qubits) throw ParseError("gate before qubits line", here);
      int pos = 0;
      if (!(is >> pos) || pos < 1 || pos > c.qubits - 1)
        throw ParseError("gate: pair index out of range", here);
      std::string rest;
      if (!(is >> rest)) throw ParseError("gate: missing matrix or name", here);
      Eigen::Matrix4cd u;
      if (std::isalpha(static_cast<unsigned char>(rest[0]))) {
        try {
          u = builtin_gate(rest);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), here);
        }
      } else {
        std::vector<double> vals;
        vals.reserve(32);
        std::istringstream nums(line);
        nums >> tok >> pos;
        double x;
        while (nums >> x) vals.push_back(x);
        if (vals.size() != 32) throw ParseError("gate: expected 32 reals (re,im row-major)", here);
        for (int r = 0; r < 4; ++r)
          for (int col = 0; col < 4; ++col)
            u(r, col) = Complex(vals[2 * (4 * r + col)], vals[2 * (4 * r + col) + 1]);
        try {
          u = normalize_det(u);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), here);
        }
      }
      c.gates.push_back({u, pos});
    } else {
      throw ParseError("unknown directive '" + tok + "'", here);
    }
    if (eol == text.size()) break;
  }
  if (!have_qubits) throw ParseError("missing qubits line", 0);
  return c;
}

Matrix QuantumCircuit::unitary() const {
  const long dim = 1L << qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : gates) {
    // embed the 4x4 gate at qubits (pos, pos+1), qubit 1 most significant
    const long lo = 1L << (qubits - g.pos - 1);
    const long hi = 1L << (g.pos - 1);
    Matrix step = Matrix::Zero(dim, dim);
    for (long h = 0; h < hi; ++h)
      for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 4; ++b)
          if (g.u(a, b) != Complex(0, 0))
            for (long l = 0; l < lo; ++l)
              step((h * 4 + a) * lo + l, (h * 4 + b) * lo + l) = g.u(a, b);
    u = step * u;
  }
  return u;
}

std::vector<Tableau> qubit_basis(int n, int ell) {
  require_valid_root(ell);
  if (n < 1) throw std::invalid_argument("qubit_basis: need n >= 1");
  RootParams p(2, ell);
  const Tableau t0(YoungDiagram({2, 2}), {1, 2, 1, 2});
  const Tableau t1(YoungDiagram({2, 2}), {1, 1, 2, 2});
  std::vector<Tableau> out;
  out.reserve(std::size_t(1) << n);
  for (long x = 0; x < (1L << n); ++x) {
    // qubit 1 is the most significant bit and the leftmost four strands
    Tableau t = ((x >> (n - 1)) & 1) ? t1 : t0;
    for (int i = 2; i <= n; ++i) t = embed_tensor(t, ((x >> (n - i)) & 1) ? t1 : t0, p);
    out.push_back(std::move(t));
  }
  return out;
}

double aligned_distance(const Matrix& a, const Matrix& b, const std::vector<int>& cols) {
  Matrix as, bs;
  if (cols.empty()) {
    as = a;
    bs = b;
  } else {
    as.resize(a.rows(), cols.size());
    bs.resize(b.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      as.col(j) = a.col(cols[j]);
      bs.col(j) = b.col(cols[j]);
    }
  }
  const auto dist_at = [&](double theta) {
    return Eigen::JacobiSVD<Matrix>(as - std::polar(1.0, theta) * bs).singularValues()(0);
  };
  // Frobenius-optimal phase, then a scan + golden refinement for the
  // operator-norm optimum
  const Complex t = (bs.adjoint() * as).trace();
  double best_theta = std::abs(t) > 1e-12 ? std::arg(t) : 0.0;
  double best = dist_at(best_theta);
  for (int i = 0; i < 32; ++i) {
    const double theta = -std::numbers::pi + i * (2.0 * std::numbers::pi / 32);
    const double d = dist_at(theta);
    if (d < best) {
      best = d;
      best_theta = theta;
    }
  }
  double lo = best_theta - 0.25, hi = best_theta + 0.25;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = dist_at(x1), f2 = dist_at(x2);
  for (int it = 0; it < 40; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = dist_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = dist_at(x2);
    }
  }
  return std::min({best, f1, f2});
}

namespace {

// ---------- gate search over the [4,4] block ----------

struct MatKey {
  std::vector<std::int64_t> v;
  bool operator==(const MatKey&) const = default;
};

struct MatKeyHash {
  std::size_t operator()(const MatKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : k.v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

MatKey key_of(const Matrix& m) {
  MatKey k;
  k.v.reserve(2 * m.size());
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) {
      k.v.push_back(std::llround(m(r, c).real() * 1e6));
      k.v.push_back(std::llround(m(r, c).imag() * 1e6));
    }
  return k;
}

struct SearchContext {
  RootParams params;
  const IrrepBlock* block;
  int dim;
  std::vector<Matrix> gen;  // images of sigma_1^+, sigma_1^-, ..., sigma_7^-
  std::vector<BraidLetter> gen_letter;
  std::vector<int> enc;  // encoded basis indices for |00>, |01>, |10>, |11>
  Matrix target;         // embedded target on the block

  // negated overlap of the encoded columns; smaller is closer
  double score(const Matrix& m) const {
    Complex t = 0;
    for (int j : {0, 1, 2, 3})
      t += (target.col(enc[j]).adjoint() * m.col(enc[j]))(0, 0);
    return -std::abs(t);
  }
};

struct NetEntry {
  std::vector<std::uint8_t> word;
  Matrix m;
};

std::vector<NetEntry> build_net(const SearchContext& ctx, int depth) {
  std::vector<NetEntry> net;
  std::unordered_set<MatKey, MatKeyHash> seen;
  net.push_back({{}, Matrix::Identity(ctx.dim, ctx.dim)});
  seen.insert(key_of(net[0].m));
  std::size_t level_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t level_end = net.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::uint8_t l = 0; l < ctx.gen.size(); ++l) {
        Matrix m = net[i].m * ctx.gen[l];
        if (!seen.insert(key_of(m)).second) continue;
        std::vector<std::uint8_t> w = net[i].word;
        w.push_back(l);
        net.push_back({std::move(w), std::move(m)});
      }
    }
    level_begin = level_end;
  }
  return net;
}

std::vector<BraidLetter> to_letters(const SearchContext& ctx, const std::vector<std::uint8_t>& w) {
  std::vector<BraidLetter> out;
  out.reserve(w.size());
  for (std::uint8_t l : w) out.push_back(ctx.gen_letter[l]);
  return out;
}

double subspace_distance(const SearchContext& ctx, const Matrix& m) {
  std::vector<int> cols(ctx.enc.begin(), ctx.enc.end());
  return aligned_distance(m, ctx.target, cols);
}

// beam refinement toward the target, seeded from the net
struct BeamCandidate {
  std::vector<std::uint8_t> word;
  Matrix m;
  double score;
};

void beam_search(const SearchContext& ctx, const std::vector<NetEntry>& net, int width, int depth,
                 std::vector<BeamCandidate>& finalists) {
  if (width <= 0 || depth <= 0) return;
  std::vector<BeamCandidate> beam;
  beam.reserve(net.size());
  for (const NetEntry& e : net) beam.push_back({e.word, e.m, ctx.score(e.m)});
  std::stable_sort(beam.begin(), beam.end(),
                   [](const auto& a, const auto& b) { return a.score < b.score; });
  if (static_cast<int>(beam.size()) > width) beam.resize(width);

  for (int step = 0; step < depth; ++step) {
    std::vector<BeamCandidate> next;
    next.reserve(beam.size() * ctx.gen.size());
    std::unordered_set<MatKey, MatKeyHash> seen;
    for (const BeamCandidate& c : beam) {
      for (std::uint8_t l = 0; l < ctx.gen.size(); ++l) {
        Matrix m = c.m * ctx.gen[l];
        if (!seen.insert(key_of(m)).second) continue;
        std::vector<std::uint8_t> w = c.word;
        w.push_back(l);
        next.push_back({std::move(w), std::move(m), 0.0});
        next.back().score = ctx.score(next.back().m);
      }
    }
    std::stable_sort(next.begin(), next.end(),
                     [](const auto& a, const auto& b) { return a.score < b.score; });
    if (static_cast<int>(next.size()) > width) next.resize(width);
    beam = std::move(next);
    for (int i = 0; i < std::min<int>(4, beam.size()); ++i) finalists.push_back(beam[i]);
  }
}

// ---------- group-commutator recursion ----------

Matrix hermitian_log(const Matrix& u) {
  Eigen::ComplexEigenSolver<Matrix> es(u);
  Matrix a = Matrix::Zero(u.rows(), u.cols());
  for (int i = 0; i < u.rows(); ++i) {
    const Complex lam = es.eigenvalues()(i);
    a += std::arg(lam) * (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
  }
  a = 0.5 * (a + a.adjoint()).eval();
  a -= (a.trace() / static_cast<double>(u.rows())) * Matrix::Identity(u.rows(), u.cols());
  return a;
}

// unitary basis change Q making Q^dag A Q zero-diagonal (A hermitian traceless)
Matrix zero_diagonal_rotation(Matrix a) {
  const int d = static_cast<int>(a.rows());
  Matrix q = Matrix::Identity(d, d);
  std::vector<bool> done(d, false);
  for (int step = 0; step + 1 < d; ++step) {
    int imax = -1, imin = -1;
    for (int i = 0; i < d; ++i) {
      if (done[i]) continue;
      if (imax < 0 || a(i, i).real() > a(imax, imax).real()) imax = i;
      if (imin < 0 || a(i, i).real() < a(imin, imin).real()) imin = i;
    }
    if (imax == imin || a(imax, imax).real() - a(imin, imin).real() < 1e-14) break;
    // rotate in the (imax, imin) plane until the imax diagonal entry vanishes
    const int i = imax, j = imin;
    double lo = 0.0, hi = std::numbers::pi / 2;
    const auto entry = [&](double th) {
      const double c = std::cos(th), s = std::sin(th);
      return c * c * a(i, i).real() + s * s * a(j, j).real() + 2 * c * s * a(i, j).real();
    };
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (entry(mid) > 0)
        lo = mid;
      else
        hi = mid;
    }
    const double th = 0.5 * (lo + hi), c = std::cos(th), s = std::sin(th);
    Matrix r = Matrix::Identity(d, d);
    r(i, i) = c;
    r(j, j) = c;
    r(i, j) = -s;
    r(j, i) = s;
    a = (r.adjoint() * a * r).eval();
    q = (q * r).eval();
    done[i] = true;
  }
  return q;
}

std::pair<Matrix, Matrix> gc_decompose(const Matrix& delta) {
  const int d = static_cast<int>(delta.rows());
  Matrix a = hermitian_log(delta);
  const double norm = std::max(a.cwiseAbs().maxCoeff(), 1e-30);
  Matrix q = zero_diagonal_rotation(a);
  Matrix a0 = (q.adjoint() * a * q).eval();
  const double spread = std::sqrt(norm) / d;
  Matrix f0 = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) f0(i, i) = spread * (i + 1);
  Matrix g0 = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) g0(i, j) = a0(i, j) / (Complex(0, 1) * spread * static_cast<double>(i - j));
  // V = Q e^{iF} Q^dag, W = Q e^{iG} Q^dag so that V W V^dag W^dag ~ e^{iA}
  Matrix v = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) v(i, i) = std::polar(1.0, f0(i, i).real());
  v = (q * v * q.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(g0);
  Matrix w = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    w += std::polar(1.0, es.eigenvalues()(i)) *
         (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
  w = (q * w * q.adjoint()).eval();
  return {v, w};
}

double frob_aligned(const Matrix& a, const Matrix& b) {
  const Complex t = (b.adjoint() * a).trace();
  return std::sqrt(std::max(0.0, 2.0 * a.cols() - 2.0 * std::abs(t)));
}

struct SkResult {
  std::vector<std::uint8_t> word;
  Matrix m;
};

SkResult sk_nearest(const std::vector<NetEntry>& net, const Matrix& u) {
  std::size_t best = 0;
  double best_d = frob_aligned(net[0].m, u);
  for (std::size_t i = 1; i < net.size(); ++i) {
    const double d = frob_aligned(net[i].m, u);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return {net[best].word, net[best].m};
}

// even letter ids are positive generators, odd their inverses
std::vector<std::uint8_t> inverse_word(const std::vector<std::uint8_t>& w) {
  std::vector<std::uint8_t> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(*it % 2 == 0 ? *it + 1 : *it - 1);
  return out;
}

SkResult sk_approx(const std::vector<NetEntry>& net, const Matrix& u, int depth) {
  if (depth == 0) return sk_nearest(net, u);
  SkResult prev = sk_approx(net, u, depth - 1);
  // phase-align the residual toward the identity before splitting it into a
  // balanced group commutator
  Matrix delta = u * prev.m.adjoint();
  const Complex t = delta.trace();
  if (std::abs(t) > 1e-12) delta *= std::polar(1.0, -std::arg(t));
  auto [v, w] = gc_decompose(delta);
  SkResult va = sk_approx(net, v, depth - 1);
  SkResult wa = sk_approx(net, w, depth - 1);
  SkResult cand;
  cand.word = va.word;
  auto append = [&cand](const std::vector<std::uint8_t>& w2) {
    cand.word.insert(cand.word.end(), w2.begin(), w2.end());
  };
  append(wa.word);
  append(inverse_word(va.word));
  append(inverse_word(wa.word));
  append(prev.word);
  cand.m = va.m * wa.m * va.m.adjoint() * wa.m.adjoint() * prev.m;
  return frob_aligned(cand.m, u) < frob_aligned(prev.m, u) ? cand : prev;
}

SearchContext make_context(int ell, const Eigen::Matrix4cd& v, int dense_cap) {
  require_valid_root(ell);
  SearchContext ctx{RootParams(2, ell), nullptr, 0, {}, {}, {}, {}};
  static std::map<int, IrrepBlock> block_store;  // one [4,4] block per ell
  auto it = block_store.find(ell);
  if (it == block_store.end())
    it = block_store.emplace(ell, IrrepBlock(YoungDiagram({4, 4}), ctx.params)).first;
  ctx.block = &it->second;
  ctx.dim = ctx.block->dimension();
  if (ctx.dim != (ell == 5 ? 13 : 14))
    throw std::logic_error("unexpected dimension for the [4,4] block");
  for (int i = 1; i <= 7; ++i) {
    for (int sign : {+1, -1}) {
      ctx.gen.push_back(ctx.block->generator_unitary(i, sign, dense_cap));
      ctx.gen_letter.push_back({i, sign});
    }
  }
  for (const Tableau& t : qubit_basis(2, ell)) ctx.enc.push_back(ctx.block->index_of(t));

  Eigen::Matrix4cd vn = normalize_det(v);
  // V (+) e^{i phi} 1 on the complement, with phi restoring unit determinant
  const double phi = -std::arg(vn.determinant()) / (ctx.dim - 4);
  Matrix target = std::polar(1.0, phi) * Matrix::Identity(ctx.dim, ctx.dim);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) target(ctx.enc[a], ctx.enc[b]) = vn(a, b);
  ctx.target = target;
  return ctx;
}

}  // namespace

namespace {

GateApproximation pick_best(const SearchContext& ctx, const std::vector<BeamCandidate>& finalists,
                            GateApproximation best) {
  std::size_t best_len = best.word.size();
  for (const BeamCandidate& c : finalists) {
    const double sub = subspace_distance(ctx, c.m);
    const bool better =
        sub < best.subspace_dist - 1e-12 ||
        (sub < best.subspace_dist + 1e-12 && c.word.size() < best_len);
    if (better) {
      best.word = to_letters(ctx, c.word);
      best.subspace_dist = sub;
      best.full_dist = aligned_distance(c.m, ctx.target);
      best_len = c.word.size();
    }
  }
  return best;
}

}  // namespace

GateApproximation approximate_gate(const Eigen::Matrix4cd& v, int ell, double eps,
                                   const CompilerOptions& opt) {
  SearchContext ctx = make_context(ell, v, opt.dense_cap);
  const std::vector<NetEntry> net = build_net(ctx, opt.net_depth);

  GateApproximation best;
  best.full_dist = std::numeric_limits<double>::infinity();
  best.subspace_dist = std::numeric_limits<double>::infinity();

  // best net entries by the cheap column-overlap score
  std::vector<BeamCandidate> finalists;
  {
    std::vector<std::size_t> order(net.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ctx.score(net[a].m) < ctx.score(net[b].m);
    });
    for (std::size_t i = 0; i < std::min<std::size_t>(16, order.size()); ++i)
      finalists.push_back({net[order[i]].word, net[order[i]].m, 0.0});
  }
  best = pick_best(ctx, finalists, std::move(best));
  if (best.subspace_dist <= eps && eps > 0) return best;

  finalists.clear();
  beam_search(ctx, net, opt.beam_width, opt.beam_depth, finalists);
  if (opt.sk_depth > 0) {
    SkResult sk = sk_approx(net, ctx.target, opt.sk_depth);
    finalists.push_back({sk.word, sk.m, 0.0});
  }
  return pick_best(ctx, finalists, std::move(best));
}

CompiledBraid compile_circuit(const QuantumCircuit& c, int ell, double eps,
                              const CompilerOptions& opt) {
  require_valid_root(ell);
  if (c.qubits < 1) throw std::invalid_argument("compile_circuit: need at least one qubit");
  for (const auto& g : c.gates)
    if (g.pos < 1 || g.pos > c.qubits - 1)
      throw std::invalid_argument("compile_circuit: gate position out of range");

  CompiledBraid out;
  out.qubits = c.qubits;
  out.ell = ell;
  out.eps_target = eps;
  const double per_gate = eps / std::max<std::size_t>(1, c.gates.size());

  // per-gate words in B_8, shifted to their four-strand offsets; the braid
  // word lists the last gate leftmost so that the left-to-right matrix
  // product equals U_m ... U_1
  std::vector<std::vector<BraidLetter>> words(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    GateApproximation ga = approximate_gate(c.gates[i].u, ell, per_gate, opt);
    out.gate_log.push_back({c.gates[i].pos, ga.word.size(), ga.full_dist, ga.subspace_dist});
    out.eps_budget += ga.full_dist;
    words[i] = std::move(ga.word);
    const int shift = 4 * (c.gates[i].pos - 1);
    for (BraidLetter& l : words[i]) l.index += shift;
  }
  out.braid = BraidWord::identity(4 * c.qubits);
  for (std::size_t i = c.gates.size(); i-- > 0;)
    for (const BraidLetter& l : words[i]) out.braid.append_letter(l.index, l.sign);

  VerifyReport rep = verify_compiled(out, c);
  out.eps_achieved = rep.eps_achieved;
  out.target_met = out.eps_achieved <= eps + 1e-12;
  return out;
}

VerifyReport verify_compiled(const CompiledBraid& cb, const QuantumCircuit& c) {
  require_valid_root(cb.ell);
  const int n = c.qubits;
  if (cb.braid.strands != 4 * n)
    throw std::invalid_argument("verify_compiled: braid strand count does not match circuit");
  RootParams p(2, cb.ell);
  const IrrepBlock block(YoungDiagram({2 * n, 2 * n}), p);

  std::vector<int> enc;
  for (const Tableau& t : qubit_basis(n, cb.ell)) enc.push_back(block.index_of(t));

  // circuit amplitude
  const Matrix u = c.unitary();
  VerifyReport rep;
  rep.amp_circuit_sq = std::norm(u(0, 0));

  // braid amplitude through the plat formula: |J|/[2]^{2n-1} = |<t|pi(b)|t>|
  const Complex amp = block.matrix_element(enc[0], cb.braid, enc[0]);
  rep.amp_braid_sq = std::norm(amp);
  rep.gap = std::abs(rep.amp_circuit_sq - rep.amp_braid_sq);

  // whole-circuit operator distance on the encoded subspace
  Matrix big = Matrix::Zero(block.dimension(), block.dimension());
  for (std::size_t j = 0; j < enc.size(); ++j) {
    std::vector<Complex> amps(block.dimension(), Complex(0, 0));
    amps[enc[j]] = 1.0;
    block.apply_word(cb.braid, amps);
    for (int r = 0; r < block.dimension(); ++r) big(r, enc[j]) = amps[r];
  }
  Matrix target = Matrix::Zero(block.dimension(), block.dimension());
  for (std::size_t a = 0; a < enc.size(); ++a)
    for (std::size_t b = 0; b < enc.size(); ++b) target(enc[a], enc[b]) = u(a, b);
  std::vector<int> cols(enc.begin(), enc.end());
  rep.eps_achieved = aligned_distance(big, target, cols);
  rep.pass = rep.gap <= std::max(rep.eps_achieved, 1e-9);
  return rep;
}

}  // namespace braidval
