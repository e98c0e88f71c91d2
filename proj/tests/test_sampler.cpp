#include "braidval/sampler.hpp"

#include <Eigen/Dense>

#include "braidval/invariants.hpp"
#include "doctest.h"

using namespace braidval;

namespace {

BraidWord random_word(int n, int len, Rng& rng) {
  BraidWord b = BraidWord::identity(n);
  for (int i = 0; i < len; ++i)
    b.append_letter(1 + static_cast<int>(rng.below(n - 1)), rng.pm_one(0.5));
  return b;
}

Matrix random_unitary(int d, Rng& rng) {
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

}  // namespace

TEST_CASE("chernoff sample count") {
  CHECK(chernoff_samples(0.1) == 2219);
  CHECK(chernoff_samples(0.2) == 555);
  CHECK_THROWS(chernoff_samples(0.0));
}

TEST_CASE("controlled reduced state matches the bloch expression") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + static_cast<int>(rng.below(7));
    Matrix u = random_unitary(d, rng);
    Vector psi(d);
    for (int i = 0; i < d; ++i) psi(i) = Complex(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    psi.normalize();
    const Complex z = (psi.adjoint() * (u * psi))(0, 0);
    Eigen::Matrix2cd rho = controlled_reduced_state(u, psi);
    Eigen::Matrix2cd expected;
    expected << 0.5, 0.5 * std::conj(z), 0.5 * z, 0.5;
    CHECK((rho - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  // rejects junk
  Matrix bad = Matrix::Identity(3, 3) * 1.5;
  Vector psi = Vector::Zero(3);
  psi(0) = 1;
  CHECK_THROWS(controlled_reduced_state(bad, psi));
  Vector unnorm = psi * 2.0;
  CHECK_THROWS(controlled_reduced_state(Matrix::Identity(3, 3), unnorm));
}

TEST_CASE("hadamard test extremes and empirical mean") {
  Rng rng(6);
  Vector psi(4);
  psi << 0.5, 0.5, 0.5, 0.5;
  SUBCASE("identity gives X = +1 always") {
    for (int i = 0; i < 50; ++i) CHECK(hadamard_test(Matrix::Identity(4, 4), psi, rng).x == 1);
  }
  SUBCASE("minus identity gives X = -1 always") {
    for (int i = 0; i < 50; ++i)
      CHECK(hadamard_test(-Matrix::Identity(4, 4), psi, rng).x == -1);
  }
  SUBCASE("empirical mean tracks the matrix element") {
    Matrix u = random_unitary(8, rng);
    Vector v(8);
    for (int i = 0; i < 8; ++i) v(i) = Complex(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    v.normalize();
    const Complex z = (v.adjoint() * (u * v))(0, 0);
    const int m = 100000;
    double sx = 0, sy = 0;
    for (int i = 0; i < m; ++i) {
      auto s = hadamard_test(u, v, rng);
      sx += s.x;
      sy += s.y;
    }
    CHECK(std::abs(sx / m - z.real()) < 4.0 / std::sqrt(m));
    CHECK(std::abs(sy / m - z.imag()) < 4.0 / std::sqrt(m));
  }
}

TEST_CASE("homflypt estimator") {
  SUBCASE("identity braid estimates 1") {
    RootParams p(2, 5);
    Rng rng(42);
    int good = 0;
    for (int trial = 0; trial < 100; ++trial) {
      EstimatorOptions opt;
      opt.delta = 0.2;
      auto run = estimate_homflypt(BraidWord::identity(3), p, opt, rng);
      if (std::abs(run.estimate - Complex(1, 0)) <= opt.delta) ++good;
    }
    CHECK(good >= 90);
  }

  SUBCASE("auto sample count at delta 0.1") {
    RootParams p(2, 5);
    Rng rng(43);
    EstimatorOptions opt;
    opt.delta = 0.1;
    auto run = estimate_homflypt(BraidWord(2, {{1, +1}}), p, opt, rng);
    CHECK(run.samples == 2219);
    CHECK(std::abs(run.estimate) <= 1.0 + 1e-12);
  }

  SUBCASE("unknot-hopf word lands within delta most of the time") {
    RootParams p(2, 5);
    const BraidWord b = parse_braid("n:4; word: 2 -3 2");
    const Complex exact = normalized_trace(b, p) /
                          std::pow(quantum_integer(2, 5), b.strands - 1);
    Rng rng(44);
    EstimatorOptions opt;
    opt.delta = 0.1;
    int good = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto run = estimate_homflypt(b, p, opt, rng);
      if (std::abs(run.estimate - exact) <= opt.delta) ++good;
    }
    CHECK(good >= 75);
  }

  SUBCASE("controlled-circuit mode agrees with fast mode in distribution") {
    RootParams p(2, 5);
    const BraidWord b = parse_braid("n:4; word: 2 -3 2");
    const Complex exact = normalized_trace(b, p) /
                          std::pow(quantum_integer(2, 5), b.strands - 1);
    Rng rng(45);
    EstimatorOptions opt;
    opt.delta = 0.15;
    opt.mode = SampleMode::ControlledCircuit;
    int good = 0;
    for (int trial = 0; trial < 20; ++trial) {
      auto run = estimate_homflypt(b, p, opt, rng);
      if (std::abs(run.estimate - exact) <= opt.delta) ++good;
    }
    CHECK(good >= 15);
  }
}

TEST_CASE("mixture correctness: the estimator mean is the markov trace") {
  // sum_lambda P_lambda (1/d_lambda) sum_t <t|pi(b)|t> = tr(b), computed
  // exactly from the same tables the sampler uses
  Rng rng(50);
  for (auto [k, ell] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}}) {
    RootParams p(k, ell);
    for (int trial = 0; trial < 4; ++trial) {
      const BraidWord b = random_word(4, 6, rng);
      MarkovWeightTable table(4, p);
      BlockCache cache(p);
      Complex mixture = 0;
      for (const auto& e : table.entries()) {
        const IrrepBlock& block = cache.block(e.lambda);
        Complex diag = 0;
        for (int idx = 0; idx < block.dimension(); ++idx)
          diag += block.matrix_element(idx, b, idx);
        mixture += e.probability * diag / static_cast<double>(block.dimension());
      }
      CHECK(std::abs(mixture - markov_trace(b, p)) < 1e-10);
    }
  }
}

TEST_CASE("jones estimators") {
  const BraidWord trefoil = parse_braid("n:4; word: 2 -3 2");
  const int ell = 5;
  RootParams p(2, ell);
  const double exact =
      jones_generalized_closure(trefoil, ClosureSpec::plat(4), p).normalized_abs;

  SUBCASE("identity braid plat estimate is near 1") {
    Rng rng(66);
    EstimatorOptions opt;
    opt.delta = 0.1;
    auto run = estimate_jones_closure(BraidWord::identity(4), ClosureSpec::plat(4), ell, opt,
                                      JonesRoute::ViaPlatConjugation, rng);
    CHECK(run.abs_estimate > 0.9);
  }

  SUBCASE("trefoil plat estimate within delta three quarters of the time") {
    Rng rng(67);
    EstimatorOptions opt;
    opt.delta = 0.1;
    int good = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto run = estimate_jones_closure(trefoil, ClosureSpec::plat(4), ell, opt,
                                        JonesRoute::Direct, rng);
      if (std::abs(run.abs_estimate - exact) <= opt.delta) ++good;
    }
    CHECK(good >= 75);
  }

  SUBCASE("both routes agree on generalized closures") {
    Rng rng(68);
    EstimatorOptions opt;
    opt.delta = 0.05;
    opt.min_samples = 100000;
    for (int trial = 0; trial < 2; ++trial) {
      const BraidWord b = random_word(4, 5, rng);
      auto spec = ClosureSpec::generalized(1, 2);
      auto via = estimate_jones_closure(b, spec, ell, opt, JonesRoute::ViaPlatConjugation, rng);
      auto direct = estimate_jones_closure(b, spec, ell, opt, JonesRoute::Direct, rng);
      CHECK(std::abs(via.abs_estimate - direct.abs_estimate) < 2 * opt.delta);
      const double ex = jones_generalized_closure(b, spec, p).normalized_abs;
      CHECK(std::abs(via.abs_estimate - ex) < 2 * opt.delta);
      CHECK(std::abs(direct.abs_estimate - ex) < 2 * opt.delta);
    }
  }

  SUBCASE("failure rate stays below the guarantee") {
    Rng rng(69);
    EstimatorOptions opt;
    opt.delta = 0.1;
    int bad = 0;
    const int runs = 400;
    for (int trial = 0; trial < runs; ++trial) {
      auto run = estimate_jones_closure(trefoil, ClosureSpec::plat(4), ell, opt,
                                        JonesRoute::Direct, rng);
      if (std::abs(run.abs_estimate - exact) > opt.delta) ++bad;
    }
    CHECK(static_cast<double>(bad) / runs < 0.25 + 0.05);
  }
}

TEST_CASE("estimator unbiasedness at fixed tableau") {
  // for a fixed (lambda, t) the empirical mean of X + iY converges to the
  // diagonal matrix element at the 1/sqrt(M) rate
  RootParams p(2, 5);
  BlockCache cache(p);
  const YoungDiagram lam({2, 2});
  const IrrepBlock& block = cache.block(lam);
  Rng rng(70);
  const BraidWord b = random_word(4, 9, rng);
  const Complex exact = block.matrix_element(0, b, 0);
  const int m = 10000;
  double sx = 0, sy = 0;
  for (int i = 0; i < m; ++i) {
    Vector psi = Vector::Zero(block.dimension());
    psi(0) = 1;
    auto s = hadamard_test(block.word_matrix(b), psi, rng);
    sx += s.x;
    sy += s.y;
  }
  CHECK(std::abs(Complex(sx / m, sy / m) - exact) < 5.0 / std::sqrt(m));
}

TEST_CASE("seeded runs are reproducible") {
  RootParams p(2, 5);
  const BraidWord b = parse_braid("n:4; word: 2 -3 2");
  EstimatorOptions opt;
  opt.delta = 0.2;
  opt.keep_samples = true;
  Rng r1(123), r2(123);
  auto a = estimate_homflypt(b, p, opt, r1);
  auto c = estimate_homflypt(b, p, opt, r2);
  CHECK(a.estimate == c.estimate);
  CHECK(a.xy == c.xy);
  CHECK(a.xy.size() == a.samples);
}

TEST_CASE("register encoding matches the tableau representation") {
  Rng rng(80);
  SUBCASE("single generator on two strands") {
    for (auto [k, ell] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}}) {
      RootParams p(k, ell);
      auto report = verify_register_encoding(BraidWord(2, {{1, +1}}), p);
      CHECK(report.pass);
      CHECK(report.max_deviation < 1e-12);
      CHECK(report.w_roundtrip_dev == 0.0);
    }
  }
  SUBCASE("random words on four strands") {
    for (auto [k, ell] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}}) {
      RootParams p(k, ell);
      for (int trial = 0; trial < 6; ++trial) {
        const BraidWord b = random_word(4, 10, rng);
        auto report = verify_register_encoding(b, p);
        CHECK(report.pass);
        CHECK(report.max_deviation < 1e-9);
      }
    }
  }
  SUBCASE("longer words on five strands hit the boundary tableaux") {
    RootParams p(2, 5);
    for (int trial = 0; trial < 3; ++trial) {
      const BraidWord b = random_word(5, 12, rng);
      auto report = verify_register_encoding(b, p);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("fast and full modes are sample-for-sample equivalent") {
  // both modes draw the same tableaux and coins from the same seed; only the
  // route to the matrix element differs
  RootParams p(2, 5);
  const BraidWord b = parse_braid("n:4; word: 2 -3 2");
  EstimatorOptions fast, full;
  fast.delta = full.delta = 0.2;
  fast.keep_samples = full.keep_samples = true;
  fast.mode = SampleMode::Bernoulli;
  full.mode = SampleMode::ControlledCircuit;
  Rng r1(99), r2(99);
  auto a = estimate_homflypt(b, p, fast, r1);
  auto c = estimate_homflypt(b, p, full, r2);
  CHECK(a.xy == c.xy);
  CHECK(std::abs(a.estimate - c.estimate) < 1e-15);
}
