#include "braidval/invariants.hpp"

#include <Eigen/Dense>

#include "braidval/rng.hpp"
#include "doctest.h"

using namespace braidval;

namespace {

BraidWord random_word(int n, int len, Rng& rng) {
  BraidWord b = BraidWord::identity(n);
  for (int i = 0; i < len; ++i)
    b.append_letter(1 + static_cast<int>(rng.below(n - 1)), rng.pm_one(0.5));
  return b;
}

const std::vector<std::pair<int, int>> kParams = {{2, 5}, {2, 7}, {2, 8}, {3, 7}, {4, 9}};

}  // namespace

TEST_CASE("markov trace axioms") {
  SUBCASE("normalization tr(1_n) = 1") {
    for (auto [k, ell] : kParams) {
      RootParams p(k, ell);
      for (int n = 1; n <= 8; ++n)
        CHECK(std::abs(markov_trace(BraidWord::identity(n), p) - Complex(1, 0)) < 1e-10);
    }
  }

  SUBCASE("cyclicity") {
    Rng rng(21);
    for (auto [k, ell] : kParams) {
      RootParams p(k, ell);
      for (int trial = 0; trial < 5; ++trial) {
        BraidWord w = random_word(4, 6, rng);
        BraidWord v = random_word(4, 6, rng);
        CHECK(std::abs(markov_trace(w * v, p) - markov_trace(v * w, p)) < 1e-10);
      }
    }
  }

  SUBCASE("conditional expectation tr(g_n iota(w)) = q^{(k+1)/2}/[k] tr(w)") {
    Rng rng(22);
    for (auto [k, ell] : kParams) {
      RootParams p(k, ell);
      const Complex factor = p.q_pow_half(k + 1) / quantum_integer(k, p.ell);
      for (int n : {2, 3, 4}) {
        for (int trial = 0; trial < 4; ++trial) {
          BraidWord w = random_word(n, 2 * n, rng);
          BraidWord up = include_strand(w);
          BraidWord gn = BraidWord::identity(n + 1);
          gn.append_letter(n, +1);
          CHECK(std::abs(markov_trace(gn * up, p) - factor * markov_trace(w, p)) < 1e-10);
        }
      }
    }
  }

  SUBCASE("cup-cap conditional expectation at k = 2") {
    // tr(e_n iota(w)) = [k-1]/([k][2]) tr(w), with e_n = E_n/[2]
    Rng rng(23);
    for (int ell : {5, 7, 8}) {
      RootParams p(2, ell);
      const double factor = quantum_integer(1, ell) / (quantum_integer(2, ell) * p.two_q);
      for (int trial = 0; trial < 4; ++trial) {
        BraidWord w = random_word(3, 6, rng);
        TangleWord tangle(include_strand(w), {3});
        CHECK(std::abs(markov_trace(tangle, p) / p.two_q - factor * markov_trace(w, p)) < 1e-10);
      }
    }
  }
}

TEST_CASE("normalized trace is a markov-move invariant") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(2));
    const int ell = k + 2 + static_cast<int>(rng.below(static_cast<uint64_t>(9 - k - 1)));
    RootParams p(k, ell);
    const int n = 2 + static_cast<int>(rng.below(4));
    BraidWord b = random_word(n, 1 + static_cast<int>(rng.below(10)), rng);
    const Complex base = normalized_trace(b, p);
    const double scale = std::max(1.0, std::abs(base));

    BraidWord conj = markov_move(b, ConjugateBy{random_word(n, 4, rng)});
    CHECK(std::abs(normalized_trace(conj, p) - base) / scale < 1e-9);

    BraidWord stab = markov_move(b, Stabilize{rng.pm_one(0.5)});
    CHECK(std::abs(normalized_trace(stab, p) - base) / scale < 1e-9);
  }
}

TEST_CASE("homflypt values") {
  SUBCASE("identity braid gives [k]^{n-1}") {
    for (auto [k, ell] : kParams) {
      RootParams p(k, ell);
      for (int n = 1; n <= 6; ++n) {
        auto v = homflypt_trace_closure(BraidWord::identity(n), p);
        CHECK(std::abs(v.value - Complex(std::pow(quantum_integer(k, ell), n - 1), 0)) < 1e-9);
        CHECK(v.normalized_abs == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }

  SUBCASE("single crossing unknot gives 1") {
    for (auto [k, ell] : kParams) {
      RootParams p(k, ell);
      auto v = homflypt_trace_closure(BraidWord(2, {{1, +1}}), p);
      CHECK(std::abs(v.value - Complex(1, 0)) < 1e-10);
      auto vneg = homflypt_trace_closure(BraidWord(2, {{1, -1}}), p);
      CHECK(std::abs(vneg.value - Complex(1, 0)) < 1e-10);
    }
  }

  SUBCASE("unknot and hopf link word matches the bracket oracle at k = 2") {
    const BraidWord b = parse_braid("n:4; word: 2 -3 2");
    for (int ell : {5, 7, 8}) {
      RootParams p(2, ell);
      auto v = homflypt_trace_closure(b, p);
      const double oracle = kauffman_oracle(ClosureSpec::trace(4), b, ell);
      CHECK(std::abs(std::abs(v.value) - oracle) < 1e-8);
    }
  }
}

TEST_CASE("kauffman oracle on textbook links") {
  SUBCASE("unknot") {
    CHECK(kauffman_oracle(ClosureSpec::plat(2), BraidWord::identity(2), 5) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kauffman_oracle(ClosureSpec::trace(1), BraidWord::identity(1), 7) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("disjoint unknots") {
    for (int ell : {5, 7, 8})
      for (int n = 1; n <= 4; ++n)
        CHECK(kauffman_oracle(ClosureSpec::trace(n), BraidWord::identity(n), ell) ==
              doctest::Approx(std::pow(2.0 * std::cos(std::acos(-1.0) / ell), n - 1))
                  .epsilon(1e-10));
  }

  SUBCASE("trefoil against the skein recursion value") {
    // V(trefoil) = -q^{-4} + q^{-3} + q^{-1}, mirror-insensitive in absolute value
    const BraidWord trefoil(2, {{1, +1}, {1, +1}, {1, +1}});
    for (int ell : {5, 7, 8, 9}) {
      RootParams p(2, ell);
      const Complex q = p.q;
      const double expected = std::abs(-std::pow(q, -4) + std::pow(q, -3) + 1.0 / q);
      CHECK(kauffman_oracle(ClosureSpec::trace(2), trefoil, ell) ==
            doctest::Approx(expected).epsilon(1e-8));
    }
  }

  SUBCASE("crossing cap") {
    BraidWord big = BraidWord::identity(2);
    for (int i = 0; i < 21; ++i) big.append_letter(1, +1);
    CHECK_THROWS_AS(kauffman_oracle(ClosureSpec::trace(2), big, 5), std::length_error);
  }
}

TEST_CASE("jones closures against the oracle") {
  SUBCASE("plat of the trefoil word") {
    const BraidWord b = parse_braid("n:4; word: 2 -3 2");
    for (int ell : {5, 7, 8}) {
      RootParams p(2, ell);
      auto v = jones_generalized_closure(b, ClosureSpec::plat(4), p);
      const double oracle = kauffman_oracle(ClosureSpec::plat(4), b, ell);
      CHECK(std::abs(std::abs(v.value) - oracle) < 1e-8);
      // and the plat closure of this word is a trefoil
      const Complex q = p.q;
      CHECK(std::abs(v.value) ==
            doctest::Approx(std::abs(-std::pow(q, -4) + std::pow(q, -3) + 1.0 / q)).epsilon(1e-8));
    }
  }

  SUBCASE("identity braid saturates the bound for every (p, r)") {
    RootParams p(2, 7);
    for (int pp = 0; pp <= 2; ++pp)
      for (int r = 0; r <= 3; ++r) {
        const int n = 2 * pp + r;
        if (n == 0) continue;
        auto v = jones_generalized_closure(BraidWord::identity(n),
                                           ClosureSpec::generalized(pp, r), p);
        CHECK(v.normalized_abs == doctest::Approx(1.0).epsilon(1e-9));
      }
  }

  SUBCASE("plat amplitude route agrees with the trace route") {
    Rng rng(55);
    for (int ell : {5, 7}) {
      RootParams p(2, ell);
      for (int trial = 0; trial < 6; ++trial) {
        BraidWord b = random_word(4, 8, rng);
        auto v = jones_generalized_closure(b, ClosureSpec::plat(4), p);
        const double direct = std::pow(p.two_q, 1) * std::abs(plat_amplitude(b, p));
        CHECK(std::abs(std::abs(v.value) - direct) < 1e-10);
      }
    }
  }

  SUBCASE("generalized closure equals plat of the conjugated embedding") {
    Rng rng(56);
    RootParams p(2, 5);
    for (int trial = 0; trial < 8; ++trial) {
      BraidWord b = random_word(3, 6, rng);
      auto gen = jones_generalized_closure(b, ClosureSpec::generalized(1, 1), p);
      const BraidWord c = conjugator_braid(1, 1);
      const BraidWord embedded = c.inverse() * include_strand(b) * c;
      auto plat = jones_generalized_closure(embedded, ClosureSpec::plat(4), p);
      CHECK(std::abs(gen.normalized_abs - plat.normalized_abs) < 1e-10);
    }
  }
}

TEST_CASE("oracle equivalence across closure kinds") {
  Rng rng(77);
  RootParams p(2, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(2));
    BraidWord b = random_word(n, 6, rng);
    // trace
    {
      auto v = homflypt_trace_closure(b, p);
      CHECK(std::abs(std::abs(v.value) - kauffman_oracle(ClosureSpec::trace(n), b, 5)) < 1e-8);
    }
    // generalized with (p, r) consistent with n
    for (int pp = 0; 2 * pp <= n; ++pp) {
      const int r = n - 2 * pp;
      auto spec = ClosureSpec::generalized(pp, r);
      auto v = jones_generalized_closure(b, spec, p);
      CHECK(std::abs(std::abs(v.value) - kauffman_oracle(spec, b, 5)) < 1e-8);
    }
  }
}

TEST_CASE("specialization consistency at k = 2") {
  Rng rng(88);
  RootParams p(2, 7);
  for (int trial = 0; trial < 6; ++trial) {
    BraidWord b = random_word(4, 7, rng);
    auto h = homflypt_trace_closure(b, p);
    auto j = jones_generalized_closure(b, ClosureSpec::trace(4), p);
    CHECK(std::abs(std::abs(h.value) - std::abs(j.value)) < 1e-10);
  }
}

TEST_CASE("framing braids fold into the closure") {
  Rng rng(99);
  RootParams p(2, 5);
  BraidWord b = random_word(4, 5, rng);
  BraidWord x = random_word(4, 3, rng);
  BraidWord y = random_word(4, 3, rng);
  ClosureSpec spec = ClosureSpec::generalized(1, 2);
  spec.x = x;
  spec.y = y;
  auto framed = jones_generalized_closure(b, spec, p);
  auto folded = jones_generalized_closure(x * b * y, ClosureSpec::generalized(1, 2), p);
  CHECK(std::abs(framed.normalized_abs - folded.normalized_abs) < 1e-12);
  CHECK(std::abs(std::abs(framed.value) - kauffman_oracle(spec, b, 5)) < 1e-8);
}

TEST_CASE("amplitude distance lemma") {
  Rng rng(111);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(rng.below(7));
    // random unitary from the QR of a complex gaussian-ish matrix
    Eigen::MatrixXcd a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        a(i, j) = Complex(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd u = qr.householderQ();
    // nearby unitary u * exp(i H) with H hermitian and small
    Eigen::MatrixXcd h(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        h(i, j) = Complex(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    h = (h + h.adjoint()).eval();
    h *= (0.02 + 0.3 * rng.uniform01()) / h.operatorNorm();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(d);
    for (int i = 0; i < d; ++i) phases(i) = std::polar(1.0, es.eigenvalues()(i));
    Eigen::MatrixXcd uprime =
        u * (es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint());
    const double eps = (u - uprime).jacobiSvd().singularValues()(0);
    if (eps > 1.0) continue;
    Eigen::VectorXcd psi(d), phi(d);
    for (int i = 0; i < d; ++i) {
      psi(i) = Complex(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
      phi(i) = Complex(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    }
    psi.normalize();
    phi.normalize();
    const double lhs = std::abs(std::norm(Complex(phi.adjoint() * (u * psi))) -
                                std::norm(Complex(phi.adjoint() * (uprime * psi))));
    CHECK(lhs <= eps + 1e-12);
  }
}

TEST_CASE("word order convention does not change closures") {
  // reversed products give the same traces and plat amplitudes
  Rng rng(121);
  RootParams p(2, 5);
  for (int trial = 0; trial < 5; ++trial) {
    BraidWord b = random_word(4, 8, rng);
    BraidWord rev(4, {b.letters.rbegin(), b.letters.rend()});
    CHECK(std::abs(markov_trace(b, p) - markov_trace(rev, p)) < 1e-10);
    CHECK(std::abs(plat_amplitude(b, p) - plat_amplitude(rev, p)) < 1e-10);
  }
}

TEST_CASE("normalized values never exceed the bound") {
  Rng rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const int ell = 5 + static_cast<int>(rng.below(4));
    RootParams p(2, ell);
    const int n = 2 + static_cast<int>(rng.below(4));
    const BraidWord b = random_word(n, static_cast<int>(rng.below(12)), rng);
    CHECK(homflypt_trace_closure(b, p).normalized_abs <= 1.0 + 1e-9);
    for (int pp = 0; 2 * pp <= n; ++pp) {
      auto spec = ClosureSpec::generalized(pp, n - 2 * pp);
      CHECK(jones_generalized_closure(b, spec, p).normalized_abs <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("exact evaluation is permitted at l = 6") {
  RootParams p(2, 6);
  for (int n = 1; n <= 6; ++n)
    CHECK(std::abs(markov_trace(BraidWord::identity(n), p) - Complex(1, 0)) < 1e-10);
  const BraidWord trefoil(2, {{1, +1}, {1, +1}, {1, +1}});
  auto v = homflypt_trace_closure(trefoil, p);
  CHECK(std::abs(std::abs(v.value) - kauffman_oracle(ClosureSpec::trace(2), trefoil, 6)) < 1e-8);
}

TEST_CASE("trace closure realized as a plat through the conjugator") {
  // p = 0, r = 3: the trace closure of b in B_3 is the plat closure of
  // c^{-1} iota^3(b) c on six strands
  Rng rng(606);
  for (int ell : {5, 7}) {
    RootParams p(2, ell);
    for (int trial = 0; trial < 5; ++trial) {
      const BraidWord b = random_word(3, 2 + static_cast<int>(rng.below(7)), rng);
      const double trace_abs =
          jones_generalized_closure(b, ClosureSpec::trace(3), p).normalized_abs;
      const BraidWord c = conjugator_braid(0, 3);
      const BraidWord embedded = c.inverse() * include_strands(b, 3) * c;
      const double plat_abs =
          jones_generalized_closure(embedded, ClosureSpec::plat(6), p).normalized_abs;
      CHECK(std::abs(trace_abs - plat_abs) < 1e-10);
      // and the oracle agrees that the links are the same
      CHECK(std::abs(kauffman_oracle(ClosureSpec::trace(3), b, ell) -
                     kauffman_oracle(ClosureSpec::plat(6), embedded, ell)) < 1e-8);
    }
  }
}
