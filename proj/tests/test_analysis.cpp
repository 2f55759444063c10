#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "test_support.hpp"

using namespace huffseq;
using test_support::all_near;
using test_support::seq;
using test_support::to_cvec;

namespace {

VectorXc random_complex(Index n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  VectorXc v(n);
  for (Index i = 0; i < n; ++i) v[i] = Scalar(g(rng), g(rng));
  return v;
}

Sequence random_pm1(Index n, std::mt19937& rng) {
  std::bernoulli_distribution b;
  VectorXc v(n);
  for (Index i = 0; i < n; ++i) v[i] = b(rng) ? 1.0 : -1.0;
  return make_sequence(v);
}

}  // namespace

TEST_CASE("xcorr matches brute force for both conjugation modes") {
  std::mt19937 rng(11);
  for (Index n : {1, 2, 5, 9}) {
    for (Index m : {1, 3, 8}) {
      const Sequence f = make_sequence(random_complex(n, rng));
      const Sequence g = make_sequence(random_complex(m, rng));
      for (bool conj : {true, false}) {
        const CorrelationProfile p = xcorr(f, g, conj);
        CHECK(all_near(p.values, oracle::correlate(to_cvec(f), to_cvec(g), conj), 1e-12));
        CHECK(p.zero_lag == n - 1);
        CHECK(p.min_lag() == -(n - 1));
        CHECK(p.max_lag() == m - 1);
        CHECK(p.kind == (conj ? CorrelationKind::kCross : CorrelationKind::kDualCross));
      }
    }
  }
}

TEST_CASE("xcorr trivial cases and kinds") {
  CHECK(xcorr(seq({1}), seq({1}), true).values == VectorXc::Constant(1, 1.0));
  const Sequence f = gen_h9b(0.7);
  CHECK(autocorr(f).kind == CorrelationKind::kAperiodic);
  CHECK(dual_autocorr(f).kind == CorrelationKind::kDualAperiodic);
  CHECK(kind_name(CorrelationKind::kDualCross) == "dual_cross");
  CHECK(autocorr(f).at_lag(0).real() == doctest::Approx(energy(f)));
  CHECK(autocorr(f).peak == doctest::Approx(energy(f)));
}

TEST_CASE("autocorr equals dual autocorr on real input") {
  for (const Sequence& f : {gen_fibonacci(11, 1.7), gen_h17(0.5), fixture("h86")}) {
    CHECK(autocorr(f).values == dual_autocorr(f).values);
  }
  const Sequence c = gen_h9a(Scalar{0.0, 2.0});
  CHECK(autocorr(c).values != dual_autocorr(c).values);
}

TEST_CASE("autocorr end values are conj(f_N-1) f_0 and its conjugate") {
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    const Sequence f = make_sequence(random_complex(2 + t, rng));
    const CorrelationProfile p = autocorr(f);
    const Index n = f.length();
    CHECK(std::abs(p.end_values.second - std::conj(f[0]) * f[n - 1]) < 1e-12);
    CHECK(std::abs(p.end_values.first - std::conj(p.end_values.second)) < 1e-12);
    CHECK(std::abs(p.at_lag(0) - f.values.squaredNorm()) < 1e-12 * f.values.squaredNorm());
  }
}

TEST_CASE("canonical profile summary excludes lag 0 and both extremes") {
  const CorrelationProfile p = autocorr(seq({1, 1, 1}));
  CHECK(p.max_interior_offpeak == 2.0);
  CHECK(std::abs(p.worst_lag) == 1);
  CHECK(autocorr(gen_fibonacci(7, 1.0)).max_interior_offpeak == 0.0);
  CHECK(autocorr(gen_fibonacci(7, 1.0)).worst_lag == 0);
}

TEST_CASE("periodic autocorrelation") {
  CHECK(all_near(make_sequence(periodic_autocorr(seq({1, 1, 1})).values), {3, 3, 3}, 0.0));
  std::mt19937 rng(2);
  for (Index n : {2, 3, 7, 10}) {
    const Sequence f = make_sequence(random_complex(n, rng));
    const CorrelationProfile p = periodic_autocorr(f);
    CHECK(all_near(p.values, oracle::periodic(to_cvec(f)), 1e-12));
    CHECK(p.at_lag(0).real() == doctest::Approx(energy(f)));
  }
  const CorrelationProfile pf = periodic_autocorr(gen_perfect_fib(11, 1.0));
  CHECK(pf.max_interior_offpeak <= 1e-9 * pf.peak);
  CHECK_THROWS_AS(periodic_autocorr(seq({2})), ArgumentError);
}

TEST_CASE("canonical, dual-canonical and perfect predicates") {
  CHECK(is_canonical(gen_fibonacci(11, 1.0), 1e-9).is_canonical);
  const CanonicalReport bad = is_canonical(seq({1, 1, 1}), 1e-9);
  CHECK_FALSE(bad.is_canonical);
  CHECK(bad.worst_residual == 2.0);
  CHECK(bad.peak == 3.0);
  CHECK(bad.tolerance == 1e-9);
  CHECK(is_perfect(gen_perfect_arb(9, 3.0), 1e-9));
  CHECK_FALSE(is_perfect(fixture("hp10_zero_head"), 1e-9));
  CHECK(is_dual_canonical(gen_h9a(Scalar{0.0, 2.0}), 1e-9).is_canonical);
  CHECK_FALSE(is_canonical(gen_h9a(Scalar{0.0, 2.0}), 1e-9).is_canonical);

  CHECK_THROWS_AS(is_canonical(seq({1}), 1e-9), ArgumentError);
  CHECK_THROWS_AS(is_canonical(seq({0, 0, 0}), 1e-9), ArgumentError);
  CHECK_THROWS_AS(is_canonical(seq({1, 2}), 0.0), ArgumentError);
  CHECK_THROWS_AS(is_perfect(seq({1}), 1e-9), ArgumentError);
}

TEST_CASE("canonical iff interior residual within tol * P") {
  std::mt19937 rng(8);
  for (int t = 0; t < 20; ++t) {
    const Sequence f = make_sequence(random_complex(3 + t % 6, rng));
    const double ratio = oracle::interior_ratio(to_cvec(f), true);
    for (double tol : {0.1, 0.5, 1.0}) CHECK(is_canonical(f, tol).is_canonical == (ratio <= tol));
  }
}

TEST_CASE("dual autocorrelation is canonical for families at complex s") {
  const Scalar s1{0.4, 0.9};
  const Scalar s2 = std::polar(1.0, 0.7);
  for (const Scalar& s : {s1, s2}) {
    const std::vector<Sequence> members{gen_fibonacci(15, s), gen_h9a(s),   gen_h9b(s),     gen_h13a(s),
                                        gen_h13b(s),          gen_h11(s),   gen_he4(s),     gen_he6(s),
                                        gen_h_arb(7, s),      gen_h17(s),   gen_h_tan(9, s)};
    for (const Sequence& f : members) {
      CHECK(is_dual_canonical(f, 1e-9).is_canonical);
      CHECK(oracle::interior_ratio(to_cvec(f), false) <= 1e-9);
    }
  }
}

TEST_CASE("merit factor") {
  CHECK(merit_factor_exact(to_integer(fixture("ternary_barker"))) == Ratio{50, 7});
  CHECK(merit_factor(fixture("ternary_barker")) == doctest::Approx(50.0 / 7.0));
  const Ratio b13 = merit_factor_exact(to_integer(fixture("b13")));
  CHECK(b13 == Ratio{169, 12});
  // The -2 centre variant: E = 16, sidelobe energy 2*... gives 64/3.
  const Ratio var = merit_factor_exact(to_integer(fixture("b13var")));
  CHECK(var.value() / b13.value() == doctest::Approx(256.0 / 169.0));
  CHECK(merit_factor_exact(VectorXi64{{1, 0}}).den == 0);
  CHECK(std::isinf(merit_factor(seq({1, 0}))));
  CHECK_THROWS_AS(merit_factor(seq({0, 0})), ArgumentError);
  CHECK_THROWS_AS(merit_factor(seq({4})), ArgumentError);
  CHECK_THROWS_AS(merit_factor_exact(VectorXi64{{0, 0, 0}}), ArgumentError);
}

TEST_CASE("merit factor matches brute force and is scale/reversal invariant") {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Sequence f = make_sequence(random_complex(2 + t, rng));
    const double m = merit_factor(f);
    CHECK(m == doctest::Approx(oracle::merit(to_cvec(f))).epsilon(1e-10));
    CHECK(merit_factor(scale(f, -3.5)) == doctest::Approx(m).epsilon(1e-10));
    CHECK(merit_factor(reversed(f)) == doctest::Approx(m).epsilon(1e-10));
  }
}

TEST_CASE("quasi9 off-peak entries are at most unity") {
  const CorrelationProfile p = autocorr(fixture("quasi9"));
  for (Index k = p.min_lag(); k <= p.max_lag(); ++k) {
    if (k != 0) CHECK(std::abs(p.at_lag(k)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("spectral flatness") {
  CHECK(spectral_flatness(seq({1, 0, 0, 0})) == doctest::Approx(1.0));
  CHECK(spectral_flatness(seq({5})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(spectral_flatness(seq({0, 0})), ArgumentError);
  const double h7 = spectral_flatness(gen_fibonacci(7, 1.0));
  CHECK(h7 >= 0.5);
  CHECK(h7 <= 1.0);

  std::mt19937 rng(86);
  std::vector<double> draws;
  for (int t = 0; t < 100; ++t) draws.push_back(spectral_flatness(random_pm1(86, rng)));
  std::nth_element(draws.begin(), draws.begin() + 50, draws.end());
  CHECK(spectral_flatness(fixture("h86")) > draws[50]);
  CHECK(spectral_flatness(fixture("h86")) == doctest::Approx(0.691).epsilon(0.01));
}

TEST_CASE("dual cross-spectrum is the DFT of the wrapped dual autocorrelation") {
  std::mt19937 rng(9);
  for (Index n : {2, 5, 8}) {
    const Sequence f = make_sequence(random_complex(n, rng));
    const VectorXc spec = dual_cross_spectrum(f);
    const Index len = 2 * n - 1;
    const VectorXc r = dual_autocorr(f).values;
    // Move lag 0 to index 0 so negative lags wrap to the end.
    VectorXc wrapped(len);
    for (Index k = 0; k < len; ++k) wrapped[k] = r[(k + n - 1) % len];
    const VectorXc expect = dft(wrapped, len);
    for (Index k = 0; k < len; ++k) CHECK(std::abs(spec[k] - expect[k]) < 1e-9 * (1.0 + std::abs(expect[k])));
  }
}

TEST_CASE("dual cross-spectrum of a unimodular dual-canonical array") {
  // Sum f_i^2 is small here, so the two unit end terms dominate and the
  // spectrum is far from flat.
  const Sequence f = gen_h_arb(8, std::polar(1.0, std::numbers::pi / 3));
  const VectorXr mag = dual_cross_spectrum(f).cwiseAbs();
  const double flat = mag.minCoeff() / mag.maxCoeff();
  CHECK(flat == doctest::Approx(0.0258).epsilon(0.02));
  CHECK(std::abs(dual_autocorr(f).at_lag(0)) < 2.0);
}

TEST_CASE("nD autocorrelation") {
  const Grid one({1, 1}, VectorXc::Constant(1, Scalar{2.0, 1.0}));
  CHECK(std::abs(nd_autocorr(one).data()[0] - 5.0) < 1e-15);

  std::mt19937 rng(6);
  for (int t = 0; t < 5; ++t) {
    const Index ar = 1 + t, ac = 3, br = 2, bc = 2 + t;
    const Grid a({ar, ac}, random_complex(ar * ac, rng));
    const Grid b({br, bc}, random_complex(br * bc, rng));
    for (bool conj : {true, false}) {
      const Grid r = nd_xcorr(a, b, conj);
      CHECK(r.shape() == std::vector<Index>{ar + br - 1, ac + bc - 1});
      const auto expect = oracle::correlate2d(to_cvec(a.data()), ar, ac, to_cvec(b.data()), br, bc, conj);
      CHECK(all_near(r.data(), expect, 1e-12));
    }
    const Grid c = nd_convolve(a, b);
    CHECK(all_near(c.data(), oracle::convolve2d(to_cvec(a.data()), ar, ac, to_cvec(b.data()), br, bc), 1e-12));
  }
  CHECK_THROWS_AS(nd_xcorr(Grid({2}), Grid({2, 2}), true), ArgumentError);
}

TEST_CASE("nD autocorrelation separates over outer products") {
  const Sequence a = gen_h9b(0.6);
  const Sequence b = gen_fibonacci(7, 2.0);
  const Sequence c = seq({1, -2});
  const Grid g = outer(a, outer(b, c));
  const Grid r = nd_autocorr(g);
  const Grid expect = outer(make_sequence(autocorr(a).values), outer(make_sequence(autocorr(b).values),
                                                                     make_sequence(autocorr(c).values)));
  REQUIRE(r.shape() == expect.shape());
  CHECK((r.data() - expect.data()).cwiseAbs().maxCoeff() < 1e-9 * r.data().cwiseAbs().maxCoeff());
}

TEST_CASE("outer(H7,H7) has nine non-zero autocorrelation entries") {
  const Sequence h7 = gen_fibonacci(7, 1.0);
  const Grid r = nd_autocorr(outer(h7, h7));
  const double a0 = energy(h7);
  CHECK(a0 == 18.0);
  std::vector<double> nonzero;
  for (Index i = 0; i < r.size(); ++i) {
    if (std::abs(r.data()[i]) > 1e-9) nonzero.push_back(r.data()[i].real());
  }
  std::sort(nonzero.begin(), nonzero.end());
  CHECK(nonzero == std::vector<double>{-a0, -a0, -a0, -a0, 1, 1, 1, 1, a0 * a0});
}
