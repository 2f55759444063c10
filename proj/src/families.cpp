#include "huffseq/families.hpp"

#include <cmath>
#include <numbers>

namespace huffseq {

namespace {

const Real kSqrt2 = std::numbers::sqrt2;
const Real kSqrt5 = std::sqrt(5.0);

Scalar ipow(Scalar base, int e) {
  Scalar out{1.0, 0.0};
  const bool inv = e < 0;
  for (int k = 0; k < std::abs(e); ++k) out *= base;
  return inv ? Scalar{1.0} / out : out;
}

void require_finite(Scalar s, std::string_view what) {
  if (!is_finite(s)) throw ArgumentError(std::string(what) + ": scale s must be finite");
}

void require_nonzero(Scalar s, std::string_view what) {
  require_finite(s, what);
  if (s == Scalar{0.0}) throw ArgumentError(std::string(what) + ": scale s must be non-zero");
}

VectorXc from_list(std::initializer_list<Scalar> xs) {
  VectorXc v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

}  // namespace

Sequence gen_fibonacci(int n, Scalar s) {
  require_finite(s, "fib");
  return Sequence(Family::kFibonacci, s, fibonacci_canonical<Scalar>(n, s));
}

Sequence gen_h_plus(int n, Scalar s) {
  require_finite(s, "hplus");
  return Sequence(Family::kPlus, s, fibonacci_plus<Scalar>(n, s));
}

Sequence gen_perfect_fib(int n, Scalar s) {
  require_finite(s, "perfect-fib");
  return Sequence(Family::kPerfectFibonacci, s, fibonacci_perfect<Scalar>(n, s));
}

VectorXi64 gen_fibonacci_exact(int n, std::int64_t s) { return fibonacci_canonical<std::int64_t>(n, s); }
VectorXi64 gen_h_plus_exact(int n, std::int64_t s) { return fibonacci_plus<std::int64_t>(n, s); }
VectorXi64 gen_perfect_fib_exact(int n, std::int64_t s) { return fibonacci_perfect<std::int64_t>(n, s); }

// H_9a(s) = s[1/s, 1, (s-r)/2, -1 - s r/2, -s^2 r/4, -1 + s r/2, (-s-r)/2, 1, -1/s],  r = sqrt(8+s^2).
// Terms four and six use s r/2. The variant with s(s - r)/2 there fails the
// canonical condition for every s.
Sequence gen_h9a(Scalar s) {
  require_nonzero(s, "h9a");
  const Scalar r = std::sqrt(8.0 + s * s);
  VectorXc v = from_list({1.0 / s, 1.0, (s - r) / 2.0, -1.0 - s * r / 2.0, -s * s * r / 4.0, -1.0 + s * r / 2.0,
                          (-s - r) / 2.0, 1.0, -1.0 / s});
  return Sequence(Family::kH9a, s, s * v);
}

Sequence gen_h9b(Scalar s) {
  require_nonzero(s, "h9b");
  const Scalar q = 4.0 + s * s;
  VectorXc v = from_list({1.0 / s, 1.0, s / 2.0, (4.0 + 2.0 * s * s - kSqrt2 * q) / 4.0,
                          s * (8.0 + 3.0 * s * s - 2.0 * kSqrt2 * q) / 8.0, (-4.0 - 2.0 * s * s + kSqrt2 * q) / 4.0,
                          s / 2.0, -1.0, 1.0 / s});
  return Sequence(Family::kH9b, s, s * v);
}

// Ninth term is s(3+s^2)(s-r)/2, forced by the canonical equations. Copying
// the fifth term there fails.
Sequence gen_h13a(Scalar s) {
  require_nonzero(s, "h13a");
  const Scalar s2 = s * s;
  const Scalar r = std::sqrt(4.0 + s2);
  VectorXc v = from_list({1.0 / s,
                          1.0,
                          (s + r) / 2.0,
                          (-4.0 - s2 + s * r) / 2.0,
                          -(3.0 + s2) * (s + r) / 2.0,
                          (2.0 + s2 - s * r * (5.0 + 2.0 * s2)) / 2.0,
                          -r * (1.0 + 3.0 * s2 + s2 * s2),
                          (2.0 + s2 + s * r * (5.0 + 2.0 * s2)) / 2.0,
                          (3.0 + s2) * (s - r) / 2.0,
                          (-4.0 - s2 - s * r) / 2.0,
                          (-s + r) / 2.0,
                          1.0,
                          -1.0 / s});
  return Sequence(Family::kH13a, s, s * v);
}

Sequence gen_h13b(Scalar s) {
  require_finite(s, "h13b");
  const Scalar s2 = s * s;
  const Scalar s4 = s2 * s2;
  const Scalar p6 = s * (-64.0 + 8.0 * s2 + s4) / 64.0;
  const Scalar p4 = s * (8.0 + 3.0 * s2) / 16.0;
  const Scalar p5 = s2 * (8.0 + s2) / 16.0;
  VectorXc v = from_list({1.0, s, s2 / 2.0, p4, p5, p6, s2 * (-448.0 - 16.0 * s2 + s4) / 512.0, -p6, p5, -p4,
                          s2 / 2.0, -s, 1.0});
  return Sequence(Family::kH13b, s, std::move(v));
}

Scalar h17_radicand(Scalar s) {
  const Scalar s2 = s * s;
  const Scalar s4 = s2 * s2;
  const Scalar s6 = s4 * s2;
  const Scalar s8 = s4 * s4;
  return 512.0 * s2 + 480.0 * s4 + 160.0 * s6 + 17.0 * s8 - (256.0 * s2 + 320.0 * s4 + 112.0 * s6 + 12.0 * s8) * kSqrt2;
}

Sequence gen_h17(Scalar s) {
  require_finite(s, "h17");
  const Scalar rad = h17_radicand(s);
  if (is_real(rad) && rad.real() < 0.0) {
    throw DomainError("h17: radicand of T(s) is negative (" + std::to_string(rad.real()) + ")");
  }
  const Scalar t = std::sqrt(rad) / 8.0;
  const Scalar s2 = s * s;
  const Scalar s3 = s2 * s;
  const Scalar s4 = s2 * s2;
  // Shared sub-expressions of the e..m terms.
  const Scalar u = s2 + 3.0 / 8.0 * s4 - (s2 + s4 / 4.0) * kSqrt2;  // e + T
  const Scalar w = -s - s3 / 2.0 + (s + s3 / 4.0) * kSqrt2;         // f + sT

  const Scalar a = 1.0;
  const Scalar b = s;
  const Scalar c = s2 / 2.0;
  const Scalar d = s * (4.0 + 2.0 * s2 - kSqrt2 * (4.0 + s2)) / 4.0;
  const Scalar e = u - t;
  const Scalar f = w - s * t;
  const Scalar g = s2 / 2.0 - s2 / 2.0 * t;
  const Scalar h = -s + w * t;
  const Scalar i = -u * t;
  const Scalar j = -s - w * t;
  const Scalar k = -s2 / 2.0 - s2 / 2.0 * t;
  const Scalar l = w + s * t;
  const Scalar m = -u - t;
  return Sequence(Family::kH17, s, from_list({a, b, c, d, e, f, g, h, i, j, k, l, m, d, -c, b, -a}));
}

Sequence gen_h17_matched() {
  const Real r2 = kSqrt2;
  const Real t1 = std::sqrt(2.0 - r2);
  const Real t2 = std::sqrt(34.0 - 7.0 * r2);
  const Real t3 = std::sqrt(2.0 * (10.0 + r2));
  const Real t4 = std::sqrt(1460.0 + 782.0 * r2);
  const Real t5 = std::sqrt(394.0 + 223.0 * r2);
  VectorXc v = from_list({0.5, 1.0, 1.0, -1.0 + 2.0 * r2 - 2.0 * t1, -3.0 + 4.0 * r2 - 4.0 * t1,
                          1.0 + 6.0 * r2 - 2.0 * t2, 25.0 - 4.0 * r2 - 4.0 * t3, 79.0 + 16.0 * r2 - 2.0 * t4,
                          145.0 + 48.0 * r2 - 8.0 * t5, -79.0 - 16.0 * r2 + 2.0 * t4, 25.0 - 4.0 * r2 - 4.0 * t3,
                          -1.0 - 6.0 * r2 + 2.0 * t2, -3.0 + 4.0 * r2 - 4.0 * t1, 1.0 - 2.0 * r2 + 2.0 * t1, 1.0,
                          -1.0, 0.5});
  return Sequence(Family::kH17Matched, Scalar{1.0}, 2.0 * v);
}

// Fourth term's unbalanced parenthesis closes after sqrt(4+s^2):
// (2 + s^2 + sqrt5 s r)/2. Reproduces H_11(1) = [1,1,3,4,2,6,-7,-1,2,1,-1].
Sequence gen_h11(Scalar s) {
  require_nonzero(s, "h11");
  const Scalar s2 = s * s;
  const Scalar r = std::sqrt(4.0 + s2);
  VectorXc v = from_list({1.0 / s, 1.0, (s + kSqrt5 * r) / 2.0, (2.0 + s2 + kSqrt5 * s * r) / 2.0,
                          3.5 * s + s2 * s - kSqrt5 * r / 2.0, 1.0 + 4.0 * s2 + s2 * s2,
                          (-7.0 * s - 2.0 * s2 * s - kSqrt5 * r) / 2.0, (2.0 + s2 - kSqrt5 * s * r) / 2.0,
                          (-s + kSqrt5 * r) / 2.0, 1.0, -1.0 / s});
  return Sequence(Family::kH11, s, s * v);
}

Sequence gen_he4(Scalar s) {
  require_nonzero(s, "he4");
  const Scalar r = std::sqrt(4.0 + s * s);
  return Sequence(Family::kHe4, s, from_list({1.0, s, s * (s + r) / 2.0, (-s - r) / 2.0}));
}

// Third term: the last numerator term carries a factor s. Without it the
// sequence is canonical only at s = 1.
// The radical sqrt(X/2) is a perfect square in s and r,
// ((s^2+1)(s^2+4) + s(s^2+3) r) / 2, so no second branch choice arises.
Sequence gen_he6(Scalar s) {
  require_nonzero(s, "he6");
  const Scalar s2 = s * s;
  const Scalar s3 = s2 * s;
  const Scalar s4 = s2 * s2;
  const Scalar r = std::sqrt(4.0 + s2);
  const Scalar q = ((1.0 + s2) * (4.0 + s2) + s * (3.0 + s2) * r) / 2.0;
  const Scalar w = (1.0 + s2) * r;
  // Z reduces to 2 r (r + s), zero only at s = +-2i.
  const Scalar z = 2.0 * r * (r + s);
  if (std::abs(r) <= kDefaultTol) throw DomainError("he6: Z(s) vanishes at s = +-2i");

  const Scalar num = 32.0 * s2 + 52.0 * s4 + 35.0 * s4 * s2 + 10.0 * s4 * s4 + s4 * s4 * s2 +
                     w * (8.0 * s + 14.0 * s3 + 7.0 * s3 * s2 + s4 * s3) -
                     q * (3.0 * s2 * (2.0 + s2) + s4 * (2.0 + s2)) - s * (1.0 + s2) * (2.0 + s2) * r * q;
  VectorXc v = from_list({1.0, s, num / z, s * (-4.0 + z) / 4.0, s * (3.0 * s + s3 + w) / 2.0, (-3.0 * s - s3 - w) / 2.0});
  return Sequence(Family::kHe6, s, std::move(v));
}

namespace {

void require_arb_scale(Scalar s, std::string_view what) {
  require_nonzero(s, what);
  if (s == Scalar{1.0}) throw ArgumentError(std::string(what) + ": scale s must not be 1");
}

VectorXc arb_values(int n, Scalar s) {
  const Scalar inv_root = 1.0 / std::sqrt(s);
  VectorXc h(n);
  h[0] = 1.0 / (s - 1.0);
  Scalar p{1.0};  // sqrt(s)^{-(k-1)} for k = 1
  for (int k = 2; k < n; ++k) {
    p *= inv_root;
    h[k - 1] = (k % 2 == 0 ? 1.0 : -1.0) * p;
  }
  // (-1)^N s^{3/2 - N/2} / (s - 1), built from the same principal root.
  h[n - 1] = (n % 2 == 0 ? 1.0 : -1.0) * ipow(inv_root, n - 3) / (s - 1.0);
  return h;
}

}  // namespace

Sequence gen_h_arb(int n, Scalar s) {
  if (n < 3) throw ArgumentError("harb: length " + std::to_string(n) + " must be >= 3");
  require_arb_scale(s, "harb");
  return Sequence(Family::kArbitrary, s, arb_values(n, s));
}

Sequence gen_perfect_arb(int n, Scalar s) {
  if (n < 4) throw ArgumentError("perfect-arb: length " + std::to_string(n) + " must be >= 4");
  require_arb_scale(s, "perfect-arb");
  const VectorXc h = arb_values(n, s);
  VectorXc p = h.head(n - 1);
  // Cyclic wrap joins the two ends, so the dropped last element folds onto the first.
  p[0] = h[0] + h[n - 1];
  return Sequence(Family::kPerfectArbitrary, s, std::move(p));
}

// [s, (s^2-1)s^{k-1} for k = 1..K, s^{-K} - s^K, (s^2-1)s^{-k-1} for k = K..1, -1/s],  K = (N-3)/2.
Sequence gen_h_tan(int n, Scalar s) {
  if (n < 5 || n % 2 == 0) throw ArgumentError("htan: length " + std::to_string(n) + " must be odd and >= 5");
  require_nonzero(s, "htan");
  if (s == Scalar{1.0} || s == Scalar{-1.0}) throw ArgumentError("htan: scale s must not be +-1");
  const int kk = (n - 3) / 2;
  const Scalar q = s * s - 1.0;
  VectorXc h(n);
  Index i = 0;
  h[i++] = s;
  for (int k = 1; k <= kk; ++k) h[i++] = q * ipow(s, k - 1);
  h[i++] = ipow(s, -kk) - ipow(s, kk);
  for (int k = kk; k >= 1; --k) h[i++] = q * ipow(s, -k - 1);
  h[i++] = -1.0 / s;
  return Sequence(Family::kTangent, s, std::move(h));
}

bool family_takes_length(Family f) {
  switch (f) {
    case Family::kFibonacci:
    case Family::kArbitrary:
    case Family::kTangent:
    case Family::kPlus:
    case Family::kPerfectFibonacci:
    case Family::kPerfectArbitrary:
      return true;
    default:
      return false;
  }
}

int family_fixed_length(Family f) {
  switch (f) {
    case Family::kH9a:
    case Family::kH9b:
      return 9;
    case Family::kH13a:
    case Family::kH13b:
      return 13;
    case Family::kH17:
    case Family::kH17Matched:
      return 17;
    case Family::kH11:
      return 11;
    case Family::kHe4:
      return 4;
    case Family::kHe6:
      return 6;
    default:
      return 0;
  }
}

Sequence generate(const FamilySpec& spec) {
  const int fixed = family_fixed_length(spec.family);
  if (fixed != 0 && spec.n != 0 && spec.n != fixed) {
    throw ArgumentError(std::string(family_name(spec.family)) + " has fixed length " + std::to_string(fixed) +
                        ", got N = " + std::to_string(spec.n));
  }
  switch (spec.family) {
    case Family::kFibonacci:
      return gen_fibonacci(spec.n, spec.s);
    case Family::kH9a:
      return gen_h9a(spec.s);
    case Family::kH9b:
      return gen_h9b(spec.s);
    case Family::kH13a:
      return gen_h13a(spec.s);
    case Family::kH13b:
      return gen_h13b(spec.s);
    case Family::kH17:
      return gen_h17(spec.s);
    case Family::kH17Matched:
      return gen_h17_matched();
    case Family::kH11:
      return gen_h11(spec.s);
    case Family::kHe4:
      return gen_he4(spec.s);
    case Family::kHe6:
      return gen_he6(spec.s);
    case Family::kArbitrary:
      return gen_h_arb(spec.n, spec.s);
    case Family::kTangent:
      return gen_h_tan(spec.n, spec.s);
    case Family::kPlus:
      return gen_h_plus(spec.n, spec.s);
    case Family::kPerfectFibonacci:
      return gen_perfect_fib(spec.n, spec.s);
    case Family::kPerfectArbitrary:
      return gen_perfect_arb(spec.n, spec.s);
    case Family::kFixture:
      return fixture(spec.fixture);
    case Family::kComposite:
      break;
  }
  throw ArgumentError("composite sequences cannot be generated from a FamilySpec");
}

}  // namespace huffseq
