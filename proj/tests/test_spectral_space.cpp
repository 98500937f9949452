// Loop representation, inner product, projections, symmetries.
//
// Oracle strategy: evaluation is cross-checked against a literal per-mode
// rotation built from apply_J; norms against exact trapezoid quadrature
// (uniform quadrature integrates trigonometric polynomials of degree < N
// exactly); the quadratic action against the integral of p . qdot.

#include <catch2/catch_amalgamated.hpp>

#include "rotorb/subspaces.hpp"
#include "rotorb/symmetry.hpp"
#include "test_support.hpp"

using namespace rotorb;
using namespace rotorb::testing;

namespace {

// Literal synthesis sum_j (cos(2 pi j t) xi_j + sin(2 pi j t) J xi_j),
// sharing nothing with evaluate() except apply_J.
Vec evaluate_oracle(const FourierLoop& x, double t) {
  const int d = x.dim();
  Vec out(static_cast<size_t>(d), 0.0), jxi(static_cast<size_t>(d));
  for (int j = -x.M; j <= x.M; ++j) {
    auto xi = x.mode(j);
    apply_J(x.layout, xi, jxi);
    const double c = std::cos(kTwoPi * j * t), s = std::sin(kTwoPi * j * t);
    for (int i = 0; i < d; ++i) out[i] += c * xi[i] + s * jxi[i];
  }
  return out;
}

// Loop with a single classical mode: a cos(2 pi m t) + b sin(2 pi m t).
FourierLoop classical_loop(PhaseLayout L, int m, const Vec& a, const Vec& b) {
  FourierLoop x(L, std::max(m, 1));
  Vec jb = apply_J(L, b);
  auto xp = x.mode(m);
  auto xn = x.mode(-m);
  for (int i = 0; i < L.dim(); ++i) {
    xp[i] = 0.5 * (a[i] - jb[i]);
    xn[i] = 0.5 * (a[i] + jb[i]);
  }
  return x;
}

Vec unit(int dim, int i) {
  Vec e(static_cast<size_t>(dim), 0.0);
  e[i] = 1.0;
  return e;
}

// Mean over N uniform nodes of f(x(t_i)); exact for trig-poly integrands of
// degree < N.
template <class F>
double grid_mean(const FourierLoop& x, int N, F&& f) {
  double acc = 0.0;
  for (int i = 0; i < N; ++i)
    acc += f(evaluate(x, static_cast<double>(i) / N));
  return acc / N;
}

}  // namespace

TEST_CASE("phase layout validates and indexes blocks") {
  PhaseLayout L(2, 1);
  REQUIRE(L.dim() == 4);
  REQUIRE(L.zI_dim() == 3);
  REQUIRE(L.zII_begin() == 3);
  REQUIRE(L.pII_dim() == 0);

  PhaseLayout K(2, 3);  // k > n
  REQUIRE(K.zI_dim() == 1);
  REQUIRE(K.zII_begin() == 1);
  REQUIRE(K.pII_dim() == 1);

  REQUIRE_THROWS_AS(PhaseLayout(2, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(PhaseLayout(2, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(PhaseLayout(0, 1), std::invalid_argument);
}

TEST_CASE("apply_J maps (p, q) to (-q, p) and squares to -I") {
  PhaseLayout L(3, 2);
  auto gen = rng(11);
  Vec z = random_vec(gen, L.dim());
  Vec jz = apply_J(L, z);
  for (int i = 0; i < L.n; ++i) {
    REQUIRE(jz[i] == -z[L.n + i]);
    REQUIRE(jz[L.n + i] == z[i]);
  }
  Vec jjz = apply_J(L, jz);
  for (int i = 0; i < L.dim(); ++i) REQUIRE(jjz[i] == -z[i]);
}

TEST_CASE("lift_rotation places v in the torus block") {
  PhaseLayout L(2, 3);
  Vec z = lift_rotation(L, {int(2), int(-1), int(5)});
  REQUIRE(z[0] == 0.0);
  REQUIRE(z[1] == 2.0);
  REQUIRE(z[2] == -1.0);
  REQUIRE(z[3] == 5.0);
  REQUIRE_THROWS_AS(lift_rotation(L, {1, 2}), std::invalid_argument);
}

TEST_CASE("inner product matches pinned single-mode values") {
  PhaseLayout L(2, 2);
  FourierLoop c0(L, 2);
  c0.at(0, 1) = 1.0;  // unit constant loop
  REQUIRE(inner_product(c0, c0) == Catch::Approx(1.0).margin(1e-15));

  FourierLoop m1(L, 2);
  m1.at(1, 2) = 1.0;  // unit mode j = 1
  REQUIRE(inner_product(m1, m1) == Catch::Approx(kTwoPi).margin(1e-14));

  // Disjoint mode supports are orthogonal.
  auto gen = rng(12);
  FourierLoop a(L, 3), b(L, 3);
  for (int i = 0; i < L.dim(); ++i) {
    a.at(1, i) = random_vec(gen, 1)[0];
    b.at(2, i) = random_vec(gen, 1)[0];
    b.at(-3, i) = random_vec(gen, 1)[0];
  }
  REQUIRE(std::abs(inner_product(a, b)) < 1e-15);

  FourierLoop wrong(PhaseLayout(3, 1), 3);
  REQUIRE_THROWS_AS(inner_product(a, wrong), std::invalid_argument);
}

TEST_CASE("evaluate agrees with the literal rotation synthesis") {
  auto gen = rng(13);
  for (PhaseLayout L : {PhaseLayout(1, 1), PhaseLayout(2, 3), PhaseLayout(3, 2)}) {
    FourierLoop x = random_loop(gen, L, 6);
    for (double t : {0.0, 0.17, 0.5, 0.93, 1.0}) {
      Vec got = evaluate(x, t);
      Vec want = evaluate_oracle(x, t);
      REQUIRE(max_abs_diff(got, want) < 1e-13);
    }
    // Periodicity and synthesis consistency at t = 0.
    REQUIRE(max_abs_diff(evaluate(x, 0.0), evaluate(x, 1.0)) < 1e-12);
    Vec sum(static_cast<size_t>(L.dim()), 0.0);
    for (int j = -x.M; j <= x.M; ++j)
      for (int i = 0; i < L.dim(); ++i) sum[i] += x.at(j, i);
    REQUIRE(max_abs_diff(evaluate(x, 0.0), sum) < 1e-13);
  }
}

TEST_CASE("single mode at half period flips sign") {
  PhaseLayout L(2, 1);
  auto gen = rng(14);
  FourierLoop x(L, 1);
  Vec xi = random_vec(gen, L.dim());
  for (int i = 0; i < L.dim(); ++i) x.at(1, i) = xi[i];
  Vec half = evaluate(x, 0.5);
  for (int i = 0; i < L.dim(); ++i)
    REQUIRE(half[i] == Catch::Approx(-xi[i]).margin(1e-14));
}

TEST_CASE("norm_L2 satisfies Parseval against exact quadrature") {
  auto gen = rng(15);
  PhaseLayout L(2, 2);
  FourierLoop x = random_loop(gen, L, 5);
  const int N = 4 * x.M + 3;  // degree of |x|^2 is 2M < N: quadrature exact
  double mean_sq = grid_mean(x, N, [](const Vec& z) {
    double s = 0.0;
    for (double c : z) s += c * c;
    return s;
  });
  REQUIRE(std::sqrt(mean_sq) == Catch::Approx(norm_L2(x)).epsilon(1e-12));
}

TEST_CASE("loop_derivative matches finite differences of evaluate") {
  auto gen = rng(16);
  PhaseLayout L(2, 3);
  FourierLoop x = random_loop(gen, L, 4);
  FourierLoop dx = loop_derivative(x);
  const double h = 1e-6;
  for (double t : {0.1, 0.37, 0.81}) {
    Vec fp = evaluate(x, t + h), fm = evaluate(x, t - h);
    Vec want(static_cast<size_t>(L.dim()));
    for (int i = 0; i < L.dim(); ++i) want[i] = (fp[i] - fm[i]) / (2 * h);
    REQUIRE(max_abs_diff(evaluate(dx, t), want) < 1e-6);
  }
}

TEST_CASE("grid synthesis and analysis invert each other") {
  auto gen = rng(17);
  for (PhaseLayout L : {PhaseLayout(1, 1), PhaseLayout(2, 3)}) {
    FourierLoop x = random_loop(gen, L, 7);
    const int N = 2 * x.M + 1;  // exactness threshold: degree <= M < N - M
    TrigTable tab(x.M, N);
    Vec samples;
    eval_on_grid(x, tab, samples);
    // Grid rows match pointwise evaluation.
    for (int i = 0; i < N; ++i) {
      Vec zi = evaluate(x, static_cast<double>(i) / N);
      Vec row(samples.begin() + static_cast<size_t>(i) * L.dim(),
              samples.begin() + static_cast<size_t>(i + 1) * L.dim());
      REQUIRE(max_abs_diff(zi, row) < 1e-13);
    }
    FourierLoop back = analyze_grid(samples, L, tab, x.M);
    for (int j = -x.M; j <= x.M; ++j)
      for (int i = 0; i < L.dim(); ++i)
        REQUIRE(back.at(j, i) == Catch::Approx(x.at(j, i)).margin(1e-13));
  }
}

TEST_CASE("projections are idempotent, orthogonal, complete") {
  auto gen = rng(18);
  for (PhaseLayout L : {PhaseLayout(2, 2), PhaseLayout(2, 3), PhaseLayout(3, 2)}) {
    FourierLoop x = random_loop(gen, L, 5);
    std::vector<Subspace> tags = {Subspace::Eplus, Subspace::Eminus,
                                  Subspace::E0,    Subspace::E0_I,
                                  Subspace::E0_II, Subspace::E_I,
                                  Subspace::E_II,  Subspace::Y};
    if (L.k > L.n) {
      tags.push_back(Subspace::X1);
      tags.push_back(Subspace::Xcase2);
    }
    if (L.k == L.n) tags.push_back(Subspace::Xcase1);
    for (Subspace s : tags) {
      FourierLoop p1 = project(x, s);
      FourierLoop p2 = project(p1, s);
      REQUIRE(norm_E(p1 - p2) < 1e-12);
      // Orthogonal projection: <Px, x - Px> = 0.
      REQUIRE(std::abs(inner_product(p1, x - p1)) < 1e-11);
    }

    // Three-way frequency split sums to the identity.
    FourierLoop sum = project(x, Subspace::Eplus) +
                      project(x, Subspace::Eminus) + project(x, Subspace::E0);
    REQUIRE(norm_E(x - sum) < 1e-12);

    // Mutual orthogonality of the frequency blocks.
    FourierLoop y = random_loop(gen, L, 5);
    REQUIRE(std::abs(inner_product(project(x, Subspace::Eplus),
                                   project(y, Subspace::Eminus))) < 1e-12);
    REQUIRE(std::abs(inner_product(project(x, Subspace::Eplus),
                                   project(y, Subspace::E0))) < 1e-12);
    REQUIRE(std::abs(inner_product(project(x, Subspace::Eminus),
                                   project(y, Subspace::E0))) < 1e-12);

    // Pythagoras across the split.
    const double n2 = inner_product(x, x);
    const double parts = inner_product(project(x, Subspace::Eplus),
                                       project(x, Subspace::Eplus)) +
                         inner_product(project(x, Subspace::Eminus),
                                       project(x, Subspace::Eminus)) +
                         inner_product(project(x, Subspace::E0),
                                       project(x, Subspace::E0));
    REQUIRE(n2 == Catch::Approx(parts).epsilon(1e-12));

    // Coordinate-block split of the mean-zero part plus constants.
    FourierLoop blocks = project(x, Subspace::E_I) + project(x, Subspace::E_II) +
                         project(x, Subspace::E0);
    REQUIRE(norm_E(x - blocks) < 1e-12);

    // Working space + torus means recovers x.
    FourierLoop hk = project(x, Subspace::Eplus) + project(x, Subspace::Eminus) +
                     project(x, Subspace::E0_I) + project(x, Subspace::E0_II);
    REQUIRE(norm_E(x - hk) < 1e-12);
  }
}

TEST_CASE("constant loops have no positive-frequency content") {
  PhaseLayout L(2, 2);
  FourierLoop c(L, 3);
  for (int i = 0; i < L.dim(); ++i) c.at(0, i) = 1.0 + i;
  REQUIRE(norm_E(project(c, Subspace::Eplus)) == 0.0);
  REQUIRE(norm_E(project(c, Subspace::Eminus)) == 0.0);
  REQUIRE(norm_E(c - project(c, Subspace::E0)) == 0.0);
}

TEST_CASE("frequency-split generators project to their own side") {
  PhaseLayout L(2, 2);
  const int d = L.dim();
  for (int j = 1; j <= 3; ++j) {
    for (int i = 0; i < L.n; ++i) {
      // sin e_i - cos e_{i+n} and cos e_i + sin e_{i+n} span the positive side;
      // flipping the relative sign lands on the negative side.
      FourierLoop gp1 = classical_loop(L, j, scaled_vec(unit(d, i + L.n), -1.0),
                                       unit(d, i));
      FourierLoop gp2 = classical_loop(L, j, unit(d, i), unit(d, i + L.n));
      FourierLoop gm1 = classical_loop(L, j, unit(d, i + L.n), unit(d, i));
      FourierLoop gm2 = classical_loop(L, j, unit(d, i),
                                       scaled_vec(unit(d, i + L.n), -1.0));
      for (auto* g : {&gp1, &gp2}) {
        REQUIRE(norm_E(*g - project(*g, Subspace::Eplus)) < 1e-14);
        REQUIRE(norm_E(project(*g, Subspace::Eminus)) < 1e-14);
      }
      for (auto* g : {&gm1, &gm2}) {
        REQUIRE(norm_E(*g - project(*g, Subspace::Eminus)) < 1e-14);
        REQUIRE(norm_E(project(*g, Subspace::Eplus)) < 1e-14);
      }
    }
  }
}

TEST_CASE("block projections vanish on the complementary coordinates") {
  auto gen = rng(19);
  PhaseLayout L(2, 3);  // k > n: p_II = {z_2}, q_II = {z_4}, z_I = {z_1}
  FourierLoop x = random_loop(gen, L, 4);
  FourierLoop xI = project(x, Subspace::E_I);
  FourierLoop xII = project(x, Subspace::E_II);
  FourierLoop x1 = project(x, Subspace::X1);
  for (double t : {0.05, 0.33, 0.71}) {
    Vec zI = evaluate(xI, t), zII = evaluate(xII, t), z1 = evaluate(x1, t);
    for (int i = L.zII_begin(); i < L.dim(); ++i)
      REQUIRE(std::abs(zI[i]) < 1e-13);  // E_I kills the torus block
    for (int i = 0; i < L.zII_begin(); ++i)
      REQUIRE(std::abs(zII[i]) < 1e-13);  // E_II kills the plane block
    // X1 kills the (p_II, q_II) pair: indices [2n-k, n) and [3n-k, 2n).
    for (int i = L.zII_begin(); i < L.n; ++i) REQUIRE(std::abs(z1[i]) < 1e-13);
    for (int i = 2 * L.n - L.pII_dim(); i < L.dim(); ++i)
      REQUIRE(std::abs(z1[i]) < 1e-13);
  }
  // Mean-zero images.
  for (const auto* p : {&xI, &xII, &x1})
    for (int i = 0; i < L.dim(); ++i) REQUIRE(std::abs(p->at(0, i)) < 1e-15);

  // The conjugate-pair mask X1 commutes with the frequency projections
  // (the coordinate masks E_I/E_II generally do not: they are not
  // J-invariant), which is what makes E^- cap X1 a projection.
  FourierLoop a = project(project(x, Subspace::Eminus), Subspace::X1);
  FourierLoop b = project(project(x, Subspace::X1), Subspace::Eminus);
  REQUIRE(norm_E(a - b) < 1e-12);
  FourierLoop c = project(project(x, Subspace::Eplus), Subspace::X1);
  FourierLoop d = project(project(x, Subspace::X1), Subspace::Eplus);
  REQUIRE(norm_E(c - d) < 1e-12);
}

TEST_CASE("case-selective subspaces reject the wrong layout") {
  auto gen = rng(20);
  FourierLoop xn = random_loop(gen, PhaseLayout(2, 2), 3);
  FourierLoop xk = random_loop(gen, PhaseLayout(2, 3), 3);
  REQUIRE_THROWS_AS(project(xn, Subspace::X1), std::invalid_argument);
  REQUIRE_THROWS_AS(project(xn, Subspace::Xcase2), std::invalid_argument);
  REQUIRE_THROWS_AS(project(xk, Subspace::Xcase1), std::invalid_argument);
}

TEST_CASE("apply_L is the signed frequency reflection") {
  auto gen = rng(21);
  PhaseLayout L(2, 2);
  FourierLoop x = random_loop(gen, L, 5);
  FourierLoop y = random_loop(gen, L, 5);
  FourierLoop Lx = apply_L(x);

  // Kernel and fixed space.
  REQUIRE(norm_E(apply_L(project(x, Subspace::E0))) == 0.0);
  FourierLoop xp = project(x, Subspace::Eplus);
  REQUIRE(norm_E(apply_L(xp) - xp) < 1e-14);

  // Self-adjointness.
  REQUIRE(inner_product(Lx, y) ==
          Catch::Approx(inner_product(x, apply_L(y))).margin(1e-11));

  // <Lx, x> = ||x+||^2 - ||x-||^2.
  const double plus = inner_product(project(x, Subspace::Eplus),
                                    project(x, Subspace::Eplus));
  const double minus = inner_product(project(x, Subspace::Eminus),
                                     project(x, Subspace::Eminus));
  REQUIRE(inner_product(Lx, x) == Catch::Approx(plus - minus).epsilon(1e-12));
}

TEST_CASE("quadratic action equals the p dot qdot integral") {
  auto gen = rng(22);
  for (PhaseLayout L : {PhaseLayout(1, 1), PhaseLayout(2, 3), PhaseLayout(3, 2)}) {
    FourierLoop x = random_loop(gen, L, 6);
    const double a_spec = 0.5 * inner_product(apply_L(x), x);
    // Oracle: integrate p(t) . qdot(t) with exact uniform quadrature
    // (integrand degree 2M < N).
    FourierLoop dx = loop_derivative(x);
    const int N = 4 * x.M + 3;
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
      const double t = static_cast<double>(i) / N;
      Vec z = evaluate(x, t), dz = evaluate(dx, t);
      for (int c = 0; c < L.n; ++c) acc += z[c] * dz[L.n + c];
    }
    acc /= N;
    REQUIRE(a_spec == Catch::Approx(acc).margin(1e-11));
  }
}

TEST_CASE("Wirtinger inequality holds for mean-zero block loops") {
  auto gen = rng(23);
  PhaseLayout L(2, 2);
  for (int rep = 0; rep < 5; ++rep) {
    FourierLoop x = project(random_loop(gen, L, 5), Subspace::E_I);
    const double lhs = norm_L2(x);
    const double rhs = norm_L2(loop_derivative(x)) / kTwoPi;
    REQUIRE(lhs <= rhs + 1e-12);
  }
  // Equality for a pure |j| = 1 mode.
  FourierLoop e1(L, 1);
  e1.at(1, 0) = 0.7;
  e1.at(-1, 2) = -0.3;
  REQUIRE(norm_L2(e1) ==
          Catch::Approx(norm_L2(loop_derivative(e1)) / kTwoPi).epsilon(1e-12));
}

TEST_CASE("torus translation moves only the mean torus block") {
  auto gen = rng(24);
  PhaseLayout L(2, 2);
  FourierLoop x = random_loop(gen, L, 4);
  RotationVector w = {3, -2};
  FourierLoop y = zk_translate(x, w);
  REQUIRE(y.at(0, 2) == Catch::Approx(x.at(0, 2) + 3.0));
  REQUIRE(y.at(0, 3) == Catch::Approx(x.at(0, 3) - 2.0));
  FourierLoop back = zk_translate(y, {-3, 2});
  REQUIRE(norm_E(back - x) < 1e-14);
  // Non-constant modes untouched.
  for (int j = -x.M; j <= x.M; ++j) {
    if (j == 0) continue;
    for (int i = 0; i < L.dim(); ++i) REQUIRE(y.at(j, i) == x.at(j, i));
  }
}

TEST_CASE("circle action shifts time and drifts the torus mean") {
  auto gen = rng(25);
  PhaseLayout L(2, 2);
  RotationVector v = {1, 0};
  FourierLoop x = random_loop(gen, L, 5);

  // theta = 0 is the identity.
  REQUIRE(norm_E(s1_shift(x, 0.0, v) - x) < 1e-15);

  // Pointwise: (theta . x)(t) = x(t + theta) + (0, theta v).
  const double theta = 0.23;
  FourierLoop y = s1_shift(x, theta, v);
  for (double t : {0.0, 0.4, 0.77}) {
    Vec got = evaluate(y, t);
    Vec want = evaluate(x, t + theta);
    for (int m = 0; m < L.k; ++m)
      want[L.zII_begin() + m] += theta * static_cast<double>(v[m]);
    REQUIRE(max_abs_diff(got, want) < 1e-12);
  }

  // Composition: quarter twice equals half.
  FourierLoop q2 = s1_shift(s1_shift(x, 0.25, v), 0.25, v);
  REQUIRE(norm_E(q2 - s1_shift(x, 0.5, v)) < 1e-12);

  // Full turn lands on the integer translate.
  FourierLoop full = s1_shift(x, 1.0, v);
  REQUIRE(norm_E(full - zk_translate(x, v)) < 1e-12);

  // The action is an isometry on the mean-zero part.
  FourierLoop x0 = x - project(x, Subspace::E0);
  REQUIRE(norm_E(s1_shift(x0, theta, RotationVector{0, 0})) ==
          Catch::Approx(norm_E(x0)).epsilon(1e-13));
}

TEST_CASE("canonicalize_torus wraps the mean into the unit cell") {
  PhaseLayout L(1, 1);
  FourierLoop x(L, 1);
  x.at(0, 1) = -2.3;
  x.at(1, 0) = 0.5;
  FourierLoop y = canonicalize_torus(x);
  REQUIRE(y.at(0, 1) == Catch::Approx(0.7).margin(1e-12));
  REQUIRE(y.at(1, 0) == 0.5);
}

TEST_CASE("quotient distance identifies symmetry orbits") {
  auto gen = rng(26);
  PhaseLayout L(2, 2);
  RotationVector v = {1, 0};
  FourierLoop x = random_loop(gen, L, 4);

  REQUIRE(quotient_distance(x, x, v) < 1e-12);
  REQUIRE(quotient_distance(x, zk_translate(x, {5, -7}), v) < 1e-12);
  // Off-grid shift: golden-section refinement has to find theta = 0.3.
  REQUIRE(quotient_distance(x, s1_shift(x, 0.3, v), v) < 1e-9);

  FourierLoop y = random_loop(gen, L, 4);
  REQUIRE(quotient_distance(x, y, v) > 1e-2);
}
