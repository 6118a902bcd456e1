#include <cmath>

#include "doctest.h"
#include "paraharm/errors.hpp"
#include "paraharm/heisenberg.hpp"
#include "paraharm/sampling.hpp"

using namespace paraharm;

namespace {

constexpr AlgebraTag kC = AlgebraTag::Complex;

AlgebraElement cplx(double x, double y) { return AlgebraElement(kC, {x, y}); }

// Im sum_i w1_i conj(w2_i), expanded by hand over the coefficients for F = C.
AlgebraElement im_form_c(const FVector& w1, const FVector& w2) {
  double imag = 0.0;
  for (std::size_t i = 0; i < w1.size(); ++i) imag += w1[i][1] * w2[i][0] - w1[i][0] * w2[i][1];
  return cplx(0.0, imag);
}

}  // namespace

TEST_SUITE("heisenberg_groups") {

TEST_CASE("dimension and validation") {
  CHECK(NGroupSpec{kC, 2}.dimension() == 3);
  CHECK(NGroupSpec{AlgebraTag::Real, 3}.dimension() == 2);
  CHECK(NGroupSpec{AlgebraTag::Quaternion, 3}.dimension() == 11);
  CHECK(NGroupSpec{AlgebraTag::Octonion, 2}.dimension() == 15);
  CHECK_THROWS_AS(NGroupSpec({kC, 1}).validate(), DomainError);
}

TEST_CASE("identity is neutral") {
  Rng rng(31);
  for (AlgebraTag tag : {AlgebraTag::Real, kC, AlgebraTag::Quaternion, AlgebraTag::Octonion}) {
    const NGroupSpec spec{tag, 3};
    const NElement g = random_n(rng, spec);
    CHECK(n_multiply(n_identity(spec), g) == g);
    CHECK(n_multiply(g, n_identity(spec)) == g);
  }
}

TEST_CASE("(1,0)(i,0) = (1+i, -i) over C") {
  const NElement a = make_n_element(FVector(kC, {cplx(1, 0)}), cplx(0, 0));
  const NElement b = make_n_element(FVector(kC, {cplx(0, 1)}), cplx(0, 0));
  const NElement ab = n_multiply(a, b);
  CHECK(ab.w[0] == cplx(1, 1));
  CHECK(ab.z == cplx(0, -1));
}

TEST_CASE("inverses") {
  const NElement z = make_n_element(FVector(kC, 1), cplx(0, 2.5));
  const NElement zi = n_inverse(z);
  CHECK(zi.z == cplx(0, -2.5));
  CHECK(is_zero(zi.w));

  const NElement one = make_n_element(FVector(kC, {cplx(1, 0)}), cplx(0, 0));
  CHECK(n_inverse(one).w[0] == cplx(-1, 0));
  CHECK(n_inverse(one).z == cplx(0, 0));

  // dyadic entries keep every product exact
  Rng rng(32);
  for (AlgebraTag tag : {AlgebraTag::Real, kC, AlgebraTag::Quaternion, AlgebraTag::Octonion}) {
    const NGroupSpec spec{tag, 3};
    for (int k = 0; k < 200; ++k) {
      const NElement g = random_dyadic_n(rng, spec);
      CHECK(n_multiply(g, n_inverse(g)) == n_identity(spec));
      CHECK(n_multiply(n_inverse(g), g) == n_identity(spec));
    }
  }
}

TEST_CASE("group law is associative, exactly on dyadic points") {
  Rng rng(33);
  for (AlgebraTag tag : {AlgebraTag::Real, kC, AlgebraTag::Quaternion, AlgebraTag::Octonion}) {
    const NGroupSpec spec{tag, 3};
    for (int k = 0; k < 200; ++k) {
      const NElement a = random_dyadic_n(rng, spec);
      const NElement b = random_dyadic_n(rng, spec);
      const NElement c = random_dyadic_n(rng, spec);
      CHECK(n_multiply(n_multiply(a, b), c) == n_multiply(a, n_multiply(b, c)));
    }
  }
}

TEST_CASE("commutator by four products") {
  const NElement a = make_n_element(FVector(kC, {cplx(1, 0)}), cplx(0, 0));
  const NElement b = make_n_element(FVector(kC, {cplx(0, 1)}), cplx(0, 0));
  const NElement c = commutator(a, b);
  CHECK(is_zero(c.w));
  CHECK(c.z == cplx(0, -2));

  Rng rng(34);
  const NGroupSpec spec{kC, 3};
  for (int k = 0; k < 200; ++k) {
    const NElement g = random_dyadic_n(rng, spec);
    const NElement h = random_dyadic_n(rng, spec);
    CHECK(commutator(g, g) == n_identity(spec));
    const NElement ch = commutator(g, h);
    CHECK(is_zero(ch.w));
    CHECK(ch.z == im_form_c(g.w, h.w) * 2.0);
    CHECK(ch == commutator_closed_form(g, h));
  }
  for (AlgebraTag tag : {AlgebraTag::Quaternion, AlgebraTag::Octonion}) {
    const NGroupSpec s{tag, 2};
    for (int k = 0; k < 100; ++k) {
      const NElement g = random_n(rng, s);
      const NElement h = random_n(rng, s);
      CHECK(distance(commutator(g, h), commutator_closed_form(g, h)) < 1e-12);
    }
  }
}

TEST_CASE("centre") {
  CHECK(is_central(make_n_element(FVector(kC, 1), cplx(0, 1))));
  CHECK_FALSE(is_central(make_n_element(FVector(kC, {cplx(1, 0)}), cplx(0, 0))));
  Rng rng(35);
  const NGroupSpec spec{AlgebraTag::Quaternion, 3};
  for (int k = 0; k < 100; ++k) {
    const NElement z = n_central(spec, random_imaginary(rng, AlgebraTag::Quaternion));
    const NElement g = random_n(rng, spec);
    CHECK(distance(n_multiply(z, g), n_multiply(g, z)) < 1e-14);
  }
}

TEST_CASE("coordinates round trip") {
  Rng rng(36);
  for (AlgebraTag tag : {AlgebraTag::Real, kC, AlgebraTag::Quaternion}) {
    const NGroupSpec spec{tag, 3};
    const NElement g = random_n(rng, spec);
    const std::vector<double> x = to_coordinates(g);
    CHECK(x.size() == spec.dimension());
    CHECK(from_coordinates(spec, x) == g);
  }
}

TEST_CASE("z must be imaginary") {
  NElement g = n_identity({kC, 2});
  g.z = cplx(1.0, 0.0);
  CHECK_THROWS_AS(validate(NGroupSpec{kC, 2}, g), DomainError);
  CHECK_THROWS_AS(n_multiply(n_identity({kC, 2}), n_identity({kC, 3})), DomainError);
}

TEST_CASE("N0 is abelian addition") {
  CHECK(n0_multiply({1.0, 2.0}, {3.0, -4.0}) == N0Element{4.0, -2.0});
}

}  // TEST_SUITE
