#include "paraharm/sampling.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "paraharm/errors.hpp"

namespace paraharm {

double Rng::dyadic(int bits, double range) {
  const double denom = std::ldexp(1.0, bits);
  const int lim = static_cast<int>(range * denom);
  return integer(-lim, lim) / denom;
}

std::optional<std::uint64_t> seed_from_environment() {
  const char* env = std::getenv("PARAHARM_SEED");
  if (env == nullptr || *env == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) return std::nullopt;
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

AlgebraElement random_element(Rng& rng, AlgebraTag tag, double scale) {
  AlgebraElement x(tag);
  for (std::size_t i = 0; i < x.dim(); ++i) x[i] = scale * rng.normal();
  return x;
}

AlgebraElement random_unit(Rng& rng, AlgebraTag tag) {
  while (true) {
    const AlgebraElement x = random_element(rng, tag);
    const double r = norm(x);
    if (r > 1e-3) return x / r;
  }
}

AlgebraElement random_imaginary(Rng& rng, AlgebraTag tag, double scale) {
  AlgebraElement x = random_element(rng, tag, scale);
  x[0] = 0.0;
  return x;
}

AlgebraElement random_unit_imaginary(Rng& rng, AlgebraTag tag) {
  if (tag == AlgebraTag::Real) throw DomainError("R has no nonzero imaginary elements");
  while (true) {
    const AlgebraElement x = random_imaginary(rng, tag);
    const double r = norm(x);
    if (r > 1e-3) return x / r;
  }
}

FVector random_vector(Rng& rng, AlgebraTag tag, std::size_t k, double scale) {
  FVector v(tag, k);
  for (std::size_t i = 0; i < k; ++i) v[i] = random_element(rng, tag, scale);
  return v;
}

FVector random_unit_vector(Rng& rng, AlgebraTag tag, std::size_t k) {
  while (true) {
    const FVector v = random_vector(rng, tag, k);
    const double r = norm(v);
    if (r > 1e-3) return v * (1.0 / r);
  }
}

FMatrix random_unitary(Rng& rng, AlgebraTag tag, std::size_t k) {
  std::vector<FVector> cols;
  cols.reserve(k);
  for (std::size_t i = 0; i < k; ++i) cols.push_back(random_vector(rng, tag, k));
  return gram_schmidt(cols);
}

MAElement random_ma(Rng& rng, const NGroupSpec& spec, double log_alpha) {
  spec.validate();
  MAElement g = ma_identity(spec);
  g.alpha = log_alpha > 0.0 ? std::exp(rng.uniform(-log_alpha, log_alpha)) : 1.0;
  const std::size_t k = spec.w_length();
  switch (spec.tag) {
    case AlgebraTag::Real: {
      g.u = random_unitary(rng, spec.tag, k);
      if (determinant(g.u).real() < 0.0) {
        for (std::size_t r = 0; r < k; ++r) g.u(r, 0) = -g.u(r, 0);
      }
      break;
    }
    case AlgebraTag::Complex: {
      g.u = random_unitary(rng, spec.tag, k);
      const double phi = std::arg(determinant(g.u));
      const double sign = rng.coin() ? std::numbers::pi : 0.0;
      g.beta = from_complex(spec.tag, std::polar(1.0, -0.5 * phi + sign));
      break;
    }
    case AlgebraTag::Quaternion:
      g.u = random_unitary(rng, spec.tag, k);
      g.beta = random_unit(rng, spec.tag);
      break;
    case AlgebraTag::Octonion: break;
  }
  return g;
}

NElement random_n(Rng& rng, const NGroupSpec& spec, double scale) {
  spec.validate();
  return {random_vector(rng, spec.tag, spec.w_length(), scale), random_imaginary(rng, spec.tag, scale)};
}

NElement random_dyadic_n(Rng& rng, const NGroupSpec& spec, int bits, double range) {
  NElement g = n_identity(spec);
  for (std::size_t i = 0; i < g.w.size(); ++i) {
    for (std::size_t c = 0; c < g.w[i].dim(); ++c) g.w[i][c] = rng.dyadic(bits, range);
  }
  for (std::size_t c = 1; c < g.z.dim(); ++c) g.z[c] = rng.dyadic(bits, range);
  return g;
}

SemidirectElement random_semidirect(Rng& rng, const NGroupSpec& spec, double scale, double log_alpha) {
  NElement n = random_n(rng, spec, scale);
  return {std::move(n), random_ma(rng, spec, log_alpha)};
}

PMatrixElement random_p(Rng& rng, double scale, double log_lambda) {
  return {std::exp(rng.uniform(-log_lambda, log_lambda)), rng.uniform(-scale, scale), rng.uniform(-scale, scale),
          rng.uniform(-scale, scale)};
}

PMatrixElement random_dyadic_p(Rng& rng, int bits, double range) {
  const double lambda = std::ldexp(1.0, rng.integer(-2, 2));
  return {lambda, rng.dyadic(bits, range), rng.dyadic(bits, range), rng.dyadic(bits, range)};
}

P0Element random_p0(Rng& rng, double scale, double log_lambda) {
  return {std::exp(rng.uniform(-log_lambda, log_lambda)), rng.uniform(-scale, scale)};
}

AxBElement random_axb(Rng& rng, double scale, double log_a) {
  return {std::exp(rng.uniform(-log_a, log_a)), rng.uniform(-scale, scale)};
}

Point random_point(Rng& rng, const GroupChart& chart, double scale) {
  Point x(chart.dimension());
  for (std::size_t k = 0; k < x.size(); ++k) {
    x[k] = chart.is_positive(k) ? std::exp(rng.uniform(-scale, scale)) : rng.uniform(-scale, scale);
  }
  return x;
}

namespace {

// Stabilizer of e1 (or -e1): alpha = 1, u = beta (+) u'.
MAElement char_rep_stabilizer_element(Rng& rng, const NGroupSpec& spec) {
  MAElement g = ma_identity(spec);
  const std::size_t k = spec.w_length();
  const AlgebraTag tag = spec.tag;
  if (tag == AlgebraTag::Octonion) return g;
  if (tag == AlgebraTag::Complex && k == 1) {
    g.beta = from_complex(tag, std::polar(1.0, 2.0 * std::numbers::pi * rng.integer(0, 2) / 3.0));
    g.u(0, 0) = g.beta;
    return g;
  }
  if (tag == AlgebraTag::Complex) g.beta = from_complex(tag, std::polar(1.0, rng.uniform(-3.0, 3.0)));
  if (tag == AlgebraTag::Quaternion) g.beta = random_unit(rng, tag);
  g.u(0, 0) = g.beta;
  if (k > 1) {
    FMatrix up = random_unitary(rng, tag, k - 1);
    if (tag == AlgebraTag::Real && determinant(up).real() < 0.0) {
      for (std::size_t r = 0; r + 1 < k; ++r) up(r, 0) = -up(r, 0);
    }
    if (tag == AlgebraTag::Complex) {
      const std::complex<double> b = to_complex(g.beta);
      const std::complex<double> fix = 1.0 / (b * b * b * determinant(up));
      for (std::size_t r = 0; r + 1 < k; ++r) up(r, 0) = up(r, 0) * from_complex(tag, fix);
    }
    for (std::size_t r = 0; r + 1 < k; ++r) {
      for (std::size_t c = 0; c + 1 < k; ++c) g.u(r + 1, c + 1) = up(r, c);
    }
  }
  return g;
}

// Stabilizer of i (or -i): alpha = 1, beta in R + R i.
MAElement central_rep_stabilizer_element(Rng& rng, const NGroupSpec& spec) {
  MAElement g = ma_identity(spec);
  const AlgebraTag tag = spec.tag;
  if (tag == AlgebraTag::Octonion) return g;
  const double psi = rng.uniform(-3.0, 3.0);
  g.beta = AlgebraElement(tag);
  g.beta[0] = std::cos(psi);
  g.beta[1] = std::sin(psi);
  g.u = random_unitary(rng, tag, spec.w_length());
  if (tag == AlgebraTag::Complex) {
    const std::complex<double> b = to_complex(g.beta);
    const std::complex<double> fix = 1.0 / (b * b * determinant(g.u));
    for (std::size_t r = 0; r < g.u.size(); ++r) g.u(r, 0) = g.u(r, 0) * from_complex(tag, fix);
  }
  return g;
}

}  // namespace

MAElement random_stabilizer_element(Rng& rng, const FamilySpec& family, const DualPoint& p) {
  const NGroupSpec spec = family.n_spec();
  const OrbitType type = classify_orbit(family, p);
  if (type == OrbitType::Trivial) return random_ma(rng, spec, 0.7);
  const bool central = std::holds_alternative<CentralParam>(p);
  const MAElement w = transitivity_witness(family, p);
  const MAElement h = central ? central_rep_stabilizer_element(rng, spec) : char_rep_stabilizer_element(rng, spec);
  return ma_multiply(ma_multiply(w, h), ma_inverse(w));
}

P0Element random_p0_stabilizer_element(Rng& rng, const N0Char& nu) {
  if (nu.s == 0.0 && nu.t == 0.0) return random_p0(rng);
  if (nu.s == 0.0) return {1.0, rng.uniform(-3.0, 3.0)};
  return {1.0, 0.0};
}

}  // namespace paraharm
