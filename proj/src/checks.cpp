#include "paraharm/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "paraharm/charts.hpp"
#include "paraharm/coefficients.hpp"
#include "paraharm/dual_orbits.hpp"
#include "paraharm/errors.hpp"
#include "paraharm/plancherel.hpp"
#include "paraharm/quadrature.hpp"
#include "paraharm/representations.hpp"
#include "paraharm/sampling.hpp"
#include "paraharm/verdicts.hpp"

namespace paraharm::checks {

namespace {

// Thresholds.
constexpr double kOrbitMargin = 1e-3;
constexpr double kOrbitSeconds = 5.0;
constexpr double kStabilizerTol = 1e-10;
constexpr double kDualityTol = 1e-12;
constexpr double kWitnessTol = 1e-10;
constexpr double kPhaseTol = 1e-12;
constexpr double kGaussianRelTol = 1e-6;
constexpr double kPlancherelRelTol = 1e-8;
constexpr double kGramTol = 1e-10;
constexpr double kDecayEpsilon = 1e-6;
constexpr double kHaarRelTol = 1e-6;

class Detail {
 public:
  template <class T>
  Detail& add(const std::string& key, const T& value) {
    if (!first_) os_ << ' ';
    first_ = false;
    os_ << key << '=' << value;
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
  bool first_ = true;
};

std::string sci(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << x;
  return os.str();
}

struct Outcome {
  bool pass;
  std::string detail;
};

// 1 -------------------------------------------------------------------------

// Independent oracle: counts the defining predicates; exactly one must hold.
int oracle_orbit(double s, double t, int& matches) {
  const bool p[5] = {s > 0.0, s < 0.0, s == 0.0 && t > 0.0, s == 0.0 && t < 0.0, s == 0.0 && t == 0.0};
  matches = 0;
  int which = -1;
  for (int i = 0; i < 5; ++i) {
    if (p[i]) {
      ++matches;
      which = i;
    }
  }
  return which;
}

int orbit_index(OrbitType t) { return static_cast<int>(t) - static_cast<int>(OrbitType::O1); }

Outcome five_orbits(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(seed);
  constexpr int kPoints = 10'000;
  constexpr int kActions = 100;
  constexpr int kAxisPoints = 100;
  std::size_t misclassified = 0, partition = 0, not_invariant = 0, counts[5] = {0, 0, 0, 0, 0};
  const auto test_point = [&](N0Char nu) {
    int matches = 0;
    const int truth = oracle_orbit(nu.s, nu.t, matches);
    if (matches != 1) ++partition;
    const OrbitType got = classify_orbit_p0(nu);
    if (orbit_index(got) != truth) ++misclassified;
    ++counts[orbit_index(got)];
    for (int k = 0; k < kActions; ++k) {
      const P0Element p = random_p0(rng, 5.0, 2.0);
      if (classify_orbit_p0(p0_dual_act(p, nu)) != got) ++not_invariant;
    }
  };
  for (int i = 0; i < kPoints; ++i) {
    N0Char nu;
    do {
      nu = {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    } while (std::abs(nu.s) < kOrbitMargin || std::abs(nu.t) < kOrbitMargin);
    test_point(nu);
  }
  for (int i = 0; i < kAxisPoints; ++i) {
    double t = 0.0;
    do t = rng.uniform(-10.0, 10.0);
    while (std::abs(t) < kOrbitMargin);
    test_point({0.0, t});
  }
  test_point({0.0, 0.0});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Detail d;
  d.add("points", kPoints + kAxisPoints + 1).add("actions_per_point", kActions).add("misclassified", misclassified);
  d.add("partition_failures", partition).add("not_invariant", not_invariant);
  d.add("counts", std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" + std::to_string(counts[2]) + "/" +
                      std::to_string(counts[3]) + "/" + std::to_string(counts[4]));
  d.add("seconds", secs).add("limit_s", kOrbitSeconds);
  return {misclassified == 0 && partition == 0 && not_invariant == 0 && secs < kOrbitSeconds, d.str()};
}

// 2 -------------------------------------------------------------------------

struct StabilizerTally {
  std::size_t tested = 0, disagreements = 0, members = 0;
};

void stabilizer_family(Rng& rng, const FamilySpec& family, StabilizerTally& tally) {
  constexpr int kElements = 1000;
  const NGroupSpec spec = family.n_spec();
  const AlgebraTag tag = spec.tag;
  std::vector<DualPoint> targets;
  FVector e1(tag, spec.w_length());
  e1[0] = AlgebraElement::one(tag);
  targets.push_back(CharParam{e1});
  if (family.is_so21()) targets.push_back(CharParam{e1 * -2.5});
  else if (tag == AlgebraTag::Octonion) targets.push_back(CharParam{e1 * 2.5});
  else targets.push_back(CharParam{random_vector(rng, tag, spec.w_length(), 1.5)});
  if (tag != AlgebraTag::Real) {
    const AlgebraElement i = AlgebraElement::basis(tag, 1);
    targets.push_back(CentralParam{i});
    AlgebraElement m = tag == AlgebraTag::Octonion ? i * 3.0 : random_imaginary(rng, tag, 1.5);
    targets.push_back(CentralParam{m});
    if (tag == AlgebraTag::Complex) targets.push_back(CentralParam{i * -0.7});
  }
  for (const DualPoint& p : targets) {
    for (int e = 0; e < kElements; ++e) {
      MAElement g;
      switch (e % 3) {
        case 0: g = random_stabilizer_element(rng, family, p); break;
        case 1: g = random_ma(rng, spec, 0.0); break;
        default: g = random_ma(rng, spec, 0.7); break;
      }
      const bool fixed = stabilizer_membership(g, p, kStabilizerTol);
      const bool algebraic = stabilizer_algebraic(g, p, kStabilizerTol);
      ++tally.tested;
      if (fixed != algebraic) ++tally.disagreements;
      if (fixed) ++tally.members;
    }
  }
}

Outcome stabilizers(std::uint64_t seed) {
  Rng rng(seed);
  Detail d;
  bool ok = true;
  {
    StabilizerTally t;
    const N0Char points[] = {{1.0, 0.0}, {-2.0, 3.0}, {0.0, 1.0}, {0.0, -4.0}, {0.0, 0.0}};
    for (const N0Char& nu : points) {
      for (int e = 0; e < 1000; ++e) {
        P0Element p;
        switch (e % 3) {
          case 0: p = random_p0_stabilizer_element(rng, nu); break;
          case 1: p = {std::exp(rng.uniform(-1.0, 1.0)), 0.0}; break;
          default: p = random_p0(rng); break;
        }
        const bool fixed = p0_stabilizer_fixed_point(p, nu, kStabilizerTol);
        if (fixed != p0_stabilizer_algebraic(p, nu, kStabilizerTol)) ++t.disagreements;
        if (fixed) ++t.members;
        ++t.tested;
      }
    }
    d.add("P3x3", std::to_string(t.disagreements) + "/" + std::to_string(t.tested) + "(members " +
                      std::to_string(t.members) + ")");
    ok = ok && t.disagreements == 0 && t.members > 0 && t.members < t.tested;
  }
  const FamilySpec families[] = {make_family(Family::SO0, 2), make_family(Family::SO0, 3), make_family(Family::SO0, 4),
                                 make_family(Family::SU, 2),  make_family(Family::SU, 3),  make_family(Family::Sp, 2),
                                 make_family(Family::Sp, 3),  make_family(Family::F4)};
  for (const FamilySpec& f : families) {
    StabilizerTally t;
    stabilizer_family(rng, f, t);
    d.add(f.name(), std::to_string(t.disagreements) + "/" + std::to_string(t.tested) + "(members " +
                        std::to_string(t.members) + ")");
    ok = ok && t.disagreements == 0 && t.members > 0 && t.members < t.tested;
  }
  d.add("tol", kStabilizerTol);
  return {ok, d.str()};
}

// 3 -------------------------------------------------------------------------

Outcome duality(std::uint64_t seed) {
  Rng rng(seed);
  constexpr int kTriples = 1000;
  Detail d;
  double worst = 0.0;
  for (AlgebraTag tag : {AlgebraTag::Real, AlgebraTag::Complex, AlgebraTag::Quaternion}) {
    for (int n : {2, 3}) {
      const NGroupSpec spec{tag, n};
      double sup_char = 0.0, sup_central = 0.0;
      for (int i = 0; i < kTriples; ++i) {
        const MAElement g = random_ma(rng, spec, 1.0);
        const MAElement gi = ma_inverse(g);
        const NElement x = random_n(rng, spec, 1.5);
        const CharParam v{random_vector(rng, tag, spec.w_length(), 1.5)};
        const NElement gix = ma_act_n(gi, x);
        sup_char = std::max(sup_char, std::abs(char_eval(dual_char_act(g, v), x) - char_eval(v, gix)));
        if (tag != AlgebraTag::Real) {
          const CentralParam m{random_imaginary(rng, tag, 1.5)};
          sup_central = std::max(sup_central, std::abs(central_char_eval(dual_central_act(g, m), x.z) -
                                                       central_char_eval(m, gix.z)));
        }
      }
      worst = std::max({worst, sup_char, sup_central});
      const std::string key = std::string(to_string(tag)) + std::to_string(n);
      d.add("char_" + key, sci(sup_char));
      if (tag != AlgebraTag::Real) d.add("central_" + key, sci(sup_central));
    }
  }
  double sup_p0 = 0.0;
  for (int i = 0; i < kTriples; ++i) {
    const P0Element p = random_p0(rng);
    const N0Char nu{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const N0Element n{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    sup_p0 = std::max(sup_p0, std::abs(n0_char_eval(p0_dual_act(p, nu), n) -
                                       n0_char_eval(nu, p0_act_n0(p0_inverse(p), n))));
  }
  worst = std::max(worst, sup_p0);
  d.add("p0", sci(sup_p0)).add("tol", kDualityTol);
  return {worst < kDualityTol, d.str()};
}

// 4 -------------------------------------------------------------------------

Outcome witnesses(std::uint64_t seed) {
  Rng rng(seed);
  constexpr int kTargets = 1000;
  Detail d;
  bool ok = true;
  for (int n : {2, 3}) {
    const FamilySpec f = make_family(Family::Sp, n);
    const NGroupSpec spec = f.n_spec();
    const DualPoint rep = orbit_representative({f, ActingGroup::MA, OrbitType::Character});
    double sup = 0.0;
    std::size_t invalid = 0;
    for (int i = 0; i < kTargets; ++i) {
      FVector v;
      do v = random_vector(rng, spec.tag, spec.w_length(), 2.0);
      while (norm(v) < 1e-2);
      const MAElement g = transitivity_witness(f, CharParam{v});
      if (!is_valid(spec, g)) ++invalid;
      sup = std::max(sup, distance(dual_char_act(g, std::get<CharParam>(rep)).v, v));
    }
    d.add("H" + std::to_string(n) + "_char", sci(sup)).add("H" + std::to_string(n) + "_invalid", invalid);
    ok = ok && sup < kWitnessTol && invalid == 0;
  }
  for (int n : {2, 3}) {
    const FamilySpec f = make_family(Family::SU, n);
    const NGroupSpec spec = f.n_spec();
    double sup = 0.0;
    std::size_t invalid = 0, refused = 0, cross = 0;
    for (int i = 0; i < kTargets; ++i) {
      const double mu = (rng.coin() ? 1.0 : -1.0) * std::exp(rng.uniform(-2.3, 2.3));
      const CentralParam m{from_complex(spec.tag, {0.0, mu})};
      const OrbitType branch = mu > 0.0 ? OrbitType::CentralPositive : OrbitType::CentralNegative;
      const auto rep = std::get<CentralParam>(orbit_representative({f, ActingGroup::MA, branch}));
      const MAElement g = transitivity_witness(f, m);
      if (!is_valid(spec, g)) ++invalid;
      sup = std::max(sup, distance(dual_central_act(g, rep).m, m.m));
      if (i % 10 == 0) {
        const CentralParam other{rep.m * -1.0};
        ++cross;
        try {
          transitivity_witness(f, m, other);
        } catch (const OrbitError&) {
          ++refused;
        }
      }
    }
    const std::string key = "C" + std::to_string(n);
    d.add(key + "_central", sci(sup)).add(key + "_invalid", invalid);
    d.add(key + "_cross_branch_refused", std::to_string(refused) + "/" + std::to_string(cross));
    ok = ok && sup < kWitnessTol && invalid == 0 && refused == cross;
  }
  {
    const FamilySpec f = make_family(Family::SO0, 2);
    const NGroupSpec spec = f.n_spec();
    const CharParam plus{FVector(spec.tag, {AlgebraElement::one(spec.tag)})};
    std::size_t refused = 0, cross = 0, same = 0, same_ok = 0;
    for (int i = 0; i < 200; ++i) {
      const double v = (i % 2 ? 1.0 : -1.0) * std::exp(rng.uniform(-2.0, 2.0));
      const CharParam target{FVector(spec.tag, {AlgebraElement::real(spec.tag, v)})};
      if (v < 0.0) {
        ++cross;
        try {
          transitivity_witness(f, target, DualPoint{plus});
        } catch (const OrbitError&) {
          ++refused;
        }
      } else {
        ++same;
        const MAElement g = transitivity_witness(f, target, DualPoint{plus});
        if (distance(dual_char_act(g, plus).v, target.v) < kWitnessTol) ++same_ok;
      }
    }
    d.add("SO0(2,1)_cross_sign_refused", std::to_string(refused) + "/" + std::to_string(cross));
    d.add("SO0(2,1)_same_sign_ok", std::to_string(same_ok) + "/" + std::to_string(same));
    ok = ok && refused == cross && same_ok == same;
  }
  d.add("tol", kWitnessTol);
  return {ok, d.str()};
}

// 5 -------------------------------------------------------------------------

std::complex<double> gaussian_coefficient_by_quadrature(const PhaseSpaceOp& op) {
  const double norm0 = std::pow(std::numbers::pi, -0.25);
  std::complex<double> value = std::polar(1.0, op.theta);
  for (std::size_t i = 0; i < op.size(); ++i) {
    const double q = op.q[i];
    const double xi = op.xi[i];
    const auto f = [&](double t) {
      return std::polar(norm0 * norm0 * std::exp(-0.5 * ((t + q) * (t + q) + t * t)), xi * t);
    };
    value *= integrate_1d_complex(f, -0.5 * q - 12.0, -0.5 * q + 12.0, 1e-14);
  }
  return value;
}

Outcome schroedinger(std::uint64_t seed) {
  Rng rng(seed);
  constexpr int kPairs = 10'000;
  constexpr int kQuadPoints = 100;
  Detail d;
  bool ok = true;
  for (int n : {2, 3}) {
    const NGroupSpec spec{AlgebraTag::Complex, n};
    double sup_hom = 0.0, sup_central = 0.0;
    for (int i = 0; i < kPairs; ++i) {
      const double mu = (rng.coin() ? 1.0 : -1.0) * std::exp(rng.uniform(-1.5, 1.5));
      const CentralParam m{from_complex(AlgebraTag::Complex, {0.0, mu})};
      const NElement x = random_n(rng, spec, 1.5);
      const NElement y = random_n(rng, spec, 1.5);
      sup_hom = std::max(sup_hom, distance(eta_op(m, x).compose(eta_op(m, y)), eta_op(m, n_multiply(x, y))));
      const NElement z = n_central(spec, random_imaginary(rng, AlgebraTag::Complex, 2.0));
      const PhaseSpaceOp ez = eta_op(m, z);
      PhaseSpaceOp expected = PhaseSpaceOp::identity(spec.w_length());
      expected.theta = central_phase(m, z.z);
      sup_central = std::max(sup_central, distance(ez, expected));
      if (!ez.is_scalar(0.0)) sup_central = std::max(sup_central, 1.0);
      sup_central = std::max(sup_central, distance(eta_op(m, n_multiply(x, z)), eta_op(m, x).compose(expected)));
    }
    const std::string key = "n" + std::to_string(n);
    d.add(key + "_hom", sci(sup_hom)).add(key + "_central", sci(sup_central));
    ok = ok && sup_hom < kPhaseTol && sup_central < kPhaseTol;
  }
  double sup_rel = 0.0, sup_center_modulus = 0.0;
  for (int i = 0; i < kQuadPoints; ++i) {
    const NGroupSpec spec{AlgebraTag::Complex, i % 2 ? 3 : 2};
    const double mu = (rng.coin() ? 1.0 : -1.0) * std::exp(rng.uniform(-1.0, 1.0));
    const CentralParam m{from_complex(AlgebraTag::Complex, {0.0, mu})};
    const PhaseSpaceOp op = eta_op(m, random_n(rng, spec, 1.0));
    const std::complex<double> closed = gaussian_coefficient(op);
    sup_rel = std::max(sup_rel, std::abs(gaussian_coefficient_by_quadrature(op) - closed) / std::abs(closed));
    const NElement z = n_central(spec, random_imaginary(rng, AlgebraTag::Complex, 5.0));
    sup_center_modulus = std::max(sup_center_modulus, std::abs(std::abs(gaussian_coefficient(m, z)) - 1.0));
  }
  d.add("gauss_rel_err", sci(sup_rel)).add("center_modulus_dev", sci(sup_center_modulus));
  d.add("phase_tol", kPhaseTol).add("rel_tol", kGaussianRelTol);
  ok = ok && sup_rel < kGaussianRelTol && sup_center_modulus <= 4.0 * std::numeric_limits<double>::epsilon();
  return {ok, d.str()};
}

// 6 -------------------------------------------------------------------------

std::vector<PMatrixElement> induction_grid() {
  std::vector<PMatrixElement> grid;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      for (int k = 0; k < 10; ++k) {
        grid.push_back({std::exp(-2.0 + 4.0 * i / 9.0), -3.0 + 6.0 * j / 9.0, -3.0 + 6.0 * k / 9.0,
                        0.25 * (i + j - k)});
      }
    }
  }
  return grid;
}

Outcome induction(std::uint64_t seed) {
  Rng rng(seed);
  const auto coset_fn = [](std::span<const double> c) {
    const double u = std::log(c[0]);
    const double a = c.size() > 1 ? c[1] : 0.0;
    return std::complex<double>(std::exp(-u * u - 0.1 * a * a), 0.5 * u + 0.2 * a) ;
  };
  const InducedModel models[] = {InducedModel(InducingSubgroup::N0P1, {0.0, 1.3}, 0.7, coset_fn),
                                 InducedModel(InducingSubgroup::N0, {0.0, -0.8}, 0.0, coset_fn)};
  const std::vector<PMatrixElement> grid = induction_grid();
  Detail d;
  bool ok = true;
  for (const InducedModel& model : models) {
    std::size_t changed = 0;
    for (int e = 0; e < 100; ++e) {
      const PMatrixElement x{1.0, 0.0, 0.0, e % 2 ? rng.uniform(-5.0, 5.0) : rng.dyadic(6, 8.0)};
      for (const PMatrixElement& g : grid) {
        if (model.translate(x, g) != model.eval(g)) ++changed;
      }
    }
    std::size_t movers = 0;
    constexpr int kOthers = 10;
    for (int e = 0; e < kOthers; ++e) {
      PMatrixElement x = random_p(rng);
      if (e % 2) x = {1.0, rng.uniform(0.5, 2.0), 0.0, 0.0};
      std::size_t moved = 0;
      for (const PMatrixElement& g : grid) {
        if (model.translate(x, g) != model.eval(g)) ++moved;
      }
      if (moved > 0) ++movers;
    }
    const std::string key(to_string(model.subgroup()));
    d.add(key + "_N1_changed_samples", changed).add(key + "_non_N1_movers", std::to_string(movers) + "/" + std::to_string(kOthers));
    ok = ok && changed == 0 && movers == kOthers;
  }
  d.add("grid", grid.size()).add("N1_elements", 100);
  return {ok, d.str()};
}

// 7 -------------------------------------------------------------------------

Outcome plancherel(std::uint64_t) {
  Detail d;
  double worst = 0.0;
  for (int n : {2, 3, 4}) {
    for (double upper : {1.0, 10.0}) {
      const PlancherelMass pm = plancherel_mass({AlgebraTag::Complex, n}, upper);
      worst = std::max(worst, pm.relative_error);
      std::ostringstream key;
      key << "n" << n << "_M" << upper;
      d.add(key.str(), sci(pm.relative_error));
    }
  }
  d.add("tol", kPlancherelRelTol);
  return {worst < kPlancherelRelTol, d.str()};
}

// 8 -------------------------------------------------------------------------

Outcome verdict_table(std::uint64_t) {
  struct Row {
    FamilySpec family;
    Subgroup subgroup;
    Answer expected;
  };
  std::vector<Row> rows;
  rows.push_back({make_family(Family::P3x3), Subgroup::P, Answer::Equal});
  for (int n : {2, 3, 4, 5}) rows.push_back({make_family(Family::SO0, n), Subgroup::P, Answer::Equal});
  for (int n : {2, 3, 4}) rows.push_back({make_family(Family::SU, n), Subgroup::P, Answer::Equal});
  for (int n : {2, 3, 4}) rows.push_back({make_family(Family::Sp, n), Subgroup::P, Answer::Equal});
  rows.push_back({make_family(Family::F4), Subgroup::P, Answer::Equal});
  for (Subgroup s : {Subgroup::N, Subgroup::MN, Subgroup::AN}) {
    for (int n : {3, 4, 5}) rows.push_back({make_family(Family::SO0, n), s, Answer::NotEqual});
    for (int n : {2, 3, 4}) rows.push_back({make_family(Family::Sp, n), s, Answer::NotEqual});
    rows.push_back({make_family(Family::F4), s, Answer::NotEqual});
  }
  for (int n : {2, 3, 4}) {
    rows.push_back({make_family(Family::SU, n), Subgroup::AN, Answer::Equal});
    rows.push_back({make_family(Family::SU, n), Subgroup::N, Answer::NotEqual});
    rows.push_back({make_family(Family::SU, n), Subgroup::MN, Answer::NotEqual});
  }
  rows.push_back({make_family(Family::SO0, 2), Subgroup::AN, Answer::Equal});
  std::size_t mismatches = 0;
  std::string first;
  for (const Row& r : rows) {
    const Verdict v = verdict(r.family, r.subgroup);
    if (v.answer != r.expected || v.reasons.empty()) {
      ++mismatches;
      if (first.empty()) first = r.family.name() + "/" + std::string(to_string(r.subgroup));
    }
  }
  struct Pair {
    FamilySpec family;
    NormalSubgroup h;
  };
  const Pair pairs[] = {{make_family(Family::P3x3), NormalSubgroup::N1}, {make_family(Family::SO0, 2), NormalSubgroup::N},
                        {make_family(Family::SO0, 4), NormalSubgroup::N},    {make_family(Family::SU, 3), NormalSubgroup::ZN},
                        {make_family(Family::Sp, 2), NormalSubgroup::ZN},    {make_family(Family::F4), NormalSubgroup::ZN}};
  std::size_t pair_mismatches = 0;
  for (const Pair& p : pairs) {
    if (howe_moore_pair(p.family) != p.h) ++pair_mismatches;
  }
  Detail d;
  d.add("rows", rows.size()).add("mismatches", mismatches);
  if (!first.empty()) d.add("first_mismatch", first);
  d.add("howe_moore_pairs", std::size(pairs)).add("pair_mismatches", pair_mismatches);
  return {mismatches == 0 && pair_mismatches == 0, d.str()};
}

// 9 -------------------------------------------------------------------------

std::vector<Point> random_points(Rng& rng, const GroupChart& chart, std::size_t count, double scale) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(random_point(rng, chart, scale));
  return pts;
}

Outcome coefficient_analytics(std::uint64_t seed) {
  Rng rng(seed);
  constexpr std::size_t kGramPoints = 50;
  Detail d;
  bool ok = true;
  const auto gram = [&](const std::string& key, const CoefficientFn& phi, const GroupChart& chart, double scale) {
    const GramReport r = positive_definite_check(phi, chart, random_points(rng, chart, kGramPoints, scale));
    d.add(key + "_min_eig", sci(r.min_eigenvalue));
    ok = ok && r.min_eigenvalue >= -kGramTol;
  };
  {
    const NGroupSpec spec{AlgebraTag::Complex, 2};
    const GroupChart chart(GroupDescriptor::of(GroupKind::N, spec));
    gram("chi_C2", character_coefficient(spec, {random_vector(rng, spec.tag, 1, 1.0)}), chart, 2.0);
    gram("gauss_C2", gaussian_coefficient_fn(spec, {from_complex(spec.tag, {0.0, 1.0})}), chart, 1.5);
    gram("gauss_C2_neg", gaussian_coefficient_fn(spec, {from_complex(spec.tag, {0.0, -2.5})}), chart, 1.0);
  }
  {
    const NGroupSpec spec{AlgebraTag::Quaternion, 3};
    const GroupChart chart(GroupDescriptor::of(GroupKind::N, spec));
    gram("chi_H3", character_coefficient(spec, {random_vector(rng, spec.tag, 2, 1.0)}), chart, 2.0);
  }
  {
    const GroupChart chart(GroupDescriptor::axb());
    QuadratureOptions opts;
    opts.rule = BoxRule::Trapezoid;
    opts.abs_tol = 1e-13;
    const ChartFunction f = gaussian_chart_function(chart, 1.0, 9.0);
    gram("regular_AXB", regular_coefficient(chart, f, f, opts), chart, 1.0);
  }
  {
    const GroupChart chart(GroupDescriptor::p3x3());
    const CoefficientFn phi = default_regular_coefficient(chart);
    gram("regular_P3x3", phi, chart, 1.0);
    // The reduced coefficient against the plain 4D quadrature near the identity.
    QuadratureOptions opts;
    opts.rule = BoxRule::Trapezoid;
    opts.abs_tol = 1e-9;
    opts.rel_tol = 1e-7;
    opts.max_panels = 8;
    opts.max_evaluations = 50'000'000;
    const ChartFunction f = gaussian_chart_function(chart, 1.0, 6.0);
    const CoefficientFn direct = regular_coefficient(chart, f, f, opts);
    double worst = 0.0;
    for (int k = 0; k < 2; ++k) {
      const Point g = random_point(rng, chart, 0.2);
      worst = std::max(worst, std::abs(phi(g) - direct(g)) / std::abs(direct(g)));
    }
    d.add("P3x3_reduction_rel_err", sci(worst));
    ok = ok && worst < 1e-6;

    Rng sweep_rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const DecayReport rep = decay_radius(phi, chart, kDecayEpsilon, sweep_rng, 1.0, 128.0, 6);
    std::ostringstream levels;
    for (const DecayLevel& l : rep.levels) levels << (l.radius == rep.levels.front().radius ? "" : ",") << l.radius << ":" << sci(l.max_abs);
    d.add("P3x3_decay_levels", levels.str()).add("P3x3_decay_radius", rep.found ? std::to_string(rep.radius) : "none");
    ok = ok && rep.found && rep.radius < rep.levels.back().radius;
  }
  {
    const GroupChart chart(GroupDescriptor::axb());
    const AxBBox kf{0.5, 2.0, -1.0, 1.0};
    const AxBBox kh{1.0, 3.0, 0.0, 2.0};
    const AxBBox box = axb_support_box(kf, kh);
    QuadratureOptions opts;
    opts.abs_tol = 1e-8;
    const CoefficientFn phi =
        regular_coefficient(chart, bump_chart_function(chart, {kf.a_lo, kf.b_lo}, {kf.a_hi, kf.b_hi}),
                            bump_chart_function(chart, {kh.a_lo, kh.b_lo}, {kh.a_hi, kh.b_hi}), opts);
    std::size_t outside = 0, nonzero_outside = 0;
    for (int i = 0; i < 200; ++i) {
      double a = 0.0, b = 0.0;
      do {
        a = std::exp(rng.uniform(-3.5, 3.5));
        b = rng.uniform(-15.0, 15.0);
      } while (box.contains(a, b));
      ++outside;
      const Point g{a, b};
      if (phi(g) != 0.0) ++nonzero_outside;
    }
    const Point centre{std::sqrt(box.a_lo * box.a_hi), 0.5 * (box.b_lo + box.b_hi)};
    const bool inside_nonzero = std::abs(phi(centre)) > 0.0;
    std::ostringstream b;
    b << "[" << box.a_lo << "," << box.a_hi << "]x[" << box.b_lo << "," << box.b_hi << "]";
    d.add("AXB_support_box", b.str()).add("nonzero_outside", std::to_string(nonzero_outside) + "/" + std::to_string(outside));
    d.add("inside_nonzero", inside_nonzero ? "yes" : "no");
    ok = ok && nonzero_outside == 0 && inside_nonzero;
  }
  d.add("gram_tol", kGramTol).add("epsilon", kDecayEpsilon);
  return {ok, d.str()};
}

// 10 ------------------------------------------------------------------------

double relative(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::abs(b); }

Outcome haar_modular(std::uint64_t seed) {
  Rng rng(seed);
  Detail d;
  bool ok = true;
  struct Case {
    std::string key;
    GroupChart chart;
    ChartFunction f;
    double shift;  // scale of the translating elements
    QuadratureOptions opts;
  };
  QuadratureOptions fine;
  fine.rule = BoxRule::Trapezoid;
  fine.abs_tol = 1e-10;
  QuadratureOptions coarse;
  coarse.rule = BoxRule::Trapezoid;
  coarse.abs_tol = 1e-9;
  coarse.rel_tol = 2e-8;
  coarse.max_panels = 4;
  const GroupChart axb(GroupDescriptor::axb());
  const GroupChart n_c2(GroupDescriptor::of(GroupKind::N, {AlgebraTag::Complex, 2}));
  const GroupChart p3(GroupDescriptor::p3x3());
  // lambda exp(-(4 log^2 lambda + a^2 + b^2 + c^2) / 2): the factor lambda
  // cancels the skew of the left density in log coordinates.
  ChartFunction p3_f{[](std::span<const double> x) {
                       const double u = std::log(x[0]);
                       return std::complex<double>(x[0] * std::exp(-(4.0 * u * u + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]) / 2.0));
                     },
                     {-3.0, -9.0, -8.0, -8.0},
                     {3.0, 9.0, 8.0, 8.0},
                     "skew-compensated gaussian"};
  const Case cases[] = {{"AXB", axb, gaussian_chart_function(axb, 1.0, 9.0), 0.5, fine},
                        {"N_C2", n_c2, gaussian_chart_function(n_c2, 1.0, 9.0), 0.5, fine},
                        {"P3x3", p3, p3_f, 0.3, coarse}};
  for (const Case& c : cases) {
    const GroupChart& chart = c.chart;
    const ChartFunction& f = c.f;
    const auto base = integrate_haar(chart, f.f, f.lo, f.hi, c.opts).value;
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Point g0 = random_point(rng, chart, c.shift);
      const Integrand moved = [&](std::span<const double> x) { return f.f(chart.multiply(g0, x)); };
      worst = std::max(worst, relative(integrate_haar(chart, moved, f.lo, f.hi, c.opts).value, base));
    }
    d.add(c.key + "_left_rel_err", sci(worst));
    ok = ok && worst < kHaarRelTol;
  }
  {
    // Right translation: int f(x g) d mu_L(x) = Delta(g)^{-1} int f d mu_L.
    // x -> x g0 shifts b by a b0, so f is narrow in log a and the b range wide.
    const GroupChart chart(GroupDescriptor::axb());
    const ChartFunction f{[](std::span<const double> x) {
                            const double u = std::log(x[0]);
                            return std::complex<double>(std::exp(-(4.0 * u * u + x[1] * x[1]) / 2.0));
                          },
                          {-4.0, -30.0},
                          {4.0, 30.0},
                          "narrow-log gaussian"};
    const auto base = integrate_haar(chart, f.f, f.lo, f.hi, fine).value;
    double worst_modular = 0.0, worst_right = 0.0, min_dev = 1e300;
    for (int k = 0; k < 3; ++k) {
      const Point g0 = random_point(rng, chart, 0.5);
      const Integrand moved = [&](std::span<const double> x) { return f.f(chart.multiply(x, g0)); };
      const auto left_moved = integrate_haar(chart, moved, f.lo, f.hi, fine).value;
      worst_modular = std::max(worst_modular, relative(left_moved, base / chart.modular(g0)));
      min_dev = std::min(min_dev, std::abs(left_moved / base - 1.0));
      const auto rbase = integrate_haar(chart, f.f, f.lo, f.hi, fine, HaarSide::Right).value;
      const auto rmoved = integrate_haar(chart, moved, f.lo, f.hi, fine, HaarSide::Right).value;
      worst_right = std::max(worst_right, relative(rmoved, rbase));
    }
    d.add("AXB_right_rel_err", sci(worst_right)).add("AXB_modular_rel_err", sci(worst_modular));
    d.add("AXB_Delta_nontrivial_dev", sci(min_dev));
    ok = ok && worst_right < kHaarRelTol && worst_modular < kHaarRelTol && min_dev > 1e-3;
  }
  {
    double dev_n = 0.0, dev_mn = 0.0;
    for (AlgebraTag tag : {AlgebraTag::Real, AlgebraTag::Complex, AlgebraTag::Quaternion}) {
      for (int n : {2, 3}) {
        const NGroupSpec spec{tag, n};
        for (int k = 0; k < 10; ++k) {
          const Point x = random_point(rng, GroupChart(GroupDescriptor::of(GroupKind::N, spec)), 2.0);
          dev_n = std::max(dev_n, std::abs(modular_function(GroupDescriptor::of(GroupKind::N, spec), x) - 1.0));
          dev_mn = std::max(dev_mn, std::abs(modular_function(GroupDescriptor::of(GroupKind::MN, spec), x) - 1.0));
          // Delta_MN(m n) = |det Ad(m)|^{-1} on N.
          dev_mn = std::max(dev_mn, std::abs(1.0 / action_determinant(spec, random_ma(rng, spec, 0.0)) - 1.0));
        }
      }
    }
    d.add("N_Delta_dev", sci(dev_n)).add("MN_Delta_dev", sci(dev_mn));
    ok = ok && dev_n < 1e-12 && dev_mn < 1e-10;
  }
  d.add("tol", kHaarRelTol);
  return {ok, d.str()};
}

using Suite = Outcome (*)(std::uint64_t);

struct SuiteEntry {
  const char* name;
  Suite run;
};

const SuiteEntry kSuites[kCheckCount] = {
    {"five-orbit classification", five_orbits},
    {"stabilizer agreement", stabilizers},
    {"duality consistency", duality},
    {"transitivity witnesses", witnesses},
    {"Schroedinger model exactness", schroedinger},
    {"induction triviality", induction},
    {"Plancherel density", plancherel},
    {"verdict table", verdict_table},
    {"coefficient analytics", coefficient_analytics},
    {"Haar/modular suite", haar_modular},
};

}  // namespace

std::string check_name(int id) {
  if (id < 1 || id > kCheckCount) throw DomainError("no acceptance check " + std::to_string(id));
  return kSuites[id - 1].name;
}

CheckResult run_check(int id, std::uint64_t seed) {
  CheckResult r;
  r.id = id;
  r.name = check_name(id);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = kSuites[id - 1].run(seed + static_cast<std::uint64_t>(id));
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, seed));
  return out;
}

}  // namespace paraharm::checks
