#include "paraharm/dual_orbits.hpp"

#include <cmath>
#include <numbers>

#include "paraharm/errors.hpp"

namespace paraharm {

std::string_view to_string(ActingGroup g) noexcept {
  switch (g) {
    case ActingGroup::P0: return "P0";
    case ActingGroup::MA: return "MA";
    case ActingGroup::A: return "A";
    case ActingGroup::M: return "M";
    case ActingGroup::None: return "1";
  }
  return "?";
}

std::string_view to_string(OrbitType t) noexcept {
  switch (t) {
    case OrbitType::O1: return "O1";
    case OrbitType::O2: return "O2";
    case OrbitType::O3: return "O3";
    case OrbitType::O4: return "O4";
    case OrbitType::O5: return "O5";
    case OrbitType::Trivial: return "trivial";
    case OrbitType::Character: return "char";
    case OrbitType::CharacterPositive: return "char+";
    case OrbitType::CharacterNegative: return "char-";
    case OrbitType::Central: return "central";
    case OrbitType::CentralPositive: return "central+";
    case OrbitType::CentralNegative: return "central-";
  }
  return "?";
}

OrbitType parse_orbit_label(std::string_view label) {
  for (OrbitType t : {OrbitType::O1, OrbitType::O2, OrbitType::O3, OrbitType::O4, OrbitType::O5, OrbitType::Trivial,
                      OrbitType::Character, OrbitType::CharacterPositive, OrbitType::CharacterNegative,
                      OrbitType::Central, OrbitType::CentralPositive, OrbitType::CentralNegative}) {
    if (to_string(t) == label) return t;
  }
  throw DomainError("unknown orbit label '" + std::string(label) + "'");
}

std::string OrbitId::label() const { return std::string(to_string(type)); }

N0Char p0_dual_act(const P0Element& p, const N0Char& nu) noexcept {
  return {nu.s / p.lambda, -p.a * nu.s + p.lambda * nu.t};
}

std::complex<double> n0_char_eval(const N0Char& nu, const N0Element& n) noexcept {
  return std::polar(1.0, nu.s * n.c + nu.t * n.b);
}

OrbitType classify_orbit_p0(const N0Char& nu) noexcept {
  if (nu.s > 0.0) return OrbitType::O1;
  if (nu.s < 0.0) return OrbitType::O2;
  if (nu.t > 0.0) return OrbitType::O3;
  if (nu.t < 0.0) return OrbitType::O4;
  return OrbitType::O5;
}

bool p0_stabilizer_algebraic(const P0Element& p, const N0Char& nu, double tol) noexcept {
  const bool s_zero = std::abs(nu.s) <= tol;
  const bool t_zero = std::abs(nu.t) <= tol;
  if (s_zero && t_zero) return true;
  if (s_zero) return std::abs(p.lambda - 1.0) <= tol;
  return std::abs(p.lambda - 1.0) <= tol && std::abs(p.a) <= tol;
}

bool p0_stabilizer_fixed_point(const P0Element& p, const N0Char& nu, double tol) noexcept {
  const N0Char r = p0_dual_act(p, nu);
  return std::abs(r.s - nu.s) <= tol && std::abs(r.t - nu.t) <= tol;
}

namespace {

N0Char p0_representative(OrbitType t) {
  switch (t) {
    case OrbitType::O1: return {1.0, 0.0};
    case OrbitType::O2: return {-1.0, 0.0};
    case OrbitType::O3: return {0.0, 1.0};
    case OrbitType::O4: return {0.0, -1.0};
    case OrbitType::O5: return {0.0, 0.0};
    default: break;
  }
  throw DomainError("not an orbit of P0");
}

// p with p.rep(orbit(nu)) = nu.
P0Element p0_from_rep(const N0Char& nu) {
  switch (classify_orbit_p0(nu)) {
    case OrbitType::O1: return {1.0 / nu.s, -nu.t};
    case OrbitType::O2: return {-1.0 / nu.s, nu.t};
    case OrbitType::O3: return {nu.t, 0.0};
    case OrbitType::O4: return {-nu.t, 0.0};
    default: return {};
  }
}

}  // namespace

P0Element p0_transitivity_witness(const N0Char& target, std::optional<N0Char> source) {
  if (!source) return p0_from_rep(target);
  if (classify_orbit_p0(*source) != classify_orbit_p0(target)) {
    throw OrbitError("target " + std::string(to_string(classify_orbit_p0(target))) + " is not in the orbit " +
                     std::string(to_string(classify_orbit_p0(*source))) + " of the source");
  }
  return p0_multiply(p0_from_rep(target), p0_inverse(p0_from_rep(*source)));
}

CharParam dual_char_act(const MAElement& g, const CharParam& v) {
  if (g.tag() != v.v.tag() || g.u.size() != v.v.size()) throw DomainError("dual_char_act: spec mismatch");
  return {m_row_action(g.u, g.beta, v.v) * (1.0 / g.alpha)};
}

CentralParam dual_central_act(const MAElement& g, const CentralParam& m) {
  if (g.tag() != m.m.tag()) throw DomainError("dual_central_act: spec mismatch");
  return {(g.beta * m.m) * conjugate(g.beta) * (1.0 / (g.alpha * g.alpha))};
}

namespace {

void require_char(const FamilySpec& family, const CharParam& v) {
  const NGroupSpec spec = family.n_spec();
  if (v.v.tag() != spec.tag || v.v.size() != spec.w_length()) {
    throw DomainError("character parameter does not match " + family.name());
  }
}

void require_central(const FamilySpec& family, const CentralParam& m, double tol) {
  const AlgebraTag tag = family.algebra();
  if (tag == AlgebraTag::Real) throw DomainError(family.name() + " has no central parameters (Im R = 0)");
  if (m.m.tag() != tag) throw DomainError("central parameter does not match " + family.name());
  if (!is_imaginary(m.m, tol)) throw DomainError("central parameter must be purely imaginary");
  if (norm(m.m) <= tol) throw DomainError("central parameter must be nonzero");
}

}  // namespace

OrbitType classify_orbit(const FamilySpec& family, const DualPoint& p, double tol) {
  if (const auto* nu = std::get_if<N0Char>(&p)) {
    if (family.family != Family::P3x3) throw DomainError("N0 characters belong to the P3x3 family");
    return classify_orbit_p0(*nu);
  }
  if (family.family == Family::P3x3) throw DomainError("P3x3 points are N0 characters (s, t)");
  if (const auto* v = std::get_if<CharParam>(&p)) {
    require_char(family, *v);
    if (norm(v->v) <= tol) return OrbitType::Trivial;
    if (family.is_so21()) return v->v[0][0] > 0.0 ? OrbitType::CharacterPositive : OrbitType::CharacterNegative;
    return OrbitType::Character;
  }
  const auto& m = std::get<CentralParam>(p);
  require_central(family, m, tol);
  if (family.family == Family::SU) return m.m[1] > 0.0 ? OrbitType::CentralPositive : OrbitType::CentralNegative;
  return OrbitType::Central;
}

DualPoint orbit_representative(const OrbitId& orbit) {
  if (orbit.family.family == Family::P3x3) return p0_representative(orbit.type);
  const NGroupSpec spec = orbit.family.n_spec();
  const AlgebraTag tag = spec.tag;
  switch (orbit.type) {
    case OrbitType::Trivial: return CharParam{FVector(tag, spec.w_length())};
    case OrbitType::Character:
    case OrbitType::CharacterPositive:
    case OrbitType::CharacterNegative: {
      if ((orbit.type == OrbitType::Character) == orbit.family.is_so21()) {
        throw DomainError("orbit " + orbit.label() + " does not occur for " + orbit.family.name());
      }
      FVector v(tag, spec.w_length());
      v[0] = AlgebraElement::real(tag, orbit.type == OrbitType::CharacterNegative ? -1.0 : 1.0);
      return CharParam{v};
    }
    case OrbitType::Central:
    case OrbitType::CentralPositive:
    case OrbitType::CentralNegative: {
      const bool su = orbit.family.family == Family::SU;
      if (tag == AlgebraTag::Real || (orbit.type == OrbitType::Central) == su) {
        throw DomainError("orbit " + orbit.label() + " does not occur for " + orbit.family.name());
      }
      AlgebraElement m = AlgebraElement::basis(tag, 1);
      if (orbit.type == OrbitType::CentralNegative) m = -m;
      return CentralParam{m};
    }
    default: break;
  }
  throw DomainError("orbit " + orbit.label() + " does not belong to " + orbit.family.name());
}

bool stabilizer_membership(const MAElement& g, const DualPoint& p, double tol) {
  if (const auto* v = std::get_if<CharParam>(&p)) return distance(dual_char_act(g, *v).v, v->v) <= tol;
  if (const auto* m = std::get_if<CentralParam>(&p)) return distance(dual_central_act(g, *m).m, m->m) <= tol;
  throw DomainError("N0 characters are acted on by P0, not MA");
}

bool stabilizer_algebraic(const MAElement& g, const DualPoint& p, double tol) {
  if (std::abs(g.alpha - 1.0) > tol) return false;
  if (const auto* cp = std::get_if<CharParam>(&p)) {
    const FVector& v = cp->v;
    if (g.tag() != v.tag() || g.u.size() != v.size()) throw DomainError("stabilizer_algebraic: spec mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) {
      AlgebraElement vu(v.tag());
      for (std::size_t j = 0; j < v.size(); ++j) vu += v[j] * g.u(j, i);
      if (distance(g.beta * v[i], vu) > tol) return false;
    }
    return true;
  }
  if (const auto* cm = std::get_if<CentralParam>(&p)) {
    if (g.tag() != cm->m.tag()) throw DomainError("stabilizer_algebraic: spec mismatch");
    const double r = norm(cm->m);
    if (r == 0.0) throw DomainError("stabilizer_algebraic: zero central parameter");
    const AlgebraElement mh = cm->m / r;
    AlgebraElement rest = im(g.beta);
    double along = 0.0;
    for (std::size_t i = 1; i < mh.dim(); ++i) along += rest[i] * mh[i];
    rest -= mh * along;
    return norm(rest) <= tol;
  }
  throw DomainError("N0 characters are acted on by P0, not MA");
}

namespace {

bool is_char(const DualPoint& p) { return std::holds_alternative<CharParam>(p); }

// Character witness from the representative e1 (or -e1 for SO0(2,1)).
MAElement char_from_rep(const FamilySpec& family, const FVector& v) {
  const NGroupSpec spec = family.n_spec();
  const AlgebraTag tag = spec.tag;
  const std::size_t k = spec.w_length();
  const double r = norm(v);
  FVector vh = v * (1.0 / r);
  MAElement g = ma_identity(spec);
  g.alpha = 1.0 / r;
  switch (tag) {
    case AlgebraTag::Real:
      if (k == 1) return g;
      g.u = complete_to_unitary(vh);
      if (determinant(g.u).real() < 0.0) {
        for (std::size_t i = 0; i < k; ++i) g.u(i, 1) = -g.u(i, 1);
      }
      return g;
    case AlgebraTag::Complex: {
      if (k == 1) {
        const double psi = std::arg(to_complex(vh[0])) / 3.0;
        g.beta = from_complex(tag, std::polar(1.0, psi));
        g.u(0, 0) = from_complex(tag, std::polar(1.0, -2.0 * psi));
        return g;
      }
      FVector c(tag, k);
      for (std::size_t i = 0; i < k; ++i) c[i] = conjugate(vh[i]);
      g.u = complete_to_unitary(c);
      const AlgebraElement fix = from_complex(tag, std::polar(1.0, -std::arg(determinant(g.u))));
      for (std::size_t i = 0; i < k; ++i) g.u(i, 1) = g.u(i, 1) * fix;
      return g;
    }
    case AlgebraTag::Quaternion: {
      FVector c(tag, k);
      for (std::size_t i = 0; i < k; ++i) c[i] = conjugate(vh[i]);
      g.u = complete_to_unitary(c);
      return g;
    }
    case AlgebraTag::Octonion:
      if (distance(vh[0], AlgebraElement::one(tag)) > 1e-12) {
        throw UnsupportedError("F4 character witnesses need Spin(7), which is not modeled; only targets on the "
                               "ray of the representative are reachable through A");
      }
      return g;
  }
  return g;
}

MAElement central_from_rep(const FamilySpec& family, const AlgebraElement& m) {
  const NGroupSpec spec = family.n_spec();
  const AlgebraTag tag = spec.tag;
  const double r = norm(m);
  MAElement g = ma_identity(spec);
  g.alpha = 1.0 / std::sqrt(r);
  const AlgebraElement mh = m / r;
  const AlgebraElement i = AlgebraElement::basis(tag, 1);
  switch (tag) {
    case AlgebraTag::Complex: return g;
    case AlgebraTag::Quaternion: {
      const AlgebraElement q = AlgebraElement::one(tag) - mh * i;
      const double qn = norm(q);
      g.beta = qn < 1e-8 ? AlgebraElement::basis(tag, 2) : q / qn;
      return g;
    }
    case AlgebraTag::Octonion:
      if (distance(mh, i) > 1e-12) {
        throw UnsupportedError("F4 central witnesses off the ray of the representative need Spin(7), which is "
                               "not modeled");
      }
      return g;
    default: break;
  }
  throw DomainError(family.name() + " has no central parameters");
}

MAElement from_rep(const FamilySpec& family, const DualPoint& p) {
  if (is_char(p)) return char_from_rep(family, std::get<CharParam>(p).v);
  return central_from_rep(family, std::get<CentralParam>(p).m);
}

}  // namespace

MAElement transitivity_witness(const FamilySpec& family, const DualPoint& target, std::optional<DualPoint> source) {
  if (family.family == Family::P3x3) throw UnsupportedError("P3x3 witnesses live in P0; use p0_transitivity_witness");
  const OrbitType tt = classify_orbit(family, target);
  if (tt == OrbitType::Trivial) throw DomainError("transitivity_witness: target must be nonzero");
  if (source) {
    if (source->index() != target.index()) throw OrbitError("source and target are different kinds of parameter");
    const OrbitType st = classify_orbit(family, *source);
    if (st != tt) {
      throw OrbitError("target lies in orbit " + std::string(to_string(tt)) + ", source in orbit " +
                       std::string(to_string(st)));
    }
    return ma_multiply(from_rep(family, target), ma_inverse(from_rep(family, *source)));
  }
  return from_rep(family, target);
}

double distance(const DualPoint& a, const DualPoint& b) {
  if (a.index() != b.index()) throw DomainError("distance: different kinds of dual point");
  if (const auto* x = std::get_if<N0Char>(&a)) {
    const auto& y = std::get<N0Char>(b);
    return std::max(std::abs(x->s - y.s), std::abs(x->t - y.t));
  }
  if (const auto* x = std::get_if<CharParam>(&a)) return distance(x->v, std::get<CharParam>(b).v);
  return distance(std::get<CentralParam>(a).m, std::get<CentralParam>(b).m);
}

}  // namespace paraharm
