#pragma once

// Dual actions on characters and central characters of N (and of N0 for the
// 3x3 group), orbit classification, stabilizers, and transitivity witnesses.

#include <optional>
#include <string>
#include <variant>

#include "paraharm/families.hpp"
#include "paraharm/parabolic.hpp"

namespace paraharm {

/// The character (c, b) -> exp(i(s c + t b)) of N0.
struct N0Char {
  double s = 0.0;
  double t = 0.0;
  friend bool operator==(const N0Char&, const N0Char&) = default;
};

/// chi_v(w, z) = exp(i Re<w, v>).
struct CharParam {
  FVector v;
};

/// The class of eta_m; m is nonzero and purely imaginary.
struct CentralParam {
  AlgebraElement m;
};

using DualPoint = std::variant<N0Char, CharParam, CentralParam>;

/// Which subgroup of P acts on the dual of N (or N0).
enum class ActingGroup { P0, MA, A, M, None };

enum class OrbitType {
  O1, O2, O3, O4, O5,  // P0 on the dual of N0
  Trivial,             // the trivial character
  Character,           // nonzero characters (a single orbit, or a ray under A)
  CharacterPositive,   // SO0(2,1): v > 0
  CharacterNegative,   // SO0(2,1): v < 0
  Central,             // nonzero central parameters
  CentralPositive,     // F = C: m in R_{>0} i
  CentralNegative,     // F = C: m in R_{<0} i
};

struct OrbitId {
  FamilySpec family;
  ActingGroup acting = ActingGroup::MA;
  OrbitType type = OrbitType::Trivial;

  /// Short label: "O1".."O5", "trivial", "char", "char+", "char-", "central",
  /// "central+", "central-".
  std::string label() const;
  friend bool operator==(const OrbitId&, const OrbitId&) = default;
};

std::string_view to_string(ActingGroup g) noexcept;
std::string_view to_string(OrbitType t) noexcept;
OrbitType parse_orbit_label(std::string_view label);

// 3x3 family.

/// (s, t) -> (s / lambda, -a s + lambda t).
N0Char p0_dual_act(const P0Element& p, const N0Char& nu) noexcept;
/// nu(p^{-1}.n), the defining relation that p0_dual_act must reproduce.
std::complex<double> n0_char_eval(const N0Char& nu, const N0Element& n) noexcept;
OrbitType classify_orbit_p0(const N0Char& nu) noexcept;
/// Algebraic stabilizer: everything for (0,0), P1 = {lambda = 1} when s = 0,
/// trivial otherwise.
bool p0_stabilizer_algebraic(const P0Element& p, const N0Char& nu, double tol = 1e-10) noexcept;
bool p0_stabilizer_fixed_point(const P0Element& p, const N0Char& nu, double tol = 1e-10) noexcept;
/// p with p.rep = target, rep the representative of target's orbit (or of
/// source's orbit when given). Throws OrbitError across orbits.
P0Element p0_transitivity_witness(const N0Char& target, std::optional<N0Char> source = std::nullopt);

// Rank-one families.

/// v'_i = alpha^{-1} beta sum_j v_j conj(u_ij), so that
/// chi_{g.v}(x) = chi_v(g^{-1}.x).
CharParam dual_char_act(const MAElement& g, const CharParam& v);
/// m' = beta alpha^{-2} m beta^{-1}.
CentralParam dual_central_act(const MAElement& g, const CentralParam& m);

/// Orbit of the full MA action. Throws DomainError for central parameters
/// over R and for a zero central parameter.
OrbitType classify_orbit(const FamilySpec& family, const DualPoint& p, double tol = kDefaultTolerance);
DualPoint orbit_representative(const OrbitId& orbit);

/// Membership via the dual action: g.p == p within tol.
bool stabilizer_membership(const MAElement& g, const DualPoint& p, double tol = 1e-10);
/// Membership via the algebraic conditions: alpha = 1 and beta v_i = sum_j
/// v_j u_ji for characters; alpha = 1 and beta in R + R m for central
/// parameters.
bool stabilizer_algebraic(const MAElement& g, const DualPoint& p, double tol = 1e-10);

/// g in MA with g.source = target, where source defaults to the
/// representative of the orbit of target. Throws OrbitError when source and
/// target lie in different orbits, UnsupportedError for the parts of the O
/// case that are not modeled.
MAElement transitivity_witness(const FamilySpec& family, const DualPoint& target,
                               std::optional<DualPoint> source = std::nullopt);

double distance(const DualPoint& a, const DualPoint& b);

}  // namespace paraharm
