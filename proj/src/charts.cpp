#include "paraharm/charts.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "paraharm/errors.hpp"

namespace paraharm {

std::string_view to_string(GroupKind k) noexcept {
  switch (k) {
    case GroupKind::P3x3: return "P3x3";
    case GroupKind::AXB: return "AXB";
    case GroupKind::N: return "N";
    case GroupKind::MN: return "MN";
    case GroupKind::AN: return "AN";
    case GroupKind::P: return "P";
  }
  return "?";
}

NGroupSpec GroupDescriptor::n_spec() const {
  if (!has_n_factor()) throw UnsupportedError(std::string(paraharm::to_string(kind)) + " has no N factor");
  return {tag, n};
}

std::size_t GroupDescriptor::chart_dimension() const {
  switch (kind) {
    case GroupKind::P3x3: return 4;
    case GroupKind::AXB: return 2;
    case GroupKind::N:
    case GroupKind::MN: return n_spec().dimension();
    case GroupKind::AN:
    case GroupKind::P: return 1 + n_spec().dimension();
  }
  return 0;
}

void GroupDescriptor::validate() const {
  if (!has_n_factor()) return;
  n_spec().validate();
  if (tag == AlgebraTag::Octonion && n != 2) throw DomainError("groups over O require n = 2");
}

std::string GroupDescriptor::to_string() const {
  std::string s(paraharm::to_string(kind));
  if (has_n_factor()) s += ":" + std::string(paraharm::to_string(tag)) + ":" + std::to_string(n);
  return s;
}

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  const auto bad = [&]() {
    return DomainError("bad group descriptor '" + std::string(text) +
                       "' (expected P3x3, AXB or KIND:TAG:n with KIND in N, MN, AN, P)");
  };
  if (text == "P3x3") return p3x3();
  if (text == "AXB") return axb();
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) throw bad();
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw bad();
  const std::string_view kind = text.substr(0, c1);
  GroupDescriptor g;
  if (kind == "N") g.kind = GroupKind::N;
  else if (kind == "MN") g.kind = GroupKind::MN;
  else if (kind == "AN") g.kind = GroupKind::AN;
  else if (kind == "P") g.kind = GroupKind::P;
  else throw bad();
  g.tag = parse_algebra_tag(text.substr(c1 + 1, c2 - c1 - 1));
  const std::string digits(text.substr(c2 + 1));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
  g.n = std::stoi(digits);
  g.validate();
  return g;
}

namespace {

void require_point(const GroupDescriptor& g, std::span<const double> x) {
  if (x.size() != g.chart_dimension()) {
    throw DomainError(g.to_string() + ": expected " + std::to_string(g.chart_dimension()) + " coordinates, got " +
                      std::to_string(x.size()));
  }
  if ((g.kind == GroupKind::P3x3 || g.kind == GroupKind::AXB || g.has_a_factor()) && !(x[0] > 0.0)) {
    throw DomainError(g.to_string() + ": first coordinate must be positive");
  }
}

// D = d(n-1) + 2(d-1): log of the scaling of Lebesgue measure on N under alpha.
double homogeneous_dimension(const NGroupSpec& spec) {
  const double d = static_cast<double>(dimension(spec.tag));
  return d * static_cast<double>(spec.w_length()) + 2.0 * (d - 1.0);
}

}  // namespace

double left_haar_density(const GroupDescriptor& g, std::span<const double> x) {
  require_point(g, x);
  switch (g.kind) {
    case GroupKind::P3x3: return 1.0 / (x[0] * x[0]);
    case GroupKind::AXB: return 1.0 / (x[0] * x[0]);
    case GroupKind::N:
    case GroupKind::MN: return 1.0;
    case GroupKind::AN:
    case GroupKind::P: return std::pow(x[0], -1.0 - homogeneous_dimension(g.n_spec()));
  }
  throw UnsupportedError("left_haar_density: unsupported descriptor");
}

double right_haar_density(const GroupDescriptor& g, std::span<const double> x) {
  require_point(g, x);
  switch (g.kind) {
    case GroupKind::P3x3: return 1.0;
    case GroupKind::AXB: return 1.0 / x[0];
    case GroupKind::N:
    case GroupKind::MN: return 1.0;
    case GroupKind::AN:
    case GroupKind::P: return 1.0 / x[0];
  }
  throw UnsupportedError("right_haar_density: unsupported descriptor");
}

double modular_function(const GroupDescriptor& g, std::span<const double> x) {
  return left_haar_density(g, x) / right_haar_density(g, x);
}

double action_determinant(const NGroupSpec& spec, const MAElement& h) {
  const std::size_t dim = spec.dimension();
  Eigen::MatrixXd jac(dim, dim);
  std::vector<double> e(dim, 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    std::fill(e.begin(), e.end(), 0.0);
    e[k] = 1.0;
    const std::vector<double> col = to_coordinates(ma_act_n(h, from_coordinates(spec, e)));
    for (std::size_t r = 0; r < dim; ++r) jac(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = col[r];
  }
  return std::abs(jac.determinant());
}

GroupChart::GroupChart(GroupDescriptor g) : g_(g) {
  g_.validate();
  if (g_.kind == GroupKind::MN || g_.kind == GroupKind::P) {
    throw UnsupportedError("GroupChart: " + g_.to_string() + " has a compact M factor outside the chart");
  }
  dim_ = g_.chart_dimension();
}

PMatrixElement to_p_element(std::span<const double> x) {
  if (x.size() != 4) throw DomainError("P3x3 point needs 4 coordinates");
  return {x[0], x[1], x[2], x[3]};
}

Point to_point(const PMatrixElement& g) { return {g.lambda, g.a, g.b, g.c}; }

SemidirectElement to_an_element(const NGroupSpec& spec, std::span<const double> x) {
  if (x.size() != 1 + spec.dimension()) throw DomainError("AN point has the wrong number of coordinates");
  SemidirectElement g{from_coordinates(spec, x.subspan(1)), ma_identity(spec)};
  g.h.alpha = x[0];
  return g;
}

Point to_point(const SemidirectElement& g) {
  Point p{g.h.alpha};
  const std::vector<double> n = to_coordinates(g.n);
  p.insert(p.end(), n.begin(), n.end());
  return p;
}

Point GroupChart::identity() const {
  Point e(dim_, 0.0);
  if (g_.kind != GroupKind::N) e[0] = 1.0;
  return e;
}

Point GroupChart::multiply(std::span<const double> x, std::span<const double> y) const {
  require_point(g_, x);
  require_point(g_, y);
  switch (g_.kind) {
    case GroupKind::P3x3: return to_point(p_multiply(to_p_element(x), to_p_element(y)));
    case GroupKind::AXB: {
      const AxBElement r = axb_multiply({x[0], x[1]}, {y[0], y[1]});
      return {r.a, r.b};
    }
    case GroupKind::N: {
      const NGroupSpec s = g_.n_spec();
      return to_coordinates(n_multiply(from_coordinates(s, x), from_coordinates(s, y)));
    }
    case GroupKind::AN: {
      const NGroupSpec s = g_.n_spec();
      return to_point(semidirect_multiply(to_an_element(s, x), to_an_element(s, y)));
    }
    default: break;
  }
  throw UnsupportedError("GroupChart::multiply: unsupported descriptor");
}

Point GroupChart::inverse(std::span<const double> x) const {
  require_point(g_, x);
  switch (g_.kind) {
    case GroupKind::P3x3: return to_point(p_inverse(to_p_element(x)));
    case GroupKind::AXB: {
      const AxBElement r = axb_inverse({x[0], x[1]});
      return {r.a, r.b};
    }
    case GroupKind::N: {
      const NGroupSpec s = g_.n_spec();
      return to_coordinates(n_inverse(from_coordinates(s, x)));
    }
    case GroupKind::AN: {
      const NGroupSpec s = g_.n_spec();
      return to_point(semidirect_inverse(to_an_element(s, x)));
    }
    default: break;
  }
  throw UnsupportedError("GroupChart::inverse: unsupported descriptor");
}

double GroupChart::distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("point size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

}  // namespace paraharm
