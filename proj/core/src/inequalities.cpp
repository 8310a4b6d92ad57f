#include "cvinfo/inequalities.hpp"

#include <cmath>
#include <stdexcept>

namespace cvinfo {

namespace {

void require_groups(const Partition& p, std::size_t n, const char* who) {
  if (p.size() != n) {
    throw std::invalid_argument(std::string(who) + ": partition must have " +
                                std::to_string(n) + " groups");
  }
}

double group_logdet(const CovarianceMatrix& v, const std::vector<int>& modes) {
  return logdet_entropy(reduce(v, modes));
}

}  // namespace

double ssa_logdet_residual(const CovarianceMatrix& v, const Partition& p) {
  require_groups(p, 3, "ssa_logdet_residual");
  p.check_range(v.modes());
  const double m_ab = group_logdet(v, p.merged({0, 1}));
  const double m_bc = group_logdet(v, p.merged({1, 2}));
  const double m_a = group_logdet(v, p.merged({0}));
  const double m_c = group_logdet(v, p.merged({2}));
  return m_ab + m_bc - m_a - m_c;
}

double subadditivity_residual(const CovarianceMatrix& v, const Partition& p) {
  require_groups(p, 2, "subadditivity_residual");
  p.check_range(v.modes());
  const double m_a = group_logdet(v, p.merged({0}));
  const double m_b = group_logdet(v, p.merged({1}));
  const double m_ab = group_logdet(v, p.merged({0, 1}));
  return m_a + m_b - m_ab;
}

double ssa_conditional_residual(const CovarianceMatrix& v,
                                const Partition& p) {
  require_groups(p, 3, "ssa_conditional_residual");
  p.check_range(v.modes());
  const double m_ab = group_logdet(v, p.merged({0, 1}));
  const double m_ac = group_logdet(v, p.merged({0, 2}));
  const double m_a = group_logdet(v, p.merged({0}));
  const double m_abc = group_logdet(v, p.merged({0, 1, 2}));
  return m_ab + m_ac - m_a - m_abc;
}

double triangle_residual(const CovarianceMatrix& v, const Partition& p) {
  require_groups(p, 2, "triangle_residual");
  p.check_range(v.modes());
  const double m_a = group_logdet(v, p.merged({0}));
  const double m_b = group_logdet(v, p.merged({1}));
  const double m_ab = group_logdet(v, p.merged({0, 1}));
  return m_ab - std::abs(m_a - m_b);
}

double vn_ssa_residual(const CovarianceMatrix& v, const Partition& p) {
  require_groups(p, 3, "vn_ssa_residual");
  p.check_range(v.modes());
  const double h_ab = von_neumann_entropy(reduce(v, p.merged({0, 1})));
  const double h_bc = von_neumann_entropy(reduce(v, p.merged({1, 2})));
  const double h_a = von_neumann_entropy(reduce(v, p.merged({0})));
  const double h_c = von_neumann_entropy(reduce(v, p.merged({2})));
  return h_ab + h_bc - h_a - h_c;
}

TripartiteResiduals tripartite_residuals(const CovarianceMatrix& v,
                                         const Partition& p) {
  require_groups(p, 3, "tripartite_residuals");
  p.check_range(v.modes());
  auto pair_triangle = [&](std::size_t x, std::size_t y) {
    return triangle_residual(v, Partition({p.group(x), p.group(y)}));
  };
  return TripartiteResiduals{
      ssa_logdet_residual(v, p),
      ssa_conditional_residual(v, p),
      {pair_triangle(0, 1), pair_triangle(0, 2), pair_triangle(1, 2)},
      EntropyKind::LogDet,
  };
}

HierarchyReport hierarchy_check(const CovarianceMatrix& v,
                                const Partition& p) {
  require_groups(p, 3, "hierarchy_check");
  p.check_range(v.modes());

  const double m_abc = logdet_entropy(reduce(v, p.merged({0, 1, 2})));
  if (std::abs(std::expm1(m_abc)) > 1e-6) {
    throw std::invalid_argument(
        "hierarchy_check: CM is not pure (det != 1 within 1e-6)");
  }
  const CovarianceMatrix v_a = reduce(v, p.merged({0}));
  const SymplecticSpectrum spec_a = symplectic_spectrum(v_a);
  for (std::size_t j = 1; j < spec_a.values.size(); ++j) {
    if (std::abs(spec_a.values[j] - 1.0) > 1e-6) {
      throw std::invalid_argument(
          "hierarchy_check: A-spectrum is not of the form {1,...,1,nu}");
    }
  }

  const double m_a = logdet_entropy(v_a);
  const double m_b = logdet_entropy(reduce(v, p.merged({1})));
  const double m_c = logdet_entropy(reduce(v, p.merged({2})));
  const double h_a = von_neumann_entropy(v_a);
  const double h_b = von_neumann_entropy(reduce(v, p.merged({1})));
  const double h_c = von_neumann_entropy(reduce(v, p.merged({2})));

  auto f1 = [](double m) { return f_bound(1, std::max(0.0, m)); };
  return HierarchyReport{
      h_a,
      {f1(m_b + m_c) - f1(m_a),
       f1(m_b) + f1(m_c) - f1(m_b + m_c),
       h_b + h_c - f1(m_b) - f1(m_c)},
  };
}

bool three_mode_region_member(EntropyKind kind, double a, double b, double c) {
  const double sa = single_mode_entropy(kind, a);
  const double sb = single_mode_entropy(kind, b);
  const double sc = single_mode_entropy(kind, c);
  // |S_A - S_B| <= S_C <= S_A + S_B for every role permutation collapses
  // to: the largest entropy is at most the sum of the other two.
  return sa <= sb + sc && sb <= sa + sc && sc <= sa + sb;
}

double GridSpec::value(int i) const {
  if (count < 1 || i < 0 || i >= count) {
    throw std::invalid_argument("GridSpec: index out of range");
  }
  if (count == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) /
                  static_cast<double>(count - 1);
}

std::vector<RegionPoint> scan_region(double c, const GridSpec& a_grid,
                                     const GridSpec& b_grid) {
  if (c < 1.0 || a_grid.lo < 1.0 || b_grid.lo < 1.0) {
    throw std::invalid_argument("scan_region: invariants must be >= 1");
  }
  if (a_grid.count < 1 || b_grid.count < 1 || a_grid.hi < a_grid.lo ||
      b_grid.hi < b_grid.lo) {
    throw std::invalid_argument("scan_region: bad grid spec");
  }
  std::vector<RegionPoint> points;
  points.reserve(static_cast<std::size_t>(a_grid.count) *
                 static_cast<std::size_t>(b_grid.count));
  for (int i = 0; i < a_grid.count; ++i) {
    const double a = a_grid.value(i);
    for (int j = 0; j < b_grid.count; ++j) {
      const double b = b_grid.value(j);
      points.push_back(RegionPoint{
          a, b, c,
          three_mode_region_member(EntropyKind::VonNeumann, a, b, c),
          three_mode_region_member(EntropyKind::LogDet, a, b, c),
          three_mode_region_member(EntropyKind::SqrtDet, a, b, c)});
    }
  }
  return points;
}

}  // namespace cvinfo
