#ifndef CVINFO_INEQUALITIES_HPP
#define CVINFO_INEQUALITIES_HPP

#include "cvinfo/covariance.hpp"
#include "cvinfo/entropy.hpp"

#include <array>
#include <vector>

namespace cvinfo {

// Every inequality is exposed as a "left minus right" residual, >= 0 when
// the inequality holds; tolerances live in the callers.

/// Strong subadditivity of the log-determinant over a tripartition A|B|C:
/// M_AB + M_BC - M_A - M_C. Nonnegative for every positive definite V.
double ssa_logdet_residual(const CovarianceMatrix& v, const Partition& p);

/// Subadditivity over a bipartition A|B: M_A + M_B - M_AB. Zero iff the
/// off-diagonal block vanishes.
double subadditivity_residual(const CovarianceMatrix& v, const Partition& p);

/// Conditional form of SSA over a tripartition A|B|C:
/// M_AB + M_AC - M_A - M_ABC. Relies only on positivity of V, not on the
/// bona fide condition.
double ssa_conditional_residual(const CovarianceMatrix& v, const Partition& p);

/// Triangle inequality over a bipartition A|B: M_AB - |M_A - M_B|.
double triangle_residual(const CovarianceMatrix& v, const Partition& p);

/// Strong subadditivity of the von Neumann entropy over a tripartition:
/// H_AB + H_BC - H_A - H_C. Requires bona fide reductions.
double vn_ssa_residual(const CovarianceMatrix& v, const Partition& p);

/// All log-determinant residuals of a tripartition in one sweep: SSA, the
/// conditional form, and the pairwise triangle residuals for (A,B), (A,C),
/// (B,C).
struct TripartiteResiduals {
  double ssa;
  double ssa_conditional;
  std::array<double, 3> triangle;
  EntropyKind kind;
};

TripartiteResiduals tripartite_residuals(const CovarianceMatrix& v,
                                         const Partition& p);

/// Slacks of the chain H_A = f_1(M_A) <= f_1(M_B + M_C)
/// <= f_1(M_B) + f_1(M_C) <= H_B + H_C, valid for pure tripartite CMs
/// whose A-reduction has symplectic spectrum {1,...,1,nu}.
struct HierarchyReport {
  double h_a;
  std::array<double, 3> slacks;
};

/// Evaluates the chain above for partition A|B|C. The hypotheses
/// (det V = 1 within 1e-6, A-spectrum {1,...,1,nu} within 1e-6) are
/// checked and violations throw std::invalid_argument.
HierarchyReport hierarchy_check(const CovarianceMatrix& v, const Partition& p);

/// Membership of a pure three-mode state with single-mode invariants
/// (a, b, c) in the triangle-inequality region
/// |S_A - S_B| <= S_C <= S_A + S_B (all role permutations, non-strict)
/// for the given entropy function.
bool three_mode_region_member(EntropyKind kind, double a, double b, double c);

struct RegionPoint {
  double a;
  double b;
  double c;
  bool in_h;
  bool in_m;
  bool in_d;
};

/// Uniform grid over [lo, hi] with `count` points (count == 1 gives {lo}).
struct GridSpec {
  double lo;
  double hi;
  int count;

  double value(int i) const;
};

/// Evaluates the three region memberships on a grid at fixed c, in
/// row-major (a outer, b inner) order. The D region is contained in the M
/// region, which is contained in the H region, at every point.
std::vector<RegionPoint> scan_region(double c, const GridSpec& a_grid,
                                     const GridSpec& b_grid);

}  // namespace cvinfo

#endif  // CVINFO_INEQUALITIES_HPP
