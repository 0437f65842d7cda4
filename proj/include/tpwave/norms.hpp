#pragma once

#include <limits>
#include <vector>

#include "tpwave/field.hpp"
#include "tpwave/model.hpp"
#include "tpwave/spectral_ops.hpp"

namespace tpwave {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Region {
  Box,      // the full periodic box
  HalfBox,  // x3 in [0, box_len/2], trapezoid weights on the two end planes
  HalfInterior,  // x3 strictly between the wall and the far plane
};

/// Time averaged by 1/period, space integrated with the physical cell
/// volume. p = kInf gives the max norm.
struct NormSpec {
  double p = 2.0;
  Region region = Region::Box;
};

double lp_norm(const Field& f, const NormSpec& spec);

/// L^r(T; L^q): r-mean over time slices of per-slice spatial q-norms.
double mixed_norm(const Field& f, double r, double q);
/// Same for the pointwise Euclidean magnitude of grad u.
double gradient_mixed_norm(const Field& u, double r, double q);

/// Derivatives entering the solution-space norm: d_t^2 and every
/// d_t^a d_x^alpha with a <= 1, |alpha| <= 2.
std::vector<DerivativeOrder> sols_derivatives();
/// Derivatives entering the W^{1,2,p} norm: u, d_t u and d_x^alpha with 1 <= |alpha| <= 2.
std::vector<DerivativeOrder> w12_derivatives();

/// (sum over sols_derivatives of ||D u||_p^p)^(1/p).
double sols_norm(const Field& u, double p, Region region = Region::Box);
double w12_norm(const Field& u, double p);

/// Exponents of the time-periodic Sobolev embedding in three dimensions.
struct EmbeddingSpec {
  double p = 2.75;
  double alpha = 0.8;
  double beta = 0.8;
  double r0 = kInf;
  double q0 = kInf;
  double r1 = kInf;
  double q1 = 3.0;

  /// Throws Error(ExponentViolation) unless the stored exponents satisfy
  /// the embedding conditions.
  void validate() const;
};

struct RatioReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs, defined as 0 when lhs = 0
};

/// lhs = ||u||_{L^r0(L^q0)} + ||grad u||_{L^r1(L^q1)}, rhs = ||u||_{1,2,p}.
RatioReport embedding_check(const Field& u, const EmbeddingSpec& spec);

/// lhs = ||d_t v d_t^2 u||_p + ||grad v . d_t grad u||_p,
/// rhs = ||v||_SolS ||u||_SolS. Requires p in (5/2, 3).
RatioReport product_estimate_check(const Field& u, const Field& v, double p);

/// p = 2 spectral surrogates of the boundary trace-space norms, for diagnostics.
double trace_norm_surrogate(const BoundaryField& g, BoundaryKind bc);

}  // namespace tpwave
