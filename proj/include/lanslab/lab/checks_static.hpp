#pragma once

#include <cstdint>
#include <vector>

#include "lanslab/lab/report.hpp"
#include "lanslab/lp/dyadic.hpp"

namespace lanslab::lab {

using spectral::Grid;
using spectral::SpectralField;

/// Random fields for an ensemble: trial i uses trial_seed(seed, i).
struct EnsembleSpec {
  int dimension = 3;
  int points = 32;
  int size = 20;
  std::uint64_t seed = 1;
  /// Spectrum in 0 < |k| < radius.
  double radius = 8.0;
  double decay = 0.0;
  /// Components per field; 0 means a vector field.
  int components = 0;
  /// Mean amplitude (0 gives mean-zero fields).
  double mean = 0.0;
  bool divergence_free = false;

  Grid grid() const { return {dimension, points}; }
  Json to_json() const;
  /// Same ensemble on a grid with twice the points per axis.
  EnsembleSpec refined() const;
};

std::vector<SpectralField> make_ensemble(const EnsembleSpec& spec, int offset = 0);

/// |Psi_hat + sum_j psi_hat_j - 1| on |k| <= 2^J, table range and annulus support.
CheckReport check_partition_of_unity(const Grid& grid);

/// Delta_j Delta_m f = 0 (|j - m| >= 2), Delta_j(S_{m-3} f Delta_m g) = 0
/// (|j - m| >= 3), Delta_j(Delta_m f Delta_i g) = 0 (|i - m| <= 1, j > m + 3).
CheckReport check_support_identities(const EnsembleSpec& spec);

/// ||fg - T_f g - T_g f - R(f, g)||_2 / ||fg||_2
CheckReport check_paraproduct_reconstruction(const EnsembleSpec& spec);

/// max_j ||Delta_j(fg) - (I + II + III)||_2 / ||Delta_j(fg)||_2
CheckReport check_product_blocks(const EnsembleSpec& spec);

struct ParaproductBoundsParams {
  EnsembleSpec ensemble;
  double p = 2.0;
  int j_min = -1;
  int j_max = -2;  // < j_min means "up to J"
  std::vector<double> tail_r{2.5, 1.5};
  int tail_terms = 60;
};
/// Ratios of ||I||_p, ||II||_p, ||III||_p to their block right-hand sides, and
/// the partial sums of sum_{k > -3} 2^{k(2 - r)}.
CheckReport check_paraproduct_bounds(const ParaproductBoundsParams& params);

struct BernsteinParams {
  EnsembleSpec ensemble;
  double alpha = 1.0;
  double p = 2.0;
  double q = 2.0;
  int j_min = 1;
  int j_max = 3;
  /// Largest admissible max/min spread of the ratios over all j.
  double spread_limit = 4.0;
};
CheckReport check_bernstein(const BernsteinParams& params);

struct EmbeddingParams {
  EnsembleSpec ensemble;
  double p = 2.0;
  double beta1 = 0.5, beta2 = 1.0;
  double q1 = 1.0, q2 = 2.0;
  double p1 = 2.0, p2 = 4.0;
  double gamma2 = 0.5;
  double q = 2.0;
  double s = 0.5;
};
/// The three embedding lines; ratio per trial is the largest of the three.
CheckReport check_embedding(const EmbeddingParams& params);

struct ProductParams {
  EnsembleSpec ensemble;
  double s = 1.6;
  double p = 2.0;
  double p1 = 3.0;
  double q = 2.0;
  bool refine = true;
};
/// ||u^2||_{B^s_{p,q}} / ||u||^2_{B^s_{p1,q}} for p < p1 <= 2p, s > n(2/p1 - 1/p).
CheckReport check_product(const ProductParams& params);

struct MoserParams {
  EnsembleSpec ensemble;
  double s = 1.0;
  double p = 2.0;
  double p1 = 4.0, p2 = 4.0;
  double r1 = 4.0, r2 = 4.0;
  double q = 2.0;
  bool refine = true;
};
/// ||fg||_{B^s_{p,q}} / (||f||_{p1} ||g||_{B^s_{p2,q}} + ||g||_{r1} ||f||_{B^s_{r2,q}}).
CheckReport check_moser(const MoserParams& params);

struct TauParams {
  EnsembleSpec ensemble;
  double r = 3.0;
  double p = 2.0;
  double p_bar = 2.0;
  double q = 2.0;
  double alpha = 1.0;
  bool refine = true;
};
/// ||div tau^alpha(u)||_{B^r_{p_bar,q}} / ||u||^2_{B^r_{p,q}}.
CheckReport check_tau(const TauParams& params);

struct HeatParams {
  EnsembleSpec ensemble;
  double s0 = 0.0, p0 = 2.0;
  double s1 = 1.0, p1 = 2.0;
  double q = 2.0;
  double t_min = 1e-4, t_max = 1.0;
  int t_points = 41;
};
/// sup_t t^{sigma/2} ||e^{t Delta} u||_{B^{s1}_{p1,q}} / ||u||_{B^{s0}_{p0,q}},
/// sigma = s1 - s0 + n/p0 - n/p1, on a logarithmic t grid. For sigma > 0 the
/// weighted norm must vanish like t^{sigma/2} as t -> 0.
CheckReport check_heat_smoothing(const HeatParams& params);

/// Helmholtz, heat and Duhamel factors against their closed forms.
CheckReport check_closed_form_oracles(const Grid& grid);

struct StokesParams {
  EnsembleSpec ensemble;
  std::vector<double> alphas{0.0, 0.1, 1.0, 10.0};
};
/// ||stokes_project(f, alpha) - leray_project(f)||_2 / ||f||_2
CheckReport check_stokes_leray(const StokesParams& params);

}  // namespace lanslab::lab
