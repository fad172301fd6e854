#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "lanslab/lp/dyadic.hpp"

namespace lanslab::lp {


inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Grid L^p norm with normalized measure, Euclidean over components:
/// (mean_x |f(x)|^p)^(1/p), or max_x |f(x)| for p = infinity.
double lp_norm(const RealField& f, double p);
/// Same quantity for a spectral field. p = 2 uses Parseval; other p transform.
double lp_norm(const SpectralField& f, double p);

/// Besov index (s, p, q); p and q may be infinite.
struct BesovIndex {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;

  /// Throws std::invalid_argument unless p, q >= 1.
  void validate() const;
};

/// ||Delta_b f||_p for b = -1..J (entry b + 1).
std::vector<double> block_norms(const DyadicFamily& family, const SpectralField& f, double p);

/// ||Psi*f||_p + ( sum_j (2^{js} ||Delta_j f||_p)^q )^{1/q}, sup over j when q = inf.
double besov_norm(const DyadicFamily& family, const SpectralField& f, const BesovIndex& idx);
/// Only the dyadic sum (the B-tilde part, without the Psi term).
double besov_tilde_norm(const DyadicFamily& family, const SpectralField& f, const BesovIndex& idx);

/// Combines precomputed block norms (as returned by block_norms) into a Besov norm.
double besov_from_blocks(std::span<const double> blocks, double s, double q, bool include_low = true);

/// ||(1 - sum_b Delta_b) f||_2 / ||f||_2: the share of f the family does not see.
double unresolved_fraction(const DyadicFamily& family, const SpectralField& f);

/// One norm evaluation with its per-block breakdown.
struct NormRecord {
  std::string field_id;
  BesovIndex index;
  double value = 0.0;
  double low = 0.0;
  /// (j, 2^{js} ||Delta_j f||_p)
  std::vector<std::pair<int, double>> per_block;
  double unresolved = 0.0;

  /// {field_id, s, p, q, value, per_block: [[j, weighted], ...]}; infinite
  /// p or q are written as the string "inf".
  nlohmann::ordered_json to_json() const;
};

NormRecord besov_record(const DyadicFamily& family, const SpectralField& f, const BesovIndex& idx,
                        std::string field_id = {});

/// ||Lambda^alpha f||_q / (2^{j alpha + j n (1/p - 1/q)} ||f||_p).
double bernstein_ratio(const SpectralField& f, int j, double alpha, double p, double q);

/// Inhomogeneous Sobolev norm ||f||_{H^{1,2}} = ||(1 + |k|^2)^{1/2} f_hat||.
double h1_norm(const SpectralField& f);

}  // namespace lanslab::lp
