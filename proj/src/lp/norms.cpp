#include "lanslab/lp/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/kernels.hpp"

namespace lanslab::lp {
namespace {

std::vector<std::span<const double>> component_views(const RealField& f) {
  std::vector<std::span<const double>> views;
  for (int c = 0; c < f.components(); ++c) views.push_back(f.component(c));
  return views;
}

double parseval_norm(const SpectralField& f, std::span<const double> weights) {
  double s = 0.0;
  for (int c = 0; c < f.components(); ++c) s += kernels::parallel::weighted_sum_sq(f.component(c), weights);
  return std::sqrt(s);
}

nlohmann::ordered_json exponent_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

}  // namespace

double lp_norm(const RealField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("L^p exponent must be >= 1");
  const auto views = component_views(f);
  if (std::isinf(p)) return kernels::parallel::max_norm(views);
  const double mean = kernels::parallel::sum_norm_pow(views, p) / static_cast<double>(f.grid().real_size());
  return std::pow(mean, 1.0 / p);
}

double lp_norm(const SpectralField& f, double p) {
  if (p == 2.0) return spectral::l2_norm(f);
  return lp_norm(spectral::to_real(f), p);
}

void BesovIndex::validate() const {
  if (!(p >= 1.0) || !(q >= 1.0)) throw std::invalid_argument("Besov exponents p, q must be >= 1");
  if (!std::isfinite(s)) throw std::invalid_argument("Besov regularity s must be finite");
}

std::vector<double> block_norms(const DyadicFamily& family, const SpectralField& f, double p) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(family.max_index()) + 2);
  for (int b = -1; b <= family.max_index(); ++b) {
    if (p == 2.0) {
      out.push_back(parseval_norm(f, family.parseval_weights(b)));
    } else {
      out.push_back(lp_norm(delta_j(family, f, b), p));
    }
  }
  return out;
}

double besov_from_blocks(std::span<const double> blocks, double s, double q, bool include_low) {
  double acc = 0.0;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const double j = static_cast<double>(i - 1);
    const double w = std::exp2(j * s) * blocks[i];
    if (std::isinf(q)) {
      acc = std::max(acc, w);
    } else {
      acc += std::pow(w, q);
    }
  }
  const double tilde = std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
  return include_low ? blocks[0] + tilde : tilde;
}

double besov_norm(const DyadicFamily& family, const SpectralField& f, const BesovIndex& idx) {
  idx.validate();
  const auto blocks = block_norms(family, f, idx.p);
  return besov_from_blocks(blocks, idx.s, idx.q, true);
}

double besov_tilde_norm(const DyadicFamily& family, const SpectralField& f, const BesovIndex& idx) {
  idx.validate();
  const auto blocks = block_norms(family, f, idx.p);
  return besov_from_blocks(blocks, idx.s, idx.q, false);
}

double unresolved_fraction(const DyadicFamily& family, const SpectralField& f) {
  const double total = spectral::l2_norm(f);
  if (total == 0.0) return 0.0;
  const auto sum = family.partition_sum();
  const auto& w = f.grid().lattice().parseval_weight;
  std::vector<double> weights(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) weights[i] = w[i] * (1.0 - sum[i]) * (1.0 - sum[i]);
  return parseval_norm(f, weights) / total;
}

nlohmann::ordered_json NormRecord::to_json() const {
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& [j, v] : per_block) blocks.push_back({j, v});
  return {{"field_id", field_id},
          {"s", index.s},
          {"p", exponent_json(index.p)},
          {"q", exponent_json(index.q)},
          {"value", value},
          {"per_block", blocks}};
}

NormRecord besov_record(const DyadicFamily& family, const SpectralField& f, const BesovIndex& idx,
                        std::string field_id) {
  idx.validate();
  const auto blocks = block_norms(family, f, idx.p);
  NormRecord rec;
  rec.field_id = std::move(field_id);
  rec.index = idx;
  rec.value = besov_from_blocks(blocks, idx.s, idx.q, true);
  rec.low = blocks[0];
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const int j = static_cast<int>(i) - 1;
    rec.per_block.emplace_back(j, std::exp2(j * idx.s) * blocks[i]);
  }
  rec.unresolved = unresolved_fraction(family, f);
  return rec;
}

double bernstein_ratio(const SpectralField& f, int j, double alpha, double p, double q) {
  const auto lifted = spectral::apply_multiplier(spectral::MultiplierSymbol::lambda_power(f.grid(), alpha), f);
  const double n = f.grid().dimension();
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  const double scale = std::exp2(j * alpha + j * n * (inv_p - inv_q));
  return lp_norm(lifted, q) / (scale * lp_norm(f, p));
}

double h1_norm(const SpectralField& f) {
  const auto& lat = f.grid().lattice();
  std::vector<double> w(lat.k2.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = lat.parseval_weight[i] * (1.0 + lat.k2[i]);
  return parseval_norm(f, w);
}

}  // namespace lanslab::lp
