#include "clara/traffic.hpp"

#include <cmath>

namespace clara::traffic {

std::string to_string(DistKind kind) {
  switch (kind) {
    case DistKind::TruncatedPareto: return "truncated-pareto";
    case DistKind::Uniform: return "uniform";
    case DistKind::Constant: return "constant";
    case DistKind::TruncatedExponential: return "truncated-exponential";
    case DistKind::TruncatedLognormal: return "truncated-lognormal";
  }
  return "?";
}

DistKind dist_kind_from_string(const std::string& name) {
  if (name == "truncated-pareto") return DistKind::TruncatedPareto;
  if (name == "uniform") return DistKind::Uniform;
  if (name == "constant") return DistKind::Constant;
  if (name == "truncated-exponential") return DistKind::TruncatedExponential;
  if (name == "truncated-lognormal") return DistKind::TruncatedLognormal;
  throw ConfigError("unknown distribution kind: " + name);
}

DistSpec DistSpec::truncated_pareto(double shape, double mean, double max_value) {
  DistSpec s;
  s.kind = DistKind::TruncatedPareto;
  s.shape = shape;
  s.mean = mean;
  s.max_value = max_value;
  s.pareto_scale = fit_truncated_pareto_scale(shape, mean, max_value);
  s.validate();
  return s;
}

DistSpec DistSpec::uniform(double min_value, double max_value) {
  DistSpec s;
  s.kind = DistKind::Uniform;
  s.min_value = min_value;
  s.max_value = max_value;
  s.mean = 0.5 * (min_value + max_value);
  s.validate();
  return s;
}

DistSpec DistSpec::constant(double v) {
  DistSpec s;
  s.kind = DistKind::Constant;
  s.value = v;
  s.mean = v;
  s.validate();
  return s;
}

DistSpec DistSpec::exponential(double mean, double max_value) {
  DistSpec s;
  s.kind = DistKind::TruncatedExponential;
  s.mean = mean;
  s.max_value = max_value;  // 0 = untruncated
  s.validate();
  return s;
}

DistSpec DistSpec::truncated_lognormal(double mean, double std_dev, double max_value) {
  DistSpec s;
  s.kind = DistKind::TruncatedLognormal;
  s.mean = mean;
  s.std_dev = std_dev;
  s.max_value = max_value;
  // Moment-match the underlying normal; truncation stays a rejection step.
  const double ratio = std_dev / mean;
  const double sigma2 = std::log1p(ratio * ratio);
  s.log_sigma = std::sqrt(sigma2);
  s.log_mu = std::log(mean) - 0.5 * sigma2;
  s.validate();
  return s;
}

void DistSpec::validate() const {
  switch (kind) {
    case DistKind::TruncatedPareto:
      if (shape <= 1.0) throw ConfigError("pareto shape must exceed 1");
      if (mean <= 0.0 || max_value <= mean) throw ConfigError("pareto needs 0 < mean < max");
      if (pareto_scale <= 0.0 || pareto_scale >= max_value)
        throw ConfigError("pareto scale out of range");
      break;
    case DistKind::Uniform:
      if (max_value <= min_value || min_value < 0.0) throw ConfigError("uniform needs 0 <= min < max");
      break;
    case DistKind::Constant:
      if (value <= 0.0) throw ConfigError("constant value must be positive");
      break;
    case DistKind::TruncatedExponential:
      if (mean <= 0.0) throw ConfigError("exponential mean must be positive");
      if (max_value != 0.0 && max_value <= mean) throw ConfigError("exponential max must exceed mean");
      break;
    case DistKind::TruncatedLognormal:
      if (mean <= 0.0 || std_dev <= 0.0) throw ConfigError("lognormal needs positive mean/std");
      if (max_value <= mean) throw ConfigError("lognormal max must exceed mean");
      break;
  }
}

double truncated_pareto_mean(double shape, double scale, double max_value) {
  // E[X | X <= b] for X ~ Pareto(shape, scale), b = max_value.
  const double a = shape;
  const double xm = scale;
  const double b = max_value;
  const double cdf = 1.0 - std::pow(xm / b, a);
  if (a == 1.0) return xm * std::log(b / xm) / cdf;
  const double num = (a / (a - 1.0)) * (xm - std::pow(xm, a) * std::pow(b, 1.0 - a));
  return num / cdf;
}

double fit_truncated_pareto_scale(double shape, double target_mean, double max_value) {
  if (shape <= 0.0) throw ConfigError("pareto shape must be positive");
  if (!(target_mean > 0.0 && target_mean < max_value))
    throw ConfigError("pareto target mean must lie in (0, max)");
  // The truncated mean grows monotonically from 0 (xm -> 0) to max (xm -> max),
  // so plain bisection brackets the unique root.
  double lo = max_value * 1e-12;
  double hi = max_value * (1.0 - 1e-12);
  if (truncated_pareto_mean(shape, lo, max_value) > target_mean ||
      truncated_pareto_mean(shape, hi, max_value) < target_mean)
    throw ConfigError("pareto mean not attainable for any scale");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (truncated_pareto_mean(shape, mid, max_value) < target_mean)
      lo = mid;
    else
      hi = mid;
    if ((hi - lo) <= 1e-9 * hi) break;
  }
  return 0.5 * (lo + hi);
}

double sample(const DistSpec& spec, RandomStream& rng) {
  constexpr int kRejectionCap = 1000000;
  switch (spec.kind) {
    case DistKind::Constant:
      return spec.value;
    case DistKind::Uniform:
      return rng.uniform(spec.min_value, spec.max_value);
    case DistKind::TruncatedExponential: {
      if (spec.max_value <= 0.0) return rng.exponential(spec.mean);
      for (int i = 0; i < kRejectionCap; ++i) {
        const double x = rng.exponential(spec.mean);
        if (x <= spec.max_value) return x;
      }
      break;
    }
    case DistKind::TruncatedPareto: {
      const double inv_shape = 1.0 / spec.shape;
      for (int i = 0; i < kRejectionCap; ++i) {
        const double x = spec.pareto_scale * std::pow(rng.uniform_pos(), -inv_shape);
        if (x <= spec.max_value) return x;
      }
      break;
    }
    case DistKind::TruncatedLognormal: {
      for (int i = 0; i < kRejectionCap; ++i) {
        const double x = std::exp(spec.log_mu + spec.log_sigma * rng.normal());
        if (x <= spec.max_value) return x;
      }
      break;
    }
  }
  throw std::runtime_error("rejection sampling exceeded cap; distribution spec is mis-fit");
}

std::array<SliceTraffic, 3> default_slice_traffic() {
  // Times in seconds, sizes in kilobits. 100 B = 0.8 kb, 40 B = 0.32 kb,
  // 2 MB = 16000 kb, 0.722 MB = 5776 kb, 5 MB = 40000 kb.
  std::array<SliceTraffic, 3> t;
  t[0].inter_arrival = DistSpec::truncated_pareto(1.2, 0.006, 0.0125);
  t[0].packet_size = DistSpec::truncated_pareto(1.2, 0.8, 2.0);
  t[1].inter_arrival = DistSpec::uniform(0.0, 0.160);
  t[1].packet_size = DistSpec::constant(0.32);
  t[2].inter_arrival = DistSpec::exponential(0.180);
  t[2].packet_size = DistSpec::truncated_lognormal(16000.0, 5776.0, 40000.0);
  return t;
}

double generate_user_packets(int slice_id, const SliceTraffic& model, double slot_start,
                             double slot_len, double carry_clock, RandomStream& rng,
                             std::vector<Packet>& out) {
  double clock = carry_clock;
  while (clock < slot_len) {
    Packet p;
    p.arrival_time = slot_start + clock;
    p.size_kb = sample(model.packet_size, rng);
    p.slice_id = slice_id;
    out.push_back(p);
    clock += sample(model.inter_arrival, rng);
  }
  return clock - slot_len;
}

}  // namespace clara::traffic
