#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "clara/random.hpp"

namespace clara::traffic {

// Raised for parameter sets that cannot produce a valid sampler.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class DistKind {
  TruncatedPareto,
  Uniform,
  Constant,
  TruncatedExponential,
  TruncatedLognormal,
};

std::string to_string(DistKind kind);
DistKind dist_kind_from_string(const std::string& name);

// One inter-arrival or packet-size distribution. Times are in seconds, sizes
// in kilobits (1 kb = 1000 bits). `max_value <= 0` means untruncated, which is
// only allowed for the exponential kind.
struct DistSpec {
  DistKind kind = DistKind::Constant;
  double shape = 0.0;      // pareto exponent
  double mean = 0.0;       // target mean (post-truncation for pareto kinds)
  double max_value = 0.0;  // truncation bound
  double min_value = 0.0;  // uniform lower bound
  double std_dev = 0.0;    // lognormal standard deviation
  double value = 0.0;      // constant kind

  // Cached derived parameters, filled by the factory functions.
  double pareto_scale = 0.0;
  double log_mu = 0.0;
  double log_sigma = 0.0;

  static DistSpec truncated_pareto(double shape, double mean, double max_value);
  static DistSpec uniform(double min_value, double max_value);
  static DistSpec constant(double v);
  static DistSpec exponential(double mean, double max_value = 0.0);
  static DistSpec truncated_lognormal(double mean, double std_dev, double max_value);

  void validate() const;
};

// Mean of a Pareto(shape, scale) conditioned on X <= max (closed form).
double truncated_pareto_mean(double shape, double scale, double max_value);

// Solves for the Pareto scale x_m such that the max-truncated mean equals
// target_mean, to 1e-9 relative tolerance. Throws ConfigError when no scale in
// (0, max_value) attains the target.
double fit_truncated_pareto_scale(double shape, double target_mean, double max_value);

// One draw from `spec`. Truncation is by rejection so the fitted moments are
// preserved; a pathological spec that rejects 10^6 times in a row throws.
double sample(const DistSpec& spec, RandomStream& rng);

struct Packet {
  double arrival_time = 0.0;  // absolute sim time, seconds
  double size_kb = 0.0;
  int slice_id = 0;
};

// Inter-arrival plus packet-size model for one slice's users.
struct SliceTraffic {
  DistSpec inter_arrival;
  DistSpec packet_size;
};

// Table of the three slice models (Video, VoLTE, URLLC) with the standard
// parameters: Video Pareto(1.2) arrivals/sizes, VoLTE uniform arrivals and
// 40-byte packets, URLLC exponential arrivals and lognormal ~2MB packets.
std::array<SliceTraffic, 3> default_slice_traffic();

// Emits every packet of one user's renewal process that fires inside
// [slot_start, slot_start + slot_len). `carry_clock` is the residual time to
// the next arrival, measured from slot_start; the returned value is the new
// residual measured from the end of the slot, so the process is continuous
// across slot boundaries. Packet sizes are drawn at emission time.
double generate_user_packets(int slice_id, const SliceTraffic& model, double slot_start,
                             double slot_len, double carry_clock, RandomStream& rng,
                             std::vector<Packet>& out);

}  // namespace clara::traffic
