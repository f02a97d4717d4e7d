#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include "clara/random.hpp"
#include "clara/traffic.hpp"

namespace clara::env {

inline constexpr int kNumSlices = 3;
inline constexpr const char* kSliceNames[kNumSlices] = {"Video", "VoLTE", "URLLC"};

int slice_index(const std::string& name);  // throws traffic::ConfigError on unknown name

using Vec3 = std::array<double, kNumSlices>;

// Agent-visible state: active user counts per slice.
struct Observation {
  std::array<int, kNumSlices> users{};
};

// Bandwidth split in kb per slot. Must satisfy b_i >= 0 and sum <= B (the
// explicit instantaneous constraint); step() rejects anything else.
struct Action {
  Vec3 bandwidth_kb{};
};

struct StepOutcome {
  double reward_kb = 0.0;   // total throughput this slot
  Vec3 cum_costs{};         // dissatisfaction ratio per slice, in [0,1]
  Vec3 inst_costs{};        // average latency per slice, seconds
  Observation next_obs;

  struct Diagnostics {
    Vec3 demand_kb{};        // t_i = backlog + fresh
    Vec3 fresh_kb{};
    Vec3 backlog_after_kb{};
    Vec3 transmitted_kb{};
    std::array<long, kNumSlices> completed_packets{};
    std::array<long, kNumSlices> queued_packets{};
  } diag;
};

struct EnvConfig {
  double total_bandwidth_kb = 102400.0;  // 100 Mbps with 1 Mb = 1024 kb, 1 s slots
  double slot_seconds = 1.0;
  Vec3 initial_lambda{50.0, 50.0, 10.0};
  int user_cap = 100;
  double p_natural_departure = 0.01;
  std::array<traffic::SliceTraffic, kNumSlices> traffic = traffic::default_slice_traffic();
};

struct UserRecord {
  double carry_clock = 0.0;  // residual time to next packet, from slot start
  bool alive = true;
};

struct SliceState {
  std::vector<UserRecord> users;
  std::deque<traffic::Packet> queue;  // FIFO backlog, ordered by arrival time
  double backlog_kb = 0.0;            // scalar accounting view of the queue
  double lambda = 0.0;                // Poisson arrival rate, users per slot
  std::vector<traffic::Packet> pending_fresh;  // pre-generated packets for the upcoming slot
  double pending_fresh_kb = 0.0;
};

// Hidden simulator state.
struct SliceWorld {
  std::array<SliceState, kNumSlices> slices;
  long clock = 0;  // slot index
  RandomStream rng;
};

// What privileged allocators may read before a step: next-slot demand and
// packet counts (backlog plus pre-generated fresh traffic).
struct WorldPeek {
  Vec3 demand_kb{};
  std::array<long, kNumSlices> packet_count{};
};

double throughput(const Vec3& bandwidth_kb, const Vec3& demand_kb);

// 0 when demand is met (or absent), else the unserved fraction 1 - b/t.
double dissatisfaction(double bandwidth_kb, double demand_kb);

// lambda' = 0.99*lambda + 0.01*lambda*min(b/t, 1); the ratio is 1 when t = 0.
double update_arrival_rate(double lambda, double bandwidth_kb, double demand_kb);

struct CompletedPacket {
  double arrival_time = 0.0;
  double latency = 0.0;
};

struct ServeResult {
  long completed_count = 0;
  double latency_sum = 0.0;
};

// Fluid FIFO service over [slot_start, slot_start+slot_len) at rate
// bandwidth_kb/slot_len. Backlogged packets go first, then fresh arrivals in
// time order; a packet arriving mid-slot is servable only from
// max(arrival_time, head-of-line time). Partially transmitted packets keep
// their residual size in `queue` for the next slot. `completed` optionally
// records per-packet latencies.
ServeResult serve_queue(std::deque<traffic::Packet>& queue, const std::vector<traffic::Packet>& fresh,
                        double bandwidth_kb, double slot_start, double slot_len,
                        std::vector<CompletedPacket>* completed = nullptr);

// Mean latency of packets completed this slot; the age of the head-of-line
// packet when nothing completed but traffic is queued; 0 with no traffic.
double slot_latency(const ServeResult& served, const std::deque<traffic::Packet>& remaining,
                    double slot_end);

// End-of-slot user churn: independent early departures with probability equal
// to the slice dissatisfaction, natural departures with p_nat, then Poisson
// arrivals clipped to the cap. New users get a fresh inter-arrival clock.
void apply_dynamics(SliceState& slice, double dissat, double p_nat, int user_cap,
                    const traffic::SliceTraffic& model, RandomStream& rng);

// Slot-synchronous environment over three slices sharing one bandwidth pool.
//
// step() executes: (1) fresh packets for the current slot were pre-generated
// at reset/previous step over the then-current user set; (2) t_i = backlog +
// fresh; (3) FIFO fluid service; (4) reward/costs/latency; (5) arrival-rate
// update; (6) user dynamics; (7) clock advance and pre-generation for the next
// slot. kb accounting is scalar (transmitted = min(b, t), backlog' = t -
// transmitted) so conservation is exact; the packet queue drives latency.
class SliceEnv {
public:
  explicit SliceEnv(EnvConfig cfg);

  Observation reset(std::uint64_t seed);
  StepOutcome step(const Action& action);

  WorldPeek peek() const;
  Observation observation() const;

  const EnvConfig& config() const { return cfg_; }
  const SliceWorld& world() const { return world_; }
  long clock() const { return world_.clock; }

private:
  void pregenerate_fresh();

  EnvConfig cfg_;
  SliceWorld world_;
  std::vector<traffic::Packet> gen_scratch_;
};

}  // namespace clara::env
