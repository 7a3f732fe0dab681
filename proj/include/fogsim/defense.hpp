#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fogsim/packet.hpp"
#include "fogsim/sim_time.hpp"
#include "fogsim/topology.hpp"

namespace fogsim {

// Sliding-window rate + source-entropy detector. Stands in for the paper's
// unspecified ML detector behind a deterministic, testable interface.
struct DetectorConfig {
  uint64_t window_us = 1'000'000;
  uint64_t tick_us = 100'000;
  double rate_threshold_pps = 2'000.0;
  double entropy_rate_floor_pps = 500.0;  // entropy alerts need at least this rate
  double entropy_threshold_bits = 1.0;
};

enum class AlertTrigger : uint8_t { RateExceeded, LowEntropy };

const char* alert_trigger_name(AlertTrigger trigger);

struct Alert {
  RegionIndex region = kInvalidIndex;
  AlertTrigger trigger = AlertTrigger::RateExceeded;
  double observed_rate_pps = 0.0;
  double observed_entropy_bits = 0.0;
  SimTime at;
};

// Ring of per-tick aggregates covering the sliding window. Sources are packet
// origins (device node indices); per-flow counts ride along for ground-truth
// attack attribution and false-positive accounting.
class DetectorState {
 public:
  DetectorState() = default;
  DetectorState(uint64_t window_us, uint64_t tick_us);

  void observe(NodeIndex source, uint64_t count, FlowIndex flow, SimTime now);

  // Evicts buckets that left the window (now - window_us, now].
  void advance(SimTime now);

  uint64_t window_total() const { return window_total_; }
  // Per-source counts over the live window, sorted by source index.
  std::vector<std::pair<NodeIndex, uint64_t>> source_counts() const;
  std::vector<std::pair<FlowIndex, uint64_t>> flow_counts() const;
  SimTime last_alert_at() const { return last_alert_; }
  void record_alert(SimTime at) { last_alert_ = at; }

 private:
  struct Bucket {
    uint64_t start_us = 0;
    std::map<NodeIndex, uint64_t> per_source;
    std::map<FlowIndex, uint64_t> per_flow;
    uint64_t total = 0;
  };

  uint64_t bucket_start(SimTime t) const { return t.us - t.us % tick_us_; }

  uint64_t window_us_ = 1'000'000;
  uint64_t tick_us_ = 100'000;
  std::vector<Bucket> buckets_;
  uint64_t window_total_ = 0;
  SimTime last_alert_{0};
};

// Shannon entropy in bits over the source count distribution.
// Throws SimFault(EmptyWindow) when every count is zero.
double entropy(const std::vector<std::pair<NodeIndex, uint64_t>>& counts);

// Pure: at most one alert per tick, RateExceeded wins ties. The windowed rate
// always uses the full window length as denominator.
std::optional<Alert> evaluate(const DetectorState& state, const DetectorConfig& cfg,
                              RegionIndex region, SimTime now);

// Token bucket in integer micro-tokens: refill arithmetic is exact, so the
// admits(0,t) <= capacity + rate*t bound holds with no float slack.
class TokenBucket {
 public:
  TokenBucket() = default;
  TokenBucket(uint64_t capacity_tokens, uint64_t refill_per_sec, SimTime now)
      : capacity_micro_(capacity_tokens * kMicro),
        refill_per_sec_(refill_per_sec),
        micro_tokens_(capacity_tokens * kMicro),
        last_update_(now) {}

  bool admit(SimTime now, uint64_t cost = 1);
  // Batch form: admits as many of `want` as tokens allow, returns the count.
  uint64_t admit_up_to(SimTime now, uint64_t want);

  uint64_t tokens(SimTime now);  // whole tokens currently available
  uint64_t capacity() const { return capacity_micro_ / kMicro; }

 private:
  void refill(SimTime now);

  static constexpr uint64_t kMicro = 1'000'000;
  uint64_t capacity_micro_ = 0;
  uint64_t refill_per_sec_ = 0;
  uint64_t micro_tokens_ = 0;
  SimTime last_update_;
};

enum class ActionKind : uint8_t { RateLimit, IsolateRegion, MigrateTasks, AlertUp, UnIsolate };

const char* action_kind_name(ActionKind kind);

struct MitigationAction {
  ActionKind kind = ActionKind::AlertUp;
  std::string issued_by;  // firewall id
  std::string target;     // region or node id
  SimTime issued_at;
  // kind-specific params
  uint64_t rate_limit_pps = 0;
  double migrate_amount = 0.0;
};

// Canonical byte encoding signed into the action's envelope.
Bytes encode_action(const MitigationAction& action);

struct MigrationResult {
  std::vector<std::pair<std::string, double>> allocations;  // candidate id -> task-units
  double remainder = 0.0;
};

// Greedy: lowest load/capacity ratio first, ties to the lowest node id.
// Never overfills a candidate. Full remainder == NoCapacity for the caller.
MigrationResult migrate_tasks(double amount, std::vector<FogNode*> candidates);

struct PlacementPolicy {
  bool fog_serving_enabled = true;
};

enum class Placement : uint8_t { ServeAtFog, ForwardToCloud };

// Fog-eligible requests are served locally while the firewall has headroom.
Placement decide_placement(const Packet& request, const FogNode& firewall,
                           const PlacementPolicy& policy);

// Escalation ladder per region: alert #1 -> RateLimit, alert #2 inside the
// escalation window -> IsolateRegion; AlertUp accompanies both. A quiet period
// with no alerts un-isolates automatically.
struct PolicyConfig {
  bool enabled = true;
  uint64_t escalation_window_us = 5'000'000;
  uint64_t quiet_period_us = 30'000'000;
  uint64_t rate_limit_capacity = 500;
  uint64_t rate_limit_refill_pps = 500;
  bool migrate_on_isolate = true;
  double task_unit_pps = 1'000.0;  // 1 task-unit serves this many pps
};

}  // namespace fogsim
