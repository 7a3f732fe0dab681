#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fogsim/defense.hpp"
#include "fogsim/topology.hpp"
#include "fogsim/trafficgen.hpp"

namespace fogsim {

// Per-region block. Generated device ids are "<region>-d<N>"; the firewall is
// "<region>-fw". Explicit devices may be added on top via TopologyConfig.
struct RegionConfig {
  std::string id;
  uint32_t max_devices = 64;
  uint32_t generate_devices = 0;
  DeviceKind device_kind = DeviceKind::Sensor;
  double benign_rate = 2.0;
  uint32_t unpatched = 0;  // first N generated devices are exploit-vulnerable
};

struct DeviceConfig {
  std::string id;
  std::string region;
  DeviceKind kind = DeviceKind::Sensor;
  double benign_rate = 2.0;
  bool patched = true;
};

// Optional aggregate-processor tier between firewalls and the cloud.
struct AggregateConfig {
  std::string id;
  std::vector<std::string> child_regions;
  double capacity = 200.0;
  double load = 0.0;
};

struct LinkConfig {
  std::string a;
  std::string b;
  int64_t latency_us = 0;
  int64_t bandwidth_bps = 1;
  int64_t buffer_bytes = 0;
  bool control_only = false;
};

struct LinkDefaults {
  uint64_t device_fw_latency_us = 500;
  uint64_t device_fw_bandwidth_bps = 1'250'000;
  uint64_t fw_parent_latency_us = 1'000;
  uint64_t fw_parent_bandwidth_bps = 12'500'000;
  uint64_t fog_cloud_latency_us = 55'000;
  uint64_t fog_cloud_bandwidth_bps = 12'500'000;
  uint64_t cloud_app_latency_us = 5'000;
  uint64_t cloud_app_bandwidth_bps = 125'000'000;
  uint64_t lateral_latency_us = 1'000;
  uint64_t lateral_bandwidth_bps = 12'500'000;
  uint64_t buffer_bytes = 0;
};

enum class LateralMode : uint8_t { None, Ring, Full };

struct TopologyConfig {
  std::vector<RegionConfig> regions;
  std::vector<DeviceConfig> devices;
  std::vector<AggregateConfig> aggregates;
  std::vector<LinkConfig> links;  // overrides and extra links
  LinkDefaults defaults;
  LateralMode lateral = LateralMode::Ring;
  std::string cloud_id = "cloud";
  std::vector<std::string> apps = {"app1"};
  double firewall_capacity = 100.0;
  // Firewall base load in task-units; unset derives it from the region's
  // fog-bound benign pps at task_unit_pps.
  std::optional<double> firewall_base_load;
};

struct DefenseConfig {
  bool on = true;
  DetectorConfig detector;
  PolicyConfig policy;
  PlacementPolicy placement;
};

struct CertFixture {
  std::string node;
  std::string issuer = "root";  // "root" | "rogue" | "self"
  std::optional<uint64_t> not_before_us;
  std::optional<uint64_t> not_after_us;
};

struct AuthConfig {
  std::string scheme = "sim-hmac";
  uint64_t sign_us = 200;
  uint64_t verify_us = 100;
  uint64_t handshake_timeout_us = 1'000'000;
  std::optional<uint64_t> cert_not_after_us;  // default: valid for the whole run
  std::vector<CertFixture> fixtures;
};

struct SimConfig {
  uint64_t seed = 1;
  uint64_t duration_us = 30'000'000;
  bool trace = false;
  EmissionMode emission_mode = EmissionMode::Auto;
  uint64_t aggregation_threshold_pps = 100'000;
  double malformed_penalty_factor = 10.0;
  bool crash_on_malformed = false;
  uint64_t reboot_us = 5'000'000;
  uint32_t control_msg_bytes = 256;
  double availability_floor = 0.95;
};

struct ScenarioConfig {
  TopologyConfig topology;
  Workload workload;
  std::vector<AttackScenario> attacks;  // presets expanded, bots resolved
  DefenseConfig defense;
  AuthConfig auth;
  SimConfig sim;
};

// Loads, validates, expands presets, and resolves bot selections. Diagnostics
// name the offending field path (e.g. "topology.links[0].latency_us").
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(const std::string& text);

// Canonical serialized form of the resolved config; identical configs hash
// identically regardless of key order in the source file.
std::string canonical_config(const ScenarioConfig& config);
std::string config_hash(const ScenarioConfig& config);
// Hash with the defense section blanked, for defense-on/off comparisons.
std::string config_hash_nodefense(const ScenarioConfig& config);

}  // namespace fogsim
