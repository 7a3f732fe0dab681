#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fogsim/packet.hpp"

namespace fogsim {

struct ScenarioConfig;  // scenario.hpp

enum class DeviceKind : uint8_t { Sensor, Actuator, PLC, Controller, Camera, Gateway };
enum class FogRole : uint8_t { RegionalFirewall, AggregateProcessor };
enum class NodeStatus : uint8_t { Active, Isolated };
enum class NodeType : uint8_t { Device, Fog, Cloud, App };

const char* device_kind_name(DeviceKind kind);
std::optional<DeviceKind> device_kind_from(const std::string& name);

struct Device {
  std::string id;
  std::string region_id;
  DeviceKind kind = DeviceKind::Sensor;
  double benign_rate = 0.0;  // packets per simulated second
  bool patched = true;       // VulnExploit converts unpatched devices
};

struct Region {
  std::string id;
  std::string firewall_id;
  uint32_t max_devices = 0;
  std::vector<std::string> device_ids;
};

struct FogNode {
  std::string id;
  FogRole role = FogRole::RegionalFirewall;
  std::string region_id;  // set iff role == RegionalFirewall
  std::string parent_id;  // next fog tier or the cloud
  double capacity = 0.0;  // task-units
  double load = 0.0;      // task-units currently hosted
  NodeStatus status = NodeStatus::Active;
};

struct Link {
  std::string a;
  std::string b;
  uint64_t latency_us = 0;
  uint64_t bandwidth_bps = 1;     // bytes per simulated second
  uint64_t buffer_bytes = 0;      // 0 = infinite FIFO
  bool control_only = false;      // lateral firewall links carry control traffic only
};

// Dense per-node record resolved at build time. Hot paths use NodeIndex; the
// string ids stay authoritative for config, reports, and traces.
struct NodeInfo {
  std::string id;
  NodeType type = NodeType::Device;
  NodeIndex parent = kInvalidIndex;  // routing tree; cloud has none
  uint32_t depth = 0;                // cloud = 0
  RegionIndex region = kInvalidIndex;
  uint32_t device_ix = kInvalidIndex;  // into Topology::devices
  uint32_t fog_ix = kInvalidIndex;     // into Topology::fog_nodes
  LinkIndex uplink = kInvalidIndex;    // link toward parent
};

struct Topology {
  std::vector<Device> devices;
  std::vector<Region> regions;
  std::vector<FogNode> fog_nodes;
  std::string cloud_id;
  std::vector<std::string> app_ids;
  std::vector<Link> links;

  // Resolved index layer.
  std::vector<NodeInfo> nodes;
  NodeIndex cloud = kInvalidIndex;
  std::vector<NodeIndex> region_firewall;  // region index -> firewall node

  NodeIndex index_of(const std::string& id) const;  // kInvalidIndex if unknown
  const NodeInfo& info(NodeIndex n) const { return nodes[n]; }
  bool is_isolated(NodeIndex n) const;
  FogNode& fog_of(NodeIndex n) { return fog_nodes[nodes[n].fog_ix]; }
  const FogNode& fog_of(NodeIndex n) const { return fog_nodes[nodes[n].fog_ix]; }

  // Next hop from `at` toward `dst` along the routing tree.
  NodeIndex next_hop(NodeIndex at, NodeIndex dst) const;
  LinkIndex link_between(NodeIndex a, NodeIndex b) const;
};

// Invariant violations are data, not failures: validate() never throws.
enum class ViolationCode {
  MissingCloud,
  DuplicateCloud,
  DuplicateId,
  DanglingReference,
  CapacityExceeded,
  CycleDetected,
  DisconnectedNode,
  PartitionViolation,
  BadLink,
  OverloadedNode,
};

const char* violation_code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  bool has(ViolationCode code) const;
};

enum class RouteError : uint8_t { None, UnknownNode, NoRoute };

struct Route {
  std::vector<NodeIndex> hops;  // src first, dst last
  RouteError error = RouteError::None;
  bool ok() const { return error == RouteError::None; }
};

// Builds the resolved topology from the scenario config. Throws ConfigError
// with DuplicateId / DanglingReference / CapacityExceeded / DisconnectedNode.
Topology build_topology(const ScenarioConfig& config);

ValidationReport validate(const Topology& topology);

// Hierarchical path src -> regional firewall -> ancestors -> cloud -> dst
// subtree. Isolated fog nodes block every data-plane path through them.
Route route_path(const Topology& topology, const std::string& src, const std::string& dst);
Route route_path(const Topology& topology, NodeIndex src, NodeIndex dst);

}  // namespace fogsim
