#pragma once

#include <cstdint>

#include "fogsim/sim_time.hpp"

namespace fogsim {

using NodeIndex = uint32_t;
using RegionIndex = uint32_t;
using LinkIndex = uint32_t;
using FlowIndex = uint32_t;

inline constexpr uint32_t kInvalidIndex = 0xffffffffu;

enum class PacketKind : uint8_t { Request, Response, Junk, Malformed, Exploit };

const char* packet_kind_name(PacketKind kind);

// Packet flags.
inline constexpr uint8_t kPktServedAtFog = 0x01;  // response was produced at a fog node
inline constexpr uint8_t kPktControl = 0x02;      // control plane: passes isolated firewalls
inline constexpr uint8_t kPktFogBound = 0x04;     // request is fog-eligible (workload mix)

struct Packet {
  NodeIndex src = kInvalidIndex;
  NodeIndex dst = kInvalidIndex;
  uint32_t size_bytes = 0;  // per-packet size
  PacketKind kind = PacketKind::Request;
  uint8_t flags = 0;
  FlowIndex flow = kInvalidIndex;
  SimTime created_at;
};

// Unit of transfer in the simulation. Per-packet traffic uses count == 1;
// aggregated flood flows carry per-tick packet and byte totals so that
// GitHub-scale rates stay tractable. Byte and packet totals are exact in
// either mode.
struct PacketBatch {
  Packet packet;
  uint64_t count = 1;
  uint64_t bytes = 0;  // total across the batch

  static PacketBatch single(const Packet& p) { return PacketBatch{p, 1, p.size_bytes}; }
};

}  // namespace fogsim
