#pragma once

#include <cstdint>
#include <variant>

#include "fogsim/authplane.hpp"
#include "fogsim/defense.hpp"
#include "fogsim/packet.hpp"
#include "fogsim/sim_time.hpp"

namespace fogsim {

enum class EventKind : uint8_t {
  PacketArrival,
  PacketDeparture,
  DetectorTick,
  HandshakeMsg,
  MitigationAction,
  WorkloadSpawn,
  ScenarioEnd,
};

const char* event_kind_name(EventKind kind);

struct PacketArrivalEv {
  PacketBatch batch;
  NodeIndex at = kInvalidIndex;
};

// Fires when the batch finishes transmitting onto the link; the handler
// schedules the matching arrival one propagation delay later.
struct PacketDepartureEv {
  PacketBatch batch;
  NodeIndex from = kInvalidIndex;
  NodeIndex to = kInvalidIndex;
  LinkIndex link = kInvalidIndex;
};

struct DetectorTickEv {
  RegionIndex region = kInvalidIndex;
};

struct HandshakeEv {
  NodeIndex to = kInvalidIndex;
  NodeIndex from = kInvalidIndex;
  HandshakeMsg msg;
  bool timeout_check = false;  // deadline probe rather than a wire message
};

struct MitigationEv {
  MitigationAction action;
  SignedEnvelope envelope;  // verified on remote delivery
  NodeIndex to = kInvalidIndex;
  bool remote = false;
};

struct WorkloadSpawnEv {
  uint32_t emitter = 0;  // engine emitter table index
};

struct ScenarioEndEv {};

using EventPayload = std::variant<std::monostate, PacketArrivalEv, PacketDepartureEv,
                                  DetectorTickEv, HandshakeEv, MitigationEv, WorkloadSpawnEv,
                                  ScenarioEndEv>;

struct Event {
  SimTime time;
  uint64_t seq = 0;  // tie-break, assigned at schedule time
  EventKind kind = EventKind::ScenarioEnd;
  NodeIndex node = kInvalidIndex;  // principal node, for the trace
  EventPayload payload;
};

}  // namespace fogsim
