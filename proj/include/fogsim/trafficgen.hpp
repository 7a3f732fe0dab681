#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fogsim/packet.hpp"
#include "fogsim/rng.hpp"
#include "fogsim/sim_time.hpp"
#include "fogsim/topology.hpp"

namespace fogsim {

enum class AttackClass : uint8_t { ServiceAbuse, VolumetricFlood, MalformedPacket, VulnExploit };

const char* attack_class_name(AttackClass cls);
std::optional<AttackClass> attack_class_from(const std::string& name);

PacketKind packet_kind_for(AttackClass cls);

struct AttackScenario {
  std::string label;
  AttackClass cls = AttackClass::VolumetricFlood;
  std::vector<std::string> bot_ids;
  SimTime start;
  SimTime end;
  uint64_t intensity_pps = 0;  // per bot; ignored when total_pps set
  // Campaign-wide rate split exactly across bots (largest remainder), used by
  // presets that pin an aggregate figure rather than per-bot rates.
  std::optional<uint64_t> total_pps;
  uint32_t packet_size = 64;
  double amplification_factor = 1.0;  // VolumetricFlood only
  std::string target;
  // Amplified floods: per-packet size of the reflected stream. Defaults to
  // round(packet_size * amplification_factor) when unset.
  std::optional<uint32_t> response_size;
  // Amplified floods may pin exact victim-side totals instead of deriving
  // bytes from response_size (used by the github preset to hit the reported
  // aggregate rates exactly).
  std::optional<uint64_t> victim_bytes_per_sec;
};

struct Workload {
  double fog_fraction = 0.5;  // destination mix; remainder is cloud-terminated
  uint32_t request_size = 200;
  uint32_t response_size = 256;
  uint64_t deadline_us = 250'000;
  uint64_t fog_service_us = 300;
  uint64_t cloud_service_us = 2'000;
};

// Poisson arrival instants for one device over [window_begin, window_end).
// Deterministic for a fixed rng stream.
std::vector<SimTime> generate_benign(const Device& device, SimTime window_begin,
                                     SimTime window_end, RngStream& rng);

// Incremental form of the same process; the engine keeps one per device so
// memory stays O(devices) at any scale.
class PoissonProcess {
 public:
  PoissonProcess(double rate, SimTime start) : rate_(rate), cursor_s_(start.seconds()) {}
  // Next arrival strictly after the previous one; nullopt when rate == 0.
  std::optional<SimTime> next(RngStream& rng);

 private:
  double rate_;
  double cursor_s_;
};

enum class EmissionMode : uint8_t { Auto, PerPacket, Aggregated };

// One bot's deterministic emission schedule. Per-packet mode spreads exactly
// total_packets() instants across the campaign window; aggregated mode emits
// per-tick (count, bytes) totals. Both modes emit identical campaign totals.
class BotEmitter {
 public:
  BotEmitter(const AttackScenario& scenario, NodeIndex bot, NodeIndex target, FlowIndex flow,
             uint32_t bot_ordinal, uint32_t bot_total, bool aggregated, uint64_t tick_us);

  struct Emission {
    SimTime at;
    uint64_t count = 0;
    uint64_t bytes = 0;
  };

  std::optional<Emission> next();

  bool aggregated() const { return aggregated_; }
  NodeIndex bot() const { return bot_; }
  NodeIndex target() const { return target_; }
  FlowIndex flow() const { return flow_; }
  PacketKind kind() const { return kind_; }
  uint32_t unit_size() const { return unit_size_; }
  uint64_t total_packets() const { return total_packets_; }
  uint64_t total_bytes() const { return total_bytes_; }

 private:
  NodeIndex bot_;
  NodeIndex target_;
  FlowIndex flow_;
  PacketKind kind_;
  uint32_t unit_size_ = 0;
  bool aggregated_ = false;
  uint64_t start_us_ = 0;
  uint64_t duration_us_ = 0;
  uint64_t tick_us_ = 0;
  uint64_t total_packets_ = 0;
  uint64_t total_bytes_ = 0;
  uint64_t emitted_packets_ = 0;
  uint64_t emitted_bytes_ = 0;
  uint64_t next_ordinal_ = 0;  // packet ordinal (per-packet) or tick ordinal
  uint64_t tick_count_ = 0;
};

// Validates the scenario against the topology and materializes one emitter per
// bot. Throws ConfigError(UnknownBot | EmptyBotSet). The aggregation threshold
// is per-source pps; Auto picks aggregated emission above it.
std::vector<BotEmitter> inject_attack(const AttackScenario& scenario, const Topology& topology,
                                      EmissionMode mode, uint64_t aggregation_threshold_pps,
                                      uint64_t tick_us, FlowIndex flow);

// Reflection amplification: the response is factor times the trigger size and
// goes to the spoofed victim regardless of who emitted the trigger.
Packet amplify(const Packet& request, double factor, NodeIndex victim,
               std::optional<uint32_t> response_size = std::nullopt);

// Canned campaign presets addressable from the scenario config.
// Names: github-memcached-2018, flood-basic, abuse-basic, malformed-basic,
// exploit-chain. Throws ConfigError(UnknownPreset).
AttackScenario make_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace fogsim
