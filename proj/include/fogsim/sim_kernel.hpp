#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "fogsim/errors.hpp"
#include "fogsim/event.hpp"
#include "fogsim/sim_time.hpp"

namespace fogsim {

struct SimSummary {
  uint64_t events_processed = 0;
  SimTime final_time;
  bool aborted = false;
  std::string fault;
};

// Pending events in strict (time, seq) order; seq increases in schedule order
// so simultaneous events pop FIFO.
class EventQueue {
 public:
  // Throws SimFault(PastEvent) when event.time < now.
  uint64_t schedule(SimTime now, Event event);

  bool empty() const { return heap_.empty(); }
  size_t size() const { return heap_.size(); }
  const Event& top() const { return heap_.top(); }
  Event pop();
  uint64_t next_seq() const { return next_seq_; }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  uint64_t next_seq_ = 0;
};

// Single-threaded deterministic event loop. Handlers see a non-decreasing
// clock; a handler exception aborts the run with a partial summary.
class SimKernel {
 public:
  using Handler = std::function<void(const Event&)>;

  SimTime now() const { return now_; }
  void schedule(Event event) { queue_.schedule(now_, std::move(event)); }
  size_t pending() const { return queue_.size(); }

  // Processes every event with time <= end; on normal completion the clock
  // rests at end.
  SimSummary run_until(SimTime end, const Handler& handler);

  // Processes until the queue is empty; the clock rests at the last event.
  SimSummary drain(const Handler& handler);

 private:
  SimSummary run_impl(SimTime end, bool to_end, const Handler& handler);

  EventQueue queue_;
  SimTime now_;
  uint64_t processed_ = 0;
};

// Per-link FIFO transmission state. Backlog is implied by the residual
// transmission time; finite buffers tail-drop whole batches.
struct LinkSpec {
  uint64_t latency_us = 0;
  uint64_t bandwidth_bps = 1;
  uint64_t buffer_bytes = 0;  // 0 = infinite
};

uint64_t transmission_us(uint64_t bytes, uint64_t bandwidth_bps);

class LinkChannel {
 public:
  // Full one-way delay a batch of `bytes` would see if enqueued now:
  // propagation + transmission + current queueing backlog.
  uint64_t delay_for(const LinkSpec& spec, uint64_t bytes, SimTime now) const;

  struct Tx {
    bool admitted = true;
    SimTime departure;  // transmission completes
    SimTime arrival;    // departure + propagation
  };

  Tx transmit(const LinkSpec& spec, uint64_t bytes, SimTime now);

  SimTime busy_until() const { return busy_until_; }

 private:
  SimTime busy_until_;
};

// FIFO service point (firewall fog-serving path, cloud). Also absorbs the
// malformed-packet processing penalty and crash reboots.
class ServerQueue {
 public:
  // Completion time for `count` items of `per_item_us` service each.
  SimTime serve(SimTime now, uint64_t per_item_us, uint64_t count);
  void block_until(SimTime t);  // crash reboot window
  SimTime busy_until() const { return busy_until_; }

 private:
  SimTime busy_until_;
};

}  // namespace fogsim
