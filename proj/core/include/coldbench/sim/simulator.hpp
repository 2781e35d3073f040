// Copyright 2026 The ColdBench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <unordered_set>
#include <vector>

#include "coldbench/sim/clock.hpp"
#include "coldbench/sim/time.hpp"

namespace coldbench {

struct EventHandle {
  std::uint64_t seq = 0;
  friend bool operator==(const EventHandle&, const EventHandle&) = default;
};

/*
 * Single-threaded discrete-event engine. Events fire in (fire_at, seq) order, where seq is
 * assigned at scheduling time, so two events at the same instant run in the order they were
 * scheduled. Handlers may schedule further events; those are dispatched in the same run if they
 * fall within the horizon.
 */
class Simulator {
 public:
  using Action = std::function<void()>;

  Simulator() = default;
  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  // Throws std::logic_error if fire_at lies in the past.
  EventHandle ScheduleAt(SimTime fire_at, Action action);
  EventHandle ScheduleAfter(SimTime delay, Action action);

  // Returns false if the event already fired, was cancelled, or never existed.
  bool Cancel(EventHandle handle);

  // Dispatches every event with fire_at <= t_end, then sets now to t_end. Throws std::logic_error
  // if t_end < Now().
  std::size_t RunUntil(SimTime t_end);
  // Dispatches until the queue drains. Returns the number of events dispatched.
  std::size_t Run();
  // Dispatches the next event, if any.
  bool Step();

  SimTime Now() const { return clock_.Now(); }
  const VirtualClock& clock() const { return clock_; }
  std::size_t pending() const { return queue_.size() - cancelled_.size(); }
  std::uint64_t dispatched() const { return dispatched_; }

 private:
  struct Event {
    SimTime fire_at;
    std::uint64_t seq;
    Action action;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      return a.fire_at != b.fire_at ? a.fire_at > b.fire_at : a.seq > b.seq;
    }
  };

  bool PopLive(Event& out);

  VirtualClock clock_;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::unordered_set<std::uint64_t> live_;
  std::unordered_set<std::uint64_t> cancelled_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t dispatched_ = 0;
};

}  // namespace coldbench
