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

#include "coldbench/sim/simulator.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace coldbench {

EventHandle Simulator::ScheduleAt(SimTime fire_at, Action action) {
  if (fire_at < Now()) {
    throw std::logic_error("cannot schedule event at t=" + std::to_string(fire_at) +
                           " before now=" + std::to_string(Now()));
  }
  const std::uint64_t seq = next_seq_++;
  queue_.push(Event{fire_at, seq, std::move(action)});
  live_.insert(seq);
  return EventHandle{seq};
}

EventHandle Simulator::ScheduleAfter(SimTime delay, Action action) {
  if (delay < 0) {
    throw std::logic_error("negative event delay");
  }
  return ScheduleAt(Now() + delay, std::move(action));
}

bool Simulator::Cancel(EventHandle handle) {
  if (live_.erase(handle.seq) == 0) {
    return false;
  }
  cancelled_.insert(handle.seq);
  return true;
}

bool Simulator::PopLive(Event& out) {
  while (!queue_.empty()) {
    // priority_queue::top is const; the action is moved out before pop.
    Event& top = const_cast<Event&>(queue_.top());
    if (cancelled_.erase(top.seq) != 0) {
      queue_.pop();
      continue;
    }
    out = std::move(top);
    queue_.pop();
    live_.erase(out.seq);
    return true;
  }
  return false;
}

bool Simulator::Step() {
  Event event;
  if (!PopLive(event)) {
    return false;
  }
  clock_.AdvanceTo(event.fire_at);
  ++dispatched_;
  event.action();
  return true;
}

std::size_t Simulator::RunUntil(SimTime t_end) {
  if (t_end < Now()) {
    throw std::logic_error("run horizon lies in the past");
  }
  std::size_t count = 0;
  while (!queue_.empty()) {
    const Event& top = queue_.top();
    if (cancelled_.count(top.seq) != 0) {
      cancelled_.erase(top.seq);
      queue_.pop();
      continue;
    }
    if (top.fire_at > t_end) {
      break;
    }
    Step();
    ++count;
  }
  clock_.AdvanceTo(t_end);
  return count;
}

std::size_t Simulator::Run() {
  std::size_t count = 0;
  while (Step()) {
    ++count;
  }
  return count;
}

}  // namespace coldbench
