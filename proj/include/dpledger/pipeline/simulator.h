// Copyright 2026 The dpledger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPLEDGER_PIPELINE_SIMULATOR_H_
#define DPLEDGER_PIPELINE_SIMULATOR_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "dpledger/types.h"

namespace dpledger::pipeline {

enum class ClockMode { kVirtual, kWall };

// Single event queue driving every actor. Events at equal timestamps run in
// scheduling order, so a virtual-clock run is fully deterministic. In wall
// mode the loop sleeps until each event's due time and now() reports real
// elapsed time.
class Simulator {
 public:
  explicit Simulator(ClockMode mode = ClockMode::kVirtual) : mode_(mode) {}

  TimeNs now() const { return now_; }
  ClockMode mode() const { return mode_; }

  void At(TimeNs when, std::function<void()> fn);
  void After(TimeNs delay, std::function<void()> fn) {
    At(now_ + delay, std::move(fn));
  }

  // Drains the queue.
  void Run();

  std::size_t pending() const { return queue_.size(); }

 private:
  struct Event {
    TimeNs when;
    std::uint64_t seq;
    std::function<void()> fn;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      return a.when != b.when ? a.when > b.when : a.seq > b.seq;
    }
  };

  ClockMode mode_;
  TimeNs now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  bool started_ = false;
  std::chrono::steady_clock::time_point wall_start_;
};

// A single-server FIFO resource: jobs run back to back.
class ServiceQueue {
 public:
  // Returns the completion time of a job of length `cost` arriving at `now`.
  TimeNs Reserve(TimeNs now, TimeNs cost) {
    const TimeNs start = now > busy_until_ ? now : busy_until_;
    busy_until_ = start + cost;
    return busy_until_;
  }

 private:
  TimeNs busy_until_ = 0;
};

}  // namespace dpledger::pipeline

#endif  // DPLEDGER_PIPELINE_SIMULATOR_H_
