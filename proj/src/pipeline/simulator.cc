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

#include "dpledger/pipeline/simulator.h"

#include <thread>
#include <utility>

namespace dpledger::pipeline {

void Simulator::At(TimeNs when, std::function<void()> fn) {
  if (when < now_) when = now_;
  queue_.push(Event{when, next_seq_++, std::move(fn)});
}

void Simulator::Run() {
  if (mode_ == ClockMode::kWall && !started_) {
    wall_start_ = std::chrono::steady_clock::now();
    started_ = true;
  }
  while (!queue_.empty()) {
    Event ev = queue_.top();
    queue_.pop();
    if (mode_ == ClockMode::kWall) {
      std::this_thread::sleep_until(wall_start_ +
                                    std::chrono::nanoseconds(ev.when));
      const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - wall_start_);
      now_ = elapsed.count() > ev.when ? elapsed.count() : ev.when;
    } else {
      now_ = ev.when;
    }
    ev.fn();
  }
}

}  // namespace dpledger::pipeline
