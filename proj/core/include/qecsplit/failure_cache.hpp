// Copyright 2026 The qecsplit Authors
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


#ifndef QECSPLIT_FAILURE_CACHE_HPP_
#define QECSPLIT_FAILURE_CACHE_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "qecsplit/event.hpp"
#include "qecsplit/malignancy.hpp"

namespace qecsplit {

struct EventHash {
  std::size_t operator()(const Event& e) const { return static_cast<std::size_t>(e.hash()); }
};

// Memoizes a classifier. One cache serves one (observable, decoder
// configuration); events are keyed canonically. Lookups and misses run under
// a per-shard lock, so each distinct event is classified once.
class FailureCache : public EventClassifier {
 public:
  explicit FailureCache(const EventClassifier& inner, std::size_t shards = 64);

  bool is_malignant(const Event& event) const override;
  std::uint64_t decoder_calls() const override { return inner_->decoder_calls(); }

  std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }
  std::size_t size() const;
  void clear();

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_map<Event, bool, EventHash> map;
  };

  const EventClassifier* inner_;
  std::vector<std::unique_ptr<Shard>> shards_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

}  // namespace qecsplit

#endif  // QECSPLIT_FAILURE_CACHE_HPP_
