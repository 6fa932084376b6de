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


#include "qecsplit/failure_cache.hpp"

#include "qecsplit/errors.hpp"

namespace qecsplit {

FailureCache::FailureCache(const EventClassifier& inner, std::size_t shards) : inner_(&inner) {
  if (shards == 0) throw InvalidParameter("cache needs at least one shard");
  for (std::size_t i = 0; i < shards; ++i) shards_.push_back(std::make_unique<Shard>());
}

bool FailureCache::is_malignant(const Event& event) const {
  const std::uint64_t h = event.hash();
  Shard& shard = *shards_[(h >> 32) % shards_.size()];
  std::lock_guard<std::mutex> lock(shard.mutex);
  if (auto it = shard.map.find(event); it != shard.map.end()) {
    hits_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  const bool bad = inner_->is_malignant(event);
  shard.map.emplace(event, bad);
  return bad;
}

std::size_t FailureCache::size() const {
  std::size_t n = 0;
  for (const auto& s : shards_) {
    std::lock_guard<std::mutex> lock(s->mutex);
    n += s->map.size();
  }
  return n;
}

void FailureCache::clear() {
  for (const auto& s : shards_) {
    std::lock_guard<std::mutex> lock(s->mutex);
    s->map.clear();
  }
  hits_ = 0;
  misses_ = 0;
}

}  // namespace qecsplit
