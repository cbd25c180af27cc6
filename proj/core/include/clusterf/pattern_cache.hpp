#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "clusterf/seed.hpp"

namespace clusterf {

// Memo of the values a pattern assigns to tree vertices, keyed by reduced
// path. Safe for concurrent use: entries are immutable once inserted and
// racing writers compute equal values, the first insert wins.
//
// Entry must provide `static Entry make_root(const ExchangeMatrix&)` and
// `Entry mutated(std::size_t k) const`.
template <class Entry>
class PatternCache {
 public:
  explicit PatternCache(ExchangeMatrix root) : root_(std::move(root)) {}

  const ExchangeMatrix& root() const { return root_; }

  std::shared_ptr<const Entry> at(const MutationSequence& path) const {
    path.validate(root_.rank());
    return lookup(path.reduced().steps());
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
  }

 private:
  using Key = std::vector<std::size_t>;

  std::shared_ptr<const Entry> lookup(const Key& key) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    std::shared_ptr<const Entry> value;
    if (key.empty()) {
      value = std::make_shared<const Entry>(Entry::make_root(root_));
    } else {
      Key parent(key.begin(), key.end() - 1);
      value = std::make_shared<const Entry>(lookup(parent)->mutated(key.back()));
    }
    std::lock_guard lock(mu_);
    return entries_.try_emplace(key, std::move(value)).first->second;
  }

  ExchangeMatrix root_;
  mutable std::mutex mu_;
  mutable std::map<Key, std::shared_ptr<const Entry>> entries_;
};

// Process-wide registry handing out one cache per root matrix.
template <class Entry>
class PatternRegistry {
 public:
  static std::shared_ptr<const PatternCache<Entry>> get(const ExchangeMatrix& root) {
    auto& self = instance();
    std::lock_guard lock(self.mu_);
    auto& slot = self.caches_[root];
    if (!slot) slot = std::make_shared<const PatternCache<Entry>>(root);
    return slot;
  }

  static void clear() {
    auto& self = instance();
    std::lock_guard lock(self.mu_);
    self.caches_.clear();
  }

 private:
  static PatternRegistry& instance() {
    static PatternRegistry r;
    return r;
  }

  std::mutex mu_;
  std::map<ExchangeMatrix, std::shared_ptr<const PatternCache<Entry>>> caches_;
};

}  // namespace clusterf
