#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "g3enum/exact.hpp"
#include "g3enum/invariant_key.hpp"

namespace g3enum {

/// Thread-safe write-once map from InvariantKey to ExactScalar.
///
/// Readers share a lock; writers take it exclusively. Binding a key that is
/// already bound to a different value throws ConsistencyError. The store can
/// be dumped to and reloaded from a text file with one record per line,
/// "key<TAB>numerator/denominator", sorted by key.
class MemoStore {
 public:
  MemoStore() = default;
  /// Loads `path` if it exists and remembers it for flush(). An empty
  /// optional gives a purely in-memory store.
  explicit MemoStore(std::optional<std::filesystem::path> path);

  MemoStore(const MemoStore&) = delete;
  MemoStore& operator=(const MemoStore&) = delete;

  std::optional<ExactScalar> find(const InvariantKey& key) const;

  /// Binds key -> value. Returns the stored value (equal to `value`).
  ExactScalar bind(const InvariantKey& key, const ExactScalar& value);

  template <typename Compute>
  ExactScalar get_or_compute(const InvariantKey& key, Compute&& compute) {
    if (auto hit = find(key)) return *std::move(hit);
    return bind(key, compute());
  }

  std::size_t size() const;
  std::vector<InvariantKey> keys() const;  // sorted
  void clear();

  void dump(const std::filesystem::path& path) const;
  /// Merges records from `path` into the store (write-once rules apply).
  void load(const std::filesystem::path& path);

  const std::optional<std::filesystem::path>& persistence_path() const { return path_; }
  /// Dumps to the persistence path, if one is set.
  void flush() const;

  std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<InvariantKey, ExactScalar, InvariantKeyHash> values_;
  std::optional<std::filesystem::path> path_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

}  // namespace g3enum
