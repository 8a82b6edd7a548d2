#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <utility>

#include "g3enum/exact.hpp"
#include "g3enum/memo_store.hpp"

namespace g3enum {

/// User-supplied RT_{g,d} values, read from lines "g d value" ('#' comments).
/// Each entry stands for RT_{g,d} with no fixed classes and the balanced
/// number 3d + 2(1 - g) of free point constraints.
class RtOverrides {
 public:
  static RtOverrides load(const std::filesystem::path& path);

  void set(int genus, int degree, ExactScalar value);
  std::optional<ExactScalar> find(int genus, int degree) const;
  bool empty() const { return values_.empty(); }

 private:
  std::map<std::pair<int, int>, ExactScalar> values_;
};

/// Everything an evaluation needs besides its arguments: the shared memo
/// store and any RT overrides. All engine operations are pure given a Session.
class Session {
 public:
  /// In-memory store unless `cache` is given, in which case it is loaded (if
  /// present) and becomes the flush() target.
  explicit Session(std::optional<std::filesystem::path> cache = std::nullopt);

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  /// The path named by G3ENUM_CACHE, if set and non-empty.
  static std::optional<std::filesystem::path> cache_path_from_environment();

  MemoStore& memo() { return memo_; }
  const MemoStore& memo() const { return memo_; }

  RtOverrides& rt_overrides() { return rt_overrides_; }
  const RtOverrides& rt_overrides() const { return rt_overrides_; }

 private:
  MemoStore memo_;
  RtOverrides rt_overrides_;
};

}  // namespace g3enum
