#include "g3enum/memo_store.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <string>

#include "g3enum/errors.hpp"

namespace g3enum {

MemoStore::MemoStore(std::optional<std::filesystem::path> path) : path_(std::move(path)) {
  if (path_ && std::filesystem::exists(*path_)) load(*path_);
}

std::optional<ExactScalar> MemoStore::find(const InvariantKey& key) const {
  std::shared_lock lock(mutex_);
  const auto it = values_.find(key);
  if (it == values_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

ExactScalar MemoStore::bind(const InvariantKey& key, const ExactScalar& value) {
  std::unique_lock lock(mutex_);
  const auto [it, inserted] = values_.emplace(key, value);
  if (!inserted && it->second != value) {
    throw ConsistencyError("memo conflict for " + key.str() + ": bound to " + it->second.str() +
                           ", rebinding to " + value.str());
  }
  return it->second;
}

std::size_t MemoStore::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

std::vector<InvariantKey> MemoStore::keys() const {
  std::vector<InvariantKey> out;
  {
    std::shared_lock lock(mutex_);
    out.reserve(values_.size());
    for (const auto& [k, v] : values_) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void MemoStore::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

void MemoStore::dump(const std::filesystem::path& path) const {
  std::vector<std::pair<InvariantKey, ExactScalar>> records;
  {
    std::shared_lock lock(mutex_);
    records.assign(values_.begin(), values_.end());
  }
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write cache file " + tmp.string());
    for (const auto& [key, value] : records) {
      out << key.str() << '\t' << value.numerator().get_str() << '/'
          << value.denominator().get_str() << '\n';
    }
    if (!out) throw ValidationError("error writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void MemoStore::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read cache file " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": missing TAB");
    }
    const auto key = InvariantKey::parse(std::string_view(line).substr(0, tab));
    const auto value = ExactScalar::parse(std::string_view(line).substr(tab + 1));
    bind(key, value);
  }
}

void MemoStore::flush() const {
  if (path_) dump(*path_);
}

}  // namespace g3enum
