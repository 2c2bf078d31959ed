#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>

#include "exbraid/fusion.hpp"
#include "exbraid/rootdata.hpp"

namespace exbraid {

inline constexpr const char* kCacheEnv = "EXBRAID_CACHE_DIR";

// JSON files under <dir>/weights and <dir>/fusion, written via temp file
// plus rename so concurrent writers never expose partial files. Unreadable
// entries count as misses.
class DirectoryCache : public WeightSystemStore, public FusionStore {
 public:
  explicit DirectoryCache(std::filesystem::path dir);

  std::shared_ptr<const WeightSystem> load(Algebra a, const Weight& lambda) override;
  void store(Algebra a, const WeightSystem& ws) override;
  std::shared_ptr<const FusionDecomposition> load(const CategorySpec& spec, const Weight& lambda) override;
  void store(const CategorySpec& spec, const FusionDecomposition& fd) override;

  const std::filesystem::path& dir() const { return dir_; }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::size_t writes() const { return writes_; }

 private:
  std::filesystem::path weight_path(Algebra a, const Weight& w) const;
  std::filesystem::path fusion_path(const CategorySpec& spec, const Weight& w) const;
  void write_atomic(const std::filesystem::path& p, const std::string& text);

  std::filesystem::path dir_;
  std::atomic<std::size_t> hits_{0}, misses_{0}, writes_{0};
};

// Flag value, else the environment variable, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

// Installs the cache as the process-wide store for the object's lifetime.
class ScopedCache {
 public:
  explicit ScopedCache(std::filesystem::path dir);
  ~ScopedCache();
  ScopedCache(const ScopedCache&) = delete;
  ScopedCache& operator=(const ScopedCache&) = delete;
  DirectoryCache& cache() { return cache_; }

 private:
  DirectoryCache cache_;
};

}  // namespace exbraid
