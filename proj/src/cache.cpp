#include "exbraid/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "exbraid/error.hpp"
#include "exbraid/json_io.hpp"

namespace exbraid {

namespace fs = std::filesystem;

namespace {

std::string key(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) s += (i ? "_" : "") + std::to_string(w[i]);
  return s;
}

std::optional<Json> read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

}  // namespace

DirectoryCache::DirectoryCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_ / "weights", ec);
  if (!ec) fs::create_directories(dir_ / "fusion", ec);
  if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

fs::path DirectoryCache::weight_path(Algebra a, const Weight& w) const {
  return dir_ / "weights" / (algebra_name(a) + "_" + key(w) + ".json");
}

fs::path DirectoryCache::fusion_path(const CategorySpec& spec, const Weight& w) const {
  return dir_ / "fusion" / (algebra_name(spec.algebra()) + "_l" + std::to_string(spec.ell()) + "_" + key(w) + ".json");
}

void DirectoryCache::write_atomic(const fs::path& p, const std::string& text) {
  std::ostringstream tmpname;
  tmpname << p.filename().string() << ".tmp." << ::getpid() << "." << std::this_thread::get_id() << "."
          << writes_.fetch_add(1);
  const fs::path tmp = p.parent_path() / tmpname.str();
  {
    std::ofstream out(tmp);
    out << text;
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot publish cache file " + p.string());
  }
}

std::shared_ptr<const WeightSystem> DirectoryCache::load(Algebra a, const Weight& lambda) {
  auto j = read_json(weight_path(a, lambda));
  if (j) {
    try {
      auto ws = std::make_shared<WeightSystem>(weight_system_from_json(*j));
      if (ws->highest == lambda) {
        ++hits_;
        return ws;
      }
    } catch (const std::exception&) {
    }
  }
  ++misses_;
  return nullptr;
}

void DirectoryCache::store(Algebra a, const WeightSystem& ws) {
  write_atomic(weight_path(a, ws.highest), to_json(ws).dump());
}

std::shared_ptr<const FusionDecomposition> DirectoryCache::load(const CategorySpec& spec, const Weight& lambda) {
  auto j = read_json(fusion_path(spec, lambda));
  if (j) {
    try {
      auto fd = std::make_shared<FusionDecomposition>(fusion_from_json(*j));
      if (fd->left == lambda && fd->ell == spec.ell()) {
        ++hits_;
        return fd;
      }
    } catch (const std::exception&) {
    }
  }
  ++misses_;
  return nullptr;
}

void DirectoryCache::store(const CategorySpec& spec, const FusionDecomposition& fd) {
  write_atomic(fusion_path(spec, fd.left), to_json(fd).dump());
}

std::optional<fs::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv(kCacheEnv); env && *env) return fs::path(env);
  return std::nullopt;
}

ScopedCache::ScopedCache(fs::path dir) : cache_(std::move(dir)) {
  set_weight_system_store(&cache_);
  set_fusion_store(&cache_);
}

ScopedCache::~ScopedCache() {
  set_weight_system_store(nullptr);
  set_fusion_store(nullptr);
}

}  // namespace exbraid
