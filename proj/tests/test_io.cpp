#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "exbraid/cache.hpp"
#include "exbraid/error.hpp"
#include "exbraid/json_io.hpp"
#include "exbraid/labels.hpp"

using namespace exbraid;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("exbraid_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Labels, VectorFirstMap) {
  for (Algebra a : all_algebras()) {
    const RootSystem& rs = RootSystem::get(a);
    // l1 is the smallest nontrivial representation
    const Weight l1 = from_labels(a, [&] {
      std::vector<int> v(rs.rank(), 0);
      v[0] = 1;
      return v;
    }());
    EXPECT_EQ(rs.weyl_dim(l1), l1_dimension(a)) << algebra_name(a);
    for (std::size_t i = 1; i <= rs.rank(); ++i) {
      EXPECT_EQ(label_index(a, internal_index(a, i)), i);
      EXPECT_GE(rs.weyl_dim(Weight::fundamental(rs.rank(), i)), l1_dimension(a));
    }
  }
  EXPECT_EQ(l1_dimension(Algebra::F4), 26);
  EXPECT_EQ(internal_index(Algebra::F4, 1), 4u);
  EXPECT_EQ(internal_index(Algebra::E7, 1), 7u);
  EXPECT_EQ(internal_index(Algebra::E8, 1), 8u);
  EXPECT_EQ(internal_index(Algebra::E6, 1), 1u);
}

TEST(Labels, ParseAndPrint) {
  EXPECT_EQ(parse_object(Algebra::F4, "l1"), (Weight{0, 0, 0, 1}));
  EXPECT_EQ(parse_object(Algebra::F4, "2l1+l4"), (Weight{1, 0, 0, 2}));
  EXPECT_EQ(parse_object(Algebra::F4, "0,0,0,1"), (Weight{0, 0, 0, 1}));
  EXPECT_EQ(parse_object(Algebra::F4, "(1,0,0,0)"), (Weight{1, 0, 0, 0}));
  EXPECT_EQ(parse_object(Algebra::G2, "0"), (Weight{0, 0}));
  EXPECT_EQ(label_string(Algebra::F4, Weight{1, 0, 0, 2}), "2l1+l4");
  EXPECT_EQ(label_string(Algebra::G2, Weight{0, 0}), "0");
  for (const char* bad : {"l9", "x", "1,2,3", "-1,0", "l1+", ""}) EXPECT_THROW(parse_object(Algebra::G2, bad), PreconditionError) << bad;
  for (Algebra a : all_algebras()) {
    CategorySpec s(a, 40);
    for (const Weight& w : alcove(s)) {
      EXPECT_EQ(parse_object(a, label_string(a, w)), w);
      EXPECT_EQ(from_labels(a, to_labels(a, w)), w);
    }
  }
}

TEST(Json, CycloRoundTrip) {
  std::mt19937 rng(5);
  for (std::uint32_t n : {1u, 4u, 7u, 24u, 48u, 105u}) {
    CycloNumber x;
    for (int i = 0; i < 5; ++i) x += CycloNumber(mpq_class(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4)) * make_root_of_unity(n, rng() % n);
    const Json j = to_json(x);
    EXPECT_EQ(j["coeffs"].size(), euler_phi(x.conductor()));
    EXPECT_EQ(cyclo_from_json(j), x);
    EXPECT_EQ(cyclo_from_json(Json::parse(j.dump())), x);
  }
}

TEST(Json, WeightSystemAndFusionRoundTrip) {
  const RootSystem& f4 = RootSystem::get(Algebra::F4);
  const auto ws = f4.weight_system(Weight{1, 0, 0, 1});
  const WeightSystem back = weight_system_from_json(Json::parse(to_json(*ws).dump()));
  EXPECT_EQ(back.highest, ws->highest);
  EXPECT_EQ(back.dominant, ws->dominant);
  EXPECT_EQ(back.dim, ws->dim);

  const auto fd = tensor_square_truncated(CategorySpec(Algebra::F4, 24), Weight{1, 0, 0, 0});
  const FusionDecomposition fb = fusion_from_json(Json::parse(to_json(fd).dump()));
  EXPECT_EQ(to_json(fb).dump(), to_json(fd).dump());
}

TEST(Cache, ResolveDirectory) {
  ::unsetenv(kCacheEnv);
  EXPECT_FALSE(resolve_cache_dir("").has_value());
  ::setenv(kCacheEnv, "/tmp/from_env", 1);
  EXPECT_EQ(resolve_cache_dir("").value(), fs::path("/tmp/from_env"));
  EXPECT_EQ(resolve_cache_dir("/tmp/flag").value(), fs::path("/tmp/flag"));
  ::unsetenv(kCacheEnv);
}

TEST(Cache, TransparencyAndHits) {
  const fs::path dir = fresh_dir("cache");
  auto run = [] {
    Json out = Json::array();
    for (int ell : {22, 24}) {
      CategorySpec s(Algebra::F4, ell);
      out.push_back(to_json(tensor_square_truncated(s, Weight{1, 0, 0, 0})));
      out.push_back(to_json(analyze(s)));
    }
    return out.dump();
  };
  const std::string plain = run();
  std::size_t writes = 0;
  {
    ScopedCache cache(dir);
    EXPECT_EQ(run(), plain);
    writes = cache.cache().writes();
  }
  EXPECT_GT(writes, 0u);
  EXPECT_TRUE(fs::exists(dir / "fusion"));
  {
    ScopedCache cache(dir);
    EXPECT_EQ(run(), plain);
    EXPECT_GT(cache.cache().hits(), 0u);
  }
  // a corrupt entry is a miss, never an error
  for (const auto& e : fs::directory_iterator(dir / "fusion")) {
    std::ofstream(e.path()) << "{not json";
    break;
  }
  {
    ScopedCache cache(dir);
    EXPECT_EQ(run(), plain);
  }
  // well-formed JSON with a bad field value is a miss too
  for (const auto& e : fs::directory_iterator(dir / "fusion")) {
    std::stringstream buf;
    buf << std::ifstream(e.path()).rdbuf();
    std::string text = buf.str();
    const auto at = text.find("\"symmetric\"");
    if (at == std::string::npos) continue;
    text.replace(at, 11, "\"bogus\"");
    std::ofstream(e.path()) << text;
  }
  {
    ScopedCache cache(dir);
    EXPECT_EQ(run(), plain);
  }
  fs::remove_all(dir);
}

TEST(Cache, WeightSystemFilesRoundTrip) {
  const fs::path dir = fresh_dir("ws");
  DirectoryCache c(dir);
  const auto ws = RootSystem::get(Algebra::E6).weight_system(Weight::fundamental(6, 2));
  c.store(Algebra::E6, *ws);
  auto back = c.load(Algebra::E6, Weight::fundamental(6, 2));
  ASSERT_TRUE(back);
  EXPECT_EQ(back->dominant, ws->dominant);
  EXPECT_FALSE(c.load(Algebra::E6, Weight::fundamental(6, 3)));
  EXPECT_EQ(c.hits(), 1u);
  EXPECT_EQ(c.misses(), 1u);
  fs::remove_all(dir);
}
