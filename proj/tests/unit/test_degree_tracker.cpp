#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "greedy/degree_tracker.hpp"
#include "greedy/errors.hpp"
#include "greedy/random.hpp"

namespace {

using greedy::DegreeTracker;

TEST(DegreeTracker, EmptyHasNoExtremes) {
  DegreeTracker t(5);
  EXPECT_TRUE(t.empty());
  EXPECT_FALSE(t.min().has_value());
  EXPECT_FALSE(t.max().has_value());
  EXPECT_EQ(t.count_in(0, 5), 0u);
}

TEST(DegreeTracker, SmallExample) {
  const std::vector<std::uint32_t> degrees{3, 0, 3, 2};
  DegreeTracker t(3, degrees);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.min(), 0u);
  EXPECT_EQ(t.max(), 3u);
  EXPECT_EQ(t.count_in(2, 3), 3u);
  EXPECT_EQ(t.count_in(-10, 0), 1u);
  EXPECT_EQ(t.count_in(4, 100), 0u);
  EXPECT_EQ(t.count_in(3, 2), 0u);
  t.erase(0);
  EXPECT_EQ(t.min(), 2u);
  t.decrement(2);
  EXPECT_EQ(t.min(), 1u);
  EXPECT_THROW(t.erase(0), greedy::StateError);
}

// Random insert/erase/decrement sequences against a sorted vector.
TEST(DegreeTracker, MatchesMultisetOracle) {
  greedy::Rng rng = greedy::make_rng(11);
  for (std::uint32_t max_degree : {0u, 1u, 7u, 8u, 63u, 100u}) {
    DegreeTracker t(max_degree);
    std::vector<std::uint32_t> oracle;
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    for (int op = 0; op < 3000; ++op) {
      const auto kind = rng() % 3;
      if (kind == 0 || oracle.empty()) {
        const auto d = deg(rng);
        t.insert(d);
        oracle.push_back(d);
      } else {
        const auto idx = rng() % oracle.size();
        if (kind == 1 || oracle[idx] == 0) {
          t.erase(oracle[idx]);
          oracle.erase(oracle.begin() + static_cast<std::ptrdiff_t>(idx));
        } else {
          t.decrement(oracle[idx]);
          --oracle[idx];
        }
      }
      ASSERT_EQ(t.size(), oracle.size());
      if (oracle.empty()) {
        EXPECT_FALSE(t.min().has_value());
        continue;
      }
      EXPECT_EQ(t.min(), *std::min_element(oracle.begin(), oracle.end()));
      EXPECT_EQ(t.max(), *std::max_element(oracle.begin(), oracle.end()));
      const std::int64_t lo = static_cast<std::int64_t>(rng() % (max_degree + 3)) - 1;
      const std::int64_t hi = lo + static_cast<std::int64_t>(rng() % 5);
      const auto expected = std::count_if(oracle.begin(), oracle.end(), [&](auto d) {
        return static_cast<std::int64_t>(d) >= lo && static_cast<std::int64_t>(d) <= hi;
      });
      EXPECT_EQ(t.count_in(lo, hi), static_cast<std::size_t>(expected));
    }
  }
}

}  // namespace
