#include <doctest.h>

#include <algorithm>
#include <random>

#include "textcover/pipeline.hpp"

using namespace textcover;

namespace {

LenIndex pick(LenIndex a, LenIndex b) { return LenIndexLess{}(a, b) ? b : a; }

}  // namespace

TEST_CASE("construct and request without updates") {
  auto neutral = make_max_segment_tree({kNeutralEntry, kNeutralEntry});
  neutral.push();
  CHECK(neutral.request(0) == kNeutralEntry);

  auto ident = make_max_segment_tree({{3, 2}, {1, 1}});
  CHECK(ident.request(1) == LenIndex{1, 1});
  ident.push();
  CHECK(ident.request(1) == LenIndex{1, 1});
  CHECK(ident.request(0) == LenIndex{3, 2});

  auto single = make_max_segment_tree({{2, 5}});
  single.update(0, 0, {4, 1});
  single.push();
  CHECK(single.request(0) == LenIndex{4, 1});

  CHECK_THROWS_AS(make_max_segment_tree({}), std::invalid_argument);
  CHECK_THROWS_AS(single.request(1), std::out_of_range);
  CHECK_THROWS_AS(single.update(0, 1, {1, 1}), std::out_of_range);
}

TEST_CASE("update examples") {
  auto tree = make_max_segment_tree(std::vector<LenIndex>(3, kNeutralEntry));
  tree.update(0, 1, {5, 1});
  tree.push();
  CHECK(tree.pushed());
  CHECK(tree.request(0) == LenIndex{5, 1});
  CHECK(tree.request(1) == LenIndex{5, 1});
  CHECK(tree.request(2) == kNeutralEntry);

  tree.update(0, 2, kNeutralEntry);
  tree.push();
  CHECK(tree.request(0) == LenIndex{5, 1});
  CHECK(tree.request(2) == kNeutralEntry);

  auto tie = make_max_segment_tree(std::vector<LenIndex>(3, kNeutralEntry));
  tie.update(0, 2, {2, 9});
  tie.update(1, 1, {2, 4});
  tie.push();
  CHECK(tie.request(1) == LenIndex{2, 4});
  CHECK(tie.request(0) == LenIndex{2, 9});
}

TEST_CASE("pair order") {
  const LenIndexLess less;
  CHECK(less({1, 1}, {2, 7}));
  CHECK(less({2, 7}, {2, 3}));
  CHECK(less(kNeutralEntry, {0, 5}));
  CHECK_FALSE(less(kNeutralEntry, kNeutralEntry));
}

TEST_CASE("differential against a plain array") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 20; ++round) {
    const std::size_t l = 1 + rng() % 1024;
    std::vector<LenIndex> plain(l, kNeutralEntry);
    auto tree = make_max_segment_tree(plain);
    for (int op = 0; op < 500; ++op) {
      const auto kind = rng() % 4;
      if (kind < 2) {
        auto a = rng() % l, b = rng() % l;
        if (a > b) std::swap(a, b);
        const LenIndex x{rng() % 6, static_cast<std::int32_t>(1 + rng() % 5)};
        tree.update(a, b, x);
        for (auto i = a; i <= b; ++i) plain[i] = pick(plain[i], x);
      } else if (kind == 2) {
        tree.push();
      } else {
        const auto i = rng() % l;
        REQUIRE(tree.request(i) == plain[i]);
      }
    }
    tree.push();
    for (std::size_t i = 0; i < l; ++i) REQUIRE(tree.request(i) == plain[i]);
  }
}

TEST_CASE("idempotence and commutativity") {
  std::mt19937_64 rng(5);
  const std::size_t l = 257;
  struct Op {
    std::size_t a, b;
    LenIndex x;
  };
  std::vector<Op> batch;
  for (int i = 0; i < 64; ++i) {
    auto a = rng() % l, b = rng() % l;
    if (a > b) std::swap(a, b);
    batch.push_back({a, b, {rng() % 8, static_cast<std::int32_t>(1 + rng() % 8)}});
  }
  auto run = [&](const std::vector<Op>& ops, bool twice) {
    auto tree = make_max_segment_tree(std::vector<LenIndex>(l, kNeutralEntry));
    for (const auto& op : ops) {
      tree.update(op.a, op.b, op.x);
      if (twice) tree.update(op.a, op.b, op.x);
    }
    tree.push();
    std::vector<LenIndex> out;
    for (std::size_t i = 0; i < l; ++i) out.push_back(tree.request(i));
    return out;
  };
  const auto base = run(batch, false);
  CHECK(run(batch, true) == base);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(batch.begin(), batch.end(), rng);
    CHECK(run(batch, false) == base);
  }
}

TEST_CASE("build_long") {
  // t = "aaa", suf = (3, 2, 1) in 1-based offsets.
  const SuffixArray suf{2, 1, 0};
  auto tree = make_max_segment_tree(std::vector<LenIndex>(3, kNeutralEntry));
  tree.update(0, 2, {1, 1});
  tree.update(1, 2, {2, 2});
  tree.push();
  CHECK(build_long(tree, suf) == LongArray{2, 2, 1});

  auto empty = make_max_segment_tree(std::vector<LenIndex>(3, kNeutralEntry));
  empty.push();
  CHECK(build_long(empty, suf) == LongArray{-1, -1, -1});

  // t = "ab", s = ("ab"): suf = (1, 2), "ab" occupies rank 1.
  auto ab = make_max_segment_tree(std::vector<LenIndex>(2, kNeutralEntry));
  ab.update(0, 0, {2, 1});
  ab.push();
  CHECK(build_long(ab, SuffixArray{0, 1}) == LongArray{1, -1});
}
