#include <doctest.h>

#include <functional>
#include <random>

#include "minilog/stream.hpp"

using namespace minilog;

namespace {

Stream<int> ints(std::vector<int> v) { return Stream<int>::from_vector(std::move(v)); }

// Naturals from n upward: the canonical infinite stream.
Stream<int> naturals_from(int n) {
  return Stream<int>::lazy([n]() -> Stream<int>::CellOpt {
    return std::make_pair(n, naturals_from(n + 1));
  });
}

std::vector<int> all(Stream<int> s) { return to_vector(std::move(s)); }

}  // namespace

TEST_CASE("disj concatenates in order") {
  CHECK(all(disj(ints({1}), ints({2}))) == std::vector<int>{1, 2});
  CHECK(all(disj(ints({}), ints({7, 8}))) == std::vector<int>{7, 8});
  CHECK(all(disj(ints({7, 8}), ints({}))) == std::vector<int>{7, 8});
}

TEST_CASE("disj does not construct its right side until the left is exhausted") {
  int built = 0;
  Stream<int> s = disj(ints({1, 2}), std::function<Stream<int>()>([&built] {
                         ++built;
                         return ints({3});
                       }));
  auto c1 = s.next();
  REQUIRE(c1);
  CHECK(c1->first == 1);
  auto c2 = c1->second.next();
  REQUIRE(c2);
  CHECK(c2->first == 2);
  CHECK(built == 0);
  auto c3 = c2->second.next();
  REQUIRE(c3);
  CHECK(c3->first == 3);
  CHECK(built == 1);
}

TEST_CASE("bind is depth-first and propagates failure") {
  CHECK(all(bind(ints({}), [](int) { return ints({1}); })).empty());
  CHECK(all(bind(ints({5}), [](int) { return ints({}); })).empty());
  // For each x, all f(x) before the next element.
  auto out = all(bind(ints({1, 2}), [](int x) { return ints({x * 10, x * 10 + 1}); }));
  CHECK(out == std::vector<int>{10, 11, 20, 21});
}

TEST_CASE("commit keeps at most the first answer") {
  CHECK(all(commit(ints({4, 5, 6}))) == std::vector<int>{4});
  CHECK(all(commit(ints({}))).empty());
}

TEST_CASE("take stops early and works on infinite streams") {
  CHECK(take(0, naturals_from(0)).empty());
  CHECK(take(5, ints({1, 2})) == std::vector<int>{1, 2});
  CHECK(take(3, naturals_from(10)) == std::vector<int>{10, 11, 12});
  // An infinite bind over an infinite stream still yields lazily.
  auto doubled = bind(naturals_from(0), [](int x) { return ints({x, x}); });
  CHECK(take(4, doubled) == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("taking n forces only the work for n elements") {
  int forced = 0;
  std::function<Stream<int>(int)> from = [&](int n) {
    return Stream<int>::lazy([&forced, &from, n]() -> Stream<int>::CellOpt {
      ++forced;
      return std::make_pair(n, from(n + 1));
    });
  };
  take(4, from(0));
  CHECK(forced == 4);
}

TEST_CASE("stream algebra on random finite streams") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> val(0, 9);
  auto random_vec = [&] {
    std::vector<int> v(len(rng));
    for (int& x : v) x = val(rng);
    return v;
  };
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<int> va = random_vec(), vb = random_vec(), vc = random_vec();
    // disj is associative with [] as identity.
    CHECK(all(disj(disj(ints(va), ints(vb)), ints(vc))) ==
          all(disj(ints(va), disj(ints(vb), ints(vc)))));
    CHECK(all(disj(ints({}), ints(va))) == va);
    CHECK(all(disj(ints(va), ints({}))) == va);
    // bind distributes over disj.
    auto f = [](int x) {
      if (x % 3 == 0) return ints({});
      return ints({x, -x});
    };
    CHECK(all(bind(disj(ints(va), ints(vb)), f)) ==
          all(disj(bind(ints(va), f), bind(ints(vb), f))));
  }
}
