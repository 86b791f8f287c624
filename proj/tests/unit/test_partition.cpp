#include <doctest.h>

#include "oracles.hpp"
#include "seqcong/errors.hpp"
#include "seqcong/partition.hpp"

using namespace seqcong;

TEST_CASE("construction validates parts") {
  CHECK(Partition{}.empty());
  CHECK(Partition{5, 3, 3}.size() == 11);
  CHECK_THROWS_AS(Partition({3, 4}), DomainError);
  CHECK_THROWS_AS(Partition({3, 0}), DomainError);
  try {
    Partition({5, 2, 3});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.index() == 2);  // λ_2 < λ_3
  }
  CHECK(Partition::from_unsorted({1, 4, 2}) == Partition{4, 2, 1});
  CHECK(Partition{4, 2}.part(3) == 0);
}

TEST_CASE("frequency view") {
  const Partition p{5, 5, 5, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  const FrequencyMap f(p);
  CHECK(f.frequency(2) == 4);
  CHECK(f.frequency(4) == 0);
  CHECK(f.to_partition() == p);
  CHECK(to_string(f) == "<1^4, 2^4, 3^1, 5^3>");
  FrequencyMap g;
  g.add(3, 0);
  CHECK(g.empty());
  CHECK_THROWS_AS(g.add(0, 1), DomainError);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{7, 5, 5, 4, 1}) == Partition{5, 4, 4, 4, 3, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{6, 4, 1}) == Partition{3, 2, 2, 2, 1, 1});
}

TEST_CASE("conjugate agrees with the transpose oracle and is an involution") {
  for (const auto& p : oracle::partitions_upto(16)) {
    const auto c = conjugate(p);
    REQUIRE(c == oracle::transpose(p));
    CHECK(conjugate(c) == p);
    CHECK(c.size() == p.size());
  }
}

TEST_CASE("self-conjugacy") {
  CHECK(is_self_conjugate(Partition{3, 2, 1}));
  CHECK(is_self_conjugate(Partition{2, 1}));
  CHECK(is_self_conjugate(Partition{}));
  CHECK_FALSE(is_self_conjugate(Partition{3, 1}));
  for (const auto& p : oracle::partitions_upto(16)) CHECK(is_self_conjugate(p) == (oracle::transpose(p) == p));
}

TEST_CASE("star, scalar and merge") {
  CHECK(star_add(Partition{5, 3, 2, 2}, Partition{3, 2, 1}) == Partition{8, 5, 3, 2});
  CHECK(star_add(Partition{4, 1}, Partition{}) == Partition{4, 1});
  CHECK(star_add(Partition{2, 2}, Partition{2, 2}) == scalar_mul(2, Partition{2, 2}));
  CHECK(scalar_mul(0, Partition{5, 1}) == Partition{});
  CHECK(scalar_mul(3, Partition{3, 3, 3}) == Partition{9, 9, 9});
  CHECK(oplus_merge(Partition{3, 1}, Partition{2, 1}) == Partition{3, 2, 1, 1});
  CHECK(oplus_merge(Partition{2}, Partition{2}) == Partition{2, 2});
  CHECK(oplus_merge(Partition{4}, Partition{}) == Partition{4});
}

TEST_CASE("star and merge are conjugate to each other") {
  const auto ps = oracle::partitions_upto(7);
  for (const auto& a : ps)
    for (const auto& b : ps) {
      CHECK(star_add(a, b) == star_add(b, a));
      CHECK(conjugate(star_add(a, b)) == oplus_merge(conjugate(a), conjugate(b)));
      CHECK(star_add(a, b).size() == a.size() + b.size());
    }
}

TEST_CASE("shift, tail and Durfee square") {
  CHECK(shift(Partition{2, 1}, 1) == Partition{3, 2});
  CHECK(shift(Partition{2, 1}, 0) == Partition{2, 1});
  CHECK(shift(Partition{1, 1}, 2) == Partition{3, 3});
  const Partition t{3, 3, 2, 1, 1, 1};
  CHECK(tail(t, 2) == Partition{2, 1, 1, 1});
  CHECK(tail(t, 0) == Partition{});
  CHECK(tail(t, 5) == t);
  CHECK(head_above(t, 2) == Partition{3, 3});
  CHECK(durfee_size(Partition{7, 6, 3, 3, 1}) == 3);
  CHECK(durfee_size(Partition{}) == 0);
  CHECK(durfee_size(Partition{1, 1, 1, 1}) == 1);
}

TEST_CASE("Durfee size is preserved by conjugation") {
  for (const auto& p : oracle::partitions_upto(14)) CHECK(durfee_size(p) == durfee_size(conjugate(p)));
}

TEST_CASE("part removal") {
  FrequencyMap drop;
  drop.add(3);
  CHECK(remove_parts(Partition{3, 2, 1}, drop) == Partition{2, 1});
  CHECK(remove_parts(Partition{3}, drop) == Partition{});
  FrequencyMap ones;
  ones.add(1, 2);
  CHECK(remove_parts(Partition{4, 1, 1, 1}, ones) == Partition{4, 1});
  CHECK_THROWS_AS(remove_parts(Partition{4, 1}, ones), ContainmentError);
}

TEST_CASE("overflow is reported") {
  const Part big = std::numeric_limits<Part>::max();
  CHECK_THROWS_AS(shift(Partition{big}, 1), OverflowError);
  CHECK_THROWS_AS(scalar_mul(2, Partition{big}), OverflowError);
  CHECK_THROWS_AS((Partition{big, big}.size()), OverflowError);
}

TEST_CASE("diagram and text forms") {
  CHECK(render_diagram(Partition{2, 1}) == "■ ■\n■");
  CHECK(render_diagram(Partition{}) == "(empty)");
  CHECK(render_diagram(Partition{3, 3}) == "■ ■ ■\n■ ■ ■");
  CHECK(to_string(Partition{7, 5, 5, 4, 1}) == "(7, 5, 5, 4, 1)");
  CHECK(to_string(Partition{}) == "()");
}
