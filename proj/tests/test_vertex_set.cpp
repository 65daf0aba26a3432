#include <doctest.h>

#include <unordered_set>
#include <vector>

#include "gpgame/errors.hpp"
#include "gpgame/vertex_set.hpp"

using gpgame::ParameterError;
using gpgame::PreconditionError;
using gpgame::VertexSet;

TEST_CASE("membership, size and clearing") {
  VertexSet s(10);
  CHECK(s.empty());
  CHECK(s.size() == 0);
  s.add(3);
  s.add(7);
  s.add(3);  // idempotent
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK(s.contains(7));
  CHECK(!s.contains(0));
  s.remove(3);
  CHECK(!s.contains(3));
  CHECK(s.size() == 1);
  s.clear();
  CHECK(s.empty());
  CHECK_THROWS_AS(VertexSet(-1), ParameterError);
}

TEST_CASE("wide sets behave identically to narrow ones") {
  VertexSet s(200);
  s.add(0);
  s.add(63);
  s.add(64);
  s.add(199);
  CHECK(s.size() == 4);
  CHECK(s.to_vector() == std::vector<int>{0, 63, 64, 199});
  VertexSet t = s;  // deep copy across the heap path
  t.remove(63);
  CHECK(s.contains(63));
  CHECK(!t.contains(63));
  CHECK(VertexSet::full(200).size() == 200);
}

TEST_CASE("construction helpers") {
  VertexSet a = VertexSet::of(6, {0, 2, 5});
  CHECK(a.to_vector() == std::vector<int>{0, 2, 5});
  VertexSet b = VertexSet::of(6, std::vector<int>{5, 2, 0});
  CHECK(a == b);
  VertexSet f = VertexSet::full(6);
  CHECK(f.size() == 6);
  CHECK(f.contains(0));
  CHECK(f.contains(5));
  CHECK(VertexSet::full(64).size() == 64);
  CHECK(VertexSet::full(65).size() == 65);
}

TEST_CASE("first and next_after scan members in ascending order") {
  VertexSet s = VertexSet::of(130, {1, 63, 64, 128});
  CHECK(s.first() == 1);
  CHECK(s.next_after(1) == 63);
  CHECK(s.next_after(63) == 64);
  CHECK(s.next_after(64) == 128);
  CHECK(s.next_after(128) == -1);
  CHECK(VertexSet(5).first() == -1);
}

TEST_CASE("drop_upto removes all members at or below the bound") {
  VertexSet s = VertexSet::of(130, {0, 63, 64, 129});
  SUBCASE("negative bound is a no-op") {
    s.drop_upto(-1);
    CHECK(s.size() == 4);
  }
  SUBCASE("word-boundary bounds") {
    VertexSet a = s;
    a.drop_upto(62);
    CHECK(a.to_vector() == std::vector<int>{63, 64, 129});
    VertexSet b = s;
    b.drop_upto(63);
    CHECK(b.to_vector() == std::vector<int>{64, 129});
    VertexSet c = s;
    c.drop_upto(64);
    CHECK(c.to_vector() == std::vector<int>{129});
  }
  SUBCASE("bound at or past the top empties the set") {
    s.drop_upto(129);
    CHECK(s.empty());
  }
}

TEST_CASE("set algebra") {
  VertexSet a = VertexSet::of(8, {0, 1, 4});
  VertexSet b = VertexSet::of(8, {1, 4, 6});
  VertexSet u = a;
  u |= b;
  CHECK(u == VertexSet::of(8, {0, 1, 4, 6}));
  VertexSet i = a;
  i &= b;
  CHECK(i == VertexSet::of(8, {1, 4}));
  VertexSet d = a;
  d.subtract(b);
  CHECK(d == VertexSet::of(8, {0}));
  CHECK(a.intersects(b));
  CHECK(!VertexSet::of(8, {0}).intersects(VertexSet::of(8, {6})));
  CHECK(i.is_subset_of(a));
  CHECK(i.is_subset_of(b));
  CHECK(!a.is_subset_of(b));
  CHECK(a.complement() == VertexSet::of(8, {2, 3, 5, 6, 7}));
  CHECK(VertexSet(8).complement() == VertexSet::full(8));
  CHECK_THROWS_AS(a.intersects(VertexSet(9)), PreconditionError);
  CHECK_THROWS_AS(VertexSet::of(8, {0}) |= VertexSet(9), PreconditionError);
}

TEST_CASE("lexicographic order compares member lists") {
  auto s = [](std::initializer_list<int> m) { return VertexSet::of(130, m); };
  CHECK(s({}).lex_less(s({0})));
  CHECK(s({0}).lex_less(s({0, 1})));
  CHECK(s({0, 1}).lex_less(s({1})));
  CHECK(s({0, 1}).lex_less(s({2})));
  CHECK(!s({2}).lex_less(s({0, 1})));
  CHECK(!s({0, 1}).lex_less(s({0, 1})));
  CHECK(s({0, 129}).lex_less(s({1, 2})));
}

TEST_CASE("hex round trips") {
  CHECK(VertexSet(8).to_hex() == "0");
  CHECK(VertexSet::of(8, {0}).to_hex() == "1");
  CHECK(VertexSet::of(8, {4, 5}).to_hex() == "30");
  for (auto members : {std::vector<int>{}, std::vector<int>{0},
                       std::vector<int>{0, 63, 64, 129}, std::vector<int>{129}}) {
    VertexSet s = VertexSet::of(130, members);
    CHECK(VertexSet::from_hex(130, s.to_hex()) == s);
  }
  CHECK(VertexSet::from_hex(8, "00000001") == VertexSet::of(8, {0}));
}

TEST_CASE("from_hex rejects malformed or out-of-range input") {
  CHECK_THROWS_AS(VertexSet::from_hex(8, ""), ParameterError);
  CHECK_THROWS_AS(VertexSet::from_hex(8, "zz"), ParameterError);
  CHECK_THROWS_AS(VertexSet::from_hex(8, "1g"), ParameterError);
  // 0x10 sets bit 4, outside a width-4 set.
  CHECK_THROWS_AS(VertexSet::from_hex(4, "10"), ParameterError);
  // 0x123 sets bit 8, outside a width-8 set.
  CHECK_THROWS_AS(VertexSet::from_hex(8, "123"), ParameterError);
}

TEST_CASE("to_string lists members in braces") {
  CHECK(VertexSet(4).to_string() == "{}");
  CHECK(VertexSet::of(6, {0, 2, 5}).to_string() == "{0, 2, 5}");
  CHECK(VertexSet::of(6, {3}).to_string() == "{3}");
}

TEST_CASE("hashing works in unordered containers") {
  std::unordered_set<VertexSet, gpgame::VertexSetHash> seen;
  seen.insert(VertexSet::of(10, {1, 2}));
  seen.insert(VertexSet::of(10, {1, 2}));
  seen.insert(VertexSet::of(10, {1, 3}));
  CHECK(seen.size() == 2);
  CHECK(VertexSet::of(10, {1, 2}).hash() == VertexSet::of(10, {1, 2}).hash());
}
