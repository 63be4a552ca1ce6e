#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "qdd/group.hpp"

using namespace qdd;

namespace {

std::set<std::pair<i64, i64>> as_set(const std::vector<GroupElem>& v) {
  std::set<std::pair<i64, i64>> s;
  for (const auto& g : v) s.insert({g.flip, g.rot});
  return s;
}

}  // namespace

TEST_CASE("parameter factorization") {
  auto P = DihedralParams::make(3, 12);
  CHECK(P.s == 1);
  CHECK(P.t == 4);
  CHECK(P.ps == 3);
  auto Q = DihedralParams::make(3, 27);
  CHECK(Q.s == 3);
  CHECK(Q.t == 1);
  CHECK(Q.ps == 27);
  CHECK(DihedralParams::make(7, 21).t == 3);

  CHECK_THROWS(DihedralParams::make(3, 5));   // p does not divide n
  CHECK_THROWS(DihedralParams::make(2, 4));   // even characteristic
  CHECK_THROWS(DihedralParams::make(9, 9));   // not prime
}

TEST_CASE("group law") {
  const i64 n = 7;
  // b a = a^{n-1} b
  CHECK(gmul(n, g_b(), g_rot(n, 1)) == GroupElem{6, 1});
  // a b = reflection with exponent 1
  CHECK(gmul(n, g_rot(n, 1), g_b()) == GroupElem{1, 1});
  // every reflection squares to the identity
  for (i64 r = 0; r < n; ++r) {
    const GroupElem refl{r, 1};
    CHECK(gmul(n, refl, refl) == g_identity());
    CHECK(ginv(n, refl) == refl);
  }
  CHECK(ginv(n, g_rot(n, 3)) == g_rot(n, 4));
  CHECK(g_rot(n, -2) == g_rot(n, 5));

  // exhaustive associativity and inverse law for a small even and odd n
  for (i64 m : {5, 6}) {
    const auto all = all_elements(m);
    CHECK(all.size() == static_cast<size_t>(2 * m));
    for (const auto& x : all) {
      CHECK(gmul(m, x, ginv(m, x)) == g_identity());
      CHECK(gmul(m, ginv(m, x), x) == g_identity());
      for (const auto& y : all)
        for (const auto& z : all)
          CHECK(gmul(m, gmul(m, x, y), z) == gmul(m, x, gmul(m, y, z)));
    }
  }
}

TEST_CASE("element orders") {
  CHECK(element_order(12, g_identity()) == 1);
  CHECK(element_order(12, g_rot(12, 1)) == 12);
  CHECK(element_order(12, g_rot(12, 8)) == 3);
  CHECK(element_order(12, g_rot(12, 6)) == 2);
  CHECK(element_order(12, g_b()) == 2);
  CHECK(element_order(12, GroupElem{5, 1}) == 2);
  // brute force agreement
  for (const auto& g : all_elements(9)) {
    GroupElem acc = g;
    i64 ord = 1;
    while (!(acc == g_identity())) {
      acc = gmul(9, acc, g);
      ++ord;
    }
    CHECK(element_order(9, g) == ord);
  }
}

TEST_CASE("conjugacy classes partition the group") {
  for (i64 n : {3, 5, 6, 9, 12, 21}) {
    const auto classes = conjugacy_classes(n);
    // expected count: rotations give 1 + floor(n/2) classes... identity,
    // pairs, central element; reflections give 1 (odd) or 2 (even)
    const i64 rot_classes = 1 + (n - 1) / 2 + (n % 2 == 0 ? 1 : 0);
    const i64 want = rot_classes + (n % 2 == 0 ? 2 : 1);
    CHECK(static_cast<i64>(classes.size()) == want);

    std::set<std::pair<i64, i64>> seen;
    for (const auto& cls : classes) {
      // the representative is a member, members are closed under conjugation
      const auto mset = as_set(cls.members);
      CHECK(mset.count({cls.rep.flip, cls.rep.rot}));
      for (const auto& m : cls.members)
        for (const auto& h : all_elements(n)) {
          const GroupElem c = gconj(n, h, m);
          CHECK(mset.count({c.flip, c.rot}));
        }
      for (const auto& m : cls.members) CHECK(seen.insert({m.flip, m.rot}).second);
    }
    CHECK(seen.size() == static_cast<size_t>(2 * n));
  }
}

TEST_CASE("conjugacy class layout for D_6") {
  const auto classes = conjugacy_classes(6);
  REQUIRE(classes.size() == 6);
  CHECK(classes[0].rep == g_identity());
  CHECK(classes[1].rep == g_rot(6, 1));
  CHECK(classes[1].members.size() == 2);
  CHECK(classes[2].rep == g_rot(6, 2));
  CHECK(classes[3].rep == g_rot(6, 3));
  CHECK(classes[3].members.size() == 1);
  CHECK(classes[4].rep == g_b());
  CHECK(classes[4].members == std::vector<GroupElem>{{0, 1}, {2, 1}, {4, 1}});
  CHECK(classes[5].rep == GroupElem{1, 1});
  CHECK(classes[5].members == std::vector<GroupElem>{{1, 1}, {3, 1}, {5, 1}});
}

TEST_CASE("centralizers") {
  // orbit-stabilizer: |class| * |centralizer| = |G|
  for (i64 n : {5, 6, 9, 12}) {
    for (const auto& cls : conjugacy_classes(n)) {
      const auto cent = centralizer(n, cls.rep);
      CHECK(cls.members.size() * cent.size() == static_cast<size_t>(2 * n));
      CHECK(is_subgroup(n, cent));
      for (const auto& h : cent) CHECK(gmul(n, h, cls.rep) == gmul(n, cls.rep, h));
    }
  }

  // known shapes
  CHECK(as_set(centralizer(5, g_b())) ==
        as_set(std::vector<GroupElem>{{0, 0}, {0, 1}}));
  CHECK(as_set(centralizer(6, g_b())) ==
        as_set(std::vector<GroupElem>{{0, 0}, {3, 0}, {0, 1}, {3, 1}}));
  CHECK(as_set(centralizer(6, GroupElem{1, 1})) ==
        as_set(std::vector<GroupElem>{{0, 0}, {3, 0}, {1, 1}, {4, 1}}));
  CHECK(centralizer(6, g_rot(6, 1)).size() == 6);   // the rotation subgroup
  CHECK(centralizer(6, g_rot(6, 3)).size() == 12);  // central element
  CHECK(centralizer(5, g_identity()).size() == 10);

  CHECK(centralizer_kind(6, g_identity()) == CentralizerKind::whole_group);
  CHECK(centralizer_kind(6, g_rot(6, 3)) == CentralizerKind::whole_group);
  CHECK(centralizer_kind(6, g_rot(6, 2)) == CentralizerKind::rotation_group);
  CHECK(centralizer_kind(6, g_b()) == CentralizerKind::klein_four);
  CHECK(centralizer_kind(5, g_b()) == CentralizerKind::reflection_pair);
}

TEST_CASE("regular class representatives") {
  // counts per parameter set: odd p-free part gives (t+3)/2, even (t+6)/2
  const std::vector<std::tuple<i64, i64, i64>> cases = {
      {3, 3, 2}, {3, 9, 2}, {3, 6, 4}, {3, 12, 5},
      {5, 5, 2}, {5, 10, 4}, {7, 21, 3}};
  for (const auto& [p, n, want] : cases) {
    const auto P = DihedralParams::make(p, n);
    const auto reps = p_regular_class_reps(P);
    CHECK(static_cast<i64>(reps.size()) == want);
    const i64 formula = P.t % 2 == 1 ? (P.t + 3) / 2 : (P.t + 6) / 2;
    CHECK(static_cast<i64>(reps.size()) == formula);

    // each rep has order prime to p and they sit in distinct classes;
    // together they exhaust the classes of p-regular elements
    const auto classes = conjugacy_classes(n);
    std::set<size_t> hit;
    for (const auto& r : reps) {
      CHECK(is_p_regular(P, r));
      for (size_t ci = 0; ci < classes.size(); ++ci) {
        const auto mset = as_set(classes[ci].members);
        if (mset.count({r.flip, r.rot})) {
          CHECK(hit.insert(ci).second);
          break;
        }
      }
    }
    size_t regular_classes = 0;
    for (const auto& cls : classes)
      if (is_p_regular(P, cls.rep)) ++regular_classes;
    CHECK(hit.size() == regular_classes);
  }
}

TEST_CASE("transversals") {
  // rotation subgroup in D_6: [1, b]
  std::vector<GroupElem> cn;
  for (i64 r = 0; r < 6; ++r) cn.push_back({r, 0});
  CHECK(coset_representatives(6, cn) == std::vector<GroupElem>{{0, 0}, {0, 1}});

  // two-element reflection subgroup in D_5: all rotations
  const auto t5 = coset_representatives(5, {{0, 0}, {0, 1}});
  REQUIRE(t5.size() == 5);
  for (i64 r = 0; r < 5; ++r) CHECK(t5[r] == g_rot(5, r));

  // Klein subgroup in D_6: [1, a, a^2]
  const auto k = coset_representatives(6, {{0, 0}, {3, 0}, {0, 1}, {3, 1}});
  CHECK(k == std::vector<GroupElem>{{0, 0}, {1, 0}, {2, 0}});

  // generic partition property
  for (i64 n : {5, 6, 9}) {
    for (const auto& cls : conjugacy_classes(n)) {
      const auto H = centralizer(n, cls.rep);
      const auto reps = coset_representatives(n, H);
      CHECK(reps.size() * H.size() == static_cast<size_t>(2 * n));
      CHECK(reps[0] == g_identity());
      std::set<std::pair<i64, i64>> covered;
      for (const auto& g : reps)
        for (const auto& h : H) {
          const GroupElem gh = gmul(n, g, h);
          CHECK(covered.insert({gh.flip, gh.rot}).second);
        }
    }
  }

  CHECK_THROWS(coset_representatives(6, {{0, 0}, {1, 0}}));  // not closed
}

TEST_CASE("element formatting") {
  CHECK(elem_to_string(g_identity()) == "1");
  CHECK(elem_to_string(g_rot(6, 1)) == "a");
  CHECK(elem_to_string(g_rot(6, 4)) == "a^4");
  CHECK(elem_to_string(g_b()) == "b");
  CHECK(elem_to_string(GroupElem{1, 1}) == "ab");
  CHECK(elem_to_string(GroupElem{3, 1}) == "a^3b");
}
