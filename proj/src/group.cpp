#include "qdd/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qdd {

DihedralParams DihedralParams::make(i64 p, i64 n) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n % p != 0) throw std::invalid_argument("p does not divide n");
  DihedralParams P;
  P.p = p;
  P.n = n;
  P.s = 0;
  P.t = n;
  P.ps = 1;
  while (P.t % p == 0) {
    P.t /= p;
    ++P.s;
    P.ps *= p;
  }
  return P;
}

bool elem_less(const GroupElem& x, const GroupElem& y) {
  if (x.flip != y.flip) return x.flip < y.flip;
  return x.rot < y.rot;
}

GroupElem g_rot(i64 n, i64 k) { return {((k % n) + n) % n, 0}; }

GroupElem gmul(i64 n, const GroupElem& x, const GroupElem& y) {
  // (a^i b^e)(a^j b^f) = a^{i + j} b^f        when e = 0
  //                    = a^{i - j} b^{1 + f}  when e = 1
  const i64 j = x.flip ? (n - y.rot) % n : y.rot;
  return {(x.rot + j) % n, (x.flip + y.flip) % 2};
}

GroupElem ginv(i64 n, const GroupElem& x) {
  if (x.flip) return x;  // reflections are involutions
  return {(n - x.rot) % n, 0};
}

GroupElem gconj(i64 n, const GroupElem& h, const GroupElem& x) {
  return gmul(n, gmul(n, h, x), ginv(n, h));
}

i64 element_order(i64 n, const GroupElem& x) {
  if (x.flip) return x == g_identity() ? 1 : 2;
  if (x.rot == 0) return 1;
  return n / std::gcd(n, x.rot);
}

std::vector<GroupElem> all_elements(i64 n) {
  std::vector<GroupElem> out;
  out.reserve(2 * n);
  for (i64 f = 0; f < 2; ++f)
    for (i64 r = 0; r < n; ++r) out.push_back({r, f});
  return out;
}

std::vector<ConjClass> conjugacy_classes(i64 n) {
  std::vector<ConjClass> out;
  out.push_back({g_identity(), {g_identity()}});
  for (i64 i = 1; 2 * i < n; ++i)
    out.push_back({{i, 0}, {{i, 0}, {n - i, 0}}});
  if (n % 2 == 0) out.push_back({{n / 2, 0}, {{n / 2, 0}}});
  if (n % 2 == 1) {
    ConjClass refl{{0, 1}, {}};
    for (i64 r = 0; r < n; ++r) refl.members.push_back({r, 1});
    out.push_back(std::move(refl));
  } else {
    ConjClass even{{0, 1}, {}}, odd{{1, 1}, {}};
    for (i64 r = 0; r < n; r += 2) even.members.push_back({r, 1});
    for (i64 r = 1; r < n; r += 2) odd.members.push_back({r, 1});
    out.push_back(std::move(even));
    out.push_back(std::move(odd));
  }
  return out;
}

std::vector<GroupElem> centralizer(i64 n, const GroupElem& g) {
  std::vector<GroupElem> out;
  for (const GroupElem& h : all_elements(n))
    if (gmul(n, h, g) == gmul(n, g, h)) out.push_back(h);
  return out;
}

CentralizerKind centralizer_kind(i64 n, const GroupElem& g) {
  if (g.flip == 0) {
    if (g.rot == 0 || 2 * g.rot == n) return CentralizerKind::whole_group;
    return CentralizerKind::rotation_group;
  }
  return n % 2 == 0 ? CentralizerKind::klein_four : CentralizerKind::reflection_pair;
}

bool is_p_regular(const DihedralParams& P, const GroupElem& g) {
  return element_order(P.n, g) % P.p != 0;
}

std::vector<GroupElem> p_regular_class_reps(const DihedralParams& P) {
  std::vector<GroupElem> out = {g_identity(), g_b()};
  if (P.t % 2 == 0) out.push_back({1, 1});
  for (i64 k = 1; 2 * k <= P.t; ++k) out.push_back({k * P.ps, 0});
  return out;
}

bool is_subgroup(i64 n, const std::vector<GroupElem>& H) {
  if (H.empty()) return false;
  std::set<std::pair<i64, i64>> set;
  for (const GroupElem& h : H)
    if (!set.insert({h.flip, h.rot}).second) return false;
  if (!set.count({0, 0})) return false;
  for (const GroupElem& x : H)
    for (const GroupElem& y : H) {
      const GroupElem z = gmul(n, x, y);
      if (!set.count({z.flip, z.rot})) return false;
    }
  return true;
}

std::vector<GroupElem> coset_representatives(i64 n, const std::vector<GroupElem>& H) {
  if (!is_subgroup(n, H)) throw std::invalid_argument("coset_representatives: not a subgroup");
  std::set<std::pair<i64, i64>> covered;
  std::vector<GroupElem> reps;
  for (const GroupElem& g : all_elements(n)) {
    if (covered.count({g.flip, g.rot})) continue;
    reps.push_back(g);
    for (const GroupElem& h : H) {
      const GroupElem gh = gmul(n, g, h);
      covered.insert({gh.flip, gh.rot});
    }
  }
  return reps;
}

std::string elem_to_string(const GroupElem& g) {
  std::string s;
  if (g.rot == 0 && g.flip == 0) return "1";
  if (g.rot == 1)
    s = "a";
  else if (g.rot > 1)
    s = "a^" + std::to_string(g.rot);
  if (g.flip) s += "b";
  return s;
}

}  // namespace qdd
