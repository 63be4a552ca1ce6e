#pragma once
#include <string>
#include <vector>

#include "qdd/field.hpp"

namespace qdd {

// parameters of the dihedral group of order 2n in characteristic p:
// p an odd prime dividing n, n = p^s * t with p coprime to t
struct DihedralParams {
  i64 p = 0;
  i64 n = 0;
  i64 s = 0;   // p-adic valuation of n
  i64 t = 0;   // p-free part, n = p^s t
  i64 ps = 0;  // p^s

  static DihedralParams make(i64 p, i64 n);
};

// group element in normal form a^rot b^flip, 0 <= rot < n, flip in {0, 1};
// relations: a^n = b^2 = 1, b a = a^{n-1} b
struct GroupElem {
  i64 rot = 0;
  i64 flip = 0;

  bool operator==(const GroupElem&) const = default;
};

// enumeration order: rotations by exponent, then reflections by exponent
bool elem_less(const GroupElem& x, const GroupElem& y);

inline GroupElem g_identity() { return {0, 0}; }
GroupElem g_rot(i64 n, i64 k);  // a^k with k reduced mod n
inline GroupElem g_b() { return {0, 1}; }

GroupElem gmul(i64 n, const GroupElem& x, const GroupElem& y);
GroupElem ginv(i64 n, const GroupElem& x);
// h x h^{-1}
GroupElem gconj(i64 n, const GroupElem& h, const GroupElem& x);
i64 element_order(i64 n, const GroupElem& x);

// all 2n elements in enumeration order
std::vector<GroupElem> all_elements(i64 n);

struct ConjClass {
  GroupElem rep;
  std::vector<GroupElem> members;  // sorted in enumeration order
};

// conjugacy classes in canonical order: identity, rotation pairs
// {a^i, a^{n-i}} for ascending i, the central rotation a^{n/2} when n is
// even, then reflections (one class for odd n; exponent parity splits them
// into two classes, b first, for even n)
std::vector<ConjClass> conjugacy_classes(i64 n);

// elements commuting with g, in enumeration order
std::vector<GroupElem> centralizer(i64 n, const GroupElem& g);

enum class CentralizerKind {
  whole_group,      // g central: identity, and a^{n/2} for even n
  rotation_group,   // other rotations: centralizer is <a>
  klein_four,       // reflections for even n: {1, a^{n/2}, g, a^{n/2} g}
  reflection_pair,  // reflections for odd n: {1, g}
};
CentralizerKind centralizer_kind(i64 n, const GroupElem& g);

bool is_p_regular(const DihedralParams& P, const GroupElem& g);
// canonical representatives of the classes of elements with order prime
// to p: identity, reflection classes, then rotations a^{k p^s}
std::vector<GroupElem> p_regular_class_reps(const DihedralParams& P);

// true when H (arbitrary order, no duplicates) is closed under the group
// operations
bool is_subgroup(i64 n, const std::vector<GroupElem>& H);

// left transversal of H chosen greedily in enumeration order; first entry
// is the identity
std::vector<GroupElem> coset_representatives(i64 n, const std::vector<GroupElem>& H);

std::string elem_to_string(const GroupElem& g);

}  // namespace qdd
