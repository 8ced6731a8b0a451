#pragma once

// Multiplicative-pair machinery: the quadruple criterion, the weight-lemma
// shortcut valid for the octonion twist, the Hurwitzian sets, and the
// subset constructions behind the identity families.  A brute-force
// maximum-clique search doubles as the independence oracle for the
// Hurwitzian-set definition.

#include <cstddef>
#include <optional>

#include "sqid/sets.hpp"

namespace sqid {

struct Quadruple {
    Elem x, y, z, t;
    bool operator==(const Quadruple&) const = default;
};

struct PairReport {
    bool multiplicative = false;
    std::optional<Quadruple> witness;  // violating quadruple, defect = 0
    std::size_t quadruples_checked = 0;
};

// Work bound for the quadruple scan, overridable via SQID_WORK_BOUND.
std::size_t default_work_bound();

// Checks the defect condition f(x,y)+f(z,t)+f(x,t)+f(z,y) = 1 for every
// quadruple x != z in A, y != t in B with x+y+z+t = 0.  Quadruples are
// enumerated by bucketing A x B on x+y.  Deterministic witness: smallest
// bucket, then smallest term pair.
PairReport is_multiplicative(Twist t, const ElementSet& a, const ElementSet& b,
                             std::size_t work_bound = default_work_bound());
PairReport is_multiplicative_serial(Twist t, const ElementSet& a, const ElementSet& b,
                                    std::size_t work_bound = default_work_bound());

// Octonion-twist criterion: every nonzero w in (A+A) cap (B+B) has
// weight != 0 mod 4.
bool is_multiplicative_weight(const ElementSet& a, const ElementSet& b);

// The table of Hurwitzian sets, by n mod 4:
//   n = 0,2: {e_i, e_1+e_i}        (2n elements, contains 0)
//   n = 1:   {e_i, ebar_i}         (2n elements)
//   n = 3:   {0, ebar_0, e_i, ebar_i}  (2n+2 elements)
ElementSet hurwitzian_set(int n);

// {e_i, ebar_i}: the 2n-element multiplicative base used by the odd-n
// pair-removal constructions (coincides with the table set for n = 1 mod 4).
ElementSet odd_base_set(int n);

struct PairSets {
    ElementSet A, B;
    bool degenerate = false;  // very small B; identity still verifies
};

// Hurwitzian set against the full group: [2n, 2^n, 2^n] or [2n+2, 2^n, 2^n].
PairSets hurwitz_radon_pair(int n);

// B = complement of H: [2n, 2^n-2n, 2^n-2] (plus the n=3 mod 4 variant).
PairSets complement_pair(int n);

// n odd, B = everything except weights {1, 3, n-3, n-1}.
PairSets border_pair(int n);

// Pair-removal family: B = (Z/2Z)^n \ (A u U_{(i,j) <= (l,k)} (A + e_ij)),
// pairs ordered colexicographically, (l,k) included.
//   Base:     A = odd_base_set for odd n, table set for even n; r = 2n.
//   Extended: n = 3 mod 4 only, A = table set (2n+2 elements).
enum class Thm1Variant { Base, Extended };
PairSets thm1_pair(int n, int l, int k, Thm1Variant variant = Thm1Variant::Base);

// Weight-band family, n = 2m+1, 0 <= kappa <= m-1:
// B = {x : m-kappa <= |x| <= m+kappa+1}.
PairSets thm2_pair(int n, int kappa);

// Convenience accessors returning just B.
ElementSet build_B_complement(int n);
ElementSet build_B_border(int n);
ElementSet build_B_thm1(int n, int l, int k, Thm1Variant variant = Thm1Variant::Base);
ElementSet build_B_thm2(int n, int kappa);

// Exact branch-and-bound maximum clique on the graph with vertex set
// (Z/2Z)^n and edges {x,z} iff |x+z| != 0 mod 4; returns the
// lexicographically least maximum clique.  n <= 6.
ElementSet max_hurwitzian_search(int n);

}  // namespace sqid
