#pragma once

// Elements of (Z/2Z)^n and the two twisting functions that define the
// twisted group algebras used throughout: the Clifford twist (bilinear,
// a 2-cocycle) and the octonion twist (cubic, generating-function driven).
//
// An element x is an n-bit mask in a 64-bit word, coordinate x_i of the
// algebra living at bit (i-1).  Group addition is XOR, the weight |x| is
// the popcount.  All functions here are pure and thread-safe.

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace sqid {

using Elem = std::uint64_t;

inline constexpr int kMaxDim = 63;

enum class Twist { Clifford, Octonion };

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_dim(int n) {
    if (n < 1 || n > kMaxDim) throw DimensionError("dimension must be in [1,63]");
}

inline Elem full_mask(int n) { return (n == 64) ? ~Elem{0} : ((Elem{1} << n) - 1); }

// e_i, 1-based coordinate index
inline Elem unit(int i) { return Elem{1} << (i - 1); }

// ebar_0 = (1,...,1)
inline Elem all_ones(int n) { return full_mask(n); }

// ebar_i = all ones except coordinate i
inline Elem unit_bar(int n, int i) { return all_ones(n) ^ unit(i); }

inline int weight(Elem x) { return __builtin_popcountll(x); }

// Bits of x at coordinates strictly below coordinate of bit b (0-based bit index).
inline int popcount_below(Elem x, int b) {
    return __builtin_popcountll(x & ((Elem{1} << b) - 1));
}

// --- Clifford twist: f(x,y) = sum_{i<=j} x_i y_j  (mod 2) ---

int f_clifford_naive(int n, Elem x, Elem y);  // reference double loop
int f_clifford(int n, Elem x, Elem y);        // prefix-popcount form

// --- Octonion twist:
//   f(x,y) = sum_{i<j<k} (x_i x_j y_k + x_i y_j x_k + y_i x_j x_k)
//          + sum_{i<=j} x_i y_j  (mod 2) ---

int f_octonion_naive(int n, Elem x, Elem y);  // reference triple loop
int f_octonion(int n, Elem x, Elem y);        // prefix-count form

int twist_eval(Twist t, int n, Elem x, Elem y);

// Generating function of O_n: alpha(x) = f_O(x,x); equals 0 iff |x| == 0 mod 4.
int alpha(int n, Elem x);
inline int alpha_weight_form(Elem x) { return weight(x) % 4 == 0 ? 0 : 1; }

// Left-hand side of the multiplicativity condition,
//   f(x,y) + f(z,t) + f(x,t) + f(z,y),
// for a quadruple with x+y+z+t = 0.  For the octonion twist this equals
// alpha(x+z).
int quadruple_defect(Twist t, int n, Elem x, Elem y, Elem z, Elem w);

// 2-cocycle defect  f(y,z) + f(x+y,z) + f(x,y+z) + f(x,y).
int cocycle_defect(Twist t, int n, Elem x, Elem y, Elem z);

// Exhaustively checks that alpha(u) := f(u,u) is a generating function for
// the twist at dimension n: condition (i) symmetry defect = delta alpha over
// all pairs, condition (ii) associativity defect = the seven-term alpha
// expression over all triples.  Cost 2^{2n} + 2^{3n}.
bool check_generating_function(Twist t, int n, int brute_force_bound = 8);
bool check_generating_function_serial(Twist t, int n, int brute_force_bound = 8);

}  // namespace sqid
