#pragma once

// The signed permutation matrices G_x acting on R^{2^n}, and the
// integer Clifford-algebra representations they generate.

#include <cstdint>
#include <string>
#include <vector>

#include "sqid/sets.hpp"

namespace sqid {

// 2^n x 2^n matrix with exactly one +-1 per row and column, stored as the
// column index and sign of each row.
struct SignedPermMatrix {
    int n = 0;
    std::vector<std::uint32_t> col;  // row y -> column
    std::vector<std::int8_t> sign;   // row y -> +-1

    std::size_t size() const { return col.size(); }
    bool operator==(const SignedPermMatrix&) const = default;

    static SignedPermMatrix identity_matrix(int n);
    SignedPermMatrix operator*(const SignedPermMatrix& rhs) const;
    SignedPermMatrix transpose() const;
    SignedPermMatrix negated() const;
    bool is_identity() const;

    // Entry (y, t); 0 unless t is this row's column.
    int entry(std::size_t y, std::size_t t) const {
        return col[y] == t ? sign[y] : 0;
    }

    std::string to_csv() const;       // dense rows of -1/0/1; n <= 14
    std::string to_triplets() const;  // "row col sign" lines
};

// G_x: row y -> column y + x with sign (-1)^{f_O(x, y)}.  n <= 14 for the
// dense export path; the sparse form itself supports any valid n with
// 2^n rows materialized (capped to keep memory sane).
SignedPermMatrix build_G(int n, Elem x);

// Bit-level predicate f_O(x,x') + f_O(x',x) = 1, equivalent to
// G_x G_x' = -G_x' G_x.
bool anticommute(int n, Elem x, Elem xp);

// The three generator families of the irreducible-representation example.
enum class CliffordCase {
    Cl0_2n,        // n = 3 mod 4:      {e_i, ebar_i}
    Cl0_2n_minus1, // n = 1,3 mod 4:    {e_i, e_1+e_j, 1 < j <= n}
    Cl0_2n_minus2, // n = 2,3 mod 4:    {e_i, e_1+e_j, 1 < j < n}
};
ElementSet generator_set(int n, CliffordCase c);

// True iff every x in A squares to -Id (f_O(x,x) = 1) and all distinct
// pairs anticommute; cross-checked at matrix level for n <= 6.
bool verify_clifford_rep(int n, const ElementSet& a);

}  // namespace sqid
