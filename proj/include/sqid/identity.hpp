#pragma once

// Materialized square identities: the coefficient tables c_z built from a
// pair (A, B), exact symbolic verification by cancellation pairing, a
// randomized exact-arithmetic cross-check, and the predicted-size formulas.

#include <cstdint>
#include <string>
#include <vector>

#include "sqid/pairs.hpp"

namespace sqid {

struct IdentityTerm {
    Elem x, y;
    int sign;  // +1 or -1, equal to (-1)^{f(x,y)} when built honestly
    bool operator==(const IdentityTerm&) const = default;
};

struct Bucket {
    Elem z;
    std::vector<IdentityTerm> terms;  // ordered by x
    bool operator==(const Bucket&) const = default;
};

struct Identity {
    int n = 0;
    Twist twist = Twist::Octonion;
    ElementSet A, B;
    std::vector<Bucket> coeffs;  // ordered by z; partition of A x B

    ElementSet sum_set() const;
    bool operator==(const Identity&) const = default;
};

struct Triple {
    long long r = 0, s = 0, N = 0;
    bool operator==(const Triple&) const = default;
};

struct VerificationReport {
    bool ok = false;
    std::size_t quadruples_checked = 0;
    std::optional<Quadruple> failing;  // (x,y,z,t) whose cancellation fails
};

Identity build_identity(Twist t, const ElementSet& a, const ElementSet& b);

// Formal expansion of sum_z c_z^2: diagonal terms must enumerate A x B once
// with sign +1; every off-diagonal product must cancel against its partner
// in the bucket of x+t.  Works purely on the stored signs, so a tampered
// table is caught.  Exact; no arithmetic beyond sign products.
VerificationReport verify_symbolic(const Identity& id);
VerificationReport verify_symbolic_serial(const Identity& id);

// Substitutes seeded random integers in [-1000, 1000] and compares both
// sides in exact 128-bit arithmetic.
bool verify_numeric(const Identity& id, int trials, std::uint64_t seed);

Triple triple_of(const Identity& id);

// Closed-form size predictions for the two parametric families.
Triple predicted_triple_thm1(int n, int l, int k);
Triple predicted_triple_thm1_variant(int n, int l, int k);  // [r+2, s-2, N], n = 3 mod 4
Triple predicted_triple_thm2(int n, int k);                 // theorem k in [1, m]

// Hurwitz-Radon function: N = 2^n (2k+1) ->
// 2n+1 (n=0), 2n (n=1,2), 2n+2 (n=3 mod 4).
long long rho(unsigned long long N);

// JSON schema (stable ordering, round-trips losslessly):
// { "n":int, "twist":"octonion"|"clifford", "A":[int...], "B":[int...],
//   "triple":{"r","s","N"}, "coeffs":[{"z":int,"terms":[{"x","y","sign"}]}] }
std::string to_json(const Identity& id);
Identity identity_from_json(const std::string& text);  // throws std::runtime_error on bad input

std::string to_latex(const Identity& id);
std::string summary_text(const Identity& id, bool verified);

}  // namespace sqid
