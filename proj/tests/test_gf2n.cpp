#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdint>

#include "sqid/gf2n.hpp"

using namespace sqid;

namespace {

// splitmix64, kept separate from the library's rng on purpose
std::uint64_t mix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("element helpers") {
    CHECK(unit(1) == 1);
    CHECK(unit(3) == 4);
    CHECK(all_ones(4) == 15);
    CHECK(unit_bar(4, 2) == 13);
    CHECK(weight(0b1011) == 3);
    CHECK(popcount_below(0b1011, 3) == 2);
    CHECK(full_mask(5) == 31);
    CHECK_THROWS_AS(require_dim(0), DimensionError);
    CHECK_THROWS_AS(require_dim(64), DimensionError);
}

TEST_CASE("clifford twist small cases by hand") {
    // f(x,y) = sum_{i<=j} x_i y_j; n = 2 gives the quaternion signs
    CHECK(f_clifford(2, unit(1), unit(1)) == 1);  // i^2 = -1
    CHECK(f_clifford(2, unit(2), unit(2)) == 1);
    CHECK(f_clifford(2, unit(1), unit(2)) == 1);  // ij = k with the sign below
    CHECK(f_clifford(2, unit(2), unit(1)) == 0);  // ji = -k: opposite sign
    CHECK(f_clifford(2, 3, 3) == 1);              // k^2 = -1: 1+1+1 mod 2
    CHECK(f_clifford(3, 0, 5) == 0);
    CHECK(f_clifford(3, 5, 0) == 0);
}

TEST_CASE("naive and fast twists agree exhaustively for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        Elem size = Elem{1} << n;
        for (Elem x = 0; x < size; ++x)
            for (Elem y = 0; y < size; ++y) {
                CHECK(f_clifford(n, x, y) == f_clifford_naive(n, x, y));
                CHECK(f_octonion(n, x, y) == f_octonion_naive(n, x, y));
            }
    }
}

TEST_CASE("naive and fast twists agree on random samples up to n = 10") {
    std::uint64_t s = 42;
    for (int trial = 0; trial < 100000; ++trial) {
        int n = 1 + static_cast<int>(mix(s) % 10);
        Elem x = mix(s) & full_mask(n);
        Elem y = mix(s) & full_mask(n);
        REQUIRE(f_clifford(n, x, y) == f_clifford_naive(n, x, y));
        REQUIRE(f_octonion(n, x, y) == f_octonion_naive(n, x, y));
    }
}

TEST_CASE("alpha closed form: zero exactly on weights divisible by 4") {
    for (int n = 1; n <= 12; ++n) {
        Elem size = Elem{1} << n;
        for (Elem x = 0; x < size; ++x) REQUIRE(alpha(n, x) == alpha_weight_form(x));
    }
}

TEST_CASE("octonion quadruple defect collapses to alpha(x+z)") {
    for (int n = 1; n <= 6; ++n) {
        Elem size = Elem{1} << n;
        for (Elem x = 0; x < size; ++x)
            for (Elem y = 0; y < size; ++y)
                for (Elem z = 0; z < size; ++z) {
                    Elem t = x ^ y ^ z;
                    REQUIRE(quadruple_defect(Twist::Octonion, n, x, y, z, t) ==
                            alpha_weight_form(x ^ z));
                }
    }
    CHECK_THROWS_AS(quadruple_defect(Twist::Octonion, 3, 1, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("clifford twist is a 2-cocycle") {
    for (int n = 1; n <= 5; ++n) {
        Elem size = Elem{1} << n;
        for (Elem x = 0; x < size; ++x)
            for (Elem y = 0; y < size; ++y)
                for (Elem z = 0; z < size; ++z)
                    REQUIRE(cocycle_defect(Twist::Clifford, n, x, y, z) == 0);
    }
}

TEST_CASE("generating function conditions hold for both twists") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(check_generating_function(Twist::Octonion, n));
        CHECK(check_generating_function(Twist::Clifford, n));
        CHECK(check_generating_function_serial(Twist::Octonion, n));
    }
    CHECK_THROWS_AS(check_generating_function(Twist::Octonion, 9), BoundExceeded);
}

namespace {

// Standard octonion basis e_0..e_7 (e_0 the unit), signs from the Fano
// triples (1,2,3),(1,4,5),(1,7,6),(2,4,6),(2,5,7),(3,4,7),(3,6,5): each
// cyclic triple (a,b,c) has e_a e_b = e_c.
struct Oct {
    int table[8][8];   // index of product
    int signum[8][8];  // sign of product

    Oct() {
        static const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                          {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
        for (int i = 0; i < 8; ++i) {
            table[0][i] = table[i][0] = i;
            signum[0][i] = signum[i][0] = 1;
        }
        for (int i = 1; i < 8; ++i) {
            table[i][i] = 0;
            signum[i][i] = -1;
        }
        for (auto& t : triples)
            for (int r = 0; r < 3; ++r) {
                int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
                table[a][b] = c;
                signum[a][b] = 1;
                table[b][a] = c;
                signum[b][a] = -1;
            }
    }
};

}  // namespace

TEST_CASE("the n = 3 twisted algebra is the octonion algebra") {
    // search for an isomorphism u_x -> s(x) e_{m(x)} determined by the images
    // of the three generators u_1, u_2, u_4
    Oct oct;
    const int n = 3;
    bool found = false;
    for (int i1 = 1; i1 < 8 && !found; ++i1)
        for (int s1 = -1; s1 <= 1 && !found; s1 += 2)
            for (int i2 = 1; i2 < 8 && !found; ++i2) {
                if (i2 == i1) continue;
                for (int s2 = -1; s2 <= 1 && !found; s2 += 2)
                    for (int i4 = 1; i4 < 8 && !found; ++i4) {
                        if (i4 == i1 || i4 == i2) continue;
                        for (int s4 = -1; s4 <= 1 && !found; s4 += 2) {
                            int m[8], sg[8];
                            m[0] = 0;
                            sg[0] = 1;
                            m[1] = i1;
                            sg[1] = s1;
                            m[2] = i2;
                            sg[2] = s2;
                            m[4] = i4;
                            sg[4] = s4;
                            // extend along u_a u_b = (-1)^f u_{a+b}
                            for (Elem x : {Elem{3}, Elem{5}, Elem{6}, Elem{7}}) {
                                Elem a = x & (x - 1) ? (x == 7 ? 3 : (x & ~(x & -x))) : x;
                                Elem b = x ^ a;
                                int fs = f_octonion(n, a, b) ? -1 : 1;
                                m[x] = oct.table[m[a]][m[b]];
                                sg[x] = fs * sg[a] * sg[b] * oct.signum[m[a]][m[b]];
                            }
                            bool img_ok = true;
                            bool seen[8] = {};
                            for (int x = 0; x < 8; ++x) {
                                if (m[x] < 0 || m[x] > 7 || seen[m[x]]) img_ok = false;
                                else seen[m[x]] = true;
                            }
                            if (!img_ok) continue;
                            bool hom = true;
                            for (Elem a = 0; a < 8 && hom; ++a)
                                for (Elem b = 0; b < 8 && hom; ++b) {
                                    int fs = f_octonion(n, a, b) ? -1 : 1;
                                    // phi(u_a u_b) vs phi(u_a) phi(u_b)
                                    int li = m[a ^ b];
                                    int ls = fs * sg[a ^ b];
                                    int ri = oct.table[m[a]][m[b]];
                                    int rs = sg[a] * sg[b] * oct.signum[m[a]][m[b]];
                                    if (li != ri || ls != rs) hom = false;
                                }
                            if (hom) found = true;
                        }
                    }
            }
    CHECK(found);
}
