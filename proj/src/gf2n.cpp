#include "sqid/gf2n.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqid {

int f_clifford_naive(int n, Elem x, Elem y) {
    int s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            s += static_cast<int>((x >> i) & 1) * static_cast<int>((y >> j) & 1);
    return s & 1;
}

int f_clifford(int n, Elem x, Elem y) {
    (void)n;
    int s = 0;
    Elem yy = y;
    while (yy) {
        int j = __builtin_ctzll(yy);
        yy &= yy - 1;
        // bits of x at positions <= j
        s += popcount_below(x, j) + static_cast<int>((x >> j) & 1);
    }
    return s & 1;
}

int f_octonion_naive(int n, Elem x, Elem y) {
    int s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int xi = (x >> i) & 1, xj = (x >> j) & 1, xk = (x >> k) & 1;
                int yi = (y >> i) & 1, yj = (y >> j) & 1, yk = (y >> k) & 1;
                s += xi * xj * yk + xi * yj * xk + yi * xj * xk;
            }
    return (s + f_clifford_naive(n, x, y)) & 1;
}

int f_octonion(int n, Elem x, Elem y) {
    // cubic part, one pass over set bits using prefix popcounts:
    //   sum_{k: y_k} C(|x < k|, 2)                      (x_i x_j y_k)
    //   sum_{j: y_j} |x < j| * |x > j|                  (x_i y_j x_k)
    //   sum_{j: x_j} |y < j| * |x > j|                  (y_i x_j x_k)
    int pcx = weight(x);
    long long s = 0;
    Elem yy = y;
    while (yy) {
        int j = __builtin_ctzll(yy);
        yy &= yy - 1;
        int below = popcount_below(x, j);
        int above = pcx - below - static_cast<int>((x >> j) & 1);
        s += static_cast<long long>(below) * (below - 1) / 2;  // C(below,2)
        s += static_cast<long long>(below) * above;
    }
    Elem xx = x;
    while (xx) {
        int j = __builtin_ctzll(xx);
        xx &= xx - 1;
        int ybelow = popcount_below(y, j);
        int xabove = pcx - popcount_below(x, j) - 1;
        s += static_cast<long long>(ybelow) * xabove;
    }
    return static_cast<int>(s & 1) ^ f_clifford(n, x, y);
}

int twist_eval(Twist t, int n, Elem x, Elem y) {
    return t == Twist::Clifford ? f_clifford(n, x, y) : f_octonion(n, x, y);
}

int alpha(int n, Elem x) { return f_octonion(n, x, x); }

int quadruple_defect(Twist t, int n, Elem x, Elem y, Elem z, Elem w) {
    if ((x ^ y ^ z ^ w) != 0)
        throw std::invalid_argument("quadruple_defect: x+y+z+t must be 0");
    return twist_eval(t, n, x, y) ^ twist_eval(t, n, z, w) ^ twist_eval(t, n, x, w) ^
           twist_eval(t, n, z, y);
}

int cocycle_defect(Twist t, int n, Elem x, Elem y, Elem z) {
    return twist_eval(t, n, y, z) ^ twist_eval(t, n, x ^ y, z) ^
           twist_eval(t, n, x, y ^ z) ^ twist_eval(t, n, x, y);
}

namespace {

template <class F>
bool gen_func_check(Twist t, int n, int bound, F&& for_each_outer) {
    require_dim(n);
    if (n > bound) throw BoundExceeded("check_generating_function: n exceeds brute-force bound");
    const Elem size = Elem{1} << n;

    auto a = [&](Elem u) { return twist_eval(t, n, u, u); };

    bool ok = true;
    for_each_outer(size, [&](Elem x, bool& local_ok) {
        for (Elem y = 0; y < size && local_ok; ++y) {
            int lhs = twist_eval(t, n, x, y) ^ twist_eval(t, n, y, x);
            int rhs = a(x ^ y) ^ a(x) ^ a(y);
            if (lhs != rhs) local_ok = false;
            for (Elem z = 0; z < size && local_ok; ++z) {
                int dl = cocycle_defect(t, n, x, y, z);
                int dr = a(x ^ y ^ z) ^ a(x ^ y) ^ a(x ^ z) ^ a(y ^ z) ^ a(x) ^ a(y) ^ a(z);
                if (dl != dr) local_ok = false;
            }
        }
    }, ok);
    return ok;
}

}  // namespace

bool check_generating_function_serial(Twist t, int n, int bound) {
    return gen_func_check(t, n, bound, [](Elem size, auto&& body, bool& ok) {
        for (Elem x = 0; x < size && ok; ++x) body(x, ok);
    });
}

bool check_generating_function(Twist t, int n, int bound) {
    return gen_func_check(t, n, bound, [](Elem size, auto&& body, bool& ok) {
        bool all_ok = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(&& : all_ok)
#endif
        for (long long x = 0; x < static_cast<long long>(size); ++x) {
            bool local = true;
            body(static_cast<Elem>(x), local);
            all_ok = all_ok && local;
        }
        ok = all_ok;
    });
}

}  // namespace sqid
