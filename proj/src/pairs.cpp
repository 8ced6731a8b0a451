#include "sqid/pairs.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqid {

std::size_t default_work_bound() {
    if (const char* env = std::getenv("SQID_WORK_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 24;
}

namespace {

struct Term {
    Elem z, x, y;
};

// A x B sorted into buckets sharing x+y; returns terms plus bucket offsets.
void bucket_terms(const ElementSet& a, const ElementSet& b, std::vector<Term>& terms,
                  std::vector<std::size_t>& offsets) {
    terms.reserve(a.size() * b.size());
    for (Elem x : a)
        for (Elem y : b) terms.push_back({x ^ y, x, y});
    std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) {
        if (l.z != r.z) return l.z < r.z;
        return l.x < r.x;
    });
    offsets.push_back(0);
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i].z != terms[i - 1].z) offsets.push_back(i);
    offsets.push_back(terms.size());
}

struct BucketResult {
    std::size_t checked = 0;
    std::optional<Quadruple> witness;
};

BucketResult scan_bucket(Twist t, int n, const Term* begin, const Term* end) {
    BucketResult res;
    for (const Term* p = begin; p != end; ++p) {
        for (const Term* q = p + 1; q != end; ++q) {
            // same bucket and p != q imply x != z and y != t
            ++res.checked;
            int defect = twist_eval(t, n, p->x, p->y) ^ twist_eval(t, n, q->x, q->y) ^
                         twist_eval(t, n, p->x, q->y) ^ twist_eval(t, n, q->x, p->y);
            if (defect != 1) {
                res.witness = Quadruple{p->x, p->y, q->x, q->y};
                return res;
            }
        }
    }
    return res;
}

template <bool Parallel>
PairReport mult_impl(Twist t, const ElementSet& a, const ElementSet& b, std::size_t work_bound) {
    if (a.n != b.n) throw DimensionError("is_multiplicative: dimension mismatch");
    if (a.size() * b.size() > work_bound)
        throw BoundExceeded("is_multiplicative: card(A)*card(B) exceeds work bound");
    const int n = a.n;

    std::vector<Term> terms;
    std::vector<std::size_t> offsets;
    bucket_terms(a, b, terms, offsets);
    const long long nbuckets = static_cast<long long>(offsets.size()) - 1;

    PairReport report;
    long long witness_bucket = nbuckets;
    std::size_t total = 0;
    std::optional<Quadruple> witness;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total) if (Parallel)
#endif
    for (long long bi = 0; bi < nbuckets; ++bi) {
        BucketResult r =
            scan_bucket(t, n, terms.data() + offsets[bi], terms.data() + offsets[bi + 1]);
        total += r.checked;
        if (r.witness) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                // deterministic: keep the witness from the smallest bucket
                if (bi < witness_bucket) {
                    witness_bucket = bi;
                    witness = r.witness;
                }
            }
        }
    }

    report.quadruples_checked = total;
    report.multiplicative = !witness.has_value();
    report.witness = witness;
    return report;
}

}  // namespace

PairReport is_multiplicative(Twist t, const ElementSet& a, const ElementSet& b,
                             std::size_t work_bound) {
    return mult_impl<true>(t, a, b, work_bound);
}

PairReport is_multiplicative_serial(Twist t, const ElementSet& a, const ElementSet& b,
                                    std::size_t work_bound) {
    return mult_impl<false>(t, a, b, work_bound);
}

bool is_multiplicative_weight(const ElementSet& a, const ElementSet& b) {
    if (a.n != b.n) throw DimensionError("is_multiplicative_weight: dimension mismatch");
    ElementSet aa = self_sums(a);
    ElementSet bb = self_sums(b);
    const ElementSet& small = aa.size() <= bb.size() ? aa : bb;
    const ElementSet& large = aa.size() <= bb.size() ? bb : aa;
    for (Elem w : small)
        if (weight(w) % 4 == 0 && large.contains(w)) return false;
    return true;
}

ElementSet hurwitzian_set(int n) {
    require_dim(n);
    std::vector<Elem> v;
    switch (n % 4) {
        case 0:
        case 2:
            for (int i = 1; i <= n; ++i) {
                v.push_back(unit(i));
                v.push_back(unit(1) ^ unit(i));  // i = 1 contributes 0
            }
            break;
        case 1:
            for (int i = 1; i <= n; ++i) {
                v.push_back(unit(i));
                v.push_back(unit_bar(n, i));
            }
            break;
        case 3:
            v.push_back(0);
            v.push_back(all_ones(n));
            for (int i = 1; i <= n; ++i) {
                v.push_back(unit(i));
                v.push_back(unit_bar(n, i));
            }
            break;
    }
    return ElementSet(n, std::move(v));
}

ElementSet odd_base_set(int n) {
    require_dim(n);
    if (n % 2 == 0) throw std::invalid_argument("odd_base_set: n must be odd");
    std::vector<Elem> v;
    for (int i = 1; i <= n; ++i) {
        v.push_back(unit(i));
        v.push_back(unit_bar(n, i));
    }
    return ElementSet(n, std::move(v));
}

PairSets hurwitz_radon_pair(int n) {
    return {hurwitzian_set(n), full_group(n), false};
}

PairSets complement_pair(int n) {
    if (n < 2) throw std::invalid_argument("complement_pair: n >= 2 required");
    ElementSet h = hurwitzian_set(n);
    ElementSet b = set_difference(full_group(n), h);
    return {std::move(h), std::move(b), false};
}

PairSets border_pair(int n) {
    require_dim(n);
    if (n % 2 == 0) throw std::invalid_argument("border_pair: n must be odd");
    ElementSet a = odd_base_set(n);
    std::vector<Elem> keep;
    for (Elem x : full_group(n)) {
        int w = weight(x);
        if (w != 1 && w != 3 && w != n - 3 && w != n - 1) keep.push_back(x);
    }
    ElementSet b(n, std::move(keep));
    bool degenerate = b.size() <= 2;
    return {std::move(a), std::move(b), degenerate};
}

PairSets thm1_pair(int n, int l, int k, Thm1Variant variant) {
    require_dim(n);
    if (!(1 <= l && l < k && k <= n)) throw std::invalid_argument("thm1_pair: need 1 <= l < k <= n");
    if (variant == Thm1Variant::Extended && n % 4 != 3)
        throw std::invalid_argument("thm1_pair: extended variant needs n = 3 mod 4");

    ElementSet a = (n % 2 == 1)
                       ? (variant == Thm1Variant::Extended ? hurwitzian_set(n) : odd_base_set(n))
                       : hurwitzian_set(n);

    ElementSet removed = a;
    for (int j = 2; j <= k; ++j)
        for (int i = 1; i < j; ++i) {
            if (!(j < k || (j == k && i <= l))) continue;  // colex, (l,k) inclusive
            Elem eij = unit(i) ^ unit(j);
            std::vector<Elem> shifted;
            shifted.reserve(a.size());
            for (Elem h : a) shifted.push_back(h ^ eij);
            removed = set_union(removed, ElementSet(n, std::move(shifted)));
        }
    ElementSet b = set_difference(full_group(n), removed);
    bool degenerate = b.size() <= 2;
    return {std::move(a), std::move(b), degenerate};
}

PairSets thm2_pair(int n, int kappa) {
    require_dim(n);
    if (n % 2 == 0) throw std::invalid_argument("thm2_pair: n must be odd");
    int m = (n - 1) / 2;
    if (kappa < 0 || kappa > m - 1) throw std::invalid_argument("thm2_pair: kappa out of range");
    ElementSet a = (n % 4 == 3) ? hurwitzian_set(n) : odd_base_set(n);
    std::vector<Elem> band;
    for (Elem x : full_group(n)) {
        int w = weight(x);
        if (m - kappa <= w && w <= m + kappa + 1) band.push_back(x);
    }
    return {std::move(a), ElementSet(n, std::move(band)), false};
}

ElementSet build_B_complement(int n) { return complement_pair(n).B; }
ElementSet build_B_border(int n) { return border_pair(n).B; }
ElementSet build_B_thm1(int n, int l, int k, Thm1Variant variant) {
    return thm1_pair(n, l, k, variant).B;
}
ElementSet build_B_thm2(int n, int kappa) { return thm2_pair(n, kappa).B; }

namespace {

// Exact max clique over <= 64 vertices, bitmask candidate sets,
// greedy-coloring upper bound for pruning.  Fixed vertex order makes the
// result independent of thread count (the search is in fact serial; it is
// fast enough that parallel subtrees would only add nondeterminism risk).
struct CliqueSolver {
    int nverts;
    std::vector<std::uint64_t> adj;

    int best = 0;

    int color_bound(std::uint64_t cand) const {
        int colors = 0;
        while (cand) {
            ++colors;
            std::uint64_t cls = cand;
            while (cls) {
                int v = __builtin_ctzll(cls);
                cand &= ~(std::uint64_t{1} << v);
                cls &= ~(std::uint64_t{1} << v);
                cls &= ~adj[v];  // same color class must be pairwise non-adjacent
            }
        }
        return colors;
    }

    void expand(std::uint64_t cand, int depth) {
        if (cand == 0) {
            if (depth > best) best = depth;
            return;
        }
        if (depth + color_bound(cand) <= best) return;
        while (cand) {
            if (depth + __builtin_popcountll(cand) <= best) return;
            int v = __builtin_ctzll(cand);
            cand &= ~(std::uint64_t{1} << v);
            expand(cand & adj[v], depth + 1);
        }
    }

    int max_clique(std::uint64_t cand, int lower = 0) {
        best = lower;
        expand(cand, 0);
        return best;
    }
};

}  // namespace

ElementSet max_hurwitzian_search(int n) {
    require_dim(n);
    if (n > 6) throw BoundExceeded("max_hurwitzian_search: n <= 6 required");
    const int nverts = 1 << n;
    CliqueSolver solver;
    solver.nverts = nverts;
    solver.adj.assign(nverts, 0);
    for (int x = 0; x < nverts; ++x)
        for (int z = 0; z < nverts; ++z)
            if (x != z && weight(static_cast<Elem>(x ^ z)) % 4 != 0)
                solver.adj[x] |= std::uint64_t{1} << z;

    const std::uint64_t all =
        (nverts == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << nverts) - 1);
    const int maximum = solver.max_clique(all);

    // lexicographically least maximum clique: force vertices in ascending
    // order whenever a maximum clique through them still exists
    std::vector<Elem> clique;
    std::uint64_t cand = all;
    int depth = 0;
    for (int v = 0; v < nverts && depth < maximum; ++v) {
        if (!(cand & (std::uint64_t{1} << v))) continue;
        std::uint64_t rest = cand & solver.adj[v];
        if (depth + 1 + solver.max_clique(rest) >= maximum) {
            clique.push_back(static_cast<Elem>(v));
            cand = rest;
            ++depth;
        }
    }
    return ElementSet(n, std::move(clique));
}

}  // namespace sqid
