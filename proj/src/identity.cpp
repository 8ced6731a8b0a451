#include "sqid/identity.hpp"

#include <sstream>
#include <unordered_map>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqid {

ElementSet Identity::sum_set() const {
    std::vector<Elem> zs;
    zs.reserve(coeffs.size());
    for (const Bucket& b : coeffs) zs.push_back(b.z);
    return ElementSet(n, std::move(zs));
}

Identity build_identity(Twist t, const ElementSet& a, const ElementSet& b) {
    if (a.n != b.n) throw DimensionError("build_identity: dimension mismatch");
    Identity id;
    id.n = a.n;
    id.twist = t;
    id.A = a;
    id.B = b;

    std::unordered_map<Elem, std::vector<IdentityTerm>> buckets;
    for (Elem x : a)
        for (Elem y : b) {
            int sign = twist_eval(t, id.n, x, y) ? -1 : 1;
            buckets[x ^ y].push_back({x, y, sign});
        }
    id.coeffs.reserve(buckets.size());
    for (auto& [z, terms] : buckets) {
        std::sort(terms.begin(), terms.end(),
                  [](const IdentityTerm& l, const IdentityTerm& r) { return l.x < r.x; });
        id.coeffs.push_back({z, std::move(terms)});
    }
    std::sort(id.coeffs.begin(), id.coeffs.end(),
              [](const Bucket& l, const Bucket& r) { return l.z < r.z; });
    return id;
}

namespace {

// key for (x, y) lookups; identities are only materialized for n well below 32
std::uint64_t term_key(Elem x, Elem y) { return (x << 32) | y; }

struct SignIndex {
    std::unordered_map<std::uint64_t, int> sign_of;

    explicit SignIndex(const Identity& id) {
        sign_of.reserve(id.A.size() * id.B.size());
        for (const Bucket& b : id.coeffs)
            for (const IdentityTerm& t : b.terms) sign_of.emplace(term_key(t.x, t.y), t.sign);
    }
};

bool structurally_valid(const Identity& id, const SignIndex& idx) {
    if (id.n < 1 || id.n > 32) return false;
    std::size_t total = 0;
    Elem prev_z = 0;
    bool first = true;
    for (const Bucket& b : id.coeffs) {
        if (!first && b.z <= prev_z) return false;  // canonical z order, no duplicates
        first = false;
        prev_z = b.z;
        for (const IdentityTerm& t : b.terms) {
            if ((t.x ^ t.y) != b.z) return false;
            if (t.sign != 1 && t.sign != -1) return false;
            if (!id.A.contains(t.x) || !id.B.contains(t.y)) return false;
            ++total;
        }
    }
    // every (x,y) in A x B exactly once
    if (total != id.A.size() * id.B.size()) return false;
    if (idx.sign_of.size() != total) return false;
    return true;
}

template <bool Parallel>
VerificationReport verify_impl(const Identity& id) {
    VerificationReport rep;
    SignIndex idx(id);
    if (!structurally_valid(id, idx)) {
        rep.ok = false;
        return rep;
    }

    const long long nbuckets = static_cast<long long>(id.coeffs.size());
    std::size_t checked = 0;
    long long bad_bucket = nbuckets;
    std::optional<Quadruple> failing;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : checked) if (Parallel)
#endif
    for (long long bi = 0; bi < nbuckets; ++bi) {
        const auto& terms = id.coeffs[bi].terms;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            for (std::size_t j = i + 1; j < terms.size(); ++j) {
                ++checked;
                const auto& p = terms[i];
                const auto& q = terms[j];
                // partner pair lives in the bucket of x_p + y_q
                auto it1 = idx.sign_of.find(term_key(p.x, q.y));
                auto it2 = idx.sign_of.find(term_key(q.x, p.y));
                bool cancels = it1 != idx.sign_of.end() && it2 != idx.sign_of.end() &&
                               p.sign * q.sign + it1->second * it2->second == 0;
                if (!cancels) {
#ifdef _OPENMP
#pragma omp critical
#endif
                    {
                        if (bi < bad_bucket) {
                            bad_bucket = bi;
                            failing = Quadruple{p.x, p.y, q.x, q.y};
                        }
                    }
                }
            }
        }
    }

    rep.quadruples_checked = checked;
    rep.failing = failing;
    rep.ok = !failing.has_value();
    return rep;
}

}  // namespace

VerificationReport verify_symbolic(const Identity& id) { return verify_impl<true>(id); }
VerificationReport verify_symbolic_serial(const Identity& id) { return verify_impl<false>(id); }

namespace {

// splitmix64; fixed algorithm so results are stable across platforms
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long value() { return static_cast<long long>(next() % 2001) - 1000; }
};

}  // namespace

bool verify_numeric(const Identity& id, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_numeric: trials >= 1");
    Rng rng{seed};
    for (int trial = 0; trial < trials; ++trial) {
        std::unordered_map<Elem, long long> av, bv;
        for (Elem x : id.A) av[x] = rng.value();
        for (Elem y : id.B) bv[y] = rng.value();

        // |a|,|b| <= 1000, card <= 2^12  =>  sums < 2^32, product < 2^64,
        // |c_z| < 2^32, c_z^2 < 2^64, total < 2^76: exact in 128 bits
        __int128 sa = 0, sb = 0;
        for (auto& [x, v] : av) sa += static_cast<__int128>(v) * v;
        for (auto& [y, v] : bv) sb += static_cast<__int128>(v) * v;
        __int128 lhs = sa * sb;

        __int128 rhs = 0;
        for (const Bucket& b : id.coeffs) {
            __int128 cz = 0;
            for (const IdentityTerm& t : b.terms)
                cz += static_cast<__int128>(t.sign) * av.at(t.x) * bv.at(t.y);
            rhs += cz * cz;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

Triple triple_of(const Identity& id) {
    return {static_cast<long long>(id.A.size()), static_cast<long long>(id.B.size()),
            static_cast<long long>(id.coeffs.size())};
}

namespace {
long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

Triple predicted_triple_thm1(int n, int l, int k) {
    require_dim(n);
    if (!(1 <= l && l < k && k <= n))
        throw std::invalid_argument("predicted_triple_thm1: need 1 <= l < k <= n");
    long long p2 = 1LL << n;
    long long q1 = binom(k - 1, 2) + l + 1;
    return {2LL * n, p2 - 2 * q1 * n + 4 * binom(k, 3) + 2LL * k * l, p2 - 2 * q1};
}

Triple predicted_triple_thm1_variant(int n, int l, int k) {
    if (n % 4 != 3)
        throw std::invalid_argument("predicted_triple_thm1_variant: needs n = 3 mod 4");
    Triple t = predicted_triple_thm1(n, l, k);
    return {t.r + 2, t.s - 2, t.N};
}

Triple predicted_triple_thm2(int n, int k) {
    require_dim(n);
    if (n % 2 == 0) throw std::invalid_argument("predicted_triple_thm2: n must be odd");
    int m = (n - 1) / 2;
    if (k < 1 || k > m) throw std::invalid_argument("predicted_triple_thm2: need 1 <= k <= m");
    long long s = 0, N = 0;
    for (int i = 0; i <= k - 1; ++i) s += 2 * binom(n, m - i);
    for (int i = 0; i <= k; ++i) N += 2 * binom(n, m - i);
    long long r = (n % 4 == 3) ? 2LL * n + 2 : 2LL * n;
    return {r, s, N};
}

long long rho(unsigned long long N) {
    if (N == 0) throw std::invalid_argument("rho: N >= 1");
    int n = __builtin_ctzll(N);
    switch (n % 4) {
        case 0: return 2LL * n + 1;
        case 1:
        case 2: return 2LL * n;
        default: return 2LL * n + 2;
    }
}

// --- serialization ---

std::string to_json(const Identity& id) {
    nlohmann::ordered_json j;
    j["n"] = id.n;
    j["twist"] = id.twist == Twist::Octonion ? "octonion" : "clifford";
    j["A"] = id.A.members;
    j["B"] = id.B.members;
    Triple t = triple_of(id);
    j["triple"] = {{"r", t.r}, {"s", t.s}, {"N", t.N}};
    auto& coeffs = j["coeffs"] = nlohmann::ordered_json::array();
    for (const Bucket& b : id.coeffs) {
        nlohmann::ordered_json jb;
        jb["z"] = b.z;
        auto& terms = jb["terms"] = nlohmann::ordered_json::array();
        for (const IdentityTerm& term : b.terms)
            terms.push_back({{"x", term.x}, {"y", term.y}, {"sign", term.sign}});
        coeffs.push_back(std::move(jb));
    }
    return j.dump(2) + "\n";
}

Identity identity_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);  // throws on malformed input
    Identity id;
    id.n = j.at("n").get<int>();
    require_dim(id.n);
    std::string tw = j.at("twist").get<std::string>();
    if (tw == "octonion")
        id.twist = Twist::Octonion;
    else if (tw == "clifford")
        id.twist = Twist::Clifford;
    else
        throw std::runtime_error("identity_from_json: unknown twist \"" + tw + "\"");
    id.A = ElementSet(id.n, j.at("A").get<std::vector<Elem>>());
    id.B = ElementSet(id.n, j.at("B").get<std::vector<Elem>>());
    for (const auto& jb : j.at("coeffs")) {
        Bucket b;
        b.z = jb.at("z").get<Elem>();
        for (const auto& jt : jb.at("terms"))
            b.terms.push_back(
                {jt.at("x").get<Elem>(), jt.at("y").get<Elem>(), jt.at("sign").get<int>()});
        id.coeffs.push_back(std::move(b));
    }
    return id;
}

std::string to_latex(const Identity& id) {
    std::ostringstream out;
    auto sum_of_squares = [&](const char* var, const ElementSet& s) {
        out << "\\Big(";
        bool first = true;
        for (Elem x : s) {
            if (!first) out << "+";
            first = false;
            out << var << "_{" << x << "}^2";
        }
        out << "\\Big)";
    };
    sum_of_squares("a", id.A);
    out << "\\,";
    sum_of_squares("b", id.B);
    out << " = ";
    bool first = true;
    for (const Bucket& b : id.coeffs) {
        if (!first) out << " + ";
        first = false;
        out << "c_{" << b.z << "}^2";
    }
    out << "\n";
    for (const Bucket& b : id.coeffs) {
        out << "c_{" << b.z << "} = ";
        bool lead = true;
        for (const IdentityTerm& t : b.terms) {
            if (t.sign > 0) {
                if (!lead) out << " + ";
            } else {
                out << (lead ? "-" : " - ");
            }
            lead = false;
            out << "a_{" << t.x << "} b_{" << t.y << "}";
        }
        out << "\n";
    }
    return out.str();
}

std::string summary_text(const Identity& id, bool verified) {
    Triple t = triple_of(id);
    std::ostringstream out;
    out << "triple [" << t.r << "," << t.s << "," << t.N << "], "
        << (verified ? "verified" : "NOT VERIFIED") << "\n";
    return out.str();
}

}  // namespace sqid
