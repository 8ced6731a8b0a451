#include "sqid/clifford.hpp"

#include <sstream>

namespace sqid {

SignedPermMatrix SignedPermMatrix::identity_matrix(int n) {
    require_dim(n);
    SignedPermMatrix m;
    m.n = n;
    std::size_t sz = std::size_t{1} << n;
    m.col.resize(sz);
    m.sign.assign(sz, 1);
    for (std::size_t y = 0; y < sz; ++y) m.col[y] = static_cast<std::uint32_t>(y);
    return m;
}

SignedPermMatrix SignedPermMatrix::operator*(const SignedPermMatrix& rhs) const {
    if (n != rhs.n) throw DimensionError("SignedPermMatrix: dimension mismatch");
    SignedPermMatrix out;
    out.n = n;
    out.col.resize(size());
    out.sign.resize(size());
    for (std::size_t y = 0; y < size(); ++y) {
        // (this * rhs)(y, t): this row y hits column c, rhs row c hits t
        std::uint32_t c = col[y];
        out.col[y] = rhs.col[c];
        out.sign[y] = static_cast<std::int8_t>(sign[y] * rhs.sign[c]);
    }
    return out;
}

SignedPermMatrix SignedPermMatrix::transpose() const {
    SignedPermMatrix out;
    out.n = n;
    out.col.resize(size());
    out.sign.resize(size());
    for (std::size_t y = 0; y < size(); ++y) {
        out.col[col[y]] = static_cast<std::uint32_t>(y);
        out.sign[col[y]] = sign[y];
    }
    return out;
}

SignedPermMatrix SignedPermMatrix::negated() const {
    SignedPermMatrix out = *this;
    for (auto& s : out.sign) s = static_cast<std::int8_t>(-s);
    return out;
}

bool SignedPermMatrix::is_identity() const {
    for (std::size_t y = 0; y < size(); ++y)
        if (col[y] != y || sign[y] != 1) return false;
    return true;
}

std::string SignedPermMatrix::to_csv() const {
    if (n > 14) throw BoundExceeded("to_csv: dense export capped at n <= 14");
    std::ostringstream out;
    for (std::size_t y = 0; y < size(); ++y) {
        for (std::size_t t = 0; t < size(); ++t) {
            if (t) out << ',';
            out << entry(y, t);
        }
        out << '\n';
    }
    return out.str();
}

std::string SignedPermMatrix::to_triplets() const {
    std::ostringstream out;
    for (std::size_t y = 0; y < size(); ++y)
        out << y << ' ' << col[y] << ' ' << int(sign[y]) << '\n';
    return out.str();
}

SignedPermMatrix build_G(int n, Elem x) {
    require_dim(n);
    if (n > 24) throw BoundExceeded("build_G: 2^n rows with n > 24");
    if (x & ~full_mask(n)) throw DimensionError("build_G: element out of range");
    SignedPermMatrix m;
    m.n = n;
    std::size_t sz = std::size_t{1} << n;
    m.col.resize(sz);
    m.sign.resize(sz);
    for (std::size_t y = 0; y < sz; ++y) {
        m.col[y] = static_cast<std::uint32_t>(y ^ x);
        m.sign[y] = static_cast<std::int8_t>(f_octonion(n, x, static_cast<Elem>(y)) ? -1 : 1);
    }
    return m;
}

bool anticommute(int n, Elem x, Elem xp) {
    require_dim(n);
    return (f_octonion(n, x, xp) ^ f_octonion(n, xp, x)) == 1;
}

ElementSet generator_set(int n, CliffordCase c) {
    require_dim(n);
    std::vector<Elem> v;
    switch (c) {
        case CliffordCase::Cl0_2n:
            if (n % 4 != 3)
                throw std::invalid_argument("generator_set: Cl(0,2n) case needs n = 3 mod 4");
            for (int i = 1; i <= n; ++i) {
                v.push_back(unit(i));
                v.push_back(unit_bar(n, i));
            }
            break;
        case CliffordCase::Cl0_2n_minus1:
            if (n % 4 != 1 && n % 4 != 3)
                throw std::invalid_argument("generator_set: Cl(0,2n-1) case needs n = 1,3 mod 4");
            for (int i = 1; i <= n; ++i) v.push_back(unit(i));
            for (int j = 2; j <= n; ++j) v.push_back(unit(1) ^ unit(j));
            break;
        case CliffordCase::Cl0_2n_minus2:
            if (n % 4 != 2 && n % 4 != 3)
                throw std::invalid_argument("generator_set: Cl(0,2n-2) case needs n = 2,3 mod 4");
            for (int i = 1; i <= n; ++i) v.push_back(unit(i));
            for (int j = 2; j < n; ++j) v.push_back(unit(1) ^ unit(j));
            break;
    }
    return ElementSet(n, std::move(v));
}

bool verify_clifford_rep(int n, const ElementSet& a) {
    require_dim(n);
    for (Elem x : a)
        if (f_octonion(n, x, x) != 1) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!anticommute(n, a.members[i], a.members[j])) return false;

    if (n <= 6) {
        // matrix-level cross-check
        SignedPermMatrix id = SignedPermMatrix::identity_matrix(n);
        SignedPermMatrix neg_id = id.negated();
        std::vector<SignedPermMatrix> gs;
        gs.reserve(a.size());
        for (Elem x : a) gs.push_back(build_G(n, x));
        for (std::size_t i = 0; i < gs.size(); ++i) {
            if (!(gs[i] * gs[i] == neg_id)) return false;
            for (std::size_t j = i + 1; j < gs.size(); ++j)
                if (!(gs[i] * gs[j] == (gs[j] * gs[i]).negated())) return false;
        }
    }
    return true;
}

}  // namespace sqid
