#include "sqid/sets.hpp"

#include <iterator>
#include <unordered_set>

namespace sqid {

ElementSet full_group(int n) {
    require_dim(n);
    if (n > 26) throw BoundExceeded("full_group: materializing 2^n elements with n > 26");
    std::vector<Elem> v(std::size_t{1} << n);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return ElementSet(n, std::move(v));
}

ElementSet sumset(const ElementSet& a, const ElementSet& b) {
    if (a.n != b.n) throw DimensionError("sumset: dimension mismatch");
    std::unordered_set<Elem> acc;
    acc.reserve(a.size() * 2);
    for (Elem x : a)
        for (Elem y : b) acc.insert(x ^ y);
    return ElementSet(a.n, std::vector<Elem>(acc.begin(), acc.end()));
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
    if (a.n != b.n) throw DimensionError("set_difference: dimension mismatch");
    std::vector<Elem> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return ElementSet(a.n, std::move(out));
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
    if (a.n != b.n) throw DimensionError("set_union: dimension mismatch");
    std::vector<Elem> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return ElementSet(a.n, std::move(out));
}

ElementSet self_sums(const ElementSet& a) {
    std::unordered_set<Elem> acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            acc.insert(a.members[i] ^ a.members[j]);
    acc.erase(0);
    return ElementSet(a.n, std::vector<Elem>(acc.begin(), acc.end()));
}

}  // namespace sqid
