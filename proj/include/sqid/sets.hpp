#pragma once

// Finite subsets of (Z/2Z)^n with canonical (ascending) ordering, so every
// downstream serialization is byte-stable.

#include <algorithm>
#include <vector>

#include "sqid/gf2n.hpp"

namespace sqid {

struct ElementSet {
    int n = 0;
    std::vector<Elem> members;  // sorted, duplicate-free

    ElementSet() = default;
    ElementSet(int dim, std::vector<Elem> elems) : n(dim), members(std::move(elems)) {
        require_dim(n);
        canonicalize();
        for (Elem x : members)
            if (x & ~full_mask(n)) throw DimensionError("element out of range for dimension");
    }

    std::size_t size() const { return members.size(); }
    bool contains(Elem x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }
    bool operator==(const ElementSet&) const = default;

    auto begin() const { return members.begin(); }
    auto end() const { return members.end(); }

private:
    void canonicalize() {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }
};

ElementSet full_group(int n);
ElementSet sumset(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);

// {a + a' : a != a' in A} \ {0}, the nonzero internal sums
ElementSet self_sums(const ElementSet& a);

}  // namespace sqid
