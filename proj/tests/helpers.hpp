#pragma once

#include "amalg/constructions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace amalg::test {

inline Elem el(const RingPtr& r, const std::string& label)
{
    auto x = r->find_label(label);
    if (!x)
        throw std::runtime_error("no element " + label);
    return *x;
}

inline std::vector<Elem> els(const RingPtr& r, const std::vector<std::string>& labels)
{
    std::vector<Elem> out;
    for (const auto& l : labels)
        out.push_back(el(r, l));
    return out;
}

inline Ideal gen(const RingPtr& r, const std::vector<std::string>& labels)
{
    return ideal_from_generators(r, els(r, labels));
}

/// The hom given by the labels of the images, in domain index order.
inline RingHom hom(const RingPtr& a, const RingPtr& b, const std::vector<std::string>& images)
{
    return RingHom(a, b, els(b, images), true);
}

inline RingHom zmod_reduction(std::int64_t m, std::int64_t n)
{
    std::vector<Elem> map;
    for (std::int64_t x = 0; x < m; ++x)
        map.push_back(static_cast<Elem>(x % n));
    return RingHom(zmod(m), zmod(n), map, true);
}

inline std::set<std::string> label_set(const Subset& s)
{
    auto l = s.labels();
    return {l.begin(), l.end()};
}

inline std::vector<RingPtr> small_rings()
{
    return {zmod(2), zmod(3), zmod(4), zmod(6), zmod(8), zmod(9), zmod(12),
            direct_product({zmod(2), zmod(2)}), direct_product({zmod(2), zmod(4)}),
            trunc_poly(zmod(2), 1, 1), trunc_poly(zmod(2), 1, 2), trunc_poly(zmod(2), 2, 1),
            galois_field(2, 2)};
}

inline bool is_prime_number(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace amalg::test
