#include "prym/torsion.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace prym {

namespace {

constexpr std::uint8_t kFull = 0x3F;

std::uint8_t canonical_mask(std::uint8_t m) {
    m &= kFull;
    if (std::popcount(m) % 2 != 0) throw std::invalid_argument("odd subset is not a 2-torsion class");
    if (std::popcount(m) > 2) m ^= kFull;
    return m;
}

}  // namespace

TwoTorsionClass TwoTorsionClass::from_mask(std::uint8_t mask) {
    TwoTorsionClass c;
    c.mask_ = canonical_mask(mask);
    return c;
}

TwoTorsionClass TwoTorsionClass::from_indices(const std::vector<int>& indices) {
    std::uint8_t m = 0;
    for (int i : indices) {
        if (i < 1 || i > 6) throw std::invalid_argument("index out of range 1..6");
        if (m & (1u << (i - 1))) throw std::invalid_argument("repeated index");
        m |= static_cast<std::uint8_t>(1u << (i - 1));
    }
    return from_mask(m);
}

TwoTorsionClass TwoTorsionClass::from_indices(std::initializer_list<int> indices) {
    return from_indices(std::vector<int>(indices));
}

int TwoTorsionClass::size() const { return std::popcount(mask_); }

std::vector<int> TwoTorsionClass::indices() const {
    std::vector<int> out;
    for (int i = 0; i < 6; ++i)
        if (mask_ & (1u << i)) out.push_back(i + 1);
    return out;
}

TwoTorsionClass operator+(TwoTorsionClass a, TwoTorsionClass b) {
    return TwoTorsionClass::from_mask(a.mask_ ^ b.mask_);
}

int weil_pairing(TwoTorsionClass a, TwoTorsionClass b) {
    return std::popcount(static_cast<std::uint8_t>(a.mask() & b.mask())) & 1;
}

KleinSubgroup make_klein_subgroup(TwoTorsionClass a, TwoTorsionClass b) {
    if (a.is_zero() || b.is_zero() || a == b)
        throw std::invalid_argument("generators must be distinct and nonzero");
    KleinSubgroup g;
    g.elements = {TwoTorsionClass{}, a, b, a + b};
    std::sort(g.elements.begin(), g.elements.end());
    g.isotropic = weil_pairing(a, b) == 0;
    return g;
}

std::vector<KleinSubgroup> enumerate_klein_subgroups() {
    std::set<KleinSubgroup> seen;
    std::vector<TwoTorsionClass> classes;
    for (int m = 0; m < 64; ++m)
        if (std::popcount(static_cast<unsigned>(m)) == 2)
            classes.push_back(TwoTorsionClass::from_mask(static_cast<std::uint8_t>(m)));
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            seen.insert(make_klein_subgroup(classes[i], classes[j]));
    return std::vector<KleinSubgroup>(seen.begin(), seen.end());
}

KleinSubgroup subgroup_from_pairs(const std::array<std::array<int, 2>, 3>& pairs) {
    std::uint8_t used = 0;
    std::array<TwoTorsionClass, 3> cls;
    for (int k = 0; k < 3; ++k) {
        cls[k] = TwoTorsionClass::from_indices({pairs[k][0], pairs[k][1]});
        if (used & cls[k].mask()) throw std::invalid_argument("pairs are not disjoint");
        used |= cls[k].mask();
    }
    KleinSubgroup g = make_klein_subgroup(cls[0], cls[1]);
    if (!g.isotropic || !(cls[0] + cls[1] == cls[2]))
        throw std::logic_error("pair partition did not produce an isotropic subgroup");
    return g;
}

KleinSubgroup subgroup_from_triple(const std::array<int, 3>& triple) {
    const auto& t = triple;
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        throw std::invalid_argument("triple indices must be distinct");
    const auto a = TwoTorsionClass::from_indices({t[0], t[1]});
    const auto b = TwoTorsionClass::from_indices({t[1], t[2]});
    KleinSubgroup g = make_klein_subgroup(a, b);
    if (g.isotropic) throw std::logic_error("triple did not produce a non-isotropic subgroup");
    return g;
}

SubgroupClassification classify_subgroup(const KleinSubgroup& g) {
    SubgroupClassification out;
    out.isotropic = g.isotropic;
    if (g.isotropic) {
        int k = 0;
        for (const auto& e : g.elements) {
            if (e.is_zero()) continue;
            const auto idx = e.indices();
            out.pairs[k++] = {idx[0], idx[1]};
        }
        std::sort(out.pairs.begin(), out.pairs.end());
    } else {
        std::uint8_t joint = 0;
        for (const auto& e : g.elements) joint |= e.mask();
        int k = 0;
        for (int i = 0; i < 6; ++i)
            if (joint & (1u << i)) out.triple[k++] = i + 1;
        if (k != 3) throw std::logic_error("non-isotropic subgroup without a 3-point support");
    }
    return out;
}

}  // namespace prym
