#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace prym {

// A 2-torsion class of a genus-2 Jacobian, written as an even subset of the
// six Weierstrass-point indices {1..6} modulo complement. The canonical
// representative is the one of size <= 2 (sizes 4 and 6 reduce to 2 and 0),
// so there are 16 classes in total.
class TwoTorsionClass {
  public:
    TwoTorsionClass() = default;  // zero class
    static TwoTorsionClass from_indices(std::initializer_list<int> indices);
    static TwoTorsionClass from_indices(const std::vector<int>& indices);
    static TwoTorsionClass from_mask(std::uint8_t mask);  // bits 0..5 <-> points 1..6

    std::uint8_t mask() const { return mask_; }
    bool is_zero() const { return mask_ == 0; }
    int size() const;
    std::vector<int> indices() const;  // sorted, 1-based

    friend TwoTorsionClass operator+(TwoTorsionClass a, TwoTorsionClass b);
    friend bool operator==(TwoTorsionClass a, TwoTorsionClass b) { return a.mask_ == b.mask_; }
    friend bool operator<(TwoTorsionClass a, TwoTorsionClass b) { return a.mask_ < b.mask_; }

  private:
    std::uint8_t mask_ = 0;
};

// Weil pairing: parity of the number of common indices. Well defined on
// complement classes because every representative has even size.
int weil_pairing(TwoTorsionClass a, TwoTorsionClass b);

// A 2-dimensional F2-subspace {0, a, b, a+b} tagged by whether the Weil
// pairing vanishes on it.
struct KleinSubgroup {
    std::array<TwoTorsionClass, 4> elements;  // sorted, zero first
    bool isotropic = false;

    friend bool operator==(const KleinSubgroup& x, const KleinSubgroup& y) {
        return x.elements == y.elements;
    }
    friend bool operator<(const KleinSubgroup& x, const KleinSubgroup& y) {
        return x.elements < y.elements;
    }
};

KleinSubgroup make_klein_subgroup(TwoTorsionClass a, TwoTorsionClass b);

// All 35 Klein subgroups (15 isotropic, 20 non-isotropic), deterministic order.
std::vector<KleinSubgroup> enumerate_klein_subgroups();

// {0, {p1}, {p2}, {p3}} for a partition into three disjoint pairs; isotropic.
// Indices are 1-based. Throws on overlapping or out-of-range pairs.
KleinSubgroup subgroup_from_pairs(const std::array<std::array<int, 2>, 3>& pairs);

// {0, {i,j}, {j,k}, {i,k}} for a triple {i,j,k}; non-isotropic. 1-based.
KleinSubgroup subgroup_from_triple(const std::array<int, 3>& triple);

struct SubgroupClassification {
    bool isotropic = false;
    std::array<int, 3> triple{};                      // valid when !isotropic, sorted
    std::array<std::array<int, 2>, 3> pairs{};        // valid when isotropic, sorted
};

// Inverse of the two constructions above; total on Klein subgroups.
SubgroupClassification classify_subgroup(const KleinSubgroup& g);

}  // namespace prym
