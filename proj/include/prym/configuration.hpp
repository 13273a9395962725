#pragma once

#include <array>
#include <variant>
#include <vector>

#include "prym/projective.hpp"

namespace prym {

enum class MarkingKind { triple, pair_partition };

struct TripleMarking {
    std::array<int, 3> indices;  // distinct, in {0..5}
};

struct PairPartitionMarking {
    std::array<std::array<int, 2>, 3> pairs;  // disjoint, covering {0..5}
};

using Marking = std::variant<TripleMarking, PairPartitionMarking>;

// Six distinct points of P^1 together with a marked triple or a marked
// partition into three unordered pairs.
struct MarkedConfiguration {
    std::array<ProjPoint, 6> points;
    Marking marking;

    MarkingKind kind() const {
        return std::holds_alternative<TripleMarking>(marking) ? MarkingKind::triple
                                                              : MarkingKind::pair_partition;
    }
};

// Throws std::invalid_argument when points coincide (chordal metric) or the
// marking does not select/partition {0..5} as declared.
void validate(const MarkedConfiguration& cfg, double tol = kCoincidenceTol);

// The three free points after sending the references to (0, 1, infinity).
// Guaranteed pairwise distinct and disjoint from {0, 1}.
struct NormalizedConfiguration {
    std::array<Complex, 3> b;
    MarkingKind kind = MarkingKind::triple;
};

// All admissible normalized b-tuples of a configuration, one per reference
// frame: 6 for a marked triple (orderings of the marked points), 48 for a
// pair partition (pair orderings times within-pair choices). For a triple
// the tuple entries are sorted; for a partition b_i is bound to the pair
// whose reference went to the i-th base point.
std::vector<std::array<Complex, 3>> normalization_candidates(const MarkedConfiguration& cfg,
                                                             double tol = kCoincidenceTol);

// Canonical form: the lexicographically least candidate, comparing each b_i
// by (Re, Im). Deterministic and invariant under marked projective
// equivalence.
NormalizedConfiguration normalize(const MarkedConfiguration& cfg, double tol = kCoincidenceTol);

// The configuration (0, 1, infinity, b1, b2, b3) with the marking placed on
// the reference points: triple {0,1,2} or pairs {0,3},{1,4},{2,5}.
MarkedConfiguration embed(const NormalizedConfiguration& n);

// Applies a Moebius map to all six points, keeping the marking.
MarkedConfiguration transport(const MarkedConfiguration& cfg, const Mobius& g);

// True iff some projective transformation respecting the markings maps one
// configuration onto the other. Throws on marking-kind mismatch.
bool equivalent(const MarkedConfiguration& a, const MarkedConfiguration& b, double tol = 1e-9);

}  // namespace prym
