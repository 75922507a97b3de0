#ifndef CPCOUNT_DETECTION_HPP
#define CPCOUNT_DETECTION_HPP

#include <string>
#include <vector>

#include "cpcount/arith.hpp"

namespace cpcount {

// One guaranteed-nontrivial p-torsion class: either a bundle on a projective
// space or a class in the unstable homotopy of a unitary group.
struct DetectionInstance {
    enum class Target { projective, unitary };

    Prime prime;
    Int rank;
    Target target;
    Int ambient_dim;       // projective: bundle lives on CP^{ambient_dim}
    Int homotopy_degree;   // unitary: torsion in pi_{homotopy_degree} BU(group_rank)
    Int group_rank;        // unitary only; equals rank here
    Int torsion_exponent;  // order p^torsion_exponent, always 1
    std::string source_label;
    std::string citation;

    friend bool operator==(const DetectionInstance& a, const DetectionInstance& b) {
        return a.prime == b.prime && a.rank == b.rank && a.target == b.target &&
               a.ambient_dim == b.ambient_dim && a.homotopy_degree == b.homotopy_degree &&
               a.group_rank == b.group_rank && a.torsion_exponent == b.torsion_exponent;
    }
};

// Data for the split top-cell-to-bottom-cell construction: an element of
// degree 2nk-3 together with the orientability multiple n and the index i
// controlling which stunted projective space carries the bundle.
struct SplitConstructionParams {
    Int orientability_multiple;  // n
    Int k;
    Int i;
    Int element_degree;  // must equal 2nk-3
};

struct TodaIdentification {
    Int rank;
    Int dim;
    Int homotopy_degree;  // 2n
    std::string describe() const;
};

namespace detect {

enum class Tmf2Variant { w, w_kappa4 };
enum class UnitaryKind { ko, tmf_w, tmf_wk, eo2, eop };

// Bundle from the composite CP^{n(k+i)-1}_{ni} -> S^{2n(k+i)-2} -> S^{2ni+1}
// -> Sigma CP^{n(k+i)-1}_{ni} through a degree-(2nk-3) element.
DetectionInstance split_construction_instance(const SplitConstructionParams& params,
                                              const Prime& p, const std::string& source_label,
                                              const std::string& citation);

// Rank 2i on CP^{2i+4t+1}, 2-torsion from alpha_{4t+1}. Needs i >= 2t+1.
DetectionInstance ko_family(const Int& t, const Int& i);

// Rank 8*index on CP^{8(12t+3+index)-1} (variant w, index >= 12t+3) or
// CP^{8(12t+8+index)-1} (variant w_kappa4, index >= 12t+8); 2-torsion.
DetectionInstance tmf2_families(const Int& t, const Int& index, Tmf2Variant variant);

// Rank 3l on CP^{3l+19+36t}, 3-torsion from theta_t. Needs 3l >= 19+36t.
DetectionInstance eo2_family(const Int& t, const Int& l);

// Rank lp on CP^{lp+(d+1)/2} with d = 2p^2(p-1)^2+2p-3+(2p^2-2p-2), p >= 5;
// p-torsion from theta_1. Needs lp >= (d+1)/2.
DetectionInstance eop_family(const Prime& p, const Int& l);

Int eop_element_degree(const Prime& p, const Int& j);

// Unitary-group targets for the same families; the eop kind takes the full
// range 1 <= j <= p-1.
DetectionInstance unitary_ko(const Int& t, const Int& i);
DetectionInstance unitary_tmf2(const Int& t, const Int& index, Tmf2Variant variant);
DetectionInstance unitary_eo2(const Int& t, const Int& l);
DetectionInstance unitary_eop(const Prime& p, const Int& j, const Int& l);

// pi_{2n} BU(r) identified with the stable pi_{2n} of Sigma CP^n_r,
// valid for n > r >= n/2.
TodaIdentification toda_degree(const Int& r, const Int& n);

// Families matching an exact (prime, rank, ambient) query; used to attach
// evidence to otherwise-unknown bundle counts.
std::vector<DetectionInstance> find_projective_hits(const Prime& p, const Int& r, const Int& n);

}  // namespace detect
}  // namespace cpcount

#endif
