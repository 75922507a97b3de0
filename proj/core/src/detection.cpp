#include "cpcount/detection.hpp"

namespace cpcount {

std::string TodaIdentification::describe() const {
    return "pi_" + homotopy_degree.str() + " BU(" + rank.str() + ") = stable pi_" +
           homotopy_degree.str() + " of Sigma CP^" + dim.str() + "_" + rank.str();
}

namespace detect {
namespace {

const char* kKoCitation = "ko-alpha-family";
const char* kTmfWCitation = "tmf2-w-family";
const char* kTmfWkCitation = "tmf2-w-kbar4-family";
const char* kEo2Citation = "eo2-theta-family";
const char* kEopCitation = "eop-theta-family";

DetectionInstance projective(const Prime& p, Int rank, Int ambient, std::string source,
                             std::string citation) {
    if (!arith::is_metastable(rank, ambient))
        throw InternalContradiction("detection family emitted a non-metastable instance");
    DetectionInstance inst{p,      std::move(rank), DetectionInstance::Target::projective,
                           std::move(ambient), 0,  0,
                           1,      std::move(source), std::move(citation)};
    return inst;
}

DetectionInstance unitary(const Prime& p, Int rank, Int degree, std::string source,
                          std::string citation) {
    DetectionInstance inst{p, rank, DetectionInstance::Target::unitary,
                           0, std::move(degree), rank,
                           1, std::move(source), std::move(citation)};
    return inst;
}

}  // namespace

DetectionInstance split_construction_instance(const SplitConstructionParams& params,
                                              const Prime& p, const std::string& source_label,
                                              const std::string& citation) {
    const Int& n = params.orientability_multiple;
    const Int& k = params.k;
    const Int& i = params.i;
    if (n < 1 || k < 1 || i < 1)
        throw InvalidInput("split construction needs positive n, k, i");
    if (params.element_degree != 2 * n * k - 3)
        throw InvalidInput("element degree " + params.element_degree.str() +
                           " does not equal 2nk-3 = " + Int(2 * n * k - 3).str());
    if (i < k)
        throw InvalidInput("split construction needs i >= k for a metastable target");
    // Top cell minus element degree must land one above the bottom cell.
    Int top = 2 * n * (k + i) - 2;
    if (top - params.element_degree != 2 * n * i + 1)
        throw InternalContradiction("split construction degree bookkeeping failed");
    return projective(p, n * i, n * (k + i) - 1, source_label, citation);
}

DetectionInstance ko_family(const Int& t, const Int& i) {
    if (t < 0) throw InvalidInput("ko_family needs t >= 0");
    if (i < 2 * t + 1) throw InvalidInput("ko_family needs i >= 2t+1");
    SplitConstructionParams params{2, 2 * t + 1, i, 8 * t + 1};
    return split_construction_instance(params, Prime(2), "alpha_" + Int(4 * t + 1).str(),
                                       kKoCitation);
}

DetectionInstance tmf2_families(const Int& t, const Int& index, Tmf2Variant variant) {
    if (t < 0) throw InvalidInput("tmf2_families needs t >= 0");
    if (variant == Tmf2Variant::w) {
        if (index < 12 * t + 3) throw InvalidInput("tmf2 w family needs index >= 12t+3");
        SplitConstructionParams params{8, 12 * t + 3, index, 192 * t + 45};
        return split_construction_instance(params, Prime(2), "Delta^" + Int(8 * t).str() + " w",
                                           kTmfWCitation);
    }
    if (index < 12 * t + 8) throw InvalidInput("tmf2 w kbar^4 family needs index >= 12t+8");
    SplitConstructionParams params{8, 12 * t + 8, index, 192 * t + 125};
    return split_construction_instance(params, Prime(2),
                                       "Delta^" + Int(8 * t).str() + " w kbar^4", kTmfWkCitation);
}

DetectionInstance eo2_family(const Int& t, const Int& l) {
    if (t < 0) throw InvalidInput("eo2_family needs t >= 0");
    if (3 * l < 19 + 36 * t) throw InvalidInput("eo2_family needs 3l >= 19+36t");
    return projective(Prime(3), 3 * l, 3 * l + 19 + 36 * t, "theta_" + t.str(), kEo2Citation);
}

Int eop_element_degree(const Prime& p, const Int& j) {
    const Int& q = p.value();
    return 2 * q * q * (q - 1) * (q - 1) + 2 * q - 3 + j * (2 * q * q - 2 * q - 2);
}

DetectionInstance eop_family(const Prime& p, const Int& l) {
    if (p.value() < 5) throw InvalidInput("eop_family needs p >= 5");
    Int d = eop_element_degree(p, 1);
    Int half = (d + 1) / 2;
    if (l * p.value() < half)
        throw InvalidInput("eop_family needs lp >= (d+1)/2 = " + half.str());
    return projective(p, l * p.value(), l * p.value() + half, "theta_1", kEopCitation);
}

DetectionInstance unitary_ko(const Int& t, const Int& i) {
    if (t < 0) throw InvalidInput("unitary ko family needs t >= 0");
    if (i < 2 * t + 1) throw InvalidInput("unitary ko family needs i >= 2t+1");
    return unitary(Prime(2), 2 * i, 4 * (2 * t + 1 + i) - 2, "alpha_" + Int(4 * t + 1).str(),
                   kKoCitation);
}

DetectionInstance unitary_tmf2(const Int& t, const Int& index, Tmf2Variant variant) {
    if (t < 0) throw InvalidInput("unitary tmf2 family needs t >= 0");
    if (variant == Tmf2Variant::w) {
        if (index < 12 * t + 3)
            throw InvalidInput("unitary tmf2 w family needs index >= 12t+3");
        Int m = 8 * (12 * t + 3 + index) - 1;
        return unitary(Prime(2), 8 * index, 2 * m, "Delta^" + Int(8 * t).str() + " w",
                       kTmfWCitation);
    }
    if (index < 12 * t + 8)
        throw InvalidInput("unitary tmf2 w kbar^4 family needs index >= 12t+8");
    Int m = 8 * (12 * t + 8 + index) - 1;
    return unitary(Prime(2), 8 * index, 2 * m, "Delta^" + Int(8 * t).str() + " w kbar^4",
                   kTmfWkCitation);
}

DetectionInstance unitary_eo2(const Int& t, const Int& l) {
    if (t < 0) throw InvalidInput("unitary eo2 family needs t >= 0");
    if (l < 12 * t + 7) throw InvalidInput("unitary eo2 family needs l >= 12t+7");
    return unitary(Prime(3), 3 * l, 2 * (3 * l + 19 + 36 * t), "theta_" + t.str(), kEo2Citation);
}

DetectionInstance unitary_eop(const Prime& p, const Int& j, const Int& l) {
    if (p.value() < 5) throw InvalidInput("unitary eop family needs p >= 5");
    if (j < 1 || j > p.value() - 1)
        throw InvalidInput("unitary eop family needs 1 <= j <= p-1");
    Int dj = eop_element_degree(p, j);
    // l >= (d_j+1)/(2p), i.e. 2pl >= d_j+1.
    if (2 * p.value() * l < dj + 1)
        throw InvalidInput("unitary eop family needs l >= (d_j+1)/(2p)");
    return unitary(p, l * p.value(), 2 * l * p.value() + 1 + dj, "theta_" + j.str(),
                   kEopCitation);
}

TodaIdentification toda_degree(const Int& r, const Int& n) {
    if (!(n > r && 2 * r >= n))
        throw InvalidInput("Toda identification needs n > r >= n/2");
    return TodaIdentification{r, n, 2 * n};
}

std::vector<DetectionInstance> find_projective_hits(const Prime& p, const Int& r, const Int& n) {
    std::vector<DetectionInstance> hits;
    if (!arith::is_metastable(r, n)) return hits;
    const Int c = n - r;
    if (p.value() == 2) {
        if (r % 2 == 0 && r >= 2) {
            Int i = r / 2;
            Int tnum = c - 1;  // n = 2i + 4t + 1
            if (tnum >= 0 && tnum % 4 == 0 && i >= 2 * (tnum / 4) + 1)
                hits.push_back(ko_family(tnum / 4, i));
        }
        if (r % 8 == 0 && r >= 8) {
            Int i = r / 8;
            Int tw = c - 23;  // n = r + 96t + 23
            if (tw >= 0 && tw % 96 == 0 && i >= 12 * (tw / 96) + 3)
                hits.push_back(tmf2_families(tw / 96, i, Tmf2Variant::w));
            Int twk = c - 63;  // n = r + 96t + 63
            if (twk >= 0 && twk % 96 == 0 && i >= 12 * (twk / 96) + 8)
                hits.push_back(tmf2_families(twk / 96, i, Tmf2Variant::w_kappa4));
        }
    } else if (p.value() == 3) {
        if (r % 3 == 0 && r >= 3) {
            Int tnum = c - 19;
            if (tnum >= 0 && tnum % 36 == 0 && r >= 19 + 36 * (tnum / 36))
                hits.push_back(eo2_family(tnum / 36, r / 3));
        }
    } else {
        Int d = eop_element_degree(p, 1);
        if (r % p.value() == 0 && c == (d + 1) / 2 && r >= c)
            hits.push_back(eop_family(p, r / p.value()));
    }
    return hits;
}

}  // namespace detect
}  // namespace cpcount
