#pragma once

#include <vector>

#include "modcurve/atkinlehner.hpp"
#include "modcurve/qforms.hpp"

namespace modcurve {

class ParityViolation : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

struct FixedCount {
    int elliptic = 0;
    int cuspidal = 0;
    int total() const { return elliptic + cuspidal; }
};

// Fixed points on X_Delta(N) of the automorphism induced by m (m must normalize Gamma_Delta(N)).
FixedCount orbit_fixed_points(const CosetAction& action, const IntMat2& m);
int cuspidal_fixed_count(const CosetAction& action, const IntMat2& m);
// Image under m of the cusp with T-cycle id k.
int cusp_image(const CosetAction& action, const IntMat2& m, int k);

struct LiftWitness {
    int base_index = 0;  // j of z_j
    i64 g = 1;           // point [g]z_j
    i64 a_class = 1;     // upper-left of the witnessing element, signed residue mod N
};

struct LiftReport {
    i64 n = 1;
    DeltaSubgroup delta;
    NormalizerElement candidate;
    FixedPointSet base;
    int fixed_count_elliptic = 0;
    int fixed_count_cuspidal = 0;
    std::vector<LiftWitness> per_point_witnesses;
    int total() const { return fixed_count_elliptic + fixed_count_cuspidal; }
};

// Points [g]z_j above the base fixed points that are fixed by the candidate.
LiftReport lift_fixed_points(const CosetAction& action, const NormalizerElement& candidate,
                             const FixedPointSet& base);

int involution_quotient_genus(int genus, int fixed_count);
int castelnuovo_bound(int n1, int g1, int n2, int g2);

// Residue of a mod n in (-n/2, n/2].
i64 signed_residue(i64 a, i64 n);

}  // namespace modcurve
