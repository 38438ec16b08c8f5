#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcurve/congruence.hpp"

namespace modcurve {

struct QForm {
    i64 p = 1, q = 0, r = 1;

    i64 disc() const { return q * q - 4 * p * r; }
    i64 content() const;
    QForm primitive() const;
    QForm scaled(i64 k) const { return {k * p, k * q, k * r}; }
    bool positive_definite() const { return p > 0 && disc() < 0; }
    // (f∘A)(x, y) = f(ax + by, cx + dy)
    QForm compose(const IntMat2& m) const;

    bool operator==(const QForm& o) const = default;
    auto operator<=>(const QForm& o) const = default;
    std::string str() const;  // "[p,q,r]"
};

class NotPositiveDefinite : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class BadDiscriminant : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class SearchExhausted : public InternalError {
public:
    using InternalError::InternalError;
};

struct Reduction {
    QForm form;   // reduced
    IntMat2 gamma;  // form = f∘gamma, gamma in SL2(Z)
};

Reduction reduce(const QForm& f);
bool is_reduced(const QForm& f);
std::vector<QForm> reduced_classes(i64 disc);
bool is_discriminant(i64 disc);

// Generator of the PSL2(Z)-stabilizer of the root of a primitive form (D = -3 or -4 only).
std::optional<IntMat2> root_stabilizer(const QForm& f);

struct BetaCandidate {
    i64 beta = 0;  // residue mod 2N
    i64 disc = 0;
};

std::vector<BetaCandidate> beta_candidates(i64 n, i64 d);

struct GKZClass {
    i64 disc = 0;     // D of the ambient set
    i64 n = 1;
    i64 beta = 0;
    i64 ell = 1;      // scaling layer
    i64 lambda = 0;   // residue mod 2N of the primitive layer
    i64 m = 1;
    i64 m1 = 1, m2 = 1;
    QForm reduced_image;
    i64 layer_disc() const { return disc / (ell * ell); }
};

std::vector<GKZClass> gkz_decompose(i64 disc, i64 n, i64 beta);
// Form [p'N, q, r] of the layer with gcd(p', q, r) = 1; the ambient form is ell times it.
QForm class_representative(const GKZClass& cls);

// Gamma_Delta(N)-class of the point root(f): reduced form and minimal coset in its orbit.
struct PointKey {
    QForm reduced;
    int coset = 0;
    bool operator==(const PointKey& o) const = default;
    auto operator<=>(const PointKey& o) const = default;
};

PointKey point_key(const CosetAction& action, const QForm& f);

struct FixedPoint {
    QForm form;      // [Nz, q, -y]
    IntMat2 matrix;  // elliptic element of the W_d coset fixing root(form)
    GKZClass cls;
    bool elliptic_point = false;  // root has nontrivial stabilizer in Gamma_0(N)
};

struct FixedPointSet {
    i64 n = 1;
    i64 d = 1;
    std::vector<FixedPoint> points;
    std::size_t count() const { return points.size(); }
};

FixedPointSet fixed_points_X0(i64 n, i64 d);

// Elliptic element with lower-left > 0 attached to a form [c, q, r] of disc -4d or d^2-4d.
IntMat2 elliptic_element(const QForm& f, i64 d);

}  // namespace modcurve
