#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcurve/congruence.hpp"

namespace modcurve {

enum class ElementKind { Diamond, AtkinLehner, DiamondAtkinLehner, Explicit };

struct NormalizerElement {
    IntMat2 matrix;
    ElementKind kind = ElementKind::Explicit;
    i64 diamond = 1;  // a of [a], 1 if none
    i64 hall = 0;     // d of W_d, 0 if none
    bool hat = false; // the canonical Ŵ_d rather than a generic W_d
    IntMat2 base;     // explicit factor of [a]*base, for naming
    std::string name() const;  // "[3]Ŵ26", "W4", "[7]", "[[1,0],[14,1]]"
};

class DoesNotDescend : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotCoprime : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotNormalizing : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// [[a', m],[N, d']] with a' = a mod N and det 1.
IntMat2 diamond(i64 a, i64 n);

// Residue = a mod N/d and = a^{-1} mod d.
i64 t_map(i64 d, i64 n, i64 a);
std::vector<i64> t_image(i64 d, const DeltaSubgroup& delta);
bool descends(i64 d, const DeltaSubgroup& delta);

// Canonical trace-0 (or trace ±d for d in {2,3}) Atkin–Lehner matrix, when one exists.
std::optional<IntMat2> hat_W_matrix(i64 d, i64 n);
// As above but requires t_d(Delta) = Delta.
std::optional<IntMat2> hat_W(i64 d, const DeltaSubgroup& delta);
// [[d, y],[N, d*w]] with w = d^{-1} mod N/d.
IntMat2 generic_W(i64 d, i64 n);
// W_d matrix preferring Ŵ_d.
NormalizerElement atkin_lehner(i64 d, i64 n);

// Hall divisor d of the Atkin–Lehner coset containing m (det d, lower-left = 0 mod N), or 0.
i64 atkin_lehner_type(const IntMat2& m, i64 n);

bool normalizes(const IntMat2& m, const DeltaSubgroup& delta, const std::vector<IntMat2>& gens);
bool normalizes(const IntMat2& m, const CosetAction& action);

// Smallest k <= cap with m^k (scaled) in Gamma_Delta(N); nullopt when unbounded.
std::optional<int> automorphism_order(const IntMat2& m, const DeltaSubgroup& delta, int cap = 24);

int fricke_field_degree(const DeltaSubgroup& delta);

}  // namespace modcurve
