#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modcurve/matrix.hpp"
#include "modcurve/zmodn.hpp"

namespace modcurve {

// det 1, c = 0 mod N, a mod N in Delta (Delta contains -1, so this is projective).
bool is_member(const IntMat2& m, const DeltaSubgroup& delta);

// SL2(Z) matrix whose bottom row is congruent to (c, d) mod n.
IntMat2 lift_row(i64 c, i64 d, i64 n);
// SL2(Z) matrix whose first column is congruent to (x, y) mod n.
IntMat2 lift_column(i64 x, i64 y, i64 n);

class CosetAction {
public:
    explicit CosetAction(const DeltaSubgroup& delta);

    int level() const { return n_; }
    const DeltaSubgroup& delta() const { return delta_; }
    int size() const { return static_cast<int>(rows_.size()); }

    int coset_of_row(i64 c, i64 d) const;
    int coset_of(const IntMat2& m) const { return coset_of_row(m.c, m.d); }
    std::pair<i64, i64> row(int i) const { return rows_[i]; }
    int identity_coset() const { return coset_of_row(0, 1); }

    int sigma_S(int i) const { return s_[i]; }
    int sigma_T(int i) const { return t_[i]; }
    const IntMat2& rep(int i) const { return reps_[i]; }

    int e2() const;
    int e3() const;
    int cusp_count() const { return static_cast<int>(cycles_.size()); }
    int cusp_of_coset(int i) const { return cycle_of_[i]; }
    const std::vector<std::vector<int>>& cusp_cycles() const { return cycles_; }

    int genus() const;

private:
    int n_;
    DeltaSubgroup delta_;
    std::vector<int> table_;
    std::vector<std::pair<i64, i64>> rows_;
    std::vector<IntMat2> reps_;
    std::vector<int> s_, t_;
    std::vector<std::vector<int>> cycles_;
    std::vector<int> cycle_of_;
};

int genus(const DeltaSubgroup& delta);

std::vector<IntMat2> schreier_generators(const CosetAction& action);

struct CuspField {
    int denominator = 1;
    bool coprime_case = false;          // gcd(d, N/d) = 1
    std::vector<i64> delta_d;           // Delta^(d) in (Z/d)^*
    int degree = 1;                     // phi(d)/|Delta^(d)| in the coprime case
};

struct CuspClass {
    int index = 0;          // T-cycle id in the coset action
    i64 x = 0, y = 0;       // representative ±(x;y)
    int denominator = 1;    // gcd(y, N)
    int width = 1;
    int galois_orbit_size = 1;
    std::optional<CuspField> field;
    bool rational() const { return galois_orbit_size == 1; }
};

// Cusps as orbits of ±(x;y) under Gamma_Delta(N) mod N; ordered by T-cycle id.
std::vector<CuspClass> cusps(const CosetAction& action);

CuspField cusp_field(const DeltaSubgroup& delta, int denominator);

// T-cycle id of the cusp containing the pair (x;y).
int cusp_of_pair(const CosetAction& action, i64 x, i64 y);

class CuspCountMismatch : public InternalError {
public:
    using InternalError::InternalError;
};

class NonIntegralGenus : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace modcurve
