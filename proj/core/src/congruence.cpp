#include "modcurve/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace modcurve {

bool is_member(const IntMat2& m, const DeltaSubgroup& delta) {
    i64 n = delta.modulus();
    return m.det() == 1 && mod(m.c, n) == 0 && delta.contains(m.a);
}

IntMat2 lift_row(i64 c, i64 d, i64 n) {
    c = mod(c, n);
    d = mod(d, n);
    if (n == 1) return kI;
    if (c == 0 && d == 1) return kI;
    for (i64 k = 0;; ++k) {
        for (int side = 0; side < 2; ++side) {
            i64 cc = side == 0 ? c : c + k * n;
            i64 dd = side == 0 ? d + k * n : d;
            if (std::gcd(cc, dd) == 1) {
                auto e = ext_gcd(cc, dd);  // x*cc + y*dd = 1
                return {e.y, -e.x, cc, dd};
            }
        }
        if (k > 4 * n + 8) throw InvalidInput("lift_row: pair not primitive");
    }
}

IntMat2 lift_column(i64 x, i64 y, i64 n) {
    // transpose of a row lift, then fix the determinant sign
    IntMat2 r = lift_row(x, y, n);
    return {r.c, -r.a, r.d, -r.b};
}

CosetAction::CosetAction(const DeltaSubgroup& delta) : n_(delta.modulus()), delta_(delta) {
    i64 n = n_;
    table_.assign(n * n, -1);
    for (i64 c = 0; c < n; ++c)
        for (i64 d = 0; d < n; ++d) {
            if (table_[c * n + d] >= 0) continue;
            if (std::gcd(std::gcd(c, d), n) != 1) continue;
            int id = static_cast<int>(rows_.size());
            rows_.push_back({c, d});
            for (i64 l : delta_.elements()) table_[mod(l * c, n) * n + mod(l * d, n)] = id;
        }
    int mu = size();
    reps_.resize(mu);
    s_.resize(mu);
    t_.resize(mu);
    for (int i = 0; i < mu; ++i) {
        auto [c, d] = rows_[i];
        reps_[i] = lift_row(c, d, n);
        s_[i] = coset_of_row(d, -c);
        t_[i] = coset_of_row(c, c + d);
    }
    cycle_of_.assign(mu, -1);
    for (int i = 0; i < mu; ++i) {
        if (cycle_of_[i] >= 0) continue;
        std::vector<int> cyc;
        int id = static_cast<int>(cycles_.size());
        for (int j = i; cycle_of_[j] < 0; j = t_[j]) {
            cycle_of_[j] = id;
            cyc.push_back(j);
        }
        cycles_.push_back(std::move(cyc));
    }
}

int CosetAction::coset_of_row(i64 c, i64 d) const {
    int id = table_[mod(c, n_) * n_ + mod(d, n_)];
    if (id < 0) throw InvalidInput("coset_of_row: row not primitive mod N");
    return id;
}

int CosetAction::e2() const {
    int k = 0;
    for (int i = 0; i < size(); ++i) k += s_[i] == i;
    return k;
}

int CosetAction::e3() const {
    int k = 0;
    for (int i = 0; i < size(); ++i) k += t_[s_[i]] == i;
    return k;
}

int CosetAction::genus() const {
    int g12 = 12 + size() - 3 * e2() - 4 * e3() - 6 * cusp_count();
    if (g12 % 12 != 0 || g12 < 0) throw NonIntegralGenus("genus formula not integral");
    return g12 / 12;
}

int genus(const DeltaSubgroup& delta) {
    return CosetAction(delta).genus();
}

std::vector<IntMat2> schreier_generators(const CosetAction& action) {
    std::set<IntMat2> out;
    for (int i = 0; i < action.size(); ++i) {
        for (int k = 0; k < 2; ++k) {
            const IntMat2& x = k == 0 ? kS : kT;
            int j = k == 0 ? action.sigma_S(i) : action.sigma_T(i);
            IntMat2 g = (action.rep(i) * x * action.rep(j).adj()).normalized_sign();
            if (g == kI) continue;
            out.insert(g);
        }
    }
    return {out.begin(), out.end()};
}

CuspField cusp_field(const DeltaSubgroup& delta, int denominator) {
    CuspField f;
    i64 n = delta.modulus();
    i64 d = std::gcd<i64>(denominator, n);
    f.denominator = static_cast<int>(d);
    i64 m = n / d;
    f.coprime_case = std::gcd(d, m) == 1;
    if (!f.coprime_case) return f;
    std::set<i64> s;
    for (i64 a : delta.elements())
        if (mod(a, m) == mod(1, m)) s.insert(mod(a, d));
    f.delta_d.assign(s.begin(), s.end());
    f.degree = static_cast<int>(euler_phi(d) / static_cast<i64>(f.delta_d.size()));
    return f;
}

int cusp_of_pair(const CosetAction& action, i64 x, i64 y) {
    return action.cusp_of_coset(action.coset_of(lift_column(x, y, action.level())));
}

std::vector<CuspClass> cusps(const CosetAction& action) {
    i64 n = action.level();
    const auto& delta = action.delta();
    std::vector<int> orbit_of(n * n, -1);
    std::vector<CuspClass> found;
    std::vector<int> cycle_seen(action.cusp_count(), 0);
    for (i64 y = 0; y < n; ++y)
        for (i64 x = 0; x < n; ++x) {
            if (orbit_of[x * n + y] >= 0 || std::gcd(std::gcd(x, y), n) != 1) continue;
            int id = static_cast<int>(found.size());
            // Gamma_Delta(N) mod N = {[[a,b],[0,1/a]] : a in Delta}
            for (i64 a : delta.elements()) {
                i64 ainv = *inverse_mod(a, n);
                for (i64 b = 0; b < n; ++b) orbit_of[mod(a * x + b * y, n) * n + mod(ainv * y, n)] = id;
            }
            CuspClass cc;
            cc.x = x;
            cc.y = y;
            cc.denominator = static_cast<int>(std::gcd(y, n));
            cc.index = cusp_of_pair(action, x, y);
            found.push_back(cc);
        }
    if (static_cast<int>(found.size()) != action.cusp_count())
        throw CuspCountMismatch("cusp orbit count differs from number of T-cycles");
    for (auto& cc : found) {
        if (cycle_seen[cc.index]++) throw CuspCountMismatch("two cusp orbits share a T-cycle");
        cc.width = static_cast<int>(action.cusp_cycles()[cc.index].size());
        std::set<int> conj;
        for (i64 s : unit_group(static_cast<int>(n)).elements) conj.insert(cusp_of_pair(action, s * cc.x, cc.y));
        cc.galois_orbit_size = static_cast<int>(conj.size());
        auto f = cusp_field(delta, cc.denominator);
        if (f.coprime_case) cc.field = f;
    }
    std::sort(found.begin(), found.end(), [](const CuspClass& p, const CuspClass& q) { return p.index < q.index; });
    return found;
}

}  // namespace modcurve
