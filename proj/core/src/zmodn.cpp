#include "modcurve/zmodn.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace modcurve {

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

ExtGcd ext_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::optional<i64> inverse_mod(i64 a, i64 m) {
    if (m == 1) return 0;
    auto e = ext_gcd(mod(a, m), m);
    if (e.g != 1) return std::nullopt;
    return mod(e.x, m);
}

std::optional<i64> sqrt_mod(i64 a, i64 m) {
    if (m < 1) throw InvalidInput("sqrt_mod: modulus must be positive");
    i64 t = mod(a, m);
    for (i64 x = 0; x < m; ++x)
        if ((x * x) % m == t) return x;
    return std::nullopt;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (i64 p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_hall_divisor(i64 d, i64 n) {
    return d > 0 && n % d == 0 && std::gcd(d, n / d) == 1;
}

std::vector<i64> hall_divisors(i64 n) {
    std::vector<i64> out;
    for (i64 d : divisors(n))
        if (is_hall_divisor(d, n)) out.push_back(d);
    return out;
}

i64 crt(i64 a1, i64 m1, i64 a2, i64 m2) {
    if (std::gcd(m1, m2) != 1) throw InvalidInput("crt: moduli not coprime");
    i64 m = m1 * m2;
    if (m1 == 1) return mod(a2, m);
    if (m2 == 1) return mod(a1, m);
    i64 inv = *inverse_mod(m1, m2);
    i64 k = mod((a2 - a1) % m2 * inv, m2);
    return mod(a1 + m1 * k, m);
}

UnitGroup unit_group(int n) {
    if (n < 1) throw InvalidInput("unit_group: N must be positive");
    UnitGroup g;
    g.modulus = n;
    if (n == 1) {
        g.elements = {0};
        return g;
    }
    for (i64 a = 1; a < n; ++a)
        if (std::gcd<i64>(a, n) == 1) g.elements.push_back(a);
    return g;
}

DeltaSubgroup::DeltaSubgroup(int modulus, std::vector<i64> elements, std::string label)
    : n_(modulus), elems_(std::move(elements)), label_(std::move(label)) {
    if (n_ < 1) throw InvalidInput("Delta: modulus must be positive");
    for (auto& a : elems_) a = mod(a, n_);
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    member_.assign(n_, 0);
    for (i64 a : elems_) {
        if (std::gcd<i64>(a, n_) != 1 && n_ > 1) throw InvalidInput("Delta: element not a unit");
        member_[a] = 1;
    }
    if (!contains(1) || !contains(n_ - 1)) throw InvalidInput("Delta: must contain ±1");
    for (i64 a : elems_)
        for (i64 b : elems_)
            if (!member_[(a * b) % n_]) throw InvalidInput("Delta: not closed under multiplication");
}

bool DeltaSubgroup::contains(i64 a) const {
    return member_[mod(a, n_)] != 0;
}

bool DeltaSubgroup::is_full() const {
    return static_cast<i64>(elems_.size()) == euler_phi(n_);
}

bool DeltaSubgroup::is_plus_minus_one() const {
    return elems_.size() <= 2;
}

std::size_t DeltaSubgroup::index() const {
    return static_cast<std::size_t>(euler_phi(n_)) / elems_.size();
}

bool DeltaSubgroup::subset_of(const DeltaSubgroup& other) const {
    if (other.n_ != n_) return false;
    for (i64 a : elems_)
        if (!other.contains(a)) return false;
    return true;
}

std::vector<i64> DeltaSubgroup::reduce(int m) const {
    std::set<i64> s;
    for (i64 a : elems_) s.insert(mod(a, m));
    return {s.begin(), s.end()};
}

i64 DeltaSubgroup::coset_key(i64 a) const {
    i64 best = n_;
    for (i64 e : elems_) best = std::min(best, mod(a * e, n_));
    return best;
}

std::vector<i64> DeltaSubgroup::coset_representatives() const {
    std::set<i64> keys;
    for (i64 a : unit_group(n_).elements) keys.insert(coset_key(a));
    return {keys.begin(), keys.end()};
}

std::string DeltaSubgroup::display() const {
    std::ostringstream os;
    os << "±{";
    bool first = true;
    for (i64 a : elems_) {
        if (n_ > 2 && 2 * a > n_) continue;
        if (!first) os << ',';
        os << a;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string DeltaSubgroup::name() const {
    if (!label_.empty()) return label_;
    if (is_full()) return "X0";
    if (is_plus_minus_one()) return "X1";
    return display();
}

DeltaSubgroup subgroup_generated(int n, const std::vector<i64>& gens) {
    std::vector<char> in(n, 0);
    std::vector<i64> elems{mod(1, n)};
    in[mod(1, n)] = 1;
    std::vector<i64> all(gens);
    all.push_back(n - 1);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (i64 g : all) {
            i64 y = mod(elems[i] * g, n);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    return DeltaSubgroup(n, elems);
}

namespace {

// Tie-break exceptions to the (order, lex) rule; listed subgroups go last among equal orders.
const std::vector<std::pair<int, std::vector<i64>>> kLabelExceptions = {
    {56, {1, 3, 9, 19, 25, 27, 29, 31, 37, 47, 53, 55}},
};

}  // namespace

std::vector<DeltaSubgroup> subgroups_containing_minus1(int n) {
    if (n < 3) throw InvalidInput("subgroups: N must be at least 3");
    auto units = unit_group(n).elements;
    std::set<std::vector<i64>> found;
    std::vector<std::vector<i64>> stack;
    auto base = subgroup_generated(n, {}).elements();
    found.insert(base);
    stack.push_back(base);
    while (!stack.empty()) {
        auto h = stack.back();
        stack.pop_back();
        std::vector<char> in(n, 0);
        for (i64 a : h) in[a] = 1;
        for (i64 g : units) {
            if (in[g]) continue;
            auto gens = h;
            gens.push_back(g);
            auto k = subgroup_generated(n, gens).elements();
            if (found.insert(k).second) stack.push_back(k);
        }
    }
    std::vector<std::vector<i64>> lst(found.begin(), found.end());
    auto late = [&](const std::vector<i64>& s) {
        for (const auto& [m, e] : kLabelExceptions)
            if (m == n && e == s) return 1;
        return 0;
    };
    std::sort(lst.begin(), lst.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        int la = late(a), lb = late(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    std::vector<DeltaSubgroup> out;
    i64 phi = euler_phi(n);
    int k = 0;
    for (auto& s : lst) {
        std::string label;
        if (static_cast<i64>(s.size()) == phi) label = "X0";
        else if (s.size() == 2) label = "X1";
        else label = "D" + std::to_string(++k);
        out.emplace_back(n, s, label);
    }
    return out;
}

std::vector<DeltaSubgroup> intermediate_subgroups(int n) {
    std::vector<DeltaSubgroup> out;
    if (n < 3) return out;
    for (auto& d : subgroups_containing_minus1(n))
        if (d.is_intermediate()) out.push_back(d);
    return out;
}

DeltaSubgroup full_group(int n) {
    return DeltaSubgroup(n, unit_group(n).elements, "X0");
}

DeltaSubgroup plus_minus_one(int n) {
    auto d = subgroup_generated(n, {});
    d.set_label(d.is_full() ? "X0" : "X1");
    return d;
}

DeltaSubgroup resolve_delta(int n, const std::string& selector) {
    std::string s = selector;
    if (s == "X0" || s == "full" || s == "0") return full_group(n);
    if (s == "X1" || s == "1") return plus_minus_one(n);
    std::string digits;
    if (s.size() > 1 && (s[0] == 'D' || s[0] == 'd') &&
        std::all_of(s.begin() + 1, s.end(), ::isdigit))
        digits = s.substr(1);
    else if (s.rfind("Δ", 0) == 0 && s.size() > 2)
        digits = s.substr(std::string("Δ").size());
    if (!digits.empty()) {
        auto lst = intermediate_subgroups(n);
        auto i = std::stoul(digits);
        if (i < 1 || i > lst.size())
            throw UnknownDelta("unknown Delta label " + selector + " for N=" + std::to_string(n));
        return lst[i - 1];
    }
    std::vector<i64> elems;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            elems.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw InvalidInput("bad Delta selector: " + selector);
        }
    }
    if (elems.empty()) throw InvalidInput("bad Delta selector: " + selector);
    std::set<i64> with_neg;
    for (i64 a : elems) {
        if (std::gcd<i64>(mod(a, n), n) != 1)
            throw InvalidInput("Delta element not a unit: " + std::to_string(a));
        with_neg.insert(mod(a, n));
        with_neg.insert(mod(-a, n));
    }
    auto gen = subgroup_generated(n, {with_neg.begin(), with_neg.end()});
    if (gen.order() != with_neg.size())
        throw UnknownDelta("Delta elements do not form a subgroup: " + selector);
    for (auto& d : subgroups_containing_minus1(n))
        if (d == gen) return d;
    throw InvalidInput("bad Delta selector: " + selector);
}

}  // namespace modcurve
