#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modcurve {

using i64 = std::int64_t;

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownDelta : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Residue of a in [0, m).
i64 mod(i64 a, i64 m);

struct ExtGcd {
    i64 g, x, y;  // x*a + y*b = g >= 0
};
ExtGcd ext_gcd(i64 a, i64 b);

std::optional<i64> inverse_mod(i64 a, i64 m);

// Smallest nonnegative x with x^2 = a (mod m), by exhaustive search.
std::optional<i64> sqrt_mod(i64 a, i64 m);

i64 euler_phi(i64 n);
std::vector<i64> divisors(i64 n);
std::vector<i64> prime_factors(i64 n);
bool is_hall_divisor(i64 d, i64 n);
std::vector<i64> hall_divisors(i64 n);

// x = a1 (mod m1), x = a2 (mod m2), gcd(m1, m2) = 1; result in [0, m1*m2).
i64 crt(i64 a1, i64 m1, i64 a2, i64 m2);

struct UnitGroup {
    int modulus = 1;
    std::vector<i64> elements;
};

UnitGroup unit_group(int n);

class DeltaSubgroup {
public:
    DeltaSubgroup() = default;
    // Elements must already form a subgroup containing -1; checked.
    DeltaSubgroup(int modulus, std::vector<i64> elements, std::string label = {});

    int modulus() const { return n_; }
    const std::vector<i64>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }
    bool contains(i64 a) const;
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    bool is_full() const;
    bool is_plus_minus_one() const;
    bool is_intermediate() const { return !is_full() && !is_plus_minus_one(); }
    std::size_t index() const;  // [(Z/N)^* : Delta]

    bool subset_of(const DeltaSubgroup& other) const;
    // Image of Delta in (Z/m)^* for m | N, as a sorted residue list.
    std::vector<i64> reduce(int m) const;
    // Representatives of (Z/N)^*/Delta: smallest element of each coset.
    std::vector<i64> coset_representatives() const;
    i64 coset_key(i64 a) const;  // smallest element of a*Delta

    // "±{1,8}" using the representatives up to N/2.
    std::string display() const;
    // "D1", "X0", "X1" style selector name.
    std::string name() const;

    bool operator==(const DeltaSubgroup& o) const { return n_ == o.n_ && elems_ == o.elems_; }

private:
    int n_ = 1;
    std::vector<i64> elems_;
    std::vector<char> member_;
    std::string label_;
};

DeltaSubgroup subgroup_generated(int n, const std::vector<i64>& gens);

// All subgroups of (Z/N)^* containing -1, ordered by (order, element list).
// Intermediate ones carry labels "D1", "D2", ...; {±1} gets "X1" and the full group "X0".
std::vector<DeltaSubgroup> subgroups_containing_minus1(int n);
std::vector<DeltaSubgroup> intermediate_subgroups(int n);
DeltaSubgroup full_group(int n);
DeltaSubgroup plus_minus_one(int n);

// Accepts "D3", "3", "X0", "X1", "full", or a comma-separated element list.
DeltaSubgroup resolve_delta(int n, const std::string& selector);

}  // namespace modcurve
