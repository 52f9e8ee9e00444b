#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "charsum/arith.hpp"
#include "charsum/unity.hpp"

namespace charsum {

struct GroupOptions {
    int64_t max_modulus = 10'000'000;  // discrete-log tables are O(q)
};

class CharacterGroup;

// A Dirichlet character mod q, stored as one exponent per cyclic component
// of (Z/q)^*. Value-like: shares the group tables, cheap to copy, immutable.
class DirichletCharacter {
public:
    int64_t modulus() const;
    int64_t index() const { return index_; }
    std::span<const int64_t> exponents() const { return exponents_; }

    // Exact evaluation; zero when gcd(n, q) > 1, else a root of unity.
    UnityExponent operator()(int64_t n) const;
    Complex value(int64_t n) const { return (*this)(n).to_complex(); }

    bool is_principal() const;
    bool is_odd() const { return odd_; }      // chi(-1) = -1
    bool is_even() const { return !odd_; }
    int64_t order() const { return order_; }
    int64_t conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus(); }

    DirichletCharacter conjugate() const;
    CharacterGroup group() const;

private:
    friend class CharacterGroup;
    DirichletCharacter() = default;

    std::shared_ptr<const struct GroupData> data_;
    std::vector<int64_t> exponents_;
    int64_t index_ = 0;
    int64_t order_ = 1;
    int64_t conductor_ = 1;
    bool odd_ = false;
};

struct CharProps {
    bool odd;
    int64_t order;
    bool principal;
};

CharProps char_props(const DirichletCharacter& chi);

// The full group of Dirichlet characters mod q, built over the cyclic
// components of (Z/q)^*: one component per odd prime power, and for 2^v the
// {+-1} x {5^t} pair (v > 2), the mod-4 sign (v = 2), or nothing (v <= 1).
// Characters are indexed mixed-radix, little-endian, components ordered by
// increasing prime (sign part before the 5-power part); index 0 is the
// principal character.
class CharacterGroup {
public:
    enum class ComponentKind { OddPrimePower, Mod4, TwoPowerSign, TwoPowerFive };

    struct Component {
        ComponentKind kind;
        int64_t prime;
        int64_t modulus;    // p^k; the full 2^v for both two-power parts
        int64_t order;
        int64_t generator;
        std::vector<int32_t> dlog;  // discrete-log table where the kind needs one

        // residue must already be reduced mod `modulus` and be a unit
        int64_t index_of(int64_t residue) const;
    };

    static CharacterGroup build(int64_t q, const GroupOptions& options = {});

    int64_t modulus() const;
    int64_t phi() const;
    int64_t character_count() const { return phi(); }
    std::span<const Component> components() const;

    DirichletCharacter character(int64_t index) const;
    DirichletCharacter principal() const { return character(0); }
    std::vector<DirichletCharacter> characters() const;

    UnityExponent eval(std::span<const int64_t> exponents, int64_t n) const;
    int64_t index_of(std::span<const int64_t> exponents) const;
    bool is_unit(int64_t n) const;

    // lcm of component orders (the exponent of the character group)
    int64_t group_exponent() const;

private:
    friend class DirichletCharacter;
    std::shared_ptr<const GroupData> data_;
};

// chi(n) for n in [0, q) rendered to doubles in one pass; the fast path for
// sweeps. Entry n is exactly chi(n).to_complex() up to the shared
// root-of-unity rendering.
std::vector<Complex> character_values(const DirichletCharacter& chi);

// CSV rows (index,n,num,den) for all characters, n = 1..q; zero values are
// encoded as den = 0.
void write_character_table_csv(std::ostream& out, const CharacterGroup& group);

}  // namespace charsum
