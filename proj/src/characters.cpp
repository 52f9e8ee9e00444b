#include "charsum/characters.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace charsum {

struct GroupData {
    int64_t q = 1;
    int64_t phi = 1;
    int64_t exponent = 1;  // lcm of component orders
    Factorization factorization;
    std::vector<CharacterGroup::Component> components;
    std::vector<int64_t> strides;  // mixed-radix strides, little-endian
};

namespace {

int64_t ipow(int64_t base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Generator of (Z/p^k)^* for odd p: lift a primitive root mod p that stays
// primitive mod p^2.
int64_t odd_prime_power_generator(int64_t p, int k) {
    int64_t g = *primitive_root(p);
    if (k >= 2 && mod_pow(g, p - 1, p * p) == 1) g += p;
    return g;
}

std::vector<int32_t> power_table(int64_t generator, int64_t modulus, int64_t order,
                                 const char* what) {
    std::vector<int32_t> dlog(static_cast<std::size_t>(modulus), -1);
    int64_t x = 1;
    for (int64_t i = 0; i < order; ++i) {
        if (dlog[static_cast<std::size_t>(x)] != -1)
            throw std::logic_error(std::string(what) + ": generator order check failed");
        dlog[static_cast<std::size_t>(x)] = static_cast<int32_t>(i);
        x = x * generator % modulus;
    }
    if (x != 1) throw std::logic_error(std::string(what) + ": generator order check failed");
    return dlog;
}

}  // namespace

int64_t CharacterGroup::Component::index_of(int64_t residue) const {
    switch (kind) {
        case ComponentKind::OddPrimePower:
            return dlog[static_cast<std::size_t>(residue)];
        case ComponentKind::Mod4:
            return (residue & 3) == 3 ? 1 : 0;
        case ComponentKind::TwoPowerSign:
            return (residue & 3) == 3 ? 1 : 0;
        case ComponentKind::TwoPowerFive: {
            int64_t m = (residue & 3) == 1 ? residue : modulus - residue;
            return dlog[static_cast<std::size_t>(m)];
        }
    }
    return 0;
}

CharacterGroup CharacterGroup::build(int64_t q, const GroupOptions& options) {
    if (q < 1) throw std::domain_error("CharacterGroup: modulus must be >= 1");
    if (q > options.max_modulus)
        throw ResourceError("CharacterGroup: modulus " + std::to_string(q) +
                            " exceeds configured cap " + std::to_string(options.max_modulus));

    auto data = std::make_shared<GroupData>();
    data->q = q;
    data->factorization = factorize(q);

    for (const auto& [p, k] : data->factorization.factors) {
        if (p == 2) {
            if (k == 1) continue;  // (Z/2)^* is trivial
            int64_t m = ipow(2, k);
            if (k == 2) {
                data->components.push_back(
                    {ComponentKind::Mod4, 2, m, 2, 3, {}});
            } else {
                int64_t five_order = m >> 2;  // 2^(k-2)
                data->components.push_back(
                    {ComponentKind::TwoPowerSign, 2, m, 2, m - 1, {}});
                data->components.push_back(
                    {ComponentKind::TwoPowerFive, 2, m, five_order, 5,
                     power_table(5, m, five_order, "two-power component")});
            }
        } else {
            int64_t m = ipow(p, k);
            int64_t order = m / p * (p - 1);
            int64_t g = odd_prime_power_generator(p, k);
            data->components.push_back(
                {ComponentKind::OddPrimePower, p, m, order, g,
                 power_table(g, m, order, "odd prime power component")});
        }
    }

    data->phi = 1;
    data->exponent = 1;
    data->strides.resize(data->components.size());
    for (std::size_t c = 0; c < data->components.size(); ++c) {
        data->strides[c] = data->phi;
        data->phi *= data->components[c].order;
        data->exponent = std::lcm(data->exponent, data->components[c].order);
    }
    if (data->phi != euler_phi(q))
        throw std::logic_error("CharacterGroup: component orders do not multiply to phi(q)");

    CharacterGroup group;
    group.data_ = std::move(data);
    return group;
}

int64_t CharacterGroup::modulus() const { return data_->q; }
int64_t CharacterGroup::phi() const { return data_->phi; }
int64_t CharacterGroup::group_exponent() const { return data_->exponent; }

std::span<const CharacterGroup::Component> CharacterGroup::components() const {
    return data_->components;
}

bool CharacterGroup::is_unit(int64_t n) const {
    int64_t r = n % data_->q;
    if (r < 0) r += data_->q;
    return std::gcd(r, data_->q) == 1;
}

UnityExponent CharacterGroup::eval(std::span<const int64_t> exponents, int64_t n) const {
    const GroupData& d = *data_;
    int64_t r = n % d.q;
    if (r < 0) r += d.q;
    if (std::gcd(r, d.q) != 1) return UnityExponent::zero();
    UnityExponent value = UnityExponent::one();
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        int64_t e = exponents[c];
        if (e == 0) continue;
        const Component& comp = d.components[c];
        int64_t idx = comp.index_of(r % comp.modulus);
        value = value * UnityExponent::root(e * idx, comp.order);
    }
    return value;
}

int64_t CharacterGroup::index_of(std::span<const int64_t> exponents) const {
    const GroupData& d = *data_;
    int64_t index = 0;
    for (std::size_t c = 0; c < d.components.size(); ++c)
        index += (exponents[c] % d.components[c].order) * d.strides[c];
    return index;
}

namespace {

// Conductor from the exponent vector: the product over components of the
// smallest prime-power modulus the component character factors through.
int64_t conductor_of(const GroupData& d, const std::vector<int64_t>& exps) {
    int64_t conductor = 1;
    int64_t two_pow_sign = 0, two_pow_five = 0, two_v = 0;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        const auto& comp = d.components[c];
        int64_t e = exps[c];
        switch (comp.kind) {
            case CharacterGroup::ComponentKind::OddPrimePower: {
                if (e == 0) break;
                int k = 0;
                for (int64_t m = comp.modulus; m > 1; m /= comp.prime) ++k;
                int64_t a = e;
                int vp = 0;
                while (a % comp.prime == 0) {
                    a /= comp.prime;
                    ++vp;
                }
                int j = std::max(1, k - vp);
                conductor *= ipow(comp.prime, j);
                break;
            }
            case CharacterGroup::ComponentKind::Mod4:
                if (e != 0) conductor *= 4;
                break;
            case CharacterGroup::ComponentKind::TwoPowerSign:
                two_pow_sign = e;
                two_v = comp.modulus;
                break;
            case CharacterGroup::ComponentKind::TwoPowerFive:
                two_pow_five = e;
                two_v = comp.modulus;
                break;
        }
    }
    if (two_v > 0) {
        if (two_pow_five != 0) {
            int64_t s = two_pow_five;
            int64_t m = two_v;
            while (s % 2 == 0) {
                s /= 2;
                m /= 2;
            }
            conductor *= m;  // 2^(v - v2(s)), always >= 8
        } else if (two_pow_sign != 0) {
            conductor *= 4;
        }
    }
    return conductor;
}

}  // namespace

DirichletCharacter CharacterGroup::character(int64_t index) const {
    const GroupData& d = *data_;
    if (index < 0 || index >= d.phi)
        throw std::domain_error("CharacterGroup: character index out of range");

    DirichletCharacter chi;
    chi.data_ = data_;
    chi.index_ = index;
    chi.exponents_.resize(d.components.size());
    int64_t rest = index;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        chi.exponents_[c] = rest % d.components[c].order;
        rest /= d.components[c].order;
    }

    chi.order_ = 1;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        int64_t ord = d.components[c].order;
        int64_t e = chi.exponents_[c];
        chi.order_ = std::lcm(chi.order_, ord / std::gcd(ord, e == 0 ? ord : e));
    }
    chi.conductor_ = conductor_of(d, chi.exponents_);
    if (d.q >= 3) {
        UnityExponent at_minus_one = eval(chi.exponents_, d.q - 1);
        chi.odd_ = (at_minus_one == UnityExponent::root(1, 2));
    }
    return chi;
}

std::vector<DirichletCharacter> CharacterGroup::characters() const {
    std::vector<DirichletCharacter> all;
    all.reserve(static_cast<std::size_t>(phi()));
    for (int64_t i = 0; i < phi(); ++i) all.push_back(character(i));
    return all;
}

int64_t DirichletCharacter::modulus() const { return data_->q; }

UnityExponent DirichletCharacter::operator()(int64_t n) const {
    const GroupData& d = *data_;
    int64_t r = n % d.q;
    if (r < 0) r += d.q;
    if (std::gcd(r, d.q) != 1) return UnityExponent::zero();
    UnityExponent value = UnityExponent::one();
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        int64_t e = exponents_[c];
        if (e == 0) continue;
        const auto& comp = d.components[c];
        int64_t idx = comp.index_of(r % comp.modulus);
        value = value * UnityExponent::root(e * idx, comp.order);
    }
    return value;
}

bool DirichletCharacter::is_principal() const {
    for (int64_t e : exponents_)
        if (e != 0) return false;
    return true;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter chi = *this;
    for (std::size_t c = 0; c < exponents_.size(); ++c) {
        int64_t ord = data_->components[c].order;
        chi.exponents_[c] = (ord - exponents_[c]) % ord;
    }
    chi.index_ = 0;
    for (std::size_t c = 0; c < chi.exponents_.size(); ++c)
        chi.index_ += chi.exponents_[c] * data_->strides[c];
    // order, parity and conductor are invariant under conjugation
    return chi;
}

CharacterGroup DirichletCharacter::group() const {
    CharacterGroup g;
    g.data_ = data_;
    return g;
}

CharProps char_props(const DirichletCharacter& chi) {
    return {chi.is_odd(), chi.order(), chi.is_principal()};
}

std::vector<Complex> character_values(const DirichletCharacter& chi) {
    CharacterGroup group = chi.group();
    int64_t q = group.modulus();
    std::vector<Complex> values(static_cast<std::size_t>(q));
    if (q == 1) {
        values[0] = {1.0, 0.0};
        return values;
    }

    // chi(n) = e^{2*pi*i * r(n)/D} with D the group exponent and
    // r(n) = sum_c e_c * ind_c(n) * (D / order_c) mod D.
    const auto comps = group.components();
    int64_t D = group.group_exponent();
    std::vector<Complex> roots(static_cast<std::size_t>(D));
    for (int64_t k = 0; k < D; ++k) roots[static_cast<std::size_t>(k)] = root_of_unity(k, D);

    std::vector<int64_t> weights(comps.size());
    auto exps = chi.exponents();
    for (std::size_t c = 0; c < comps.size(); ++c)
        weights[c] = exps[c] % comps[c].order * (D / comps[c].order) % D;

    for (int64_t n = 0; n < q; ++n) {
        if (std::gcd(n, q) != 1) continue;  // leave zero
        int64_t r = 0;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (weights[c] == 0) continue;
            r = (r + weights[c] * comps[c].index_of(n % comps[c].modulus)) % D;
        }
        values[static_cast<std::size_t>(n)] = roots[static_cast<std::size_t>(r)];
    }
    return values;
}

void write_character_table_csv(std::ostream& out, const CharacterGroup& group) {
    out << "index,n,num,den\n";
    for (int64_t i = 0; i < group.character_count(); ++i) {
        DirichletCharacter chi = group.character(i);
        for (int64_t n = 1; n <= group.modulus(); ++n) {
            UnityExponent v = chi(n);
            out << i << ',' << n << ',' << (v.is_zero() ? 0 : v.num()) << ','
                << (v.is_zero() ? 0 : v.den()) << '\n';
        }
    }
}

}  // namespace charsum
