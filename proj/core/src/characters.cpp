#include "tbern/characters.hpp"

#include "tbern/errors.hpp"

#include <numeric>
#include <string>

namespace tbern {

namespace {

long mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

long power_mod(long base, long exp, long m)
{
    long result = 1 % m;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) {
            result = static_cast<long>((static_cast<long long>(result) * base) % m);
        }
        base = static_cast<long>((static_cast<long long>(base) * base) % m);
        exp >>= 1;
    }
    return result;
}

std::vector<std::pair<long, int>> factorize(long n)
{
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

// Smallest primitive root modulo p^k for an odd prime p.
long primitive_root_odd(long p, long pk)
{
    const long phi = pk / p * (p - 1);
    const auto factors = factorize(phi);
    for (long g = 2; g < pk; ++g) {
        if (std::gcd(g, p) != 1) {
            continue;
        }
        bool ok = true;
        for (const auto& [q, e] : factors) {
            if (power_mod(g, phi / q, pk) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return g;
        }
    }
    throw std::logic_error("no primitive root found");
}

// x = r (mod q), x = 1 (mod d/q).
long crt_lift(long r, long q, long d)
{
    const long rest = d / q;
    if (rest == 1) {
        return mod(r, d);
    }
    for (long x = mod(r, q); x < d; x += q) {
        if (x % rest == 1 % rest) {
            return x;
        }
    }
    throw std::logic_error("CRT lift failed");
}

} // namespace

UnitGroupStructure::UnitGroupStructure(long modulus) : modulus_(modulus), size_(1), exponent_(1)
{
    if (modulus < 1) {
        throw ParameterError("modulus must be positive");
    }
    for (auto [p, e] : factorize(modulus)) {
        long pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
        }
        if (p == 2) {
            if (e == 2) {
                generators_.push_back({crt_lift(3, pk, modulus), 2});
            } else if (e >= 3) {
                generators_.push_back({crt_lift(pk - 1, pk, modulus), 2});
                generators_.push_back({crt_lift(3, pk, modulus), pk / 4});
            }
        } else {
            generators_.push_back({crt_lift(primitive_root_odd(p, pk), pk, modulus), pk / p * (p - 1)});
        }
    }
    for (const auto& g : generators_) {
        size_ *= g.order;
        exponent_ = std::lcm(exponent_, g.order);
    }

    logs_.assign(static_cast<std::size_t>(modulus), {});
    is_unit_.assign(static_cast<std::size_t>(modulus), false);
    std::vector<long> exps(generators_.size(), 0);
    for (long count = 0; count < size_; ++count) {
        long residue = 1 % modulus;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            residue = static_cast<long>(
                (static_cast<long long>(residue) * power_mod(generators_[i].residue, exps[i], modulus)) % modulus);
        }
        if (is_unit_[static_cast<std::size_t>(residue)]) {
            throw std::logic_error("unit group presentation is not a direct product");
        }
        is_unit_[static_cast<std::size_t>(residue)] = true;
        logs_[static_cast<std::size_t>(residue)] = exps;
        for (std::size_t i = generators_.size(); i-- > 0;) {
            if (++exps[i] < generators_[i].order) {
                break;
            }
            exps[i] = 0;
        }
    }
}

const std::vector<long>* UnitGroupStructure::discrete_log(long a) const
{
    const auto r = static_cast<std::size_t>(mod(a, modulus_));
    return is_unit_[r] ? &logs_[r] : nullptr;
}

UnitGroupStructure unit_group(long modulus)
{
    return UnitGroupStructure(modulus);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)), value_order_(1), conductor_(1)
{
    const auto& gens = group_->generators();
    if (exponents_.size() != gens.size()) {
        throw ParameterError("character exponent count does not match the generator count");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (exponents_[i] < 0 || exponents_[i] >= gens[i].order) {
            throw ParameterError("character exponent out of range");
        }
        value_order_ = std::lcm(value_order_, gens[i].order / std::gcd(gens[i].order, exponents_[i]));
    }
    conductor_ = compute_conductor();
}

std::optional<long> DirichletCharacter::value_exponent(long a) const
{
    const long d = modulus();
    if (d == 1) {
        return 0;
    }
    const auto* log = group_->discrete_log(a);
    if (log == nullptr) {
        return std::nullopt;
    }
    const long big = group_->exponent();
    const auto& gens = group_->generators();
    long acc = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        acc = mod(acc + exponents_[i] * (*log)[i] % big * (big / gens[i].order), big);
    }
    return acc / (big / value_order_);
}

CycloNumber DirichletCharacter::evaluate(long a) const
{
    const FieldPtr field = CycloField::of(static_cast<std::uint32_t>(value_order_));
    const auto e = value_exponent(a);
    if (!e) {
        return CycloNumber::zero(field);
    }
    return CycloNumber::root(field, *e);
}

long DirichletCharacter::compute_conductor() const
{
    const long d = modulus();
    for (long f = 1; f < d; ++f) {
        if (d % f != 0) {
            continue;
        }
        bool trivial_on_kernel = true;
        for (long a = 1 + f; a < d && trivial_on_kernel; a += f) {
            if (std::gcd(a, d) != 1) {
                continue;
            }
            trivial_on_kernel = value_exponent(a) == 0;
        }
        if (trivial_on_kernel) {
            return f;
        }
    }
    return d;
}

std::vector<DirichletCharacter> enumerate_characters(long modulus)
{
    auto group = std::make_shared<const UnitGroupStructure>(modulus);
    const auto& gens = group->generators();
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(group->size()));
    std::vector<long> exps(gens.size(), 0);
    for (long count = 0; count < group->size(); ++count) {
        out.emplace_back(group, exps);
        for (std::size_t i = gens.size(); i-- > 0;) {
            if (++exps[i] < gens[i].order) {
                break;
            }
            exps[i] = 0;
        }
    }
    return out;
}

DirichletCharacter principal_character(long modulus)
{
    auto group = std::make_shared<const UnitGroupStructure>(modulus);
    std::vector<long> zeros(group->generators().size(), 0);
    return DirichletCharacter(std::move(group), std::move(zeros));
}

} // namespace tbern
