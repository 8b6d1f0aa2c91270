// Integer factorization on a desk budget: trial division, deterministic
// Miller-Rabin, Brent's rho in 64-bit, and a bounded mpz rho for anything
// bigger. Inputs whose cofactor resists the budget raise
// factorization_too_large: callers must then supply factored input.
#ifndef ELLBOUND_FACTOR_HPP
#define ELLBOUND_FACTOR_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "ellbound/int.hpp"
#include "ellbound/modarith.hpp"

namespace ellbound {

struct FactorBudget {
    u64 trial_bound = 100000;      // trial division up to this
    u64 rho_rounds_mpz = 200000;   // iteration cap for the bignum rho
};

namespace detail {

using u32_t = std::uint32_t;

inline const std::vector<u32_t>& small_primes_impl() {
    static const std::vector<u32_t> primes = [] {
        const u32_t N = 100000;
        std::vector<bool> sieve(N + 1, true);
        std::vector<u32_t> ps;
        for (u32_t i = 2; i <= N; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (u64 j = static_cast<u64>(i) * i; j <= N; j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

inline void factor_u64(u64 n, std::map<Int, int>& out) {
    if (n <= 1) return;
    if (is_prime_u64(n)) {
        out[Int(static_cast<long>(n))] += 1;
        return;
    }
    u64 d = pollard_brent_u64(n);
    if (d == 0 || d == n) {
        // should not happen for composite 64-bit n with the default budget
        throw factorization_too_large("rho failed on 64-bit composite");
    }
    factor_u64(d, out);
    factor_u64(n / d, out);
}

// one bounded rho round on mpz numbers
inline bool rho_mpz(const Int& n, u64 rounds, Int& factor_out) {
    for (u64 c = 1; c <= 8; ++c) {
        Int x(2), y(2), d(1);
        Int cc(static_cast<long>(c));
        u64 it = 0;
        while (d.is_one() && it < rounds) {
            auto step = [&](const Int& v) { return Int::mod_nonneg(v * v + cc, n); };
            x = step(x);
            y = step(step(y));
            Int diff = Int::abs(x - y);
            if (diff.is_zero()) break;
            d = Int::gcd(diff, n);
            ++it;
        }
        if (!d.is_one() && d != n && !d.is_zero()) {
            factor_out = d;
            return true;
        }
    }
    return false;
}

} // namespace detail

// Factor |n| (n != 0) into prime powers. Primes above 2^64 are certified only
// as GMP strong probable primes; that is recorded nowhere because no desk
// input reaches them honestly -- if the budget runs out we throw instead of
// guessing.
inline std::map<Int, int> factorize(Int n, const FactorBudget& budget = {}) {
    if (n.is_zero()) throw zero_argument("factorize(0)");
    n = Int::abs(n);
    std::map<Int, int> out;
    if (n.is_one()) return out;

    for (u64 p : detail::small_primes_impl()) {
        if (p > budget.trial_bound) break;
        Int pi(static_cast<long>(p));
        if (n.divisible_by(pi)) {
            unsigned long k = Int::remove_factor(n, pi);
            out[pi] += static_cast<int>(k);
            if (n.is_one()) return out;
        }
        if (pi * pi > n) break;
    }
    if (n.is_one()) return out;

    std::vector<Int> stack{n};
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m.is_one()) continue;
        if (m.bits() <= 62) {
            detail::factor_u64(static_cast<u64>(m.to_si()), out);
            continue;
        }
        if (m.probab_prime() > 0) {
            out[m] += 1;
            continue;
        }
        Int d(0);
        if (!detail::rho_mpz(m, budget.rho_rounds_mpz, d))
            throw factorization_too_large("composite cofactor beyond budget: " + m.str());
        stack.push_back(d);
        stack.push_back(Int::divexact(m, d));
    }
    return out;
}

// distinct primes of |n|
inline std::vector<Int> prime_divisors(const Int& n, const FactorBudget& budget = {}) {
    std::vector<Int> ps;
    for (const auto& [p, e] : factorize(n, budget)) ps.push_back(p);
    return ps;
}

} // namespace ellbound

#endif
