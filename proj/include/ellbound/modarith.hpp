// 64-bit modular arithmetic, deterministic Miller-Rabin, Brent's rho.
#ifndef ELLBOUND_MODARITH_HPP
#define ELLBOUND_MODARITH_HPP

#include <cstdint>
#include <numeric>

namespace ellbound {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 addmod(u64 a, u64 b, u64 m) {
    a %= m;
    b %= m;
    u64 s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) {
    a %= m;
    b %= m;
    return a >= b ? a - b : a + (m - b);
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 m) {
    // extended Euclid; gcd(a,m)=1 assumed
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<u64>(t);
}

// Deterministic for all n < 2^64 with this base set.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Brent's cycle variant of Pollard rho; returns a nontrivial factor of
// composite odd n, or 0 if the budget ran out.
inline u64 pollard_brent_u64(u64 n, u64 seed = 1) {
    if ((n & 1) == 0) return 2;
    for (u64 c = seed;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
        u64 r = 1;
        const u64 limit = 1u << 22;
        u64 steps = 0;
        auto f = [n, c](u64 v) { return addmod(mulmod(v, v, n), c, n); };
        while (d == 1 && steps < limit) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            while (k < r && d == 1) {
                ys = y;
                u64 batch = std::min<u64>(128, r - k);
                for (u64 i = 0; i < batch; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += batch;
                steps += batch;
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack
            d = 1;
            while (d == 1) {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n && d != 1) return d;
        if (c > seed + 20) return 0;
    }
}

} // namespace ellbound

#endif
