"""Independent reference values for the C++ test suites.

Everything here is computed by brute force or by direct big-integer
evaluation (p^s formed explicitly, polynomials enumerated exhaustively),
never by the closed forms the library implements. Run with python3; the
printed values are frozen into tests/unit and tests/acceptance.
"""
from fractions import Fraction as F
from itertools import product
from math import gcd

from sympy import divisors, factorint, mobius, primerange, totient


def brute_v(s, l):
    return sum(1 for x in range(l) if pow(x, s, l) == 1 % l)


def brute_I(m, s):
    return sum(brute_v(s, l) for l in divisors(m))


def poly_is_irreducible_brute(coeffs, p):
    """coeffs: constant-first, monic of degree len(coeffs)-1. Trial divide by all monic of lower degree."""
    d = len(coeffs) - 1

    def polymod(a, b):
        a = a[:]
        while len(a) >= len(b):
            c = a[-1]
            if c:
                shift = len(a) - len(b)
                for i, bc in enumerate(b):
                    a[shift + i] = (a[shift + i] - c * bc) % p
            a.pop()
        return a

    for k in range(1, d // 2 + 1):
        for low in product(range(p), repeat=k):
            if all(x == 0 for x in polymod(coeffs, list(low) + [1])):
                return False
    return True


def exhaustive_irreducible_count(p, d):
    return sum(1 for low in product(range(p), repeat=d)
               if poly_is_irreducible_brute(list(low) + [1], p))


def smallest_modulus(p, s):
    best = None
    for idx in range(p ** s):
        low = [(idx // p ** i) % p for i in range(s)]
        if poly_is_irreducible_brute(low + [1], p):
            return low + [1]


def necklace(q, d):
    return sum(mobius(e) * q ** (d // e) for e in divisors(d)) // d


def ord_mod(a, m):
    if m == 1:
        return 1
    x, l = a % m, 1
    while x != 1:
        x, l = x * a % m, l + 1
    return l


def coprime_part(m, n):
    for pr in factorint(m):
        if n % pr == 0:
            while m % pr == 0:
                m //= pr
    return m


def P_brute_prime_power(r, n, q):
    # exact-period-r points of x -> x^n on F_q via the count of f^j-fixed
    # points: gcd(n^j - 1, q - 1) + 1, with q formed explicitly.
    fix = {j: gcd(n ** j - 1, q - 1) + 1 for j in divisors(r)}
    return sum(mobius(r // j) * fix[j] for j in divisors(r))


def sweep(r, s, n, checkpoints):
    out = {}
    total, count = 0, 0
    prev = 2
    for t in checkpoints:
        for p in primerange(prev, t + 1):
            total += P_brute_prime_power(r, n, p ** s)
            count += 1
        prev = t + 1
        out[t] = (total, count)
    return out


def D_K(q, n, r):
    val = F(0)
    for d in divisors(r):
        m = coprime_part(n ** (r // d) - 1, q)
        inner = sum(F(int(totient(k)), ord_mod(q, k)) for k in divisors(m))
        val += mobius(d) * (inner + 1)
    return val


def N_dirichlet_density(r, s, n):
    # Sum over d|r of mu(d)(sum_{l|M} (l+1) delta(A(l,M))) with delta from
    # residue-class counting: delta(A(l,M)) = #{i mod M : gcd(M, i^s-1)=l, gcd(i,M)=1}/phi(M)
    total = F(0)
    for d in divisors(r):
        M = n ** (r // d) - 1
        if M > 20000:
            return None
        hist = {}
        for i in range(M):
            if gcd(i, M) == 1:
                g = gcd(M, (pow(i, s, M) - 1) % M)
                hist[g] = hist.get(g, 0) + 1
        ph = int(totient(M))
        total += mobius(d) * sum(F((l + 1) * c, ph) for l, c in hist.items())
    return total


def oscillation(q, r, T):
    l = ord_mod(q, r)
    pi, C, ratios = 0, 0, {}
    for t in range(1, T + 1):
        c = necklace(q, t)
        pi += c
        if t % l == 0:
            C += c
        ratios[t] = (C, pi)
    return l, ratios


if __name__ == "__main__":
    print("v_2(8)", brute_v(2, 8), "v_2(12)", brute_v(2, 12))
    print("I(8,2)", brute_I(8, 2), "I(12,1)", brute_I(12, 1))
    print("modulus(2,3)", smallest_modulus(2, 3), "modulus(3,2)", smallest_modulus(3, 2))
    print("modulus(2,4)", smallest_modulus(2, 4), "modulus(5,3)", smallest_modulus(5, 3))
    for q in (2, 3, 5):
        print("exhaustive irreducible q=%d" % q,
              [exhaustive_irreducible_count(q, d) for d in range(1, 9 if q == 2 else (7 if q == 3 else 5))])
    for (r, s, n) in [(1, 1, 2), (1, 1, 3), (1, 1, 5), (2, 1, 2), (1, 2, 2)]:
        res = sweep(r, s, n, [10, 100, 1000, 10 ** 4, 10 ** 5, 10 ** 6])
        print("sweep", (r, s, n), {t: v for t, v in res.items()})
    for (r, s, n) in [(1, 1, 2), (1, 1, 3), (2, 1, 2), (3, 1, 2), (1, 2, 3), (2, 2, 3), (2, 3, 4)]:
        print("N via residue densities", (r, s, n), N_dirichlet_density(r, s, n))
    print("N(2,1) n=3", N_dirichlet_density(2, 1, 3))
    print("D_K(3,2,2)", D_K(3, 2, 2), "D_K(2,3,1)", D_K(2, 3, 1))
    print("D_K(q,2,1)", [D_K(q, 2, 1) for q in (2, 3, 4, 5, 7, 8, 9)])
    series, acc = [], F(0)
    for r in range(1, 32):
        acc += D_K(3, 2, r)
        series.append(acc)
    print("sum D_K(3,2,r<=R)", [str(x) for x in series])
    cseries, acc = [], F(0)
    for r in range(1, 32):
        acc += D_K(3, 2, r) / r
        cseries.append(acc)
    print("sum C_K(3,2,r<=31)", str(cseries[-1]))
    # mean-value divergence for n=2, s=1 from brute-force v
    accN = 0
    Ns = []
    for r in range(1, 32):
        Nr = sum(mobius(d) * (sum(1 for _ in divisors(2 ** (r // d) - 1)) + 1) for d in divisors(r))
        Ns.append(Nr)
    print("N(r,1) n=2 r<=31", Ns)
    for (q, r, T) in [(2, 3, 40), (3, 5, 36), (2, 3, 4096), (3, 5, 4096)]:
        l, rat = oscillation(q, r, T)
        show = [T - 1, T] if T != 36 else [35, 36]
        for t in show:
            C, pi = rat[t]
            fr = F(C, pi)
            print("osc", (q, r), "l", l, "t", t, "C", C if T < 100 else "...", "pi", pi if T < 100 else "...",
                  "ratio", float(fr),
                  "frac" if T < 100 else "", fr if T < 100 else "")
    print("C_r_count(2,3,4)", sum(necklace(2, d) for d in range(1, 5) if d % 2 == 0),
          "C_r_count(3,5,4)", sum(necklace(3, d) for d in range(1, 5) if d % 4 == 0))
