"""Reference values for the C++ tests, computed with mpmath at 30 digits.

Run once and commit the output; the tests never call Python.

    python3 tests/oracles/generate_oracles.py > tests/oracles/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 30


def kron(a, n):
    # Kronecker symbol via sympy-free recursion; only needs n > 0 here.
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if n == 1:
        return 1
    res = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            res = -res
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                res = -res
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            res = -res
        a %= n
    return res if n == 1 else 0


def lchi(D, s):
    q = abs(D)
    chi = [kron(D, a) for a in range(q)]
    return mp.dirichlet(s, chi)


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-1, max_fixed=-1), mp.nstr(z.imag, 20, min_fixed=-1, max_fixed=-1))


def r(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-1, max_fixed=-1)


out = []
emit = out.append

emit("#pragma once")
emit("// Generated by generate_oracles.py (mpmath, 30 digits). Do not edit.")
emit("#include <complex>")
emit("namespace oracle {")
emit("struct CPoint { std::complex<double> s; std::complex<double> value; };")
emit("struct HPoint { std::complex<double> s; double a; std::complex<double> value; };")
emit("struct LPoint { long long d; std::complex<double> s; std::complex<double> value; };")
emit("struct GPoint { std::complex<double> z; double x; std::complex<double> value; };")

gam = [(0.5 + 3j), (1 + 0j), (4.5 - 2j), (-2.5 + 0.5j), (0.25 + 0j), (0.75 + 1j), (10 + 20j), (-7.3 - 1.1j), (30 + 0j)]
emit("inline const CPoint kGamma[] = {")
for s in gam:
    emit("  {%s, %s}," % (c(s), c(mp.gamma(s))))
emit("};")

zet = [(1.5 + 0j), (0.5 + 14.134725141734693j), (0.5 + 10j), (-3.5 + 2j), (2 + 50j), (0.3 - 99j), (-4.9 + 0j), (9.5 + 1j), (0.5 + 0j)]
emit("inline const CPoint kZeta[] = {")
for s in zet:
    emit("  {%s, %s}," % (c(s), c(mp.zeta(s))))
emit("};")

hur = [((0.5 + 2j), 1 / 3.0), ((2 + 0j), 0.5), ((0.7 - 5j), 0.125), ((-2.5 + 1j), 0.9), ((3 + 30j), 0.01), ((0.5 + 0j), 0.75)]
emit("inline const HPoint kHurwitz[] = {")
for s, a in hur:
    emit("  {%s, %s, %s}," % (c(s), r(a), c(mp.zeta(s, a))))
emit("};")

emit("inline constexpr double kZetaPrimeThreeHalves = %s;" % r(mp.zeta(1.5, derivative=1)))

ig = [((0.25 + 0.5j), 0.001), ((0.75 - 1j), 0.5), ((0.25 + 0j), 3.0), ((0.75 + 1j), 12.0), ((1.5 + 0.3j), 40.0), ((0.3 + 2j), 1.7)]
emit("inline const GPoint kIncompleteGamma[] = {")
for z, x in ig:
    emit("  {%s, %s, %s}," % (c(z), r(x), c(mp.gammainc(z, a=x))))
emit("};")

lpts = [(5, 0.5), (5, 2), (-4, 1), (8, 0.5 + 1j), (12, 0.75 + 2j), (-3, 0.6 + 1j), (13, 0.5), (-7, 0.5 + 0.3j),
        (1001, 0.5), (1001, 0.5 + 1.5j), (-2003, 0.5), (10001, 0.5), (-10007, 0.5 + 0.7j), (-9995 + 0, 0.5)]
emit("inline const LPoint kDirichletL[] = {")
for D, s in lpts:
    if (D % 4) not in (0, 1):
        continue
    emit("  {%d, %s, %s}," % (D, c(s), c(lchi(D, s))))
emit("};")

# density m_0 and its integral
z32 = mp.zeta(1.5)
zp = mp.zeta(1.5, derivative=1)


def m0(x):
    return (mp.log(x * x - 4) - mp.pi / 2 + 3 * mp.euler - 2 * zp / z32 - mp.log(8 * mp.pi)) / (2 * z32)


def mt(t, x):
    it = 1j * t
    return (mp.zeta(1 + 2 * it) / mp.zeta(1.5 + it)
            + mp.power(2, 0.5 + it) * mp.sin(mp.pi / 4 + it * mp.pi / 2) * mp.power(mp.pi, -it)
            * mp.zeta(it) / mp.zeta(1.5 - it) * mp.gamma(it) * mp.power(x * x - 4, -it))


emit("inline constexpr double kDensityZeroAt3 = %s;" % r(m0(3)))
emit("inline const std::complex<double> kDensityHalfAt10 = %s;" % c(mt(0.5, 10)))
emit("inline constexpr double kDensityIntegral0To500 = %s;" % r(mp.quad(m0, [3, 500])))
emit("inline const std::complex<double> kDensityIntegral03To200 = %s;" % c(mp.quad(lambda x: mt(0.3, x), [3, 50, 200])))

# sum_{3<=n<=40} L(1/2, n^2 - 4) via the ell-factor formula with mpmath L-values
def fundamental(delta):
    sign = -1 if delta < 0 else 1
    m = abs(delta)
    ell = 1
    p = 2
    while p * p <= m:
        while m % (p * p) == 0:
            cand = sign * (m // (p * p))
            if cand % 4 in (0, 1):
                m //= p * p
                ell *= p
            else:
                break
        p += 1
    return sign * m, ell


def zagier(delta, s):
    D, ell = fundamental(delta)
    T = 0
    for l1 in range(1, ell + 1):
        if ell % l1:
            continue
        l2 = ell // l1
        mu = mp.mpf(1)
        n, k, sq = l1, 2, False
        cnt = 0
        while k * k <= n:
            if n % k == 0:
                n //= k
                cnt += 1
                if n % k == 0:
                    sq = True
            k += 1
        if n > 1:
            cnt += 1
        if sq:
            continue
        mu = (-1) ** cnt
        tau = mp.power(l2, s - 0.5) * sum(mp.power(d, 1 - 2 * s) for d in range(1, l2 + 1) if l2 % d == 0)
        T += mu * kron(D, l1) * tau / mp.sqrt(l1)
    return mp.power(ell, 0.5 - s) * T * lchi(D, s)


emit("inline constexpr double kAverageSum40 = %s;" % r(sum(zagier(n * n - 4, mp.mpf(0.5)).real for n in range(3, 41))))
emit("inline const std::complex<double> kZagier20At3 = %s;" % c(zagier(20, 3)))
emit("inline const std::complex<double> kZagier45Half = %s;" % c(zagier(45, 0.5 + 1j)))
emit("}  // namespace oracle")
print("\n".join(out))
