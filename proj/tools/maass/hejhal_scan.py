#!/usr/bin/env python3
"""Locate Maass cusp form spectral parameters for PSL(2,Z) with Hejhal's method.

Writes the bundled eigenvalue table (data/modular_maass_spectrum.txt).

For a trial R the expansion
    f(z) = sum_{n=1}^{M} c_n sqrt(y) K_{iR}(2 pi n y) cs(2 pi n x),  cs = cos|sin
is forced to agree with its pullback to the fundamental domain on a row of
points at height Y.  With c_1 = 1 this gives a linear system for c_2..c_M.
At a true eigenvalue the solution does not depend on Y, so the difference of
c_2 computed at two heights changes sign there.  Candidate roots are refined
with Brent's method and kept only if c_3 also agrees across heights and the
Hecke relation c_2 c_3 = c_6 holds.

Usage: hejhal_scan.py RMIN RMAX OUT [--step 0.01] [--parity 0|1]
"""
import argparse
import math
import sys

import flint
import numpy as np
from flint import acb
from scipy.optimize import brentq

flint.ctx.prec = 80
Y0 = math.sqrt(3.0) / 2.0


def kbessel_scaled(R, x):
    # exp(pi R / 2) K_{iR}(x), real for real x > 0. The evaluation cancels
    # about pi R / (2 log 2) bits, so the working precision grows with R.
    with flint.ctx.workprec(64 + int(3 * R)):
        v = acb(x).bessel_k(acb(0, R))
        return float(v.real) * math.exp(math.pi * R / 2.0)


def pullback(x, y):
    z = complex(x, y)
    for _ in range(200):
        z = complex(z.real - math.floor(z.real + 0.5), z.imag)
        if abs(z) < 1.0 - 1e-15:
            z = -1.0 / z
        else:
            break
    return z.real, z.imag


def truncation(R, Y):
    # K_{iR}(2 pi M Y) is negligible once 2 pi M Y exceeds R by a margin
    return int(math.ceil((R + 3.0 * R ** (1.0 / 3.0) + 26.0) / (2.0 * math.pi * Y)))


class Probe:
    def __init__(self, R, heights):
        self.R = R
        self.heights = heights
        self.M = truncation(R, min(heights))
        self.Q = self.M + 12

    def coefficients(self, Y, parity):
        R, M, Q = self.R, self.M, self.Q
        xs = [(m - 0.5) / (2.0 * Q) for m in range(1, Q + 1)]
        cs = math.cos if parity == 0 else math.sin
        V = np.zeros((M, M))
        for m, x in enumerate(xs):
            xp, yp = pullback(x, Y)
            row_k = [math.sqrt(yp) * kbessel_scaled(R, 2 * math.pi * l * yp) for l in range(1, M + 1)]
            for l in range(1, M + 1):
                g = row_k[l - 1] * cs(2 * math.pi * l * xp)
                for n in range(1, M + 1):
                    V[n - 1, l - 1] += g * cs(2 * math.pi * n * x)
        V *= 2.0 / Q
        for n in range(1, M + 1):
            V[n - 1, n - 1] -= math.sqrt(Y) * kbessel_scaled(R, 2 * math.pi * n * Y)
        A = V[1:, 1:]
        b = -V[1:, 0]
        c = np.linalg.solve(A, b)
        return np.concatenate(([1.0], c))

    def both(self, parity):
        return [self.coefficients(Y, parity) for Y in self.heights]


HEIGHTS = (0.82 * Y0, 0.70 * Y0)


def gap(R, parity, k=2):
    c1, c2 = Probe(R, HEIGHTS).both(parity)
    return c1[k - 1] - c2[k - 1]


def scan(rmin, rmax, step, out, parities=(0, 1)):
    found = []
    for parity in parities:
        R = rmin
        prev = gap(R, parity)
        while R < rmax:
            Rn = min(R + step, rmax)
            cur = gap(Rn, parity)
            if prev * cur < 0:
                try:
                    root = brentq(lambda r: gap(r, parity), R, Rn, xtol=1e-12)
                except ValueError:
                    root = None
                if root is not None:
                    c1, c2 = Probe(root, HEIGHTS).both(parity)
                    d3 = abs(c1[2] - c2[2])
                    hecke = abs(c1[1] * c1[2] - c1[5])
                    ok = d3 < 1e-6 and hecke < 1e-6
                    print(f"parity={parity} R={root:.12f} d3={d3:.2e} hecke={hecke:.2e} {'ok' if ok else 'rejected'}",
                          file=sys.stderr, flush=True)
                    if ok:
                        found.append((root, parity, c1[1]))
                        with open(out + ".partial", "a") as fh:
                            fh.write(f"{root:.12f} {parity} {c1[1]:.10f}\n")
            prev = cur
            R = Rn
    found.sort()
    return found


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("rmin", type=float)
    ap.add_argument("rmax", type=float)
    ap.add_argument("out")
    ap.add_argument("--step", type=float, default=0.01)
    ap.add_argument("--parity", type=int, choices=(0, 1))
    args = ap.parse_args()
    parities = (0, 1) if args.parity is None else (args.parity,)
    found = scan(args.rmin, args.rmax, args.step, args.out, parities)
    with open(args.out, "w") as fh:
        for r, parity, c2 in found:
            fh.write(f"{r:.12f} {parity} {c2:.10f}\n")


if __name__ == "__main__":
    main()
