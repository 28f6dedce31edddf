"""Hecke operators for all Gaussian primes up to a norm bound (one per
associate class, first quadrant)."""

import argparse
import time

from bianchi_hecke.bredon import hecke_operator
from bianchi_hecke.cli import format_poly
from bianchi_hecke.errors import NotPrime
from bianchi_hecke.gaussian import GaussianInt, classify_prime
from bianchi_hecke.linalg import charpoly, trace


def primes_up_to(bound):
    seen = []
    for a in range(1, bound + 1):
        for b in range(0, a + 1):
            z = GaussianInt(a, b)
            if z.norm() > bound:
                continue
            try:
                p = classify_prime(z)
            except NotPrime:
                continue
            seen.append(p)
            if b and b != a:
                seen.append(classify_prime(GaussianInt(a, -b)))
    return sorted(seen, key=lambda p: (p.norm(), p.value.re, -p.value.im))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-norm", type=int, default=13)
    args = ap.parse_args()
    for p in primes_up_to(args.max_norm):
        t0 = time.perf_counter()
        h = hecke_operator(p)
        groups = ", ".join(str(g) for g in h.k_complex.groups())
        print(f"p = {p} ({p.splitting_class}, norm {p.norm()})")
        print(f"  H_*(K) = ({groups})")
        print(f"  trace on H_0 = {trace(h.on_H0)}, char poly {format_poly(charpoly(h.on_H0))}")
        print(f"  on H_1 = {h.on_H1.tolist()}  [{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    main()
