"""Print the full degree-zero Hecke computation at level 1+i."""

import argparse

from bianchi_hecke.bredon import hecke_operator
from bianchi_hecke.calibration import calibrate_h0
from bianchi_hecke.cli import format_poly
from bianchi_hecke.gaussian import classify_prime
from bianchi_hecke.linalg import charpoly


def show(title, m):
    print(f"{title} ({m.rows}x{m.cols})")
    print(m.render())
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--prime", default="1+i")
    args = ap.parse_args()
    p = classify_prime(args.prime)
    h = hecke_operator(p)
    for name, bc in (("Gamma_1", h.gamma_complex), (f"K({p})", h.k_complex)):
        groups = ", ".join(f"H_{n} = {g}" for n, g in enumerate(bc.groups()))
        print(f"{name}: chain ranks {bc.ranks}; {groups}")
    print()
    show("restriction, degree 0", h.res[0])
    show("restriction, degree 1", h.res[1])
    cal = calibrate_h0(h)
    if cal is None:
        show("Hecke operator on H_0 (canonical basis)", h.on_H0)
    else:
        print("standard basis of H_0(Gamma_1):", ", ".join(cal.gamma_basis))
        print("standard basis of H_0(K):      ", ", ".join(cal.k_basis))
        print()
        show("restriction on H^0", cal.res_coH0)
        show("corestriction on H^0", cal.cores_coH0)
        show("Hecke operator on H^0", cal.on_coH0)
        show("Hecke operator on H_0", cal.on_H0)
    show("Hecke operator on H_1", h.on_H1)
    print("characteristic polynomial on H_0:", format_poly(charpoly(h.on_H0)))


if __name__ == "__main__":
    main()
