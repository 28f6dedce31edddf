"""Re-run the basis calibration searches against the stored reference data."""

from bianchi_hecke import reference
from bianchi_hecke.bredon import COHOMOLOGY, bredon_complex, hecke_operator
from bianchi_hecke.calibration import search_character_orderings, standard_basis
from bianchi_hecke.cwmodel import gamma1_model
from bianchi_hecke.gaussian import classify_prime


def main():
    bc = bredon_complex(gamma1_model(), COHOMOLOGY)
    found = search_character_orderings(bc, reference.GAMMA1_D0)
    print(f"{len(found)} per-type character orderings reproduce d^0:")
    for o in found:
        print("  " + ", ".join(f"{t}: {p}" for t, p in o.perms)
              + ("   <- canonical" if o.is_canonical else ""))
    h = hecke_operator(classify_prime("1+i"))
    for name, c in (("Gamma_1", h.gamma_complex), ("K(1+i)", h.k_complex)):
        n = c.chain.dim(0)
        print(f"standard H_0 basis for {name}: chain indices {standard_basis(c.chain.homology(0), n)}")


if __name__ == "__main__":
    main()
