"""Bredon homology, Hecke operators and K-groups for PSL_2(Z[i]) and its
prime-level congruence subgroups."""

from .bredon import (HeckeData, bredon_cohomology, bredon_complex, bredon_homology,
                     hecke_operator, k_groups)
from .cwmodel import congruence_model, gamma1_model, split_orbits
from .gaussian import GaussianInt, GaussianPrime, classify_prime, parse_gaussian
from .matgroup import GENS, ProjectiveMatrix, coset_transversal, parse_word

__all__ = [
    "GENS", "GaussianInt", "GaussianPrime", "HeckeData", "ProjectiveMatrix",
    "bredon_cohomology", "bredon_complex", "bredon_homology", "classify_prime",
    "congruence_model", "coset_transversal", "gamma1_model", "hecke_operator",
    "k_groups", "parse_gaussian", "parse_word", "split_orbits",
]
