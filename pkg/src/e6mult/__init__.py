"""Multiplets of elementary representations of E6(-14), computed from the root system."""

from .multiplet import MultipletGraph, build_multiplet, build_reduced, weyl_orbit
from .parabolic import ParabolicSplit, e6_14_split, split_roots
from .rootsys import CartanMatrix, RootSystem, e6_roots, generate_positive_roots
from .weights import ShiftedWeight, SignatureChi

__all__ = [
    "CartanMatrix",
    "MultipletGraph",
    "ParabolicSplit",
    "RootSystem",
    "ShiftedWeight",
    "SignatureChi",
    "build_multiplet",
    "build_reduced",
    "e6_14_split",
    "e6_roots",
    "generate_positive_roots",
    "split_roots",
    "weyl_orbit",
]
__version__ = "0.1.0"
