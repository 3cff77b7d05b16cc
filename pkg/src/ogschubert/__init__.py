"""Exact tableau combinatorics and Wronskian geometry for Gr(n, 2n+1) and OG(n, 2n+1).

Modules:
    shapes     partitions, strict partitions, skew and shifted shapes, counting
    tableaux   standard and shifted tableaux, doubling, symmetrical tableaux
    jdt        tableau switching, rectification, dual equivalence
    lr         Littlewood-Richardson numbers by class counting, with oracles
    poly       exact rational polynomials, gcd, square-free decomposition
    linalg     exact rank, echelon form, polynomial determinants
    wronski    Wronskians, the symmetric form, flags, Schubert conditions
    suites     batch verification suites
    cli        command-line entry point
"""

__version__ = "0.1.0"
