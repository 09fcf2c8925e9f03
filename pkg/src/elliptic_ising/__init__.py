"""Jacobi elliptic functions, spherical triangles, SU(2) products and Abel flows.

Submodules:

* ``elliptic``  - sn, cn, dn, amplitude, K and F, addition and modulus maps
* ``spherical`` - triangles from vectors or spectral parameters, law residuals
* ``su2``       - closed-form rotations and the triangle/Yang-Baxter products
* ``ising``     - elliptic Boltzmann weights and the star-triangle relation
* ``abel``      - hyperelliptic divisor flows, conserved quantities, integrator
* ``verify``    - seeded randomized suites behind ``elliptic-ising verify``
"""

from . import abel, elliptic, ising, spherical, su2, verify
from .elliptic import amplitude, complete_quarter_period, incomplete_integral, jacobi
from .errors import (
    BranchError,
    DegeneracyError,
    DomainError,
    EllipticIsingError,
    FlowHalt,
    NearPoleError,
    UnsupportedError,
)

__version__ = "0.1.0"

__all__ = [
    "abel",
    "elliptic",
    "ising",
    "spherical",
    "su2",
    "verify",
    "jacobi",
    "amplitude",
    "complete_quarter_period",
    "incomplete_integral",
    "EllipticIsingError",
    "DomainError",
    "NearPoleError",
    "DegeneracyError",
    "BranchError",
    "UnsupportedError",
    "FlowHalt",
]
