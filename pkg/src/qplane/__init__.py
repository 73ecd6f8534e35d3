"""Quantum dilogarithm numerics and the classical limit of the quantum plane.

Subpackages by theme:

* ``contours``  -- contour descriptors, adaptive quadrature, residues
* ``classw``    -- the Gaussian-times-polynomial test-function algebra,
                   exact Fourier transform, Mellin machinery
* ``gammafn``   -- complex gamma and the classical contour identities
* ``modular``   -- the deformation parameter b and derived constants
* ``qdilog``    -- the quantum dilogarithm G_b, its identities and limits
* ``axb``       -- the classical ax+b group, representations, intertwiners
* ``qtransform``-- quantum dilogarithm transform kernels and transforms
* ``corep``     -- the coaction kernel, pairing, and its classical limit
* ``verify``    -- named verification suites behind the CLI and tests
"""

from .modular import ModularParam, from_b, from_b2, from_r
from .qdilog import QDValue, gb, gb_many

__all__ = ["ModularParam", "from_b", "from_b2", "from_r", "QDValue", "gb", "gb_many"]
