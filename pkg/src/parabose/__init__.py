"""Exact computations with boson, paraboson and order-2 algebras.

Presentations live in :mod:`parabose.freealg`, truncated ideal membership in
:mod:`parabose.ideals`, the Z2 sign braiding in :mod:`parabose.braided`, the
super-Hopf maps in :mod:`parabose.hopf`, Fock-like modules in
:mod:`parabose.fock` and the order-2 constructions in :mod:`parabose.gamma`.
"""

from .freealg import (MINUS, PLUS, GenSym, InvalidArgument, NCPoly, antibracket, boson_relators, bracket,
                      gamma2_relators, mul, paraboson_relators, parity, triple_minus)

__version__ = "0.1.0"
