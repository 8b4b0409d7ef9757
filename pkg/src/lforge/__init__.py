"""lforge: exact lambda-ring algebra, big Witt vectors, extensions of F1 and
the zeta functions they produce."""

from .config import Config, get_config, set_config
from .errors import LforgeError
from .exact_algebra import MPoly, TruncSeries, UPoly, cyclotomic
from .f1_closure import build_tower, classify_generator, cyc_factor, is_lambda_stable
from .f1_modules import F1Module, SquareZeroElem, enumerate_simple, hom_count
from .lambda_rings import BinomialZ, MonoidRing, check_axioms, degree, polynomial_ring
from .monoid import Cyclic, FreeAdd, MonoidRingElem, Product, points
from .symmetric import newton_adams, universal_P, universal_P2
from .witt import WittVector, artin_hasse, artin_hasse_inv, ghost, witt_add, witt_mul
from .zeta import ZetaSpec, dirichlet_partial, euler_product, fixed_point_zeta, geometric_zeta_f1mod

__version__ = "0.1.0"
