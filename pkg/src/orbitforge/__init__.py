"""Exact constructions for affine isometric group actions on Hilbert spaces.

Dense orbits of wreath products, stabilizer towers of the subspaces A_n,
and first cohomology of finite-dimensional orthogonal representations, all
in exact rational or Q(sqrt2) arithmetic.
"""
from .scalars import QuadScalar, approximate_real, small_unit
from .sequences import SparseVec, dist2_to_An, project_An
from .wreath import WreathElement, GroupWord, approximate_orbit, evaluate_word
from .tower import StabilizerIsometry, approximate_pair, act_stab, fixed_point_witness, householder
from .presentation import Presentation
from .cohomology import OrthoRep, AffineAction, h1_dim, is_strongly_cohomological

__version__ = "0.1.0"
