"""Exact computation in single-vertex rank-2 graph semigroups.

The semigroup F+_theta has generators e_1..e_m (blue) and f_1..f_n (red)
subject to e_i f_j = f_{j'} e_{i'} where theta(i, j) = (i', j').  This
package provides word rewriting with unique factorization, group
construction representations and their decomposition, combinatorial
minimal *-dilation, and search utilities, plus a CLI.
"""

from .semigroup_core import (
    BLUE,
    RED,
    Letter,
    Theta,
    ThetaError,
    ThetaPrime,
    Word,
    WordError,
    commutes,
    multiply,
    refactor,
    theta_prime_apply,
    theta_prime_cycle,
    validate_theta,
)
from .lattice_groups import (
    CharacterOnSublattice,
    CharacterOnZ2,
    Coset,
    QuotientGroup,
    RationalAngle,
    Sublattice,
    characters,
    coset_reduce,
    enumerate_group,
    extend_character,
    join,
    sublattice_from,
)

__all__ = [name for name in dir() if not name.startswith("_")]
