"""Exact characteristic classes and Lagrangian cycles of generic
determinantal varieties, over arbitrary-precision integers."""

from .classes import (
    ProjClass,
    StrataVector,
    b_matrix,
    chern_fulton_hypersurface,
    cm_class,
    csm_class,
    csm_open,
    euler_obstruction,
    milnor_class,
    variety_dim,
)
from .errors import BoxSizeError, ConsistencyError, ParameterError
from .lagrangian import (
    BiProjClass,
    ch_from_class,
    charcycle,
    charcycle_open,
    conormal,
    dagger,
    dual_cm,
    ged,
    polar_degrees,
    symmetry_check,
)
from .microlocal import (
    IndexSystem,
    ic_char_cycle,
    obstruction_matrix,
    solve_multiplicities,
    stalk_euler,
)
from .schubert import (
    Box,
    ChowClass,
    a_matrix,
    bundle_power_chern,
    chern_Q,
    chern_S_dual,
    integrate,
    multiply,
    schubert_class,
    set_box_cell_limit,
    tangent_chern,
)

__version__ = "0.1.0"
