"""Exact lattice trigonometry.

Trigonometric functions of lattice angles, sails and their continued
fractions, signed length-sine sequences with normal forms and sums,
existence criteria for lattice triangles and convex lattice polygons,
and the toric-singularity constructions built on them.  All arithmetic
is exact (arbitrary-precision integers and rationals).
"""

from .numbers import INF, ExtRat, LatticeError, gcd_lcm, mod_inverse
from .contfrac import (
    PeriodicCF,
    concat_rationals,
    convergents,
    eval_signed,
    periodic_eval,
    to_even_cf,
    to_odd_cf,
)
from .plane import (
    AffMap,
    lattice_length,
    polygon_lattice_area,
    primitive,
    ray_orientation,
    signed_area,
    unit_distance,
)
from .angles import (
    OrdinaryAngle,
    Sail,
    Trig,
    adjacent,
    adjacent_tan,
    angle_of,
    arctan,
    congruent,
    is_right,
    sail,
    tan_of,
    transpose,
    transpose_tan,
    trig,
)
from .expanded import (
    BrokenLine,
    NormalForm,
    characteristic_sequence,
    corresponding,
    line_value,
    msum,
    normalize,
    opposite,
    reconstruct,
    revolution,
    signed_lls,
)
from .triangles import (
    Triangle,
    TriangleClass,
    angles_of,
    canonical_triangle,
    classify_shape,
    class_of,
    complete_sas,
    congruent_tri,
    edge_separators,
    enumerate_classes,
    exists_from_tans,
    sine_formula_check,
)
from .polygons import (
    Polygon,
    SingularityPair,
    extract_separators,
    polygon_criterion,
    synthesize_polygon,
    toric_polygon_build,
    toric_triangle_check,
)
from .irrational import (
    InfiniteLLS,
    IrrationalNormalForm,
    irr_arctan,
    irr_congruent,
    irr_normalize,
    irr_sum,
    tangent_convergent,
)

__version__ = "0.1.0"
