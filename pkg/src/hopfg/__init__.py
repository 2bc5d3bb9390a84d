"""Exact invariants of flat G-connections on closed 4-manifolds.

The package computes a scalar invariant of a closed oriented 4-manifold
with a flat G-connection from two inputs: a finite type involutory
quasitriangular Hopf G-algebra given by exact structure constants, and
a G-colored Kirby diagram given combinatorially.  All arithmetic is
exact over cyclotomic fields.
"""

from .algebra import (
    AlgebraStructureError,
    DrinfeldError,
    GradedTensor,
    GradedVector,
    HopfGAlgebra,
    IntegralError,
)
from .builtins import build_cyclic, build_kac_paljutkin, builtin_algebra
from .cyclo import Cyclo, render_decimal, render_scalar
from .diagrams import (
    ColoredDiagram,
    ColoringError,
    Crossing,
    CrossingEnd,
    DiagramError,
    DotPassage,
    DottedComponent,
    KirbyDiagram,
    UndottedComponent,
    builtin_diagram,
    builtin_diagram_names,
    color,
    colorings,
    connected_sum,
    fundamental_presentation,
    renumber,
    reorient,
    rotate_component,
    validate,
)
from .evaluate import (
    EvaluationError,
    InvariantValue,
    SummedInvariant,
    connected_sum_check,
    evaluate,
    evaluate_summed,
)
from .groups import (
    FiniteGroup,
    GroupElement,
    GroupError,
    GroupHom,
    Presentation,
    cyclic_group,
    enumerate_homs,
    group_from_table,
    product_group,
)
from .integrals import IntegralData, solve_integrals
from .moves import MoveError, apply_move, move_candidates, move_names
from .serialize import (
    SerializeError,
    algebra_from_json,
    algebra_to_json,
    diagram_from_json,
    diagram_to_json,
    dumps_canonical,
    group_from_json,
    group_to_json,
    resolve_algebra,
    resolve_diagram,
    resolve_group,
)
from .verify import AxiomReport, drinfeld_element, verify_axioms

__version__ = "0.1.0"

__all__ = [
    "AlgebraStructureError",
    "AxiomReport",
    "ColoredDiagram",
    "ColoringError",
    "Crossing",
    "CrossingEnd",
    "Cyclo",
    "DiagramError",
    "DotPassage",
    "DottedComponent",
    "DrinfeldError",
    "EvaluationError",
    "FiniteGroup",
    "GradedTensor",
    "GradedVector",
    "GroupElement",
    "GroupError",
    "GroupHom",
    "HopfGAlgebra",
    "IntegralData",
    "IntegralError",
    "InvariantValue",
    "KirbyDiagram",
    "MoveError",
    "Presentation",
    "SerializeError",
    "SummedInvariant",
    "UndottedComponent",
    "apply_move",
    "build_cyclic",
    "build_kac_paljutkin",
    "builtin_algebra",
    "builtin_diagram",
    "builtin_diagram_names",
    "color",
    "colorings",
    "connected_sum",
    "connected_sum_check",
    "cyclic_group",
    "diagram_from_json",
    "diagram_to_json",
    "dumps_canonical",
    "drinfeld_element",
    "enumerate_homs",
    "evaluate",
    "evaluate_summed",
    "fundamental_presentation",
    "group_from_json",
    "group_from_table",
    "group_to_json",
    "algebra_from_json",
    "algebra_to_json",
    "move_candidates",
    "move_names",
    "product_group",
    "render_decimal",
    "render_scalar",
    "renumber",
    "reorient",
    "resolve_algebra",
    "resolve_diagram",
    "resolve_group",
    "rotate_component",
    "solve_integrals",
    "validate",
    "verify_axioms",
    "__version__",
]
