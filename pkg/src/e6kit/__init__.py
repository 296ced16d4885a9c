"""e6kit: octonionic construction of sl(3,O), the real form E6(-26) of E6.

The package builds the 78-dimensional Lie algebra sl(3,O) from one-parameter
group actions on the exceptional Jordan algebra h3(O), exposes its structure
constants, Killing form, and distinguished subalgebras, and provides root- and
weight-diagram utilities for the classical and exceptional series.
"""

from .octonion import Octonion, UNITS, TRIPLES
from .jordan import JordanElement, from_coords, to_coords, det, lorentz_dot
from .group import GeneratorLabel, parse_label, format_label, all_labels, apply
from .algebra import (AlgebraElement, tangent, commutator, preferred_basis,
                      reduce_basis, structure_table, killing_matrix, killing,
                      signature, casimir_labels, gellmann_check,
                      stabilizer_of_l, calibration_constant, curve_commutator)
from .subalgebra import (make_involution, fixed_subalgebra, compact_preimage,
                         refine_subspaces, assemble, identify)
from .rootweight import (diagram, cartan_matrix, inverse_cartan, simple_roots,
                         fundamental_weights, weights_from_highest,
                         root_system, slice_diagram, middle_slice, project,
                         embed_check)

__version__ = "1.0.0"

__all__ = [
    "Octonion", "UNITS", "TRIPLES",
    "JordanElement", "from_coords", "to_coords", "det", "lorentz_dot",
    "GeneratorLabel", "parse_label", "format_label", "all_labels", "apply",
    "AlgebraElement", "tangent", "commutator", "preferred_basis",
    "reduce_basis", "structure_table", "killing_matrix", "killing",
    "signature", "casimir_labels", "gellmann_check", "stabilizer_of_l",
    "calibration_constant", "curve_commutator",
    "make_involution", "fixed_subalgebra", "compact_preimage",
    "refine_subspaces", "assemble", "identify",
    "diagram", "cartan_matrix", "inverse_cartan", "simple_roots",
    "fundamental_weights", "weights_from_highest", "root_system",
    "slice_diagram", "middle_slice", "project", "embed_check",
    "__version__",
]
