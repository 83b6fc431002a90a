"""Invariants, realizability and loop counts of singular patterns of surface maps."""

from .gluing import CobordismPattern, GlueResult, GluingError, InterfaceMap, glue
from .invariants import (InvariantError, LoopSet, LoopUnion, c_count, cusp_loop_set, cusp_parity,
                         cycle_count_union_find, delta2, gamma, loop_set_no_cusps, n_count, omega,
                         pseudo_immersion_loop_set, summary)
from .model import (BoundaryCircle, BoundaryPattern, Matching, Pattern, PatternError, Side,
                    Surface, Violation, euler_characteristic, pi_matching, require_valid,
                    validate_pattern)
from .realizability import (ChordSystem, RibbonSummary, adapted_exists, realizable,
                            ribbon_summary, sign_condition)

__version__ = "0.1.0"
