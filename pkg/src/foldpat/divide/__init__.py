"""Combinatorial model of a realization's singular locus and its local moves."""

from .catalog import CatalogEntry, catalog, entry
from .explore import (ExplorationLimitError, ExploreResult, InconclusiveError, Limits, explore,
                      min_loops)
from .moves import (Balance, CreatePair, EliminatePair, LoopGenI, LoopGenII, LoopReduce,
                    LoopSimplify, MoveError, Surgery, Tunnel, apply_move, declared_effect,
                    enabled_moves)
from .state import (Curve, Cusp, DivideState, Face, Measure, canonical_key, measure,
                    validate_state)
