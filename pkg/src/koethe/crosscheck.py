"""
Brute-force confirmation of the Köthe decision on simply-laced components.

A representation-finite hereditary ring is right Köthe exactly when every
indecomposable has a multiplicity-free top, so on trivially labeled ADE
components the diagrammatic verdict can be checked by building every
indecomposable as explicit matrices.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from config.settings import TOWER_STEP_CAP
from src.koethe.decision import ComponentVerdict, decide_component
from src.quivers.quiver import Quiver, QuiverMode, components
from src.quivers.vectors import DimVector
from src.representations.matrix_rep import MatrixRep, iter_indec_reps, top_dims
from src.utils.exceptions import UnsupportedTypeError, WrongModeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentCrossCheck:
    verdict: ComponentVerdict
    brute_force: bool
    witness: Optional[MatrixRep] = None
    witness_top: Optional[DimVector] = None
    checked: int = 0

    @property
    def decision(self) -> bool:
        return self.verdict.koethe

    @property
    def agree(self) -> bool:
        return self.decision == self.brute_force


@dataclass(frozen=True)
class CrossCheckReport:
    components: Tuple[ComponentCrossCheck, ...]

    @property
    def decision(self) -> bool:
        return all(c.decision for c in self.components)

    @property
    def brute_force(self) -> bool:
        return all(c.brute_force for c in self.components)

    @property
    def agree(self) -> bool:
        return all(c.agree for c in self.components)

    @property
    def witness(self) -> Optional[MatrixRep]:
        return next((c.witness for c in self.components if c.witness is not None), None)


def brute_force_component(q: Quiver, max_steps: int = TOWER_STEP_CAP) -> Tuple[bool, Optional[MatrixRep], Optional[DimVector], int]:
    """Walk the indecomposables until one has a top of dimension 2 or more somewhere"""
    checked = 0
    for rep in iter_indec_reps(q, max_steps):
        checked += 1
        top = top_dims(rep)
        if any(value > 1 for value in top.values()):
            return False, rep, top, checked
    return True, None, None, checked


def cross_check_component(q: Quiver, max_steps: int = TOWER_STEP_CAP) -> ComponentCrossCheck:
    verdict = decide_component(q)
    if not verdict.diagram.is_simply_laced or not q.is_trivially_labeled():
        raise UnsupportedTypeError(
            f"cross validation needs a trivially labeled A/D/E component, got {verdict.diagram}"
        )

    brute_force, witness, witness_top, checked = brute_force_component(q, max_steps)
    result = ComponentCrossCheck(verdict, brute_force, witness, witness_top, checked)
    if not result.agree:
        logger.error(
            f"decision {verdict.koethe} and brute force {brute_force} disagree on {verdict.diagram} "
            f"with arrows {[a.key for a in q.arrows]}"
        )
    else:
        logger.debug(f"{verdict.diagram}: both verdicts {brute_force} after {checked} indecomposables")
    return result


def cross_validate(q: Quiver, max_steps: int = TOWER_STEP_CAP) -> CrossCheckReport:
    if q.mode is not QuiverMode.HEREDITARY:
        raise WrongModeError("cross validation needs a hereditary quiver")
    return CrossCheckReport(tuple(cross_check_component(part, max_steps) for part in components(q)))
