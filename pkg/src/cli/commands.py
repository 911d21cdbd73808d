"""
Command dispatch and report rendering for the quiver tool.

Every command builds a pydantic report; JSON output dumps it and the text
output is rendered from the same dump, so both carry identical data.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Union

import structlog
from pydantic import BaseModel

from config.settings import COMMANDS, DEFAULT_KOETHE_MODE, DIMSEQ_DEFAULT_CAP, KOETHE_MODES, TOWER_STEP_CAP
from src.cli import schemas
from src.cli.quiver_format import emit, emit_json, parse, to_dot
from src.combinatorics.dimension_sequences import (
    generate,
    indec_dimvectors,
    is_koethe_rank2,
    validate,
    validate_cyclic,
)
from src.koethe.crosscheck import cross_check_component
from src.koethe.decision import ComponentVerdict, decide_component, decide_hereditary
from src.koethe.separated import decide_radical_square_zero, separated_quiver
from src.quivers.diagrams import classify
from src.quivers.quiver import Quiver, QuiverMode, admissible_sink_sequence, components
from src.reflection.coxeter import enumerate_indecomposables, representation_finiteness
from src.representations.matrix_rep import MatrixRep, enumerate_indec_reps, top_dims
from src.roots.root_system import highest_root, positive_roots, symmetrizer
from src.utils.exceptions import (
    InvalidSequenceError,
    NotHereditaryModeError,
    ParseError,
    QuiverError,
    UsageError,
    WrongModeError,
)

log = structlog.get_logger()

VERDICT_COMMANDS = ("koethe", "crosscheck")
DIMSEQ_ACTIONS = ("validate", "list", "indecs")


@dataclass
class RunOptions:
    """Flags shared by every command"""

    mode: str = DEFAULT_KOETHE_MODE
    expect: Optional[str] = None
    max_steps: int = TOWER_STEP_CAP
    json: bool = False
    dot: bool = False
    action: Optional[str] = None
    argument: Optional[str] = None
    cap: int = DIMSEQ_DEFAULT_CAP


@dataclass
class CommandResult:
    exit_code: int
    output: str = ""
    error: Optional[str] = None
    report: Optional[BaseModel] = None


def error_name(e: Exception) -> str:
    name = type(e).__name__
    return name[:-len("Error")] if name.endswith("Error") else name


def _component_error(e: QuiverError) -> str:
    return f"{error_name(e)}: {e}"


def _order(part: Quiver) -> List[str]:
    return list(part.vertices)


def _require_hereditary(q: Quiver, command: str) -> None:
    if q.mode is not QuiverMode.HEREDITARY:
        raise NotHereditaryModeError(f"{command} needs a hereditary quiver")


def _safe_type(part: Quiver) -> str:
    try:
        return str(classify(part))
    except QuiverError:
        return "Unknown"


# Text projection


def _scalar(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _is_flat(values) -> bool:
    return all(not isinstance(v, (list, dict)) for v in values)


def _render(value, indent: int) -> List[str]:
    pad = "  " * indent
    lines = []
    for key, item in value.items():
        if isinstance(item, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render(item, indent + 1))
        elif isinstance(item, list) and _is_flat(item):
            lines.append(f"{pad}{key}: ({','.join(_scalar(v) for v in item)})")
        elif isinstance(item, list):
            lines.append(f"{pad}{key}:")
            for entry in item:
                if isinstance(entry, dict):
                    block = _render(entry, indent + 2)
                    lines.append(f"{pad}  - {block[0].strip()}")
                    lines.extend(block[1:])
                else:
                    lines.append(f"{pad}  - ({','.join(_scalar(v) for v in entry)})")
        else:
            lines.append(f"{pad}{key}: {_scalar(item)}")
    return lines


def render_text(data: Dict) -> str:
    """Aligned text view of a report dump; sequences print as (a,b,c)"""
    return "\n".join(_render(data, 0)) + "\n"


def render(report: BaseModel, as_json: bool) -> str:
    data = report.model_dump(mode="json", by_alias=True)
    if as_json:
        return report.model_dump_json(by_alias=True, indent=2) + "\n"
    return render_text(data)


# Quiver commands


def run_classify(q: Quiver, options: RunOptions) -> Union[BaseModel, str]:
    _require_hereditary(q, "classify")
    if options.dot:
        return to_dot(q)
    entries = []
    for part in components(q):
        diagram = classify(part)
        entry = schemas.ClassifyComponentReport(
            vertices=_order(part),
            type=str(diagram),
            rep_finite=diagram.is_finite,
            simply_laced=diagram.is_simply_laced and part.is_trivially_labeled(),
        )
        try:
            entry.sink_sequence = admissible_sink_sequence(part)
            if diagram.is_finite:
                entry.steps = representation_finiteness(part, options.max_steps).m
        except QuiverError as e:
            entry.error = _component_error(e)
        entries.append(entry)
    return schemas.ClassifyReport(components=entries)


def run_indecs(q: Quiver, options: RunOptions) -> BaseModel:
    _require_hereditary(q, "indecs")
    entries = []
    for part in components(q):
        order = _order(part)
        entry = schemas.IndecsComponentReport(vertices=order, type=_safe_type(part))
        try:
            found = enumerate_indecomposables(part, options.max_steps)
            entry.indecomposables = [
                schemas.IndecReport(vector=list(item.vector.as_tuple(order)), t=item.t, sink=item.sink)
                for item in found
            ]
            entry.count = len(found)
        except QuiverError as e:
            entry.error = _component_error(e)
        entries.append(entry)
    return schemas.IndecsReport(components=entries)


def run_roots(q: Quiver, options: RunOptions) -> BaseModel:
    _require_hereditary(q, "roots")
    entries = []
    for part in components(q):
        order = _order(part)
        entry = schemas.RootsComponentReport(vertices=order, type=_safe_type(part))
        try:
            roots = positive_roots(part)
            entry.roots = [list(root.as_tuple(order)) for root in roots]
            entry.count = len(roots)
            entry.highest = list(highest_root(roots).as_tuple(order))
            entry.symmetrizer = list(symmetrizer(part).as_tuple(order))
        except QuiverError as e:
            entry.error = _component_error(e)
        entries.append(entry)
    return schemas.RootsReport(components=entries)


def _reason(verdict: ComponentVerdict) -> Optional[schemas.ReasonReport]:
    reason = verdict.reason
    if reason is None:
        return None
    return schemas.ReasonReport(
        kind=reason.kind.value,
        detail=reason.detail,
        vertex=reason.vertex,
        arrow=list(reason.arrow) if reason.arrow else None,
        expected=list(reason.expected) if reason.expected else None,
        found=list(reason.found) if reason.found else None,
    )


def run_koethe(q: Quiver, options: RunOptions) -> BaseModel:
    if options.mode not in KOETHE_MODES:
        raise UsageError(f"--mode must be one of {', '.join(KOETHE_MODES)}, got {options.mode!r}")
    if options.mode == "rsz":
        verdict = decide_radical_square_zero(q)
    else:
        verdict = decide_hereditary(q)
    entries = [
        schemas.KoetheComponentReport(
            vertices=list(c.vertices),
            type=str(c.diagram),
            rep_finite=c.rep_finite,
            koethe=c.koethe,
            clause=c.clause,
            parameter=c.parameter,
            reason=_reason(c),
        )
        for c in verdict.components
    ]
    return schemas.KoetheReport(components=entries, koethe=verdict.overall)


def run_separated(q: Quiver, options: RunOptions) -> str:
    separated = separated_quiver(q)
    if options.dot:
        return to_dot(separated, name="separated")
    if options.json:
        return emit_json(separated) + "\n"
    return emit(separated)


def _matrix_entries(matrix) -> List[List[str]]:
    return [[str(value) for value in row] for row in matrix.tolist()]


def _rep_report(rep: MatrixRep, order: List[str]) -> schemas.RepReport:
    return schemas.RepReport(
        dims=list(rep.dims.as_tuple(order)),
        top=list(top_dims(rep).as_tuple(order)),
        maps={f"{s}->{t}": _matrix_entries(matrix) for (s, t), matrix in sorted(rep.maps.items())},
    )


def run_reps(q: Quiver, options: RunOptions) -> BaseModel:
    _require_hereditary(q, "reps")
    entries = []
    for part in components(q):
        order = _order(part)
        entry = schemas.RepsComponentReport(vertices=order, type=_safe_type(part))
        try:
            reps = enumerate_indec_reps(part, options.max_steps)
            entry.representations = [_rep_report(rep, order) for rep in reps]
            entry.count = len(reps)
        except QuiverError as e:
            entry.error = _component_error(e)
        entries.append(entry)
    return schemas.RepsReport(components=entries)


def _combine(flags: List[Optional[bool]]) -> Optional[bool]:
    """False if any component says no, None if one could not be checked, else True"""
    if any(flag is False for flag in flags):
        return False
    if any(flag is None for flag in flags):
        return None
    return True


def run_crosscheck(q: Quiver, options: RunOptions) -> BaseModel:
    if q.mode is not QuiverMode.HEREDITARY:
        raise WrongModeError("crosscheck needs a hereditary quiver")
    entries = []
    for part in components(q):
        order = _order(part)
        entry = schemas.CrossCheckComponentReport(vertices=order, type=_safe_type(part))
        try:
            result = cross_check_component(part, options.max_steps)
            entry.decision = result.decision
            entry.brute_force = result.brute_force
            entry.agree = result.agree
            entry.checked = result.checked
            if result.witness is not None:
                entry.witness = schemas.WitnessReport(
                    dims=list(result.witness.dims.as_tuple(order)),
                    top=list(result.witness_top.as_tuple(order)),
                )
        except QuiverError as e:
            entry.decision = decide_component(part).koethe
            entry.error = _component_error(e)
        entries.append(entry)
    return schemas.CrossCheckReport(
        components=entries,
        decision=all(e.decision for e in entries),
        brute_force=_combine([e.brute_force for e in entries]),
        agree=_combine([e.agree for e in entries]),
        errored=sum(1 for e in entries if e.error is not None),
    )


# Dimension sequences


def _sequence_argument(options: RunOptions) -> List[int]:
    if not options.argument:
        raise UsageError(f"dimseq {options.action} needs a sequence such as 3,1,2,2,1")
    try:
        return [int(part) for part in options.argument.strip("()").split(",")]
    except ValueError:
        raise UsageError(f"not a comma-separated integer sequence: {options.argument!r}")


def run_dimseq(options: RunOptions) -> BaseModel:
    if options.action not in DIMSEQ_ACTIONS:
        raise UsageError(f"dimseq needs one of {', '.join(DIMSEQ_ACTIONS)}")

    if options.action == "list":
        try:
            m = int(options.argument)
        except (TypeError, ValueError):
            raise UsageError("dimseq list needs a length m >= 3")
        classes = [
            schemas.SequenceClassReport(
                canonical=list(c.canonical),
                members=[list(member) for member in c.members],
                indecomposables=[list(pair) for pair in indec_dimvectors(c.canonical)],
                koethe=any(is_koethe_rank2(member) for member in c.members),
            )
            for c in generate(m, options.cap)
        ]
        return schemas.DimSeqListReport(m=m, classes=classes)

    seq = _sequence_argument(options)
    if options.action == "indecs":
        return schemas.DimSeqIndecsReport(
            sequence=seq, indecomposables=[list(pair) for pair in indec_dimvectors(seq)]
        )
    witness = validate(seq)
    return schemas.DimSeqValidateReport(
        sequence=seq,
        valid=witness.valid,
        cyclic=validate_cyclic(seq),
        x=list(witness.x),
        y=list(witness.y),
        koethe=is_koethe_rank2(seq),
    )


HANDLERS: Dict[str, Callable[[Quiver, RunOptions], Union[BaseModel, str]]] = {
    "classify": run_classify,
    "indecs": run_indecs,
    "roots": run_roots,
    "koethe": run_koethe,
    "separated": run_separated,
    "reps": run_reps,
    "crosscheck": run_crosscheck,
}


def _verdict(report: BaseModel) -> bool:
    if isinstance(report, schemas.KoetheReport):
        return report.koethe
    return report.decision


def run(command: str, options: Optional[RunOptions] = None, text: str = "") -> CommandResult:
    """Run one command on a quiver description; exit code 0, 1 (input or usage) or 2 (--expect)"""
    options = options or RunOptions()
    try:
        if command not in COMMANDS:
            raise UsageError(f"unknown command {command!r}")
        if options.expect is not None:
            if command not in VERDICT_COMMANDS:
                raise UsageError(f"--expect applies to {' and '.join(VERDICT_COMMANDS)} only")
            if options.expect not in ("yes", "no"):
                raise UsageError(f"--expect takes yes or no, got {options.expect!r}")
        if options.max_steps < 1:
            raise UsageError(f"--max-steps must be positive, got {options.max_steps}")
        if options.cap < 1:
            raise UsageError(f"--cap must be positive, got {options.cap}")

        if command == "dimseq":
            report = run_dimseq(options)
        else:
            report = HANDLERS[command](parse(text), options)
    except (ParseError, UsageError, WrongModeError, NotHereditaryModeError, InvalidSequenceError) as e:
        log.info("command_rejected", command=command, error=str(e))
        return CommandResult(exit_code=1, error=str(e))

    if isinstance(report, str):
        return CommandResult(exit_code=0, output=report)

    exit_code = 0
    if options.expect is not None:
        verdict = _verdict(report)
        if verdict != (options.expect == "yes"):
            log.info("expectation_mismatch", command=command, expected=options.expect, verdict=verdict)
            exit_code = 2
    return CommandResult(exit_code=exit_code, output=render(report, options.json), report=report)
