"""
Plain-text and JSON quiver descriptions.

Text grammar, one statement per line, '#' starts a comment:

    mode hereditary|general
    vertex NAME
    arrow SRC -> DST [seq a1,a2,...,am | val d,e]

Statements may come in any order; the mode applies to the whole file.
"""

import json
import logging
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from src.cli.schemas import ArrowDocument, QuiverDocument
from src.quivers.quiver import Arrow, DualizationSequence, Quiver, QuiverMode, TRIVIAL, check_vertex_name, find_cycle, format_cycle
from src.utils.exceptions import InvalidLabelError, InvalidSequenceError, ParseError, QuiverError

logger = logging.getLogger(__name__)


def _parse_integers(line: int, raw: str) -> Tuple[int, ...]:
    body = raw.strip().strip("()")
    try:
        return tuple(int(part) for part in body.split(","))
    except ValueError:
        raise InvalidLabelError(line, f"expected comma-separated integers, got {raw.strip()!r}")


def _label(line: Optional[int], keyword: Optional[str], values: Optional[Tuple[int, ...]]) -> DualizationSequence:
    if keyword is None:
        return TRIVIAL
    try:
        if keyword == "val":
            if len(values) != 2:
                raise InvalidLabelError(line, f"val takes two entries d,e, got {len(values)}")
            return DualizationSequence.from_valuation(*values)
        return DualizationSequence(values)
    except InvalidSequenceError as e:
        raise InvalidLabelError(line, str(e))


def _vertex(line: int, name: str) -> str:
    try:
        return check_vertex_name(name)
    except QuiverError as e:
        raise ParseError(line, str(e))


def _parse_arrow(line: int, tokens: List[str]) -> Tuple[str, str, Optional[str], Optional[Tuple[int, ...]]]:
    if len(tokens) < 4 or tokens[2] != "->":
        raise ParseError(line, "expected 'arrow SRC -> DST [seq a1,...,am | val d,e]'")
    source, target = _vertex(line, tokens[1]), _vertex(line, tokens[3])
    if len(tokens) == 4:
        return source, target, None, None
    keyword = tokens[4]
    if keyword not in ("seq", "val") or len(tokens) == 5:
        raise ParseError(line, f"expected 'seq' or 'val' followed by integers after the arrow, got {keyword!r}")
    return source, target, keyword, _parse_integers(line, "".join(tokens[5:]))


def _build(mode: QuiverMode, vertices: List[str], arrows: List[Tuple[Optional[int], Arrow]]) -> Quiver:
    seen: Dict[Tuple[str, str], Optional[int]] = {}
    for line, arrow in arrows:
        if arrow.key in seen:
            raise ParseError(line, f"duplicate arrow {arrow.source} -> {arrow.target}")
        seen[arrow.key] = line
        if mode is QuiverMode.HEREDITARY:
            if arrow.is_loop:
                raise ParseError(line, f"loop at {arrow.source} needs 'mode general'")
            if (arrow.target, arrow.source) in seen:
                raise ParseError(line, f"arrows both ways between {arrow.source} and {arrow.target} need 'mode general'")
    try:
        draft = Quiver.build((arrow for _, arrow in arrows), vertices=vertices, mode=QuiverMode.GENERAL)
    except QuiverError as e:
        raise ParseError(None, str(e))
    if mode is QuiverMode.GENERAL:
        return draft
    cycle = find_cycle(draft)
    if cycle:
        lines = [seen[a.key] for a in cycle if seen[a.key] is not None]
        raise ParseError(max(lines) if lines else None, f"directed cycle {format_cycle(cycle)} needs 'mode general'")
    return Quiver(draft.vertices, draft.arrows, mode)


def parse_text(text: str) -> Quiver:
    mode = QuiverMode.HEREDITARY
    mode_line = None
    vertices: List[str] = []
    statements = []

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        directive = tokens[0]
        if directive == "mode":
            if len(tokens) != 2 or tokens[1] not in (m.value for m in QuiverMode):
                raise ParseError(number, "expected 'mode hereditary' or 'mode general'")
            if mode_line is not None:
                raise ParseError(number, f"mode already set on line {mode_line}")
            mode, mode_line = QuiverMode(tokens[1]), number
        elif directive == "vertex":
            if len(tokens) != 2:
                raise ParseError(number, "expected 'vertex NAME'")
            name = _vertex(number, tokens[1])
            if name in vertices:
                raise ParseError(number, f"duplicate vertex {name}")
            vertices.append(name)
        elif directive == "arrow":
            statements.append((number, _parse_arrow(number, tokens)))
        else:
            raise ParseError(number, f"unknown directive {directive!r}")

    arrows = []
    for number, (source, target, keyword, values) in statements:
        arrows.append((number, Arrow(source, target, _label(number, keyword, values))))
    return _build(mode, vertices, arrows)


def parse_json(text: str) -> Quiver:
    try:
        document = QuiverDocument.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ParseError(None, f"invalid JSON quiver at {location or 'document'}: {first['msg']}")

    vertices = [_vertex(None, v) for v in document.vertices]
    arrows = []
    for entry in document.arrows:
        source, target = _vertex(None, entry.source), _vertex(None, entry.target)
        if entry.seq is not None:
            label = _label(None, "seq", tuple(entry.seq))
        elif entry.val is not None:
            label = _label(None, "val", tuple(entry.val))
        else:
            label = TRIVIAL
        arrows.append((None, Arrow(source, target, label)))
    return _build(document.mode, vertices, arrows)


def parse(text: str) -> Quiver:
    """Text or JSON quiver description; JSON when the first character is '{'"""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def format_sequence(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _label_clause(label: DualizationSequence) -> str:
    if label.is_trivial:
        return ""
    values = ",".join(str(a) for a in label.effective())
    return f" val {values}" if not label.bounded else f" seq {values}"


def emit(q: Quiver) -> str:
    """Canonical text form; every vertex is listed so isolated ones survive"""
    lines = [f"mode {q.mode.value}"]
    lines.extend(f"vertex {v}" for v in q.vertices)
    lines.extend(f"arrow {a.source} -> {a.target}{_label_clause(a.label)}" for a in q.arrows)
    return "\n".join(lines) + "\n"


def to_document(q: Quiver) -> QuiverDocument:
    arrows = []
    for a in q.arrows:
        entry = {"from": a.source, "to": a.target}
        if not a.label.is_trivial:
            entry["seq" if a.label.bounded else "val"] = list(a.label.effective())
        arrows.append(ArrowDocument(**entry))
    return QuiverDocument(mode=q.mode, vertices=list(q.vertices), arrows=arrows)


def emit_json(q: Quiver) -> str:
    return json.dumps(to_document(q).model_dump(mode="json", by_alias=True, exclude_none=True), indent=2)


def to_dot(q: Quiver, name: str = "quiver") -> str:
    """Graphviz digraph; non-trivial labels become edge labels"""
    lines = [f"digraph {name} {{"]
    lines.extend(f'  "{v}";' for v in q.vertices)
    for a in q.arrows:
        attributes = "" if a.label.is_trivial else f' [label="{format_sequence(a.label.effective())}"]'
        lines.append(f'  "{a.source}" -> "{a.target}"{attributes};')
    lines.append("}")
    return "\n".join(lines) + "\n"
