"""
Separated quivers: radical-square-zero species reduced to hereditary ones
"""

from src.koethe.decision import KoetheVerdict, decide_hereditary
from src.quivers.quiver import Arrow, Quiver, QuiverMode, VertexId


def separated_name(v: VertexId, side: int) -> VertexId:
    return f"({v},{side})"


def separated_quiver(q: Quiver) -> Quiver:
    """Vertices (i,0), (i,1); every arrow i -> j becomes (i,0) -> (j,1) with its label"""
    vertices = [separated_name(v, side) for v in q.vertices for side in (0, 1)]
    arrows = [
        Arrow(separated_name(a.source, 0), separated_name(a.target, 1), a.label)
        for a in q.arrows
    ]
    return Quiver(tuple(vertices), tuple(arrows), QuiverMode.HEREDITARY)


def decide_radical_square_zero(q: Quiver) -> KoetheVerdict:
    return decide_hereditary(separated_quiver(q))
