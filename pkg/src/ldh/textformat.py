"""Line-oriented hypergraph text format.

::

    # comment
    vertices 4
    edge 0 1 2
    edge 2 3
    label 3 hub        (optional; one per vertex when present)

The first non-comment line must be ``vertices <n>``. Ids are 0-based.
"""

from __future__ import annotations

from .errors import HypergraphSyntaxError
from .hypergraph import Hypergraph, build


def _int(tok: str, lineno: int, col: int) -> int:
    try:
        value = int(tok, 10)
    except ValueError:
        raise HypergraphSyntaxError(f"expected integer, got {tok!r}", lineno, col) from None
    if value < 0:
        raise HypergraphSyntaxError(f"negative id {value}", lineno, col)
    return value


def _tokens(line: str):
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        yield tok, col + 1
        col += len(tok)


def parse_hypergraph(
    text: str | bytes,
    require_sperner: bool = False,
    require_connected: bool = False,
) -> Hypergraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    edges: list[list[int]] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        head, col = toks[0]
        if n is None:
            if head != "vertices" or len(toks) != 2:
                raise HypergraphSyntaxError("expected 'vertices <n>' header", lineno, col)
            n = _int(toks[1][0], lineno, toks[1][1])
        elif head == "edge":
            if len(toks) < 2:
                raise HypergraphSyntaxError("edge needs at least one vertex", lineno, col)
            ids = [_int(t, lineno, c) for t, c in toks[1:]]
            for (t, c), v in zip(toks[1:], ids):
                if v >= n:
                    raise HypergraphSyntaxError(f"vertex id {v} >= {n}", lineno, c)
            edges.append(ids)
        elif head == "label":
            if len(toks) < 3:
                raise HypergraphSyntaxError("expected 'label <id> <text>'", lineno, col)
            v = _int(toks[1][0], lineno, toks[1][1])
            if v >= n:
                raise HypergraphSyntaxError(f"vertex id {v} >= {n}", lineno, toks[1][1])
            labels[v] = line[toks[2][1] - 1:].strip()
        elif head == "vertices":
            raise HypergraphSyntaxError("duplicate 'vertices' header", lineno, col)
        else:
            raise HypergraphSyntaxError(f"unknown directive {head!r}", lineno, col)
    if n is None:
        raise HypergraphSyntaxError("missing 'vertices <n>' header", 1)
    label_list = None
    if labels:
        label_list = [labels.get(v, str(v)) for v in range(n)]
    return build(n, edges, require_sperner, require_connected, labels=label_list)


def serialize(H: Hypergraph) -> str:
    lines = [f"vertices {H.n}"]
    lines.extend("edge " + " ".join(map(str, e)) for e in H.edges)
    if H.labels:
        lines.extend(f"label {v} {lab}" for v, lab in enumerate(H.labels))
    return "\n".join(lines) + "\n"
