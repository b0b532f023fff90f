"""
Ring: Infrastructure (Graph I/O)

Responsibility:
Reads and writes the edge-list text format: one "u v" pair per line, blank lines and
'#' comment lines ignored. Tokens are non-negative integers or bare-word labels.

Header comments written by render_edge_list are read back when present:
- "# n=<count>" fixes the node count, so isolated nodes survive a round trip.
- "# labels=<l0> <l1> ..." fixes the id of every label.
Without a labels header, tokens get ids in first-appearance order and keep their
original text as labels, unless the numeric tokens already read 0, 1, 2, ... in that
order. A "# n=" header without labels declares an unlabelled id space, so every
numeric token must lie below it. A header that disagrees with the edges is an error
reported against the header line.

Dependency constraints:
- Must not import from the application layer (features/*).
- May depend on the Domain layer (core/).
"""

from __future__ import annotations

from core.entities.graph import Graph
from core.values.errors import EdgeListParseError

_N_HEADER = "n="
_LABELS_HEADER = "labels="


def parse_edge_list(text: str) -> Graph:
    declared_count: int | None = None
    count_line = 0
    declared_labels: list[str] | None = None
    pairs: list[tuple[str, str, int]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = line.lstrip("#").strip()
            if header.startswith(_N_HEADER):
                declared_count = _parse_count(header[len(_N_HEADER) :], line_number)
                count_line = line_number
            elif header.startswith(_LABELS_HEADER):
                declared_labels = header[len(_LABELS_HEADER) :].split()
                if len(set(declared_labels)) != len(declared_labels):
                    raise EdgeListParseError(
                        "duplicate label in header", line_number=line_number
                    )
            continue

        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected 2 tokens, got {len(tokens)}", line_number=line_number
            )
        u, v = tokens
        if u == v:
            raise EdgeListParseError(f"self-loop on {u}", line_number=line_number)
        pairs.append((u, v, line_number))

    order, keep_labels = _node_order(pairs, declared_labels, declared_count, count_line)

    ids = {token: index for index, token in enumerate(order)}
    edges = []
    for u, v, line_number in pairs:
        u_key, v_key = _token_key(u, ids), _token_key(v, ids)
        if u_key not in ids or v_key not in ids:
            raise EdgeListParseError(
                "token missing from labels header", line_number=line_number
            )
        if u_key == v_key:
            raise EdgeListParseError(f"self-loop on {u}", line_number=line_number)
        edges.append((ids[u_key], ids[v_key]))

    return Graph.from_edges(
        node_count=max(len(order), 1),
        edges=edges,
        labels=order if keep_labels else None,
    )


def _token_key(token: str, ids: dict[str, int]) -> str:
    if token in ids or not token.isdigit():
        return token
    return str(int(token))


def _parse_count(value: str, line_number: int) -> int:
    try:
        count = int(value)
    except ValueError as exc:
        raise EdgeListParseError(
            f"bad node count {value!r}", line_number=line_number
        ) from exc
    if count < 1:
        raise EdgeListParseError("node count must be positive", line_number=line_number)
    return count


def _node_order(
    pairs: list[tuple[str, str, int]],
    declared_labels: list[str] | None,
    declared_count: int | None,
    count_line: int,
) -> tuple[list[str], bool]:
    if declared_labels is not None:
        if declared_count is not None and declared_count != len(declared_labels):
            raise EdgeListParseError(
                f"n={declared_count} but {len(declared_labels)} labels",
                line_number=count_line,
            )
        return list(declared_labels), True

    numeric = all(u.isdigit() and v.isdigit() for u, v, _ in pairs)
    seen: dict[str, None] = {}
    for u, v, _ in pairs:
        for token in (u, v):
            seen.setdefault(str(int(token)) if numeric else token, None)
    tokens = list(seen)

    if declared_count is not None:
        if not numeric:
            if declared_count != len(tokens):
                raise EdgeListParseError(
                    f"n={declared_count} but {len(tokens)} labelled nodes",
                    line_number=count_line,
                )
            return tokens, True
        largest = max((int(token) for token in tokens), default=-1)
        if largest >= declared_count:
            raise EdgeListParseError(
                f"n={declared_count} but node {largest} is used",
                line_number=count_line,
            )
        return [str(k) for k in range(declared_count)], False

    identity = numeric and all(token == str(k) for k, token in enumerate(tokens))
    return tokens, not identity


def render_edge_list(g: Graph) -> str:
    lines = [f"# {_N_HEADER}{g.node_count}", f"# m={g.m}"]
    if g.labels is not None:
        lines.append(f"# {_LABELS_HEADER}{' '.join(g.labels)}")
    lines.extend(f"{g.label(u)} {g.label(v)}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"
