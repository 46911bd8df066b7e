"""Line-oriented instance files and seeded generators.

Formats (whitespace-separated, UTF-8, '#' starts a comment line, vertex
ids are 1-based in files and 0-based in memory):

  graph       header "n m", then m lines "u v w"
  hypergraph  header "n m", then m lines "w k v1 ... vk"
  table       header "n", then 2^n lines "bitmask value"

Weights parse as ints when every weight token is integral, else as floats;
the graph/hypergraph objects report which mode was chosen so callers can
refuse integer-only features on float instances.
"""

import math
import random

from .oracles import Hypergraph, SetFunctionTable, WeightedGraph


class ParseError(ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _data_lines(text):
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    return rows


def _parse_int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {token!r}", lineno) from None


def _parse_weight(token, lineno):
    try:
        return int(token), True
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"bad weight {token!r}", lineno) from None
    if not math.isfinite(value):
        raise ParseError(f"weight must be finite: {token!r}", lineno)
    return value, False


def parse_graph(text):
    rows = _data_lines(text)
    if not rows:
        raise ParseError("empty input", 1)
    header_line, header = rows[0]
    if len(header) != 2:
        raise ParseError("graph header must be 'n m'", header_line)
    n = _parse_int(header[0], header_line, "vertex count")
    m = _parse_int(header[1], header_line, "edge count")
    if n < 1 or m < 0:
        raise ParseError("bad header counts", header_line)
    if len(rows) - 1 != m:
        lineno = rows[m + 1][0] if len(rows) - 1 > m else header_line
        raise ParseError(f"expected {m} edge lines, found {len(rows) - 1}", lineno)
    edges = []
    all_int = True
    for lineno, tokens in rows[1:]:
        if len(tokens) != 3:
            raise ParseError("edge line must be 'u v w'", lineno)
        u = _parse_int(tokens[0], lineno, "vertex id")
        v = _parse_int(tokens[1], lineno, "vertex id")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex id out of range 1..{n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        w, is_int = _parse_weight(tokens[2], lineno)
        if w < 0:
            raise ParseError(f"negative weight {w}", lineno)
        all_int = all_int and is_int
        edges.append((u - 1, v - 1, w))
    if not all_int:
        edges = [(u, v, float(w)) for u, v, w in edges]
    return WeightedGraph(n, edges)


def write_graph(graph):
    lines = [f"{graph.n} {graph.m}"]
    for u, v, w in graph.edges:
        lines.append(f"{u + 1} {v + 1} {_format_weight(w)}")
    return "\n".join(lines) + "\n"


def parse_hypergraph(text):
    rows = _data_lines(text)
    if not rows:
        raise ParseError("empty input", 1)
    header_line, header = rows[0]
    if len(header) != 2:
        raise ParseError("hypergraph header must be 'n m'", header_line)
    n = _parse_int(header[0], header_line, "vertex count")
    m = _parse_int(header[1], header_line, "hyperedge count")
    if n < 1 or m < 0:
        raise ParseError("bad header counts", header_line)
    if len(rows) - 1 != m:
        lineno = rows[m + 1][0] if len(rows) - 1 > m else header_line
        raise ParseError(f"expected {m} hyperedge lines, found {len(rows) - 1}", lineno)
    hyperedges = []
    all_int = True
    for lineno, tokens in rows[1:]:
        if len(tokens) < 2:
            raise ParseError("hyperedge line must be 'w k v1 ... vk'", lineno)
        w, is_int = _parse_weight(tokens[0], lineno)
        if w < 0:
            raise ParseError(f"negative weight {w}", lineno)
        k = _parse_int(tokens[1], lineno, "pin count")
        if k < 2:
            raise ParseError(f"hyperedge needs at least 2 pins, got {k}", lineno)
        if len(tokens) - 2 != k:
            raise ParseError(
                f"pin count mismatch: declared {k}, found {len(tokens) - 2}", lineno)
        pins = []
        for token in tokens[2:]:
            p = _parse_int(token, lineno, "pin")
            if not 1 <= p <= n:
                raise ParseError(f"pin out of range 1..{n}", lineno)
            pins.append(p - 1)
        if len(set(pins)) != len(pins):
            raise ParseError("duplicate pin in hyperedge", lineno)
        all_int = all_int and is_int
        hyperedges.append((w, frozenset(pins)))
    if not all_int:
        hyperedges = [(float(w), pins) for w, pins in hyperedges]
    return Hypergraph(n, hyperedges)


def write_hypergraph(hypergraph):
    lines = [f"{hypergraph.n} {hypergraph.m}"]
    for w, pins in hypergraph.hyperedges:
        pin_text = " ".join(str(p + 1) for p in sorted(pins))
        lines.append(f"{_format_weight(w)} {len(pins)} {pin_text}")
    return "\n".join(lines) + "\n"


def parse_table(text):
    rows = _data_lines(text)
    if not rows:
        raise ParseError("empty input", 1)
    header_line, header = rows[0]
    if len(header) != 1:
        raise ParseError("table header must be a single 'n'", header_line)
    n = _parse_int(header[0], header_line, "element count")
    if not 1 <= n <= SetFunctionTable.MAX_N:
        raise ParseError(f"table supports 1 <= n <= {SetFunctionTable.MAX_N}", header_line)
    size = 1 << n
    values = [None] * size
    all_int = True
    count = 0
    for lineno, tokens in rows[1:]:
        if len(tokens) != 2:
            raise ParseError("table line must be 'bitmask value'", lineno)
        mask = _parse_int(tokens[0], lineno, "bitmask")
        if not 0 <= mask < size:
            raise ParseError(f"bitmask out of range 0..{size - 1}", lineno)
        if values[mask] is not None:
            raise ParseError(f"duplicate bitmask {mask}", lineno)
        v, is_int = _parse_weight(tokens[1], lineno)
        all_int = all_int and is_int
        values[mask] = v
        count += 1
    if count != size:
        missing = next(i for i, v in enumerate(values) if v is None)
        raise ParseError(f"missing subset {missing} ({count} of {size} lines)",
                         rows[-1][0] if len(rows) > 1 else header_line)
    if not all_int:
        values = [float(v) for v in values]
    return SetFunctionTable(n, values)


def write_table(table):
    lines = [str(table.n)]
    for mask, value in enumerate(table.table_values):
        lines.append(f"{mask} {_format_weight(value)}")
    return "\n".join(lines) + "\n"


def load_instance(text, kind=None):
    """Parse an instance file, sniffing the kind from its shape.

    A one-token header is a table; with an "n m" header, 3-token data lines
    mean a graph and longer lines a hypergraph (hyperedges need at least 4
    tokens). An explicit `kind` overrides sniffing.
    """
    if kind is not None:
        parser = {"graph": parse_graph, "hypergraph": parse_hypergraph,
                  "table": parse_table}.get(kind)
        if parser is None:
            raise ValueError(f"unknown instance kind {kind!r}")
        return kind, parser(text)
    rows = _data_lines(text)
    if not rows:
        raise ParseError("empty input", 1)
    if len(rows[0][1]) == 1:
        return "table", parse_table(text)
    if len(rows) > 1 and len(rows[1][1]) != 3:
        return "hypergraph", parse_hypergraph(text)
    return "graph", parse_graph(text)


def _format_weight(w):
    return repr(w) if isinstance(w, float) else str(w)


def gen_random_graph(n, p, max_weight, seed, connected=False):
    """Seeded random graph with integer weights in [1, max_weight].

    Each vertex pair is an edge with probability p. With `connected`, the
    draw repeats (continuing the same stream) until the graph is connected.
    Deterministic per (parameters, seed).
    """
    if n < 2:
        raise ValueError("need at least two vertices")
    if not 0 < p <= 1:
        raise ValueError("edge probability must be in (0, 1]")
    if max_weight < 1 or max_weight != int(max_weight):
        raise ValueError("max weight must be a positive integer")
    rng = random.Random(seed)
    for _ in range(10000):
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    edges.append((u, v, rng.randint(1, int(max_weight))))
        graph = WeightedGraph(n, edges)
        if not connected or _is_connected(graph):
            return graph
    raise RuntimeError("could not draw a connected graph; raise p")


def gen_random_hypergraph(n, m, max_weight, seed, max_pins=4):
    """Seeded random hypergraph with integer weights in [1, max_weight]."""
    if n < 2:
        raise ValueError("need at least two vertices")
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    if max_weight < 1:
        raise ValueError("max weight must be a positive integer")
    rng = random.Random(seed)
    top = max(2, min(n, max_pins))
    hyperedges = []
    for _ in range(m):
        k = rng.randint(2, top)
        pins = rng.sample(range(n), k)
        hyperedges.append((rng.randint(1, int(max_weight)), frozenset(pins)))
    return Hypergraph(n, hyperedges)


def _is_connected(graph):
    if graph.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in graph.adjacency[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == graph.n
