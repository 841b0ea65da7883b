"""Reading poset and skew-diagram files; writing and reading structured output.

Poset file::

    # comments start with '#'
    4
    1 2
    1 3
    2 4
    3 4
    embedding
    0: 1
    1: 0 2 3
    ...

The first non-comment line holds n, then one cover pair per line.  The
optional ``embedding`` section lists, for every vertex of P with a bottom 0
and a top n+1 adjoined, its neighbours in clockwise order.

Skew-diagram file::

    lambda: 4 4 2
    mu: 1 1 0

Structured output is line oriented, one ``key value...`` record per line::

    kind linden            (or: geom)
    nvars 4
    vars x1 x2 x3 x4
    term <coefficient> <e1> ... <en>      one per numerator term
    factor <multiplicity> <a1> ... <an>   one per denominator factor

For ``linden`` a factor is the linear form a.x; for ``geom`` it is 1 - X^a.
Coefficients are written as integers or ``p/q``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import CycleError, InputError, ParseError
from .poset import PlanarEmbedding, Poset, SkewDiagram, poset_from_covers
from .symalg import GeomRat, LinDenRat, Polynomial
from .symalg.poly import LinearForm, grlex_key


def _strip(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _ints(text: str, lineno: int, offset: int, source) -> List[int]:
    """Parse whitespace-separated integers, reporting the column of a bad token."""
    out = []
    pos = 0
    for tok in text.split():
        pos = text.index(tok, pos)
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, found {tok!r}", lineno, offset + pos + 1, source) from None
        pos += len(tok)
    return out


def _first_column(line: str) -> int:
    return len(line) - len(line.lstrip()) + 1


def parse_poset(text: str, source: Optional[str] = None) -> Tuple[Poset, Optional[PlanarEmbedding]]:
    """Parse a poset file; returns the poset and the embedding if one is given."""
    n = None
    covers = []
    cover_lines = []
    rotation: Dict[int, Tuple[int, ...]] = {}
    in_embedding = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line.strip():
            continue
        col = _first_column(line)
        if n is None:
            vals = _ints(line, lineno, 0, source)
            if len(vals) != 1 or vals[0] < 0:
                raise ParseError("first line must hold the number of elements", lineno, col, source)
            n = vals[0]
            continue
        if line.strip() == "embedding":
            if in_embedding:
                raise ParseError("repeated embedding section", lineno, col, source)
            in_embedding = True
            continue
        if in_embedding:
            if ":" not in line:
                raise ParseError("expected 'vertex: neighbours'", lineno, col, source)
            head, tail = line.split(":", 1)
            vs = _ints(head, lineno, 0, source)
            if len(vs) != 1:
                raise ParseError("expected a single vertex before ':'", lineno, col, source)
            v = vs[0]
            if not 0 <= v <= n + 1:
                raise ParseError(f"vertex {v} outside 0..{n + 1}", lineno, col, source)
            if v in rotation:
                raise ParseError(f"vertex {v} listed twice", lineno, col, source)
            rotation[v] = tuple(_ints(tail, lineno, len(head) + 1, source))
            continue
        vals = _ints(line, lineno, 0, source)
        if len(vals) != 2:
            raise ParseError("expected a cover pair 'i j'", lineno, col, source)
        i, j = vals
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"element out of range 1..{n}", lineno, col, source)
        if i == j:
            raise ParseError("an element cannot cover itself", lineno, col, source)
        covers.append((i, j))
        cover_lines.append(lineno)
    if n is None:
        raise ParseError("empty poset file", 1, 1, source)
    try:
        P = poset_from_covers(n, covers)
    except CycleError as exc:
        raise ParseError(str(exc), cover_lines[-1] if cover_lines else 1, 1, source) from exc
    emb = PlanarEmbedding(rotation) if in_embedding else None
    return P, emb


def parse_skew(text: str, source: Optional[str] = None) -> SkewDiagram:
    """Parse a skew-diagram file with ``lambda:`` and ``mu:`` lines."""
    parts: Dict[str, Tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line.strip():
            continue
        col = _first_column(line)
        if ":" not in line:
            raise ParseError("expected 'lambda: ...' or 'mu: ...'", lineno, col, source)
        key, tail = line.split(":", 1)
        key = key.strip()
        if key not in ("lambda", "mu"):
            raise ParseError(f"unknown key {key!r}", lineno, col, source)
        if key in parts:
            raise ParseError(f"{key} given twice", lineno, col, source)
        parts[key] = tuple(_ints(tail, lineno, len(line.split(":", 1)[0]) + 1, source))
    if "lambda" not in parts:
        raise ParseError("missing 'lambda:' line", None, None, source)
    return SkewDiagram(parts["lambda"], parts.get("mu", ()))


def parse_partition(text: str) -> Tuple[int, ...]:
    """A partition given on the command line as '4,4,2' or '4 4 2'."""
    toks = text.replace(",", " ").split()
    try:
        return tuple(int(t) for t in toks)
    except ValueError:
        raise InputError(f"bad partition {text!r}") from None


def read_poset(path: str) -> Tuple[Poset, Optional[PlanarEmbedding]]:
    with open(path, encoding="utf-8") as fh:
        return parse_poset(fh.read(), source=path)


def read_skew(path: str) -> SkewDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse_skew(fh.read(), source=path)


def format_poset(P: Poset, emb: Optional[PlanarEmbedding] = None) -> str:
    """Inverse of :func:`parse_poset`."""
    lines = [str(P.n)] + [f"{i} {j}" for i, j in P.covers]
    if emb is not None:
        lines.append("embedding")
        for v in sorted(emb.rotation):
            lines.append(f"{v}: " + " ".join(str(u) for u in emb.rotation[v]))
    return "\n".join(lines) + "\n"


# -- structured output ------------------------------------------------------


def _coef_text(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_structured(f: Union[LinDenRat, GeomRat], names: Optional[Sequence[str]] = None) -> str:
    """Lossless line-oriented dump of a rational function."""
    n = f.nvars
    if isinstance(f, LinDenRat):
        kind = "linden"
        factors = [(form.coeffs, m) for form, m in f.denominator_forms()]
        prefix = "x"
    elif isinstance(f, GeomRat):
        kind = "geom"
        factors = list(f.denominator_vectors())
        prefix = "X"
    else:
        raise InputError(f"cannot serialize {type(f).__name__}")
    if names is None:
        names = [f"{prefix}{i}" for i in range(1, n + 1)]
    lines = [f"kind {kind}", f"nvars {n}", "vars " + " ".join(names)]
    for exps in sorted(f.numerator.terms, key=grlex_key):
        c = f.numerator.terms[exps]
        lines.append("term " + " ".join([_coef_text(c)] + [str(e) for e in exps]))
    for vec, m in factors:
        lines.append("factor " + " ".join([str(m)] + [str(a) for a in vec]))
    return "\n".join(lines) + "\n"


def from_structured(text: str) -> Union[LinDenRat, GeomRat]:
    """Parse the output of :func:`to_structured`."""
    kind = None
    n = None
    terms: Dict[Tuple[int, ...], Fraction] = {}
    factors: List[Tuple[Tuple[int, ...], int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        key, _, rest = raw.strip().partition(" ")
        toks = rest.split()
        try:
            if key == "kind":
                kind = rest.strip()
            elif key == "nvars":
                n = int(rest)
            elif key == "vars":
                pass
            elif key == "term":
                exps = tuple(int(t) for t in toks[1:])
                terms[exps] = terms.get(exps, Fraction(0)) + Fraction(toks[0])
            elif key == "factor":
                factors.append((tuple(int(t) for t in toks[1:]), int(toks[0])))
            else:
                raise ParseError(f"unknown record {key!r}", lineno, 1)
        except (ValueError, IndexError):
            raise ParseError(f"malformed {key!r} record", lineno, 1) from None
        if key in ("term", "factor") and (n is None or len(toks) != n + 1):
            raise ParseError(f"{key} record needs {n} entries after the first", lineno, 1)
    if kind not in ("linden", "geom") or n is None:
        raise ParseError("missing kind or nvars record", 1, 1)
    num = Polynomial(n, terms)
    if kind == "linden":
        return LinDenRat(num, Counter({LinearForm(v): m for v, m in factors}), reduced=True)
    return GeomRat(num, Counter({v: m for v, m in factors}), reduced=True)
