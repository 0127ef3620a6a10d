"""Line-oriented text formats for objects, complexes, morphisms and wreath data.

Objects::

    dims: 0 1 0
    updown: 1
    (()())

General complexes::

    adc
    0 deg=0 aug= 1
    1 deg=1 boundary= 1*2 -1*0
    2 deg=0 aug= 1

Morphisms list one matrix per degree, rows indexed by the target basis::

    morphism A.adc -> B.adc
    deg 0:
    1 0
    0 1

Duals use ``coboundary=`` lines and a closing ``eta=`` line.  Wreath files
(``.wr``) start with ``m: k`` followed by ``k`` object references, each a path
or an inline object.  ``#`` starts a comment everywhere.
"""

from __future__ import annotations

from pathlib import Path
from typing import Callable

from .adc import AugmentedDirectedComplex, ChainMorphism, zeros
from .discs import CoaugmentedCochainComplex
from .errors import ParseError, ShapeMismatch, ThetaError
from .representations import (
    DimensionSequence,
    LevelTree,
    UpDownVector,
    parse_tree,
    seq_to_tree,
    seq_to_updown,
    tree_to_seq,
    updown_to_seq,
)
from .simple import from_sequence
from .wreath import WreathObject


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"bad {what}: {text!r}") from exc


# -- representations -----------------------------------------------------

def parse_sequence(text: str) -> DimensionSequence:
    """``dims: 0 1 0`` or a bare list of integers."""
    body = text.strip()
    if body.startswith("dims:"):
        body = body[len("dims:"):]
    return DimensionSequence(_ints(body, "dimension sequence"))


def parse_updown(text: str) -> UpDownVector:
    body = text.strip()
    if body.startswith("updown:"):
        body = body[len("updown:"):]
    return UpDownVector(_ints(body, "up-and-down vector"))


def parse_representation(text: str, kind: str):
    if kind == "seq":
        return parse_sequence(text)
    if kind == "updown":
        return parse_updown(text)
    if kind == "tree":
        try:
            return parse_tree(text.strip())
        except ThetaError:
            raise
        except (ValueError, IndexError) as exc:
            raise ParseError(f"bad tree: {text!r}") from exc
    raise ParseError(f"unknown format {kind!r}")


def to_sequence(obj) -> DimensionSequence:
    if isinstance(obj, DimensionSequence):
        return obj
    if isinstance(obj, UpDownVector):
        return updown_to_seq(obj)
    if isinstance(obj, LevelTree):
        return tree_to_seq(obj)
    raise TypeError(f"not a representation: {obj!r}")


def convert(text: str, src: str, dst: str) -> str:
    seq = to_sequence(parse_representation(text, src))
    if dst == "seq":
        return str(seq)
    if dst == "updown":
        return str(seq_to_updown(seq))
    if dst == "tree":
        return str(seq_to_tree(seq))
    raise ParseError(f"unknown format {dst!r}")


# -- complexes -------------------------------------------------------------

def _fmt_terms(terms) -> str:
    return " ".join(f"{c}*{j}" for j, c in terms)


def _parse_terms(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in text.split():
        c, sep, j = tok.partition("*")
        if not sep:
            raise ParseError(f"expected c*j, got {tok!r}")
        try:
            out.append((int(j), int(c)))
        except ValueError as exc:
            raise ParseError(f"bad term {tok!r}") from exc
    return out


def format_adc(K: AugmentedDirectedComplex) -> str:
    lines = ["adc"]
    for i, q in enumerate(K.degrees):
        if q == 0:
            lines.append(f"{i} deg=0 aug= {K.augmentation[i]}")
        else:
            lines.append(f"{i} deg={q} boundary= {_fmt_terms(K.boundary[i])}".rstrip())
    return "\n".join(lines) + "\n"


def _parse_entries(lines: list[str], header: str, key: str):
    """Rows ``i deg=q key= ...`` in index order; returns degrees and bodies."""
    if not lines or lines[0] != header:
        raise ParseError(f"expected header {header!r}")
    degrees, bodies = [], []
    for k, line in enumerate(lines[1:]):
        parts = line.split(None, 2)
        if len(parts) < 2 or not parts[1].startswith("deg="):
            raise ParseError(f"bad line {line!r}")
        try:
            i, q = int(parts[0]), int(parts[1][4:])
        except ValueError as exc:
            raise ParseError(f"bad line {line!r}") from exc
        if i != k:
            raise ParseError(f"basis elements must be numbered 0, 1, ...; got {i} at position {k}")
        tail = parts[2] if len(parts) > 2 else ""
        if not tail.startswith(tuple(f"{x}=" for x in key.split("|"))):
            raise ParseError(f"line {line!r} lacks a {key}= field")
        field, _, value = tail.partition("=")
        degrees.append(q)
        bodies.append((field, value.strip()))
    return degrees, bodies


def parse_adc(text: str) -> AugmentedDirectedComplex:
    degrees, bodies = _parse_entries(_lines(text), "adc", "boundary|aug")
    boundary, aug = [], []
    for q, (field, value) in zip(degrees, bodies):
        if field == "aug":
            if q != 0:
                raise ParseError("aug= is only allowed in degree 0")
            aug.append(_ints(value, "augmentation")[0] if value else 0)
            boundary.append(())
        else:
            boundary.append(tuple(_parse_terms(value)))
            aug.append(0)
    if any(q < 0 for q in degrees):
        raise ParseError("degrees must be nonnegative")
    return AugmentedDirectedComplex(tuple(degrees), tuple(boundary), tuple(aug))


def format_cochain(C: CoaugmentedCochainComplex) -> str:
    lines = ["cochain"]
    for i, q in enumerate(C.degrees):
        lines.append(f"{i} deg={q} coboundary= {_fmt_terms(C.coboundary[i])}".rstrip())
    lines.append(f"eta= {_fmt_terms((i, e) for i, e in enumerate(C.eta) if e)}".rstrip())
    return "\n".join(lines) + "\n"


def parse_cochain(text: str) -> CoaugmentedCochainComplex:
    lines = _lines(text)
    if not lines or not lines[-1].startswith("eta="):
        raise ParseError("missing eta= line")
    degrees, bodies = _parse_entries(lines[:-1], "cochain", "coboundary")
    eta = [0] * len(degrees)
    for j, c in _parse_terms(lines[-1][4:]):
        if not 0 <= j < len(eta):
            raise ParseError(f"eta refers to unknown element {j}")
        eta[j] = c
    cob = tuple(tuple(_parse_terms(v)) for _, v in bodies)
    return CoaugmentedCochainComplex(tuple(degrees), cob, tuple(eta))


# -- objects ---------------------------------------------------------------

def parse_object(text: str, convention: str = "std") -> AugmentedDirectedComplex:
    """Any object text: ``adc`` blocks, ``dims:``/``updown:`` lines, trees or
    bare integer sequences.  Sequence-like inputs become simple complexes."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty object")
    first = lines[0]
    if first == "adc":
        return parse_adc(text)
    if first.startswith("updown:"):
        seq = updown_to_seq(parse_updown(first))
    elif first.startswith("("):
        seq = tree_to_seq(parse_representation(first, "tree"))
    else:
        seq = parse_sequence(first)
    if len(lines) > 1:
        raise ParseError("trailing lines after a one-line object")
    return from_sequence(seq, convention)


def read_text(ref: str, base: Path | None = None) -> str:
    """Contents of the file ``ref`` if it exists, otherwise ``ref`` itself."""
    path = Path(ref)
    if base is not None and not path.is_absolute():
        candidate = base / path
        if candidate.is_file():
            return candidate.read_text()
    if path.is_file():
        return path.read_text()
    return ref


def load_object(ref: str, convention: str = "std", base: Path | None = None) -> AugmentedDirectedComplex:
    return parse_object(read_text(ref, base), convention)


# -- morphisms -------------------------------------------------------------

def format_morphism(f: ChainMorphism, src: str = "A", dst: str = "B") -> str:
    lines = [f"morphism {src} -> {dst}"]
    for q in range(f.ndeg):
        rows, cols = f.target.rank(q), f.source.rank(q)
        if rows and cols:
            lines.append(f"deg {q}:")
            lines.extend(" ".join(str(x) for x in row) for row in f.matrix(q))
    return "\n".join(lines) + "\n"


def parse_morphism_text(text: str) -> tuple[str, str, dict[int, list[tuple[int, ...]]]]:
    """Split a morphism file into source ref, target ref and raw matrices."""
    lines = _lines(text)
    if not lines or not lines[0].startswith("morphism"):
        raise ParseError("expected a 'morphism A -> B' header")
    src, sep, dst = lines[0][len("morphism"):].partition("->")
    if not sep or not src.strip() or not dst.strip():
        raise ParseError("header must read 'morphism A -> B'")
    mats: dict[int, list[tuple[int, ...]]] = {}
    current = None
    for line in lines[1:]:
        if line.startswith("deg"):
            body = line[3:].rstrip(":").strip()
            try:
                current = int(body)
            except ValueError as exc:
                raise ParseError(f"bad degree line {line!r}") from exc
            if current in mats:
                raise ParseError(f"degree {current} given twice")
            mats[current] = []
        elif current is None:
            raise ParseError("matrix row before any 'deg q:' line")
        else:
            mats[current].append(_ints(line, "matrix row"))
    return src.strip(), dst.strip(), mats


def load_morphism(text: str, convention: str = "std", base: Path | None = None,
                  loader: Callable[..., AugmentedDirectedComplex] = load_object) -> ChainMorphism:
    """Parse a morphism file; the matrices are only shape-checked here."""
    src, dst, mats = parse_morphism_text(text)
    K, L = loader(src, convention, base), loader(dst, convention, base)
    n = max(K.top, L.top) + 1
    for q, rows in mats.items():
        if q >= n and any(rows):
            raise ShapeMismatch(f"degree {q} lies above both complexes")
    full = [tuple(mats[q]) if q in mats else zeros(L.rank(q), K.rank(q)) for q in range(n)]
    return ChainMorphism(K, L, tuple(full))


# -- wreath files ----------------------------------------------------------

def parse_wreath(text: str, convention: str = "std", base: Path | None = None) -> WreathObject:
    lines = _lines(text)
    if not lines or not lines[0].startswith("m:"):
        raise ParseError("wreath file must start with 'm: k'")
    try:
        m = int(lines[0][2:])
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    refs = lines[1:]
    if m < 0 or len(refs) != m:
        raise ParseError(f"expected {m} component references, got {len(refs)}")
    return WreathObject(m, tuple(load_object(r, convention, base) for r in refs))


def load_wreath(ref: str, convention: str = "std") -> WreathObject:
    path = Path(ref)
    base = path.parent if path.is_file() else None
    return parse_wreath(read_text(ref), convention, base)
