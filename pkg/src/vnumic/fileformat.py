"""Ideal documents: the text grammar and its JSON twin.

Text grammar (comments start with ``#``)::

    ring x y z
    ideal I = x^2*y, z^3
    ideal J = x, y
    power 2        # optional directive
    closure        # optional directive

Terms use ``x^2*y`` syntax with exponent 1 implicit; ``1`` denotes the
unit monomial.  The JSON alternative is::

    {"vars": ["x","y","z"],
     "ideals": {"I": [[2,1,0],[0,0,3]]},
     "power": 2, "closure": true}

Parsing canonicalizes generators, so serialize(parse(text)) is a fixpoint
and parse(serialize(doc)) == doc bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .ring import Monomial, MonomialIdeal, Ring


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class IdealDocument:
    ring: Ring
    ideals: dict[str, MonomialIdeal]
    power: int | None = None
    closure: bool = False
    warnings: list[str] = field(default_factory=list)

    def only_ideal(self) -> tuple[str, MonomialIdeal]:
        if len(self.ideals) != 1:
            raise ValueError(
                f"expected exactly one ideal, found {sorted(self.ideals)}"
            )
        return next(iter(self.ideals.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealDocument):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.ideals == other.ideals
            and self.power == other.power
            and self.closure == other.closure
        )


def _parse_term(ring: Ring, term: str, lineno: int, col: int) -> Monomial:
    try:
        return ring.parse_monomial(term)
    except (ValueError, KeyError) as exc:
        raise ParseError(str(exc), lineno, col) from None


def parse_ideal_text(text: str) -> IdealDocument:
    ring: Ring | None = None
    ideals: dict[str, MonomialIdeal] = {}
    power: int | None = None
    closure = False
    warnings: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("ring"):
            if ring is not None:
                raise ParseError("duplicate ring declaration", lineno)
            names = stripped[4:].split()
            if not names:
                raise ParseError("ring declaration needs variable names", lineno)
            try:
                ring = Ring(names)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        elif stripped.startswith("ideal"):
            if ring is None:
                raise ParseError("ideal before ring declaration", lineno)
            head, eq, body = stripped[5:].partition("=")
            name = head.strip()
            if not eq or not name:
                raise ParseError("expected `ideal NAME = term, ...`", lineno)
            if name in ideals:
                raise ParseError(f"duplicate ideal {name!r}", lineno)
            terms = [t.strip() for t in body.split(",")]
            if terms == [""]:
                raise ParseError(f"ideal {name!r} has an empty generator list", lineno)
            gens = []
            col = line.index("=") + 2
            for t in terms:
                if not t:
                    raise ParseError("empty generator", lineno, col)
                gens.append(_parse_term(ring, t, lineno, col))
                col += len(t) + 2
            ideal = MonomialIdeal(ring, gens)
            if ideal.is_unit:
                warnings.append(
                    f"line {lineno}: ideal {name!r} is the unit ideal; "
                    "v-number operations will reject it"
                )
            ideals[name] = ideal
        elif stripped.startswith("power"):
            arg = stripped[5:].strip()
            try:
                power = int(arg)
            except ValueError:
                raise ParseError(f"bad power directive {arg!r}", lineno) from None
            if power < 0:
                raise ParseError("power directive must be nonnegative", lineno)
        elif stripped == "closure":
            closure = True
        else:
            raise ParseError(f"unrecognized line {stripped!r}", lineno)

    if ring is None:
        raise ParseError("missing ring declaration", 1)
    if not ideals:
        raise ParseError("no ideals declared", 1)
    return IdealDocument(ring, ideals, power, closure, warnings)


def parse_ideal_json(text: str) -> IdealDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "vars" not in data or "ideals" not in data:
        raise ParseError("JSON document needs `vars` and `ideals` keys", 1)
    try:
        ring = Ring([str(v) for v in data["vars"]])
    except ValueError as exc:
        raise ParseError(str(exc), 1) from None
    ideals: dict[str, MonomialIdeal] = {}
    warnings: list[str] = []
    for name, rows in data["ideals"].items():
        gens = []
        for row in rows:
            if len(row) != ring.nvars or any(
                not isinstance(e, int) or e < 0 for e in row
            ):
                raise ParseError(
                    f"ideal {name!r}: exponent rows must be {ring.nvars} "
                    "nonnegative integers",
                    1,
                )
            gens.append(Monomial(ring, tuple(row)))
        if not gens:
            raise ParseError(f"ideal {name!r} has an empty generator list", 1)
        ideal = MonomialIdeal(ring, gens)
        if ideal.is_unit:
            warnings.append(f"ideal {name!r} is the unit ideal")
        ideals[name] = ideal
    power = data.get("power")
    if power is not None and (not isinstance(power, int) or power < 0):
        raise ParseError("`power` must be a nonnegative integer", 1)
    closure = bool(data.get("closure", False))
    return IdealDocument(ring, ideals, power, closure, warnings)


def parse_ideal_file(text: str) -> IdealDocument:
    """Dispatch on the leading character: ``{`` means JSON, else the text grammar."""
    head = text.lstrip()[:1]
    if head == "{":
        return parse_ideal_json(text)
    return parse_ideal_text(text)


def serialize_monomial(m: Monomial) -> str:
    return str(m)


def serialize_document(doc: IdealDocument) -> str:
    lines = ["ring " + " ".join(doc.ring.vars)]
    for name, ideal in doc.ideals.items():
        gens = ", ".join(serialize_monomial(g) for g in ideal.gens)
        lines.append(f"ideal {name} = {gens}")
    if doc.power is not None:
        lines.append(f"power {doc.power}")
    if doc.closure:
        lines.append("closure")
    return "\n".join(lines) + "\n"
