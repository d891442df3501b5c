"""Reading and writing families deterministically.

Two formats.  ``lines``: one set per line, 1-based elements ascending,
space-separated, with the bare token ``-`` standing for the empty set;
no header, so the ground size is either supplied by the caller or
inferred as the largest element present.  ``json``: a document
``{"format": ..., "n": ..., "sets": [[...], ...]}`` that round-trips the
ground size exactly.  Sets are always emitted in canonical family order
(ascending word value).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import Family, elements_of, validate_ground, word_of

FORMAT_TAG = "delta-family/1"
EMPTY_SET_TOKEN = "-"


@dataclass(frozen=True, slots=True)
class FamilyDocument:
    """The interchange form of a family: ground size plus element lists."""

    n: int
    sets: tuple[tuple[int, ...], ...]
    format_tag: str = field(default=FORMAT_TAG)

    @classmethod
    def from_family(cls, family: Family) -> "FamilyDocument":
        return cls(
            n=family.n,
            sets=tuple(elements_of(w) for w in family.members),
        )

    def to_family(self) -> Family:
        validate_ground(self.n)
        words = []
        for elems in self.sets:
            if any(b <= a for a, b in zip(elems, elems[1:])):
                raise ValueError(f"set {list(elems)} is not strictly increasing")
            words.append(word_of(elems, self.n))
        return Family(self.n, words)


def _infer_ground(sets: list[tuple[int, ...]], n: int | None) -> int:
    if n is not None:
        validate_ground(n)
        return n
    largest = max((elems[-1] for elems in sets if elems), default=1)
    return largest


def family_to_lines(family: Family) -> str:
    """Lines format; empty family serializes to the empty string."""
    out = []
    for w in family.members:
        elems = elements_of(w)
        out.append(" ".join(map(str, elems)) if elems else EMPTY_SET_TOKEN)
    return "\n".join(out) + ("\n" if out else "")


def family_from_lines(text: str, n: int | None = None) -> Family:
    """Parse lines format; ``n`` defaults to the largest element present."""
    sets: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == EMPTY_SET_TOKEN:
            sets.append(())
            continue
        try:
            elems = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse {line!r}") from None
        if any(b <= a for a, b in zip(elems, elems[1:])):
            raise ValueError(f"line {lineno}: elements must be strictly increasing")
        sets.append(elems)
    ground = _infer_ground(sets, n)
    return FamilyDocument(n=ground, sets=tuple(sets)).to_family()


def family_to_json(family: Family) -> str:
    doc = FamilyDocument.from_family(family)
    payload = {
        "format": doc.format_tag,
        "n": doc.n,
        "sets": [list(s) for s in doc.sets],
    }
    return json.dumps(payload, indent=2) + "\n"


def family_from_json(text: str) -> Family:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ValueError("family document must be a JSON object")
    tag = payload.get("format", FORMAT_TAG)
    if tag != FORMAT_TAG:
        raise ValueError(f"unsupported format tag {tag!r}")
    if "n" not in payload or "sets" not in payload:
        raise ValueError('family document needs "n" and "sets"')
    n = payload["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError('"n" must be an integer')
    sets_raw = payload["sets"]
    if not isinstance(sets_raw, list):
        raise ValueError('"sets" must be a list of lists')
    sets = []
    for entry in sets_raw:
        if not isinstance(entry, list) or not all(
            isinstance(e, int) and not isinstance(e, bool) for e in entry
        ):
            raise ValueError(f"set {entry!r} must be a list of integers")
        sets.append(tuple(entry))
    return FamilyDocument(n=n, sets=tuple(sets), format_tag=tag).to_family()


def parse_element_set(text: str, n: int) -> int:
    """Parse a CLI element list like ``3,4,5`` or ``3 4 5``; empty means ∅."""
    validate_ground(n)
    cleaned = text.replace(",", " ").strip()
    if not cleaned or cleaned == EMPTY_SET_TOKEN:
        return 0
    try:
        elems = [int(tok) for tok in cleaned.split()]
    except ValueError:
        raise ValueError(f"cannot parse element set {text!r}") from None
    return word_of(sorted(set(elems)), n)


def format_element_set(word: int) -> str:
    """Brace rendering used in reports, e.g. ``{3,4}``; ∅ is ``{}``."""
    return "{" + ",".join(map(str, elements_of(word))) + "}"
