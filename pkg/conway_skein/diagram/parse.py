"""Parsing of PD codes and braid words
Created on: 19 Oct 2026

PD grammar: whitespace-separated tokens ``X(a,b,c,d)`` with an optional sign
suffix ``+`` or ``-``, and ``O`` for a crossing-free component. Without a
suffix the sign is inferred from the under-strands; components that only
pass over are oriented toward increasing labels.

Braid grammar: ``braid <k>: 1 -2 1`` or ``<k>: 1 -2 1``, where ``i`` is the
generator sigma_i and ``-i`` its inverse.
"""

from __future__ import annotations

__all__ = [
    "BraidWord",
    "close_braid",
    "parse_braid",
    "parse_diagram_spec",
    "parse_pd",
    "read_diagram_file",
]

import logging
import pathlib
import re
import typing

import conway_skein.diagram.base as csdb
import conway_skein.errors as cse
import conway_skein.typing as cst

logger = logging.getLogger(__name__)

_PD_TOKEN = re.compile(
    r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)([+-])?|O(?![\w(])"
)
_BRAID_RE = re.compile(r"^\s*(?:braid\s+)?(\d+)\s*:(.*)$", re.IGNORECASE | re.DOTALL)


def parse_pd(text: str) -> csdb.Diagram:
    raw: list[tuple[tuple[int, int, int, int], int | None]] = []
    free_loops = 0
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _PD_TOKEN.match(text, pos)
        if match is None:
            msg = f"Unexpected input at position {pos}: '{text[pos:pos + 20]}'. "
            msg += "Expected 'X(a,b,c,d)' or 'O'."
            raise cse.DiagramSyntaxError(msg)
        if match.group(0) == "O":
            free_loops += 1
        else:
            labels = tuple(int(g) for g in match.groups()[:4])
            if 0 in labels:
                raise cse.DiagramSyntaxError("Edge labels must be positive integers.")
            suffix = match.group(5)
            sign = None if suffix is None else (1 if suffix == "+" else -1)
            raw.append((labels, sign))  # type: ignore[arg-type]
        pos = match.end()

    counts: dict[int, int] = {}
    for labels, _ in raw:
        for lab in labels:
            counts[lab] = counts.get(lab, 0) + 1
    for lab, count in sorted(counts.items()):
        if count != 2:
            msg = f"Edge {lab} appears {count} times; "
            msg += "every edge must appear exactly twice."
            raise cse.BadValenceError(msg)

    signs = _infer_signs([labels for labels, _ in raw], [s for _, s in raw])
    crossings = tuple(
        csdb.Crossing(*labels, sign) for (labels, _), sign in zip(raw, signs)
    )
    diagram = csdb.Diagram(crossings, free_loops)
    diagram.validate()
    logger.debug(f"parsed PD with {len(crossings)} crossings, {free_loops} loops")
    return diagram


def _infer_signs(
    labels: list[tuple[int, int, int, int]], given: list[int | None]
) -> list[int]:
    signs = list(given)
    ends: dict[int, list[tuple[int, int]]] = {}
    for i, labs in enumerate(labels):
        for s, lab in enumerate(labs):
            ends.setdefault(lab, []).append((i, s))

    def incoming(i: int, s: int) -> bool | None:
        if s == 0:
            return True
        if s == 2:
            return False
        sign = signs[i]
        if sign is None:
            return None
        return (s == 3) == (sign > 0)

    unknown = [i for i, s in enumerate(signs) if s is None]
    while unknown:
        progress = False
        for i in unknown:
            for s in (1, 3):
                first, second = ends[labels[i][s]]
                other = second if first == (i, s) else first
                other_in = incoming(*other)
                if other_in is not None:
                    signs[i] = 1 if (s == 3) == (not other_in) else -1
                    progress = True
                    break
        if not progress:
            i = unknown[0]
            _, b, _, d = labels[i]
            d_in = b - d == 1 or d - b > 1
            signs[i] = 1 if d_in else -1
            logger.debug(f"crossing {i} oriented by label order")
        unknown = [i for i, s in enumerate(signs) if s is None]
    return [int(s) for s in signs]  # type: ignore[arg-type]


class BraidWord(typing.NamedTuple):
    strands: int
    letters: tuple[int, ...]

    def validate(self) -> None:
        if self.strands < 1:
            raise cse.DiagramSyntaxError("A braid needs at least one strand.")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                msg = f"Letter {letter} is out of range for "
                msg += f"{self.strands} strands."
                raise cse.DiagramSyntaxError(msg)

    def permutation(self) -> list[int]:
        """position each strand starting at i ends up at"""
        perm = list(range(self.strands))
        for letter in self.letters:
            i = abs(letter)
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return perm

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for i in range(self.strands):
            if seen[i]:
                continue
            count += 1
            while not seen[i]:
                seen[i] = True
                i = perm[i]
        return count

    def __str__(self) -> str:
        return f"braid {self.strands}: " + " ".join(str(x) for x in self.letters)


def parse_braid(text: str) -> BraidWord:
    match = _BRAID_RE.match(text)
    if match is None:
        msg = f"'{text}' is not a braid; expected 'braid <k>: letters'."
        raise cse.DiagramSyntaxError(msg)
    strands = int(match.group(1))
    body = match.group(2).replace(",", " ").split()
    try:
        letters = tuple(int(tok) for tok in body)
    except ValueError as e:
        raise cse.DiagramSyntaxError(f"Invalid braid letter in '{text}'.") from e
    word = BraidWord(strands, letters)
    word.validate()
    return word


def close_braid(word: BraidWord) -> csdb.Diagram:
    """closure of a braid; strands run upward, sigma_i crosses positions i, i+1"""
    word.validate()
    current = list(range(1, word.strands + 1))
    fresh = word.strands + 1
    crossings = []
    for letter in word.letters:
        i = abs(letter) - 1
        left_in, right_in = current[i], current[i + 1]
        new_left, new_right = fresh, fresh + 1
        fresh += 2
        if letter > 0:
            crossings.append(csdb.Crossing(right_in, new_right, new_left, left_in, 1))
        else:
            crossings.append(csdb.Crossing(left_in, right_in, new_right, new_left, -1))
        current[i], current[i + 1] = new_left, new_right
    closing = {label: j + 1 for j, label in enumerate(current)}
    relabeled = tuple(x.relabeled(lambda e: closing.get(e, e)) for x in crossings)
    used = {lab for x in relabeled for lab in x.labels}
    loops = sum(1 for j in range(1, word.strands + 1) if j not in used)
    diagram = csdb.Diagram(relabeled, loops)
    logger.debug(f"closed {word} into {len(relabeled)} crossings")
    return diagram


def parse_diagram_spec(text: str) -> csdb.Diagram:
    """a braid (``braid k: ...`` or ``k: ...``) or a PD code"""
    if _BRAID_RE.match(text):
        return close_braid(parse_braid(text))
    return parse_pd(text)


def read_diagram_file(path: cst.PathLike) -> csdb.Diagram:
    lines = pathlib.Path(path).read_text().splitlines()
    body = " ".join(ln.split("#", 1)[0].strip() for ln in lines).strip()
    return parse_diagram_spec(body)
