"""Vertex addressing for the Sierpinski-type graph families.

Every graph in this package is built over canonical label strings.  The
label grammar, with P = {0, ..., p-1}:

  * word vertices        digit string for p <= 10 ("0212"), comma separated
                         for p > 10 ("0,11,3"); the empty word renders as
                         "ε" when it stands alone
  * apex vertex          "w"
  * extra-copy vertices  "p:word", e.g. "4:210" (the word may be empty)
  * corner vertices      "^k", e.g. "^0"
  * contracted vertices  "prefix:{i,j}" with i < j, e.g. "0:{1,2}"; the
                         prefix may be empty (":{1,2}")

parse_vertex(format_vertex(v, p), family, p, n) == v for every valid vertex,
and malformed labels raise ParseError naming the offending position.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "APEX",
    "APEX_LABEL",
    "Contracted",
    "EMPTY_WORD_LABEL",
    "Hat",
    "ParseError",
    "Prefixed",
    "Word",
    "format_vertex",
    "format_word",
    "parse_vertex",
    "parse_word",
    "prefix_triangle",
    "prefix_word",
    "relabel_p3",
    "word_separator",
]

Word = tuple  # tuple[int, ...]

EMPTY_WORD_LABEL = "ε"
APEX_LABEL = "w"

FAMILIES = ("s", "plus", "pp", "hat")


class ParseError(ValueError):
    """A label that does not match the vertex grammar."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def word_separator(p: int) -> str:
    return "" if p <= 10 else ","


def _check_p(p: int) -> None:
    if p < 1:
        raise ValueError(f"alphabet size must be positive, got {p}")


def format_word(word: Word, p: int) -> str:
    """Render a word as a bare string; the empty word renders as ""."""
    _check_p(p)
    for k in word:
        if not 0 <= k < p:
            raise ValueError(f"symbol {k} out of range for p={p}")
    return word_separator(p).join(str(k) for k in word)


def parse_word(text: str, p: int, *, offset: int = 0) -> Word:
    """Inverse of format_word.  Positions in errors are absolute in the
    enclosing label when offset is given."""
    _check_p(p)
    if text == "":
        return ()
    if p <= 10:
        out = []
        for i, ch in enumerate(text):
            if not ch.isdigit():
                raise ParseError(f"invalid character {ch!r} in word", offset + i)
            k = int(ch)
            if k >= p:
                raise ParseError(f"symbol {k} out of range for p={p}", offset + i)
            out.append(k)
        return tuple(out)
    out = []
    pos = 0
    for token in text.split(","):
        if not token or not token.isdigit():
            raise ParseError(f"invalid symbol {token!r} in word", offset + pos)
        k = int(token)
        if k >= p:
            raise ParseError(f"symbol {k} out of range for p={p}", offset + pos)
        out.append(k)
        pos += len(token) + 1
    return tuple(out)


@dataclass(frozen=True, order=True)
class Hat:
    """Corner vertex of a contracted-family graph (an uncontracted extreme)."""

    k: int


@dataclass(frozen=True, order=True)
class Contracted:
    """Vertex obtained by contracting one matching edge.

    prefix is the shared leading word of the two contracted endpoints and
    pair the two symbols that are swapped between them, stored sorted.
    """

    prefix: Word
    pair: tuple

    def __post_init__(self):
        i, j = self.pair
        if i >= j:
            raise ValueError(f"pair must be sorted and distinct, got {self.pair}")


@dataclass(frozen=True, order=True)
class Prefixed:
    """Extra-copy vertex of the two-sided extension: a word lifted into the
    attached copy, rendered as "p:word"."""

    word: Word


class _Apex:
    __slots__ = ()

    def __repr__(self):
        return "APEX"


APEX = _Apex()


def prefix_word(i: int, word: Word) -> Word:
    if i < 0:
        raise ValueError(f"symbol must be nonnegative, got {i}")
    return (i, *word)


def prefix_triangle(i: int, v):
    """Embed a contracted-family vertex one level down into subtriangle i.

    The corner of subtriangle i that is also a global corner keeps its name;
    the other corners land on the contracted vertices shared with the
    neighbouring subtriangles:

        i * Hat(i) = Hat(i)
        i * Hat(j) = Contracted((), {i, j})   for j != i
        i * Contracted(s, q) = Contracted(i.s, q)
    """
    if i < 0:
        raise ValueError(f"symbol must be nonnegative, got {i}")
    if isinstance(v, Hat):
        if v.k == i:
            return v
        return Contracted((), tuple(sorted((i, v.k))))
    if isinstance(v, Contracted):
        return Contracted((i, *v.prefix), v.pair)
    raise TypeError(f"expected a corner or contracted vertex, got {v!r}")


def relabel_p3(v) -> str:
    """Three-symbol shorthand: Contracted(s, {i,j}) -> word s.(3-i-j),
    Hat(k) -> "^k".  Only defined when every symbol is in {0, 1, 2}."""
    if isinstance(v, Hat):
        if not 0 <= v.k < 3:
            raise ValueError(f"symbol {v.k} out of range for the 3-symbol relabeling")
        return f"^{v.k}"
    if isinstance(v, Contracted):
        i, j = v.pair
        for k in (*v.prefix, i, j):
            if not 0 <= k < 3:
                raise ValueError(f"symbol {k} out of range for the 3-symbol relabeling")
        return format_word((*v.prefix, 3 - i - j), 3)
    raise TypeError(f"expected a corner or contracted vertex, got {v!r}")


def format_vertex(v, p: int) -> str:
    """Canonical label of a vertex of any family."""
    if isinstance(v, tuple):
        return format_word(v, p) if v else EMPTY_WORD_LABEL
    if v is APEX:
        return APEX_LABEL
    if isinstance(v, Prefixed):
        return f"{p}:{format_word(v.word, p)}"
    if isinstance(v, Hat):
        if not 0 <= v.k < p:
            raise ValueError(f"symbol {v.k} out of range for p={p}")
        return f"^{v.k}"
    if isinstance(v, Contracted):
        i, j = v.pair
        if j >= p:
            raise ValueError(f"symbol {j} out of range for p={p}")
        return f"{format_word(v.prefix, p)}:{{{i},{j}}}"
    raise TypeError(f"not a vertex: {v!r}")


def _parse_pair(text: str, p: int, offset: int) -> tuple:
    if not text.startswith("{"):
        raise ParseError("expected '{' to open a symbol pair", offset)
    if not text.endswith("}"):
        raise ParseError("expected '}' to close a symbol pair", offset + len(text) - 1)
    body = text[1:-1]
    comma = body.find(",")
    if comma < 0:
        raise ParseError("expected ',' inside a symbol pair", offset + 1)
    left, right = body[:comma], body[comma + 1 :]
    for part, at in ((left, offset + 1), (right, offset + 2 + comma)):
        if not part.isdigit():
            raise ParseError(f"invalid symbol {part!r} in pair", at)
    i, j = int(left), int(right)
    if j >= p:
        raise ParseError(f"symbol {j} out of range for p={p}", offset + 2 + comma)
    if i >= j:
        raise ParseError("pair must be sorted with distinct symbols", offset + 1)
    return (i, j)


def parse_vertex(label: str, family: str, p: int, n: int):
    """Parse a canonical label back into its vertex object.

    family is one of "s", "plus", "pp", "hat"; p the alphabet size and n the
    level, so that word lengths can be validated.
    """
    _check_p(p)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if label == "":
        raise ParseError("empty label", 0)

    def plain_word(text: str, length: int) -> Word:
        if text == EMPTY_WORD_LABEL and length == 0:
            return ()
        w = parse_word(text, p)
        if len(w) != length:
            raise ParseError(
                f"expected a word of length {length}, got {len(w)}", len(text)
            )
        return w

    if family == "s":
        return plain_word(label, n)

    if family == "plus":
        if label == APEX_LABEL:
            return APEX
        return plain_word(label, n)

    if family == "pp":
        if ":" in label:
            head, _, rest = label.partition(":")
            if head != str(p):
                raise ParseError(f"extra-copy prefix must be {p!r}", 0)
            word = (
                ()
                if rest == ""
                else parse_word(rest, p, offset=len(head) + 1)
            )
            if len(word) != n - 1:
                raise ParseError(
                    f"expected a word of length {n - 1} after the copy prefix",
                    len(label),
                )
            return Prefixed(word)
        return plain_word(label, n)

    # family == "hat"
    if label.startswith("^"):
        body = label[1:]
        if not body.isdigit():
            raise ParseError("expected a symbol after '^'", 1)
        k = int(body)
        if k >= p:
            raise ParseError(f"symbol {k} out of range for p={p}", 1)
        return Hat(k)
    colon = label.find(":")
    if colon < 0:
        raise ParseError("expected '^k' or 'prefix:{i,j}'", 0)
    prefix = parse_word(label[:colon], p)
    if len(prefix) > max(n - 1, 0):
        raise ParseError(
            f"prefix of length {len(prefix)} too long for level {n}", 0
        )
    if n == 0:
        raise ParseError("level 0 has corner vertices only", colon)
    pair = _parse_pair(label[colon + 1 :], p, colon + 1)
    return Contracted(prefix, pair)
