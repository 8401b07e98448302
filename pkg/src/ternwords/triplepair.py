"""Brinkhuis triple-pairs: construction, the defining checks, certificates.

A k-Brinkhuis triple-pair is six ternary words of a common length k,
arranged as [[U0, V0], [U1, V1], [U2, V2]], such that

* all 24 concatenations [U|V]_i [U|V]_j over ordered index pairs i != j
  are square-free, and
* for every r with ceil(k/2) <= r <= k-1, the 12 prefixes and suffixes of
  length r of the six words are pairwise distinct.

Substituting U_x or V_x for each letter x of a square-free word then always
yields a square-free word, which is what makes these pairs useful for
counting bounds (see the morphism module).

``verify`` evaluates both conditions exhaustively, using the reference
square scan from the words module, and returns a Certificate that records
every individual check.  ``certificate_text`` renders it in a fixed
line-oriented format suitable for golden-file comparison.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .words import (
    ParseError,
    SquareWitness,
    Word,
    find_square,
    parse_word,
    reverse,
    shift,
)

__all__ = [
    "TriplePair",
    "ConcatCheck",
    "HeadTailCheck",
    "Certificate",
    "make_triple_pair",
    "concatenation_words",
    "check_concatenations",
    "head_tail_range",
    "heads_and_tails",
    "check_head_tail_condition",
    "verify",
    "certificate_text",
    "builtin_pair",
    "parse_pair_text",
    "read_pair_file",
    "pair_text",
]

WORD_LABELS = ("U0", "V0", "U1", "V1", "U2", "V2")

# Emission order for the 24 concatenation checks: ordered index pairs, then
# the U/V choice at each of the two slots.
CONCAT_INDEX_PAIRS = ((0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1))
CONCAT_CHOICES = ("UU", "UV", "VU", "VV")

# Head/tail sources in report order: heads of U0,U1,U2,V0,V1,V2, then tails.
_HT_SOURCES = ("U0", "U1", "U2", "V0", "V1", "V2")
HEADTAIL_LABELS = tuple(f"head{s}" for s in _HT_SOURCES) + tuple(
    f"tail{s}" for s in _HT_SOURCES
)


@dataclass(frozen=True)
class TriplePair:
    """Six equal-length words, grouped as u = (U0, U1, U2) and v = (V0, V1, V2)."""

    u: tuple
    v: tuple

    def __post_init__(self):
        if len(self.u) != 3 or len(self.v) != 3:
            raise ValueError("a triple-pair needs exactly three U words and three V words")
        k = len(self.u[0])
        for label, w in zip(WORD_LABELS, self.words_in_file_order()):
            if not isinstance(w, Word):
                raise ValueError(f"{label} is not a Word")
            if len(w) != k:
                raise ValueError(f"length mismatch: {label} has length {len(w)}, expected {k}")
        if k < 2:
            raise ValueError(f"degenerate length k={k}: a triple-pair needs k >= 2")

    @property
    def k(self) -> int:
        return len(self.u[0])

    def words_in_file_order(self) -> tuple:
        """The six words in the order U0, V0, U1, V1, U2, V2."""
        return (self.u[0], self.v[0], self.u[1], self.v[1], self.u[2], self.v[2])


def make_triple_pair(words: Sequence[Word]) -> TriplePair:
    """Build a TriplePair from six words given in the order U0, V0, U1, V1, U2, V2."""
    if len(words) != 6:
        raise ValueError(f"expected 6 words, got {len(words)}")
    u0, v0, u1, v1, u2, v2 = words
    return TriplePair(u=(u0, u1, u2), v=(v0, v1, v2))


@dataclass(frozen=True)
class ConcatCheck:
    """Outcome of one concatenation check; label is '<i><c1><j><c2>', e.g. '0U1V'."""

    label: str
    witness: "SquareWitness | None"

    @property
    def ok(self) -> bool:
        return self.witness is None


@dataclass(frozen=True)
class HeadTailCheck:
    """Distinctness of the 12 heads and tails at one length r.

    On failure, collision holds the lexicographically first colliding pair
    of source labels, e.g. ('headU0', 'tailV2').
    """

    r: int
    collision: "tuple | None"

    @property
    def ok(self) -> bool:
        return self.collision is None


def concatenation_words(tp: TriplePair) -> list:
    """The 24 labelled length-2k concatenations, in the fixed emission order."""
    out = []
    for i, j in CONCAT_INDEX_PAIRS:
        for choice in CONCAT_CHOICES:
            first = tp.u[i] if choice[0] == "U" else tp.v[i]
            second = tp.u[j] if choice[1] == "U" else tp.v[j]
            out.append((f"{i}{choice[0]}{j}{choice[1]}", first + second))
    return out


def check_concatenations(tp: TriplePair) -> list:
    """Run the reference square scan over all 24 concatenations."""
    return [ConcatCheck(label, find_square(w)) for label, w in concatenation_words(tp)]


def head_tail_range(k: int) -> range:
    """The lengths r the distinctness condition quantifies over: ceil(k/2) .. k-1."""
    return range((k + 1) // 2, k)


def heads_and_tails(tp: TriplePair, r: int) -> list:
    """The 12 words of length r: prefixes of U0,U1,U2,V0,V1,V2, then suffixes."""
    rng = head_tail_range(tp.k)
    if r not in rng:
        raise ValueError(f"r={r} outside [{rng.start}, {rng.stop - 1}] for k={tp.k}")
    sources = (tp.u[0], tp.u[1], tp.u[2], tp.v[0], tp.v[1], tp.v[2])
    return [w[:r] for w in sources] + [w[len(w) - r :] for w in sources]


def check_head_tail_condition(tp: TriplePair) -> list:
    """Pairwise distinctness of the 12 heads and tails, for every r in range."""
    out = []
    for r in head_tail_range(tp.k):
        items = heads_and_tails(tp, r)
        collision = None
        for a in range(12):
            for b in range(a + 1, 12):
                if items[a] == items[b]:
                    collision = (HEADTAIL_LABELS[a], HEADTAIL_LABELS[b])
                    break
            if collision is not None:
                break
        out.append(HeadTailCheck(r=r, collision=collision))
    return out


@dataclass(frozen=True)
class Certificate:
    """Full record of a verification run.

    The verdict is the conjunction of every individual check; the
    shift_symmetric and palindromic_base flags are informational only.
    """

    k: int
    concat_results: tuple
    headtail_results: tuple
    shift_symmetric: bool
    palindromic_base: bool

    @property
    def verdict(self) -> bool:
        return all(c.ok for c in self.concat_results) and all(
            h.ok for h in self.headtail_results
        )


def verify(tp: TriplePair) -> Certificate:
    """Evaluate both defining conditions exhaustively."""
    sym = all(
        shift(tp.u[0], c) == tp.u[c] and shift(tp.v[0], c) == tp.v[c] for c in (1, 2)
    )
    pal = reverse(tp.u[0]) == tp.u[0] and reverse(tp.v[0]) == tp.v[0]
    return Certificate(
        k=tp.k,
        concat_results=tuple(check_concatenations(tp)),
        headtail_results=tuple(check_head_tail_condition(tp)),
        shift_symmetric=sym,
        palindromic_base=pal,
    )


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


def certificate_text(cert: Certificate) -> str:
    """Render a certificate in the fixed line format (byte stable across runs)."""
    lines = [f"k={cert.k}"]
    for c in cert.concat_results:
        if c.ok:
            lines.append(f"CONCAT {c.label} PASS")
        else:
            lines.append(
                f"CONCAT {c.label} FAIL square@{c.witness.start} period={c.witness.period}"
            )
    for h in cert.headtail_results:
        if h.ok:
            lines.append(f"HEADTAIL r={h.r} PASS")
        else:
            lines.append(f"HEADTAIL r={h.r} FAIL {h.collision[0]}={h.collision[1]}")
    lines.append(f"SHIFTSYM {_bool_text(cert.shift_symmetric)}")
    lines.append(f"PALINDROME {_bool_text(cert.palindromic_base)}")
    lines.append(f"VERDICT {'PASS' if cert.verdict else 'FAIL'}")
    return "\n".join(lines) + "\n"


# The classic 18-Brinkhuis triple-pair, built in as a constant.  U1, U2, V1,
# V2 are the letterwise shifts of U0 and V0 by 1 and 2, and V0 is U0 read
# backwards.
_BUILTIN_DIGITS = (
    "210201202120102012",  # U0
    "210201021202102012",  # V0
    "021012010201210120",  # U1
    "021012102010210120",  # V1
    "102120121012021201",  # U2
    "102120210121021201",  # V2
)


def builtin_pair() -> TriplePair:
    return make_triple_pair([parse_word(t) for t in _BUILTIN_DIGITS])


def parse_pair_text(text: str) -> TriplePair:
    """Parse the six-line pair format.

    Lines starting with '#' are comments and blank lines are skipped; the
    remaining lines must be exactly six words, in the order U0, V0, U1, V1,
    U2, V2.  Whitespace inside a word line is allowed.
    """
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            rows.append(parse_word(line))
        except ParseError as exc:
            raise ParseError(f"line {line_no}: {exc}") from None
    if len(rows) != 6:
        raise ParseError(f"expected 6 words, found {len(rows)}")
    return make_triple_pair(rows)


def read_pair_file(path) -> TriplePair:
    return parse_pair_text(Path(path).read_text())


def pair_text(tp: TriplePair) -> str:
    """The six words in file order, one digit string per line."""
    return "\n".join(str(w) for w in tp.words_in_file_order()) + "\n"
