"""Ternary words over {0, 1, 2} and square (xx) factor detection.

A square is a factor of the form xx with x non-empty; a word with no
square factor is square-free.  Two deliberately independent detectors are
kept side by side:

* ``find_square`` scans every (start, period) pair and is the reference
  oracle.  Its cost may be cubic; it is meant to be obviously correct.
* ``ends_with_square`` looks only at squares that finish at the last
  letter.  A word is square-free iff no prefix of it ends with a square,
  which is the fact the enumerator and the pair search build on.

Counting and enumeration of square-free words grow prefixes depth first
and never touch the 3^n full space.
"""

from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "ALPHABET",
    "ParseError",
    "SquareWitness",
    "Word",
    "parse_word",
    "find_square",
    "is_square_free",
    "ends_with_square",
    "shift",
    "reverse",
    "count_square_free",
    "enumerate_square_free",
]

ALPHABET = (0, 1, 2)


class ParseError(ValueError):
    """Text could not be read as a ternary word."""


class SquareWitness(NamedTuple):
    """Location of a square: w[start : start+period] == w[start+period : start+2*period]."""

    start: int
    period: int


class Word:
    """Immutable word over the alphabet {0, 1, 2}.

    Equality, ordering and hashing are letter by letter.  Slicing returns a
    Word, ``+`` concatenates, and ``str`` gives the plain digit string.
    """

    __slots__ = ("_letters",)

    def __init__(self, letters: Iterable[int] = ()):
        tup = tuple(letters)
        for pos, a in enumerate(tup):
            if not isinstance(a, int) or a not in (0, 1, 2):
                raise ValueError(f"letter {a!r} at position {pos} is not 0, 1 or 2")
        self._letters = tup

    @classmethod
    def _wrap(cls, tup: tuple) -> "Word":
        # Internal constructor for letters that are already validated.
        w = object.__new__(cls)
        w._letters = tup
        return w

    @property
    def letters(self) -> tuple:
        return self._letters

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __getitem__(self, ix):
        if isinstance(ix, slice):
            return Word._wrap(self._letters[ix])
        return self._letters[ix]

    def __eq__(self, other):
        if isinstance(other, Word):
            return self._letters == other._letters
        return NotImplemented

    def __hash__(self):
        return hash(self._letters)

    def __lt__(self, other):
        if isinstance(other, Word):
            return self._letters < other._letters
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, Word):
            return Word._wrap(self._letters + other._letters)
        return NotImplemented

    def __str__(self) -> str:
        return "".join(map(str, self._letters))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def parse_word(text: str) -> Word:
    """Read a word from text; whitespace is ignored, anything else rejected."""
    letters = []
    for pos, ch in enumerate(text):
        if ch in "012":
            letters.append(ord(ch) - 48)
        elif ch.isspace():
            continue
        else:
            raise ParseError(f"invalid character {ch!r} at position {pos}")
    return Word._wrap(tuple(letters))


def find_square(w: Word) -> "SquareWitness | None":
    """Reference square scan.

    Returns the witness with the smallest start, then the smallest period,
    or None when the word is square-free.
    """
    ls = w.letters
    n = len(ls)
    for start in range(n):
        for period in range(1, (n - start) // 2 + 1):
            if ls[start : start + period] == ls[start + period : start + 2 * period]:
                return SquareWitness(start, period)
    return None


def is_square_free(w: Word) -> bool:
    return find_square(w) is None


def ends_with_square(w: Word) -> bool:
    """True when some square ends exactly at the last letter."""
    ls = w.letters
    n = len(ls)
    for p in range(1, n // 2 + 1):
        if ls[n - 2 * p : n - p] == ls[n - p :]:
            return True
    return False


def shift(w: Word, c: int) -> Word:
    """Add c to every letter mod 3."""
    if c not in (0, 1, 2):
        raise ValueError(f"shift amount must be 0, 1 or 2, got {c!r}")
    if c == 0:
        return w
    return Word._wrap(tuple((a + c) % 3 for a in w.letters))


def reverse(w: Word) -> Word:
    return Word._wrap(w.letters[::-1])


def _extends_square_free(buf: list, length: int, x: int) -> bool:
    """True when appending x to the square-free prefix buf[:length] keeps it square-free.

    Only squares ending at the new last position can appear, so only the
    periods p with buf[length-p] == x need a full half-against-half compare.
    """
    for p in range(1, (length + 1) // 2 + 1):
        if buf[length - p] != x:
            continue
        for t in range(1, p):
            if buf[length - t] != buf[length - p - t]:
                break
        else:
            return False
    return True


def count_square_free(n: int) -> int:
    """Number of square-free words of length n (1 for the empty word).

    Depth-first extension over square-free prefixes.  Words are counted in
    classes under the six permutations of the alphabet: every square-free
    word of length >= 2 starts with two distinct letters, the permutation
    group moves the class with first letters 0,1 onto each of the six
    ordered pairs, and permutations preserve square-freeness.  So only the
    0,1 class is walked and the count is multiplied by 6.
    """
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    if n == 0:
        return 1
    if n == 1:
        return 3
    buf = [0] * n
    buf[0], buf[1] = 0, 1
    total = 0

    def grow(depth: int):
        nonlocal total
        if depth == n:
            total += 1
            return
        prev = buf[depth - 1]
        for x in (0, 1, 2):
            if x == prev:
                continue
            if _extends_square_free(buf, depth, x):
                buf[depth] = x
                grow(depth + 1)

    grow(2)
    return 6 * total


def enumerate_square_free(n: int) -> Iterator[Word]:
    """Yield every square-free word of length n in lexicographic order (0 < 1 < 2)."""
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    if n == 0:
        yield Word._wrap(())
        return
    buf = [0] * n

    def grow(depth: int):
        if depth == n:
            yield Word._wrap(tuple(buf))
            return
        for x in (0, 1, 2):
            if _extends_square_free(buf, depth, x):
                buf[depth] = x
                yield from grow(depth + 1)

    yield from grow(0)
