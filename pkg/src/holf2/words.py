"""Reduced words in the rank-2 free group.

Letters are nonzero integers: ``+1``/``-1`` for the first generator and its
inverse, ``+2``/``-2`` for the second.  The same representation serves words
over ``{a, b}`` and words over the inner generators ``{ta, tb}``; only the
display alphabet differs.
"""

from __future__ import annotations

from typing import Iterable, Iterator

GEN_A = 1
GEN_B = 2

AB_NAMES = ("a", "b")
T_NAMES = ("ta", "tb")


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs in a single left-to-right stack pass."""
    out: list[int] = []
    for letter in letters:
        if letter == 0 or abs(letter) > 2:
            raise ValueError(f"invalid letter {letter!r}")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


class Word:
    """An immutable, always-reduced free-group word.

    The constructor reduces its input, so every ``Word`` in the system
    satisfies the reducedness invariant by construction.
    """

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[int] = ()):
        self.letters = free_reduce(letters)
        self._hash = None

    @classmethod
    def _reduced(cls, letters: tuple[int, ...]) -> "Word":
        # Fast path for internal callers that guarantee reducedness.
        w = object.__new__(cls)
        w.letters = letters
        w._hash = None
        return w

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __repr__(self) -> str:
        return f"Word({self.spell()})" if self.letters else "Word(1)"

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        a, b = list(self.letters), other.letters
        for letter in b:
            if a and a[-1] == -letter:
                a.pop()
            else:
                a.append(letter)
        return Word._reduced(tuple(a))

    def inverse(self) -> "Word":
        return Word._reduced(tuple(-l for l in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    def conjugate_by(self, h: "Word") -> "Word":
        """h^-1 * self * h."""
        return h.inverse() * self * h

    def cyclic_reduce(self) -> tuple["Word", "Word"]:
        """Split ``self = conj^-1 * core * conj`` with ``core`` cyclically
        reduced; returns ``(core, conj)``."""
        ls = self.letters
        i, j = 0, len(ls) - 1
        stripped: list[int] = []
        while i < j and ls[i] == -ls[j]:
            stripped.append(ls[j])
            i += 1
            j -= 1
        core = Word._reduced(ls[i:j + 1])
        conj = Word._reduced(tuple(reversed(stripped)))
        return core, conj

    def exponent_sums(self) -> tuple[int, int]:
        """Image in Z^2: (sum of signs of first-generator letters, same for
        the second)."""
        e1 = e2 = 0
        for letter in self.letters:
            if abs(letter) == GEN_A:
                e1 += 1 if letter > 0 else -1
            else:
                e2 += 1 if letter > 0 else -1
        return e1, e2

    def spell(self, names: tuple[str, str] = AB_NAMES) -> str:
        """Render with apostrophe inverses, e.g. ``a b' a``; identity is
        ``1``."""
        if not self.letters:
            return "1"
        parts = []
        for letter in self.letters:
            name = names[abs(letter) - 1]
            parts.append(name if letter > 0 else name + "'")
        return " ".join(parts)


def substitute(w: Word, image_a: Word, image_b: Word) -> Word:
    """Apply the homomorphism sending the generators to ``image_a`` and
    ``image_b`` to the word ``w``, reducing on the fly."""
    table = {
        GEN_A: image_a.letters,
        -GEN_A: image_a.inverse().letters,
        GEN_B: image_b.letters,
        -GEN_B: image_b.inverse().letters,
    }
    out: list[int] = []
    for letter in w.letters:
        for m in table[letter]:
            if out and out[-1] == -m:
                out.pop()
            else:
                out.append(m)
    return Word._reduced(tuple(out))


def free_conjugator(u: Word, v: Word) -> Word | None:
    """A witness ``h`` with ``h^-1 u h = v``, or ``None`` if ``u`` and ``v``
    are not conjugate.

    Uses cyclic reduction of both words followed by rotation matching; the
    witness is re-verified by multiplication before being returned.
    """
    core_u, conj_u = u.cyclic_reduce()
    core_v, conj_v = v.cyclic_reduce()
    if len(core_u) != len(core_v):
        return None
    n = len(core_u)
    if n == 0:
        return Word() if u == v else None
    cu, cv = core_u.letters, core_v.letters
    for k in range(n):
        if cu[k:] + cu[:k] == cv:
            h = conj_u.inverse() * Word._reduced(cu[:k]) * conj_v
            if u.conjugate_by(h) == v:
                return h
    return None


def all_reduced_words(max_len: int, min_len: int = 0) -> Iterator[tuple[int, ...]]:
    """Every reduced letter tuple with ``min_len <= length <= max_len``, in
    deterministic order (by length, then lexicographically over the letter
    order ``1, -1, 2, -2``)."""
    alphabet = (GEN_A, -GEN_A, GEN_B, -GEN_B)
    level: list[tuple[int, ...]] = [()]
    if min_len == 0:
        yield ()
    for length in range(1, max_len + 1):
        nxt: list[tuple[int, ...]] = []
        for prefix in level:
            for letter in alphabet:
                if prefix and prefix[-1] == -letter:
                    continue
                word = prefix + (letter,)
                nxt.append(word)
                if length >= min_len:
                    yield word
        level = nxt


def reduced_word_count(length: int) -> int:
    """Number of reduced words of exactly the given length over two
    generators: 4 * 3^(length-1) for length >= 1."""
    if length == 0:
        return 1
    return 4 * 3 ** (length - 1)
