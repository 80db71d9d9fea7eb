"""Words and rewriting in the semigroup F+_theta.

Generators are e_1..e_m (blue) and f_1..f_n (red) with the relations
e_i f_j = f_{j'} e_{i'} where theta(i, j) = (i', j').  Every word
refactors uniquely into any color pattern matching its degree; this
module implements that rewriting and the induced permutation theta'
on pairs of single-color words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

BLUE = "e"
RED = "f"

DEFAULT_TABULATION_CAP = 10**6


class ThetaError(ValueError):
    """Raised when a relation table is not a bijection of {1..m}x{1..n}."""


class WordError(ValueError):
    """Raised on malformed words or pattern/degree mismatches."""


@dataclass(frozen=True, order=True)
class Letter:
    """A single generator: color 'e' (blue) or 'f' (red) plus 1-based index."""

    color: str
    index: int

    def __post_init__(self) -> None:
        if self.color not in (BLUE, RED):
            raise WordError(f"bad color {self.color!r}")
        if self.index < 1:
            raise WordError(f"index must be >= 1, got {self.index}")

    def __str__(self) -> str:
        return f"{self.color}{self.index}"


class Theta:
    """The permutation theta of {1..m} x {1..n} defining the relations."""

    def __init__(self, m: int, n: int, forward: dict[tuple[int, int], tuple[int, int]]):
        self.m = m
        self.n = n
        self.forward = dict(forward)
        self.inverse = {v: k for k, v in self.forward.items()}
        _check_bijection(self.forward, m, n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Theta):
            return NotImplemented
        return (self.m, self.n, self.forward) == (other.m, other.n, other.forward)

    def __hash__(self) -> int:
        return hash((self.m, self.n, tuple(sorted(self.forward.items()))))

    def __repr__(self) -> str:
        return f"Theta(m={self.m}, n={self.n}, {self.forward})"

    def check_letter(self, letter: Letter) -> None:
        bound = self.m if letter.color == BLUE else self.n
        if letter.index > bound:
            raise WordError(f"{letter} out of range for m={self.m}, n={self.n}")


def _check_bijection(forward: dict, m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise ThetaError(f"m and n must be positive, got {m}, {n}")
    domain = {(i, j) for i in range(1, m + 1) for j in range(1, n + 1)}
    for src, dst in forward.items():
        if src not in domain:
            raise ThetaError(f"source pair {src} out of range")
        if dst not in domain:
            raise ThetaError(f"target pair {dst} out of range")
    if len(forward) != len(domain):
        missing = sorted(domain - set(forward))
        raise ThetaError(f"missing pairs: {missing[:4]}")
    targets = list(forward.values())
    if len(set(targets)) != len(targets):
        seen: set[tuple[int, int]] = set()
        for t in targets:
            if t in seen:
                raise ThetaError(f"duplicate target pair {t}")
            seen.add(t)


def validate_theta(raw: Iterable[Sequence[int]] | dict, m: int, n: int) -> Theta:
    """Build a Theta from raw relation rows.

    Accepts a dict {(i,j): (i2,j2)}, rows [i, j, i2, j2], or rows
    [(i,j), (i2,j2)].  Raises ThetaError unless the table is a total
    bijection of the m*n index pairs.
    """
    forward: dict[tuple[int, int], tuple[int, int]] = {}
    items: Iterable
    if isinstance(raw, dict):
        items = [(tuple(k), tuple(v)) for k, v in raw.items()]
    else:
        items = list(raw)
    for row in items:
        row = list(row)
        if len(row) == 4:
            src, dst = (int(row[0]), int(row[1])), (int(row[2]), int(row[3]))
        elif len(row) == 2:
            src, dst = (int(row[0][0]), int(row[0][1])), (int(row[1][0]), int(row[1][1]))
        else:
            raise ThetaError(f"bad relation row {row!r}")
        if src in forward:
            raise ThetaError(f"duplicate source pair {src}")
        forward[src] = dst
    return Theta(m, n, forward)


class Word:
    """An element of F+_theta as an immutable letter sequence.

    The empty word is the identity.  Words compare by their letter
    sequence; semigroup equality is equality of e-first normal forms
    (see multiply / refactor).
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", tuple(letters))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Word is immutable")

    @classmethod
    def blue(cls, digits: str | Iterable[int]) -> "Word":
        return cls(Letter(BLUE, int(d)) for d in digits)

    @classmethod
    def red(cls, digits: str | Iterable[int]) -> "Word":
        return cls(Letter(RED, int(d)) for d in digits)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse dot-separated letters, e.g. 'e1.f2.e2'.  '' is identity."""
        text = text.strip()
        if not text:
            return cls()
        letters = []
        for tok in text.split("."):
            tok = tok.strip()
            if len(tok) < 2 or tok[0] not in (BLUE, RED) or not tok[1:].isdigit():
                raise WordError(f"bad letter token {tok!r}")
            letters.append(Letter(tok[0], int(tok[1:])))
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        return ".".join(str(x) for x in self.letters) if self.letters else "1"

    @property
    def degree(self) -> tuple[int, int]:
        k = sum(1 for x in self.letters if x.color == BLUE)
        return (k, len(self.letters) - k)

    @property
    def colors(self) -> tuple[str, ...]:
        return tuple(x.color for x in self.letters)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(x.index for x in self.letters)

    def digits(self) -> str:
        """Index string for a single-color word, e.g. '1121212'."""
        if len(set(self.colors)) > 1:
            raise WordError("digits() requires a single-color word")
        return "".join(str(x.index) for x in self.letters)

    def is_blue(self) -> bool:
        return all(x.color == BLUE for x in self.letters)

    def is_red(self) -> bool:
        return all(x.color == RED for x in self.letters)

    def take(self, t: int) -> "Word":
        """The first t letters: the paper's w(0, t] style initial segment."""
        return Word(self.letters[:t])

    def drop(self, s: int) -> "Word":
        """All letters after the first s: the shifted word w^(s)."""
        return Word(self.letters[s:])


def e_first_pattern(degree: tuple[int, int]) -> tuple[str, ...]:
    k, l = degree
    return (BLUE,) * k + (RED,) * l


def f_first_pattern(degree: tuple[int, int]) -> tuple[str, ...]:
    k, l = degree
    return (RED,) * l + (BLUE,) * k


def _swap(theta: Theta, a: Letter, b: Letter) -> tuple[Letter, Letter]:
    """Rewrite the adjacent pair a b (different colors) as b' a'."""
    if a.color == BLUE and b.color == RED:
        i2, j2 = theta.forward[(a.index, b.index)]
        return Letter(RED, j2), Letter(BLUE, i2)
    if a.color == RED and b.color == BLUE:
        i, j = theta.inverse[(b.index, a.index)]
        return Letter(BLUE, i), Letter(RED, j)
    raise WordError("cannot swap same-color letters")


def refactor(theta: Theta, w: Word, pattern: Sequence[str]) -> Word:
    """The unique word equal to w whose color sequence is pattern.

    Rewrites by adjacent transpositions: a blue letter moves left past a
    red one via theta inverse, a red letter left past a blue one via
    theta.  Raises WordError if pattern color counts do not match d(w).
    """
    pattern = tuple(pattern)
    k, l = w.degree
    if pattern.count(BLUE) != k or pattern.count(RED) != l or len(pattern) != k + l:
        raise WordError(f"pattern {pattern} does not match degree {(k, l)}")
    for x in w:
        theta.check_letter(x)
    cur = list(w.letters)
    for p, want in enumerate(pattern):
        if cur[p].color == want:
            continue
        q = next(r for r in range(p + 1, len(cur)) if cur[r].color == want)
        for r in range(q, p, -1):
            cur[r - 1], cur[r] = _swap(theta, cur[r - 1], cur[r])
    return Word(cur)


def normal_form(theta: Theta, w: Word) -> Word:
    """e-first normal form: all blue letters before all red letters."""
    return refactor(theta, w, e_first_pattern(w.degree))


def multiply(theta: Theta, w1: Word, w2: Word) -> Word:
    """Product w1 * w2 in e-first normal form."""
    return normal_form(theta, w1 + w2)


def theta_prime_apply(theta: Theta, u: Word, v: Word) -> tuple[Word, Word]:
    """The pair (u', v') with e_u f_v = f_{v'} e_{u'}.

    At degree (1,1) this is theta itself.
    """
    if not u.is_blue():
        raise WordError("u must be all blue")
    if not v.is_red():
        raise WordError("v must be all red")
    w = refactor(theta, u + v, f_first_pattern((len(u), len(v))))
    return Word(w.letters[len(v):]), Word(w.letters[: len(v)])


def commutes(theta: Theta, u: Word, v: Word) -> bool:
    """True iff e_u f_v = f_v e_u, i.e. (u, v) is a fixed point of theta'."""
    if len(u) == 0 or len(v) == 0:
        raise WordError("commutes requires nonempty words")
    return theta_prime_apply(theta, u, v) == (u, v)


def theta_prime_cycle(
    theta: Theta, u: Word, v: Word, cap: int = DEFAULT_TABULATION_CAP
) -> list[tuple[Word, Word]]:
    """The theta'-cycle through (u, v); its length is the paper's p.

    The cap is a defensive bound only; theta' is a permutation, so the
    orbit always closes.
    """
    cycle = [(u, v)]
    cur = theta_prime_apply(theta, u, v)
    while cur != (u, v):
        if len(cycle) >= cap:
            raise WordError(f"cycle cap {cap} exceeded")
        cycle.append(cur)
        cur = theta_prime_apply(theta, *cur)
    return cycle


class ThetaPrime:
    """The induced permutation on (blue word of length k, red word of length l).

    apply() is always available (lazy, via rewriting); tabulate() builds
    the full m^k * n^l table when it fits under the cap.
    """

    def __init__(self, theta: Theta, k: int, l: int):
        if k < 0 or l < 0:
            raise WordError("lengths must be non-negative")
        self.theta = theta
        self.k = k
        self.l = l

    @property
    def pair_count(self) -> int:
        return self.theta.m**self.k * self.theta.n**self.l

    def apply(self, u: Word, v: Word) -> tuple[Word, Word]:
        if len(u) != self.k or len(v) != self.l:
            raise WordError(f"expected lengths ({self.k}, {self.l})")
        return theta_prime_apply(self.theta, u, v)

    def domain(self) -> Iterator[tuple[Word, Word]]:
        from itertools import product

        for ui in product(range(1, self.theta.m + 1), repeat=self.k):
            for vj in product(range(1, self.theta.n + 1), repeat=self.l):
                yield Word.blue(ui), Word.red(vj)

    def tabulate(
        self, cap: int = DEFAULT_TABULATION_CAP
    ) -> dict[tuple[Word, Word], tuple[Word, Word]]:
        if self.pair_count > cap:
            raise WordError(
                f"tabulation of {self.pair_count} pairs exceeds cap {cap}"
            )
        return {(u, v): self.apply(u, v) for u, v in self.domain()}
