"""Words in the free group <S1, S2, T> and their SL(2,C) matrices.

The generators are the side pairings of a hexagonal fundamental domain of
the twice punctured torus.  The two-parameter representation family sends

    S1 -> [[1, 2], [0, 1]]      S2 -> [[1, 0], [2, 1]]
    T  -> [[1 + tau1*tau2, tau1], [tau2, 1]]

with tau1, tau2 in the upper half plane.  Everything here is immutable and
pure, so shared use across threads is safe.

Word grammar: ``word := ws? (letter ws?)*`` with ``letter`` one of
``a A b B t T`` (uppercase = inverse) and ``ws`` spaces or tabs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import DomainError, WordParseError


class Gen(Enum):
    S1 = "a"
    S2 = "b"
    T = "t"


_CHAR_TO_LETTER = {
    "a": (Gen.S1, False),
    "A": (Gen.S1, True),
    "b": (Gen.S2, False),
    "B": (Gen.S2, True),
    "t": (Gen.T, False),
    "T": (Gen.T, True),
}


@dataclass(frozen=True)
class Letter:
    gen: Gen
    inverted: bool = False

    @property
    def char(self) -> str:
        c = self.gen.value
        return c.upper() if self.inverted else c

    def inverse(self) -> "Letter":
        return Letter(self.gen, not self.inverted)


# Convenient singletons.
S1 = Letter(Gen.S1)
S1_INV = Letter(Gen.S1, True)
S2 = Letter(Gen.S2)
S2_INV = Letter(Gen.S2, True)
T = Letter(Gen.T)
T_INV = Letter(Gen.T, True)


def _free_reduce(letters) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for let in letters:
        if out and out[-1] == let.inverse():
            out.pop()
        else:
            out.append(let)
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    """A freely reduced word; ``cyclic`` marks cyclically reduced words.

    The flag is bookkeeping, not identity: words compare by letters.
    """

    letters: tuple[Letter, ...]
    cyclic: bool = field(default=False, compare=False)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(let.char for let in self.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple(let.inverse() for let in reversed(self.letters)))

    def rotated(self, k: int) -> "GroupWord":
        n = len(self.letters)
        if n == 0:
            return self
        k %= n
        return GroupWord(self.letters[k:] + self.letters[:k], self.cyclic)

    def rotations(self) -> list["GroupWord"]:
        return [self.rotated(k) for k in range(max(1, len(self.letters)))]

    def is_proper_power(self) -> bool:
        n = len(self.letters)
        for k in range(1, n):
            if n % k == 0 and self.letters == self.letters[k:] + self.letters[:k]:
                return True
        return False

    def concat(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(_free_reduce(self.letters + other.letters))


EMPTY_WORD = GroupWord(())


def word(text: str) -> GroupWord:
    """Shorthand used throughout tests and internal tables."""
    return parse_word(text)


def parse_word(text: str) -> GroupWord:
    """Parse word text over {a,A,b,B,t,T}; free reduction is applied."""
    letters = []
    for offset, ch in enumerate(text):
        if ch in (" ", "\t"):
            continue
        try:
            gen, inv = _CHAR_TO_LETTER[ch]
        except KeyError:
            raise WordParseError(f"invalid character {ch!r}", offset) from None
        letters.append(Letter(gen, inv))
    return GroupWord(_free_reduce(letters))


def cyclic_reduce(w: GroupWord) -> GroupWord:
    """Cyclically reduced representative of the conjugacy class of ``w``."""
    letters = list(_free_reduce(w.letters))
    while len(letters) >= 2 and letters[0] == letters[-1].inverse():
        letters = letters[1:-1]
    return GroupWord(tuple(letters), cyclic=True)


@dataclass(frozen=True)
class ParameterPoint:
    """A point (tau1, tau2) in the chart C+^2 of non-conjugate groups."""

    tau1: complex
    tau2: complex

    def __post_init__(self):
        if not (self.tau1.imag > 0 and self.tau2.imag > 0):
            raise DomainError(
                f"parameter point needs Im tau_i > 0, got {self.tau1}, {self.tau2}"
            )


@dataclass(frozen=True)
class Mat2C:
    """2x2 complex matrix, row major."""

    a: complex
    b: complex
    c: complex
    d: complex

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def trace(self) -> complex:
        return self.a + self.d

    def __matmul__(self, o: "Mat2C") -> "Mat2C":
        return Mat2C(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def inverse_sl2(self) -> "Mat2C":
        # Closed form valid for det = 1; keeps the determinant exact.
        return Mat2C(self.d, -self.b, -self.c, self.a)

    def apply(self, z: complex | None) -> complex | None:
        """Moebius action; ``None`` stands for the point at infinity."""
        if z is None:
            if self.c == 0:
                return None
            return self.a / self.c
        den = self.c * z + self.d
        if den == 0:
            return None
        return (self.a * z + self.b) / den


IDENTITY = Mat2C(1, 0, 0, 1)


def generator_matrix(letter: Letter, tau1: complex, tau2: complex) -> Mat2C:
    if letter.gen is Gen.S1:
        m = Mat2C(1, 2, 0, 1)
    elif letter.gen is Gen.S2:
        m = Mat2C(1, 0, 2, 1)
    else:
        m = Mat2C(1 + tau1 * tau2, tau1, tau2, 1)
    return m.inverse_sl2() if letter.inverted else m


def matrix_at(w: GroupWord, tau1: complex, tau2: complex) -> Mat2C:
    """Raw evaluation at complex parameters (no chart check)."""
    m = IDENTITY
    for let in w.letters:
        m = m @ generator_matrix(let, tau1, tau2)
    return m


def evaluate(w: GroupWord, p: ParameterPoint) -> Mat2C:
    """Image of ``w`` under the representation at ``p``."""
    return matrix_at(w, p.tau1, p.tau2)


def trace_at(w: GroupWord, tau1: complex, tau2: complex) -> complex:
    return matrix_at(w, tau1, tau2).trace()


def trace(w: GroupWord, p: ParameterPoint) -> complex:
    return evaluate(w, p).trace()


def twist_word(w: GroupWord, axis: int, n: int = 1) -> GroupWord:
    """Image of ``w`` under the n-th power of the Dehn twist about sigma_axis.

    The twist about sigma_1 fixes S1, S2 and sends T -> S1 T; the twist
    about sigma_2 sends T -> T S2.  With these choices the matrix identity
    rho(twist(w))(tau) = rho(w)(tau + 2n on the given axis) holds entrywise.
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    out: list[Letter] = []
    pre = [S1] * n if n >= 0 else [S1_INV] * (-n)
    post = [S2] * n if n >= 0 else [S2_INV] * (-n)
    for let in w.letters:
        if let.gen is Gen.T and not let.inverted:
            out.extend(pre if axis == 1 else [])
            out.append(let)
            out.extend(post if axis == 2 else [])
        elif let.gen is Gen.T and let.inverted:
            out.extend([] if axis == 1 else [le.inverse() for le in reversed(post)])
            out.append(let)
            out.extend([le.inverse() for le in reversed(pre)] if axis == 1 else [])
        else:
            out.append(let)
    return GroupWord(_free_reduce(out))


def format_complex(z: complex, digits: int = 12) -> str:
    """Shell friendly formatting: drop a vanishing imaginary part."""

    def fmt(x: float) -> str:
        s = f"{x:.{digits}g}"
        return "0" if s == "-0" else s

    if abs(z.imag) < 1e-12 * max(1.0, abs(z.real)):
        return fmt(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{fmt(z.real)}{sign}{fmt(abs(z.imag))}i"


def parse_complex(text: str) -> complex:
    """Parse the CLI form ``RE,IM``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected RE,IM, got {text!r}")
    return complex(float(parts[0]), float(parts[1]))
