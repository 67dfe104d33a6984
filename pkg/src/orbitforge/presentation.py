"""Finitely presented groups: words, relators and the presentation file format.

A word is a tuple of letters ``(generator_index, +1 | -1)``. In text,
generators are single lowercase letters, capitals denote inverses and a
trailing integer is a run-length exponent, so with generators ``x y z``
the string ``"xyXYZ"`` is the relator ``[x, y] z^-1``.

File format::

    gens 3 x y z
    rel xyXYZ
    rel xzXZ
    rel yzYZ
    central z
    nilpotent
"""
from __future__ import annotations

import re
import string
from dataclasses import dataclass
from pathlib import Path

Letter = tuple  # (generator index, +1 or -1)
Word = tuple


def free_reduce(word) -> Word:
    out: list = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def inverse_word(word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def commutator(u, v) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    return free_reduce(tuple(u) + tuple(v) + inverse_word(u) + inverse_word(v))


def default_names(m: int) -> tuple[str, ...]:
    if m <= 3:
        return tuple("xyz"[:m])
    if m > 26:
        raise ValueError("at most 26 generators are supported")
    return tuple(string.ascii_lowercase[:m])


@dataclass(frozen=True)
class Presentation:
    """Generators, relators, and the user's claims about the group.

    ``central`` words and the ``nilpotent`` flag are assertions; centrality
    is checked only inside a given representation.
    """

    names: tuple
    relators: tuple = ()
    central: tuple = ()
    nilpotent: bool = False

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        for name in self.names:
            if len(name) != 1 or not name.islower():
                raise ValueError(f"generator names are single lowercase letters, got {name!r}")
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))
        object.__setattr__(self, "central", tuple(free_reduce(w) for w in self.central))

    @property
    def m(self) -> int:
        return len(self.names)

    @classmethod
    def free(cls, m: int, names=None) -> "Presentation":
        return cls(tuple(names or default_names(m)))

    @classmethod
    def build(cls, names, relators=(), central=(), nilpotent=False) -> "Presentation":
        """Construct from text words."""
        names = tuple(names)
        parse = lambda w: parse_word(w, names)
        return cls(names, tuple(map(parse, relators)), tuple(map(parse, central)), nilpotent)

    def word(self, text: str) -> Word:
        return parse_word(text, self.names)

    def format(self, word) -> str:
        return format_word(word, self.names)

    def to_text(self) -> str:
        lines = [f"gens {self.m} " + " ".join(self.names)]
        lines += [f"rel {self.format(r)}" for r in self.relators]
        lines += [f"central {self.format(w)}" for w in self.central]
        if self.nilpotent:
            lines.append("nilpotent")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        names = None
        rels, central, nilpotent = [], [], False
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, *rest = line.split()
            if head == "gens":
                if not rest:
                    raise ValueError(f"line {lineno}: 'gens' needs a count")
                m = int(rest[0])
                names = tuple(rest[1:]) or default_names(m)
                if len(names) != m:
                    raise ValueError(f"line {lineno}: expected {m} generator names")
            elif names is None:
                raise ValueError(f"line {lineno}: 'gens' must come first")
            elif head == "rel":
                rels.append(parse_word("".join(rest), names))
            elif head == "central":
                central.append(parse_word("".join(rest), names))
            elif head == "nilpotent":
                nilpotent = True
            else:
                raise ValueError(f"line {lineno}: unknown directive {head!r}")
        if names is None:
            raise ValueError("presentation has no 'gens' line")
        return cls(names, tuple(rels), tuple(central), nilpotent)

    @classmethod
    def load(cls, path) -> "Presentation":
        return cls.from_text(Path(path).read_text())


def parse_word(text: str, names) -> Word:
    text = text.replace(" ", "")
    if text in ("", "1"):
        return ()
    index = {n: i for i, n in enumerate(names)}
    pattern = "([A-Za-z])(\\d*)"
    if not re.fullmatch(f"({pattern})*", text):
        raise ValueError(f"bad word {text!r}")
    word = []
    for ch, digits in re.findall(pattern, text):
        if ch.lower() not in index:
            raise ValueError(f"unknown generator {ch!r} in {text!r}")
        e = int(digits) if digits else 1
        sgn = -1 if ch.isupper() else 1
        word.extend([(index[ch.lower()], sgn)] * e)
    return free_reduce(word)


def format_word(word, names) -> str:
    if not word:
        return "1"
    parts = []
    run_letter, run = None, 0
    for letter in list(word) + [None]:
        if letter == run_letter:
            run += 1
            continue
        if run_letter is not None:
            g, e = run_letter
            ch = names[g] if e > 0 else names[g].upper()
            parts.append(ch if run == 1 else f"{ch}{run}")
        run_letter, run = letter, 1
    return "".join(parts)


# commonly used groups
def integers() -> Presentation:
    return Presentation.build("x", nilpotent=True)


def free_abelian_2() -> Presentation:
    return Presentation.build("xy", ["xyXY"], nilpotent=True)


def heisenberg() -> Presentation:
    return Presentation.build("xyz", ["xyXYZ", "xzXZ", "yzYZ"], central=["z"], nilpotent=True)


def free_group(m: int = 2) -> Presentation:
    return Presentation.free(m)

