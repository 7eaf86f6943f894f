"""Action of the Clifford generators on overlap tables.

Conjugating a fiducial projector by a Clifford unitary permutes the overlap
table up to phases. The three generators implemented here act by closed-form
index maps, which costs O(d^2) per table instead of O(d^3) for conjugation.
"""

import re

import numpy as np

from .heisenberg import root_of_unity
from .validation import check_table

__all__ = [
    "act_shift_mod",
    "act_fourier",
    "act_zauner",
    "zauner_residual",
    "parse_word",
    "apply_word",
]


def act_shift_mod(c, a, b):
    """Table of ``S^a Omega^b v``: entry ``(j, k)`` picks up ``omega^(a k - b j)``."""
    c = check_table(c)
    d = c.shape[0]
    j = np.arange(d)[:, None]
    k = np.arange(d)[None, :]
    return root_of_unity(d, a * k - b * j) * c


def act_fourier(c):
    """Table of ``F v``: ``(F.c)[j, k] = omega^(-j k) c[k, -j]``."""
    c = check_table(c)
    d = c.shape[0]
    j = np.arange(d)[:, None]
    k = np.arange(d)[None, :]
    return root_of_unity(d, -j * k) * c[k, (-j) % d]


def act_zauner(c):
    """Table of ``Z v``: ``(Z.c)[j, k] = mu^(j (j + d - 2k)) c[k - j, -j]``."""
    c = check_table(c)
    d = c.shape[0]
    j = np.arange(d)[:, None]
    k = np.arange(d)[None, :]
    return root_of_unity(2 * d, j * (j + d - 2 * k)) * c[(k - j) % d, np.broadcast_to((-j) % d, (d, d))]


def zauner_residual(c):
    """Largest entrywise change of ``c`` under the Zauner action; 0 iff ``c`` is Z-fixed."""
    c = check_table(c)
    return float(np.max(np.abs(act_zauner(c) - c)))


_TOKEN = re.compile(r"^(?:S(-?\d+)O(-?\d+)|F|Z)$")


def parse_word(word):
    """Parse a generator word such as ``"S1O0 F Z Z"``.

    Returns a list of ``("shift", a, b)``, ``("fourier",)`` and
    ``("zauner",)`` tuples in application order (left to right).
    """
    gens = []
    for token in word.split():
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"unrecognised generator {token!r}; expected S<a>O<b>, F or Z")
        if token == "F":
            gens.append(("fourier",))
        elif token == "Z":
            gens.append(("zauner",))
        else:
            gens.append(("shift", int(m.group(1)), int(m.group(2))))
    return gens


def apply_word(c, word):
    """Apply a generator word to ``c`` left to right.

    ``word`` is a string accepted by :func:`parse_word` or an already parsed
    list. Scalar generators act trivially and are not represented.
    """
    gens = parse_word(word) if isinstance(word, str) else word
    out = check_table(c)
    for gen in gens:
        if gen[0] == "shift":
            d = out.shape[0]
            out = act_shift_mod(out, gen[1] % d, gen[2] % d)
        elif gen[0] == "fourier":
            out = act_fourier(out)
        elif gen[0] == "zauner":
            out = act_zauner(out)
        else:
            raise ValueError(f"unknown generator {gen!r}")
    return out
