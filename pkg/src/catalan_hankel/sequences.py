"""Catalan numbers, binomial coefficients and sequence input."""

import enum
import math
import os
import threading
from dataclasses import dataclass

from .errors import EmptySequence, ParseError, SequenceIOError, SequenceTooShort

CATALAN_TOKEN = "catalan"


class CatalanCache:
    """Grow-only memo of C_0, C_1, ... built with the multiplicative recurrence

        (k + 2) * C_{k+1} = 2 * (2k + 1) * C_k

    Readers never see a half-built prefix: new terms are computed into a
    scratch list under the lock and published with a single extend.
    """

    def __init__(self):
        self._values = [1]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def _grow(self, count):
        with self._lock:
            have = len(self._values)
            if have >= count:
                return
            last = self._values[-1]
            fresh = []
            for k in range(have - 1, count - 1):
                q, rem = divmod(2 * (2 * k + 1) * last, k + 2)
                assert rem == 0, (k, rem)
                fresh.append(q)
                last = q
            self._values.extend(fresh)

    def get(self, k):
        if k < 0:
            raise ValueError(f"Catalan index must be non-negative, got {k}")
        if k >= len(self._values):
            self._grow(k + 1)
        return self._values[k]

    def prefix(self, count):
        if count < 0:
            raise ValueError(f"count must be non-negative, got {count}")
        if count > len(self._values):
            self._grow(count)
        return self._values[:count]


_CACHE = CatalanCache()


def catalan(k):
    """Return the k-th Catalan number."""
    return _CACHE.get(k)


def catalan_prefix(count):
    """Return [C_0, ..., C_{count-1}]."""
    return _CACHE.prefix(count)


def binomial(top, bottom):
    """Binomial coefficient, zero when ``bottom`` lies outside [0, top]."""
    if top < 0:
        raise ValueError(f"top must be non-negative, got {top}")
    if bottom < 0 or bottom > top:
        return 0
    return math.comb(top, bottom)


class SourceKind(enum.Enum):
    CATALAN = "catalan"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class SequenceSource:
    kind: SourceKind
    terms: tuple = ()

    def __post_init__(self):
        if self.kind is SourceKind.EXPLICIT and not self.terms:
            raise EmptySequence("explicit sequence has no terms")
        if self.kind is SourceKind.CATALAN and self.terms:
            raise ValueError("the builtin Catalan source carries no terms")

    @classmethod
    def builtin_catalan(cls):
        return cls(SourceKind.CATALAN)

    @classmethod
    def explicit(cls, terms):
        return cls(SourceKind.EXPLICIT, tuple(int(t) for t in terms))

    @property
    def is_catalan(self):
        return self.kind is SourceKind.CATALAN

    def prefix(self, count):
        """First ``count`` terms; raises SequenceTooShort naming a_{len}."""
        if self.is_catalan:
            return catalan_prefix(count)
        if count > len(self.terms):
            raise SequenceTooShort(len(self.terms))
        return list(self.terms[:count])

    def describe(self):
        return CATALAN_TOKEN if self.is_catalan else "explicit"


CATALAN = SequenceSource.builtin_catalan()


def _parse_int(token, position, kind):
    try:
        return int(token)
    except ValueError:
        raise ParseError(token, position, kind) from None


def parse_inline(text):
    tokens = [t.strip() for t in text.split(",")]
    if all(t == "" for t in tokens):
        raise EmptySequence("inline sequence has no terms")
    return SequenceSource.explicit(
        _parse_int(t, pos, "token") for pos, t in enumerate(tokens, start=1)
    )


def read_sequence_file(path):
    """Parse one decimal integer per line; blank lines are skipped."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise SequenceIOError(f"cannot read sequence file {path}: {exc.strerror}") from exc
    terms = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if line:
            terms.append(_parse_int(line, lineno, "line"))
    if not terms:
        raise EmptySequence(f"{path}: no terms")
    return SequenceSource.explicit(terms)


def load_sequence(descriptor):
    """Resolve a sequence descriptor.

    ``"catalan"`` selects the builtin sequence, a string containing commas (or
    a single integer) is parsed inline, and anything else, including any
    ``os.PathLike``, is read as a newline-delimited file.
    """
    if isinstance(descriptor, os.PathLike):
        return read_sequence_file(descriptor)
    text = descriptor.strip()
    if text.lower() == CATALAN_TOKEN:
        return CATALAN
    if "," in text:
        return parse_inline(text)
    try:
        return SequenceSource.explicit([int(text)])
    except ValueError:
        pass
    return read_sequence_file(text)
