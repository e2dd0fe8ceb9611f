"""Sequence certificates and their JSON document form.

A certificate lists, for each term ``n + offset``, an explicit pair (a, b)
with a**2 + b**2 equal to that term.  Checking one is pure integer arithmetic,
which is what makes the huge Pell-generated values verifiable at all.

Documents store every big integer as a decimal string::

    {"schema-version": "1", "method": "quint", "parameters": {"x": "420"},
     "n": "176400",
     "terms": [{"offset": 0, "value": "176400", "rep": ["252", "336"],
                "nonzero": true}, ...]}
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .ntcore import TwoSquareRep, verify_rep

SCHEMA_VERSION = "1"

_DECIMAL = re.compile(r"-?(0|[1-9][0-9]*)\Z")
_TOP_KEYS = {"schema-version", "method", "parameters", "n", "terms"}
_TERM_KEYS = {"offset", "value", "rep", "nonzero"}


class CertificateError(ValueError):
    """A certificate failed verification."""


class CertificateFormatError(ValueError):
    """A certificate document is malformed and cannot be parsed."""


@dataclass(frozen=True)
class Term:
    offset: int
    value: int
    rep: TwoSquareRep

    @property
    def nonzero(self) -> bool:
        return self.rep.nonzero


@dataclass(frozen=True)
class SequenceCertificate:
    n: int
    method: str
    terms: tuple[Term, ...]
    params: Mapping[str, int] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        n: int,
        method: str,
        reps: Mapping[int, tuple[int, int]],
        params: Mapping[str, int] | None = None,
    ) -> "SequenceCertificate":
        """Assemble from ``{offset: (a, b)}``; signs and order are normalized."""
        terms = tuple(
            Term(off, n + off, TwoSquareRep.of(*reps[off])) for off in sorted(reps)
        )
        return cls(n, method, terms, dict(params or {}))

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(t.offset for t in self.terms)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(t.value for t in self.terms)

    def term(self, offset: int) -> Term:
        for t in self.terms:
            if t.offset == offset:
                return t
        raise KeyError(offset)

    def rep(self, offset: int) -> tuple[int, int]:
        return self.term(offset).rep.as_tuple()

    @property
    def all_nonzero(self) -> bool:
        return all(t.nonzero for t in self.terms)

    def failures(self) -> Iterator[str]:
        """Describe every violated invariant; empty iff the certificate holds."""
        if not self.terms:
            yield "certificate has no terms"
        if type(self.n) is not int or self.n < 0:
            yield f"n must be a nonnegative int, got {self.n!r}"
            return
        prev = None
        for t in self.terms:
            where = f"term at offset {t.offset}"
            if prev is not None and t.offset <= prev:
                yield f"{where}: offsets not strictly ascending"
            prev = t.offset
            if t.value != self.n + t.offset:
                yield f"{where}: value {t.value} != n + offset"
            if t.value < 0:
                yield f"{where}: negative value"
            if t.rep.value != t.value:
                yield f"{where}: rep is for {t.rep.value}, not {t.value}"
            if not verify_rep(t.rep):
                a, b = t.rep.a, t.rep.b
                yield f"{where}: {a}^2 + {b}^2 != {t.rep.value}"

    def verify(self) -> bool:
        return next(self.failures(), None) is None

    def check(self) -> "SequenceCertificate":
        """Raise CertificateError on the first failure, else return self."""
        problem = next(self.failures(), None)
        if problem is not None:
            raise CertificateError(problem)
        return self

    def scaled(self, m: int, method: str | None = None) -> "SequenceCertificate":
        """Multiply n and every offset by m**2 and every rep by m."""
        if m == 1 and method is None:
            return self
        reps = {t.offset * m * m: (t.rep.a * m, t.rep.b * m) for t in self.terms}
        return SequenceCertificate.build(
            self.n * m * m, method or self.method, reps, self.params
        )

    def describe(self) -> str:
        lines = [f"{self.method}: n = {self.n}"]
        for t in self.terms:
            mark = "" if t.nonzero else "   (zero square)"
            lines.append(f"  n{t.offset:+d}: {t.value} = {t.rep.a}^2 + {t.rep.b}^2{mark}")
        return "\n".join(lines)


# ------------------------------------------------------------------- JSON

def to_document(cert: SequenceCertificate) -> dict:
    return {
        "schema-version": SCHEMA_VERSION,
        "method": cert.method,
        "parameters": {k: str(v) for k, v in sorted(cert.params.items())},
        "n": str(cert.n),
        "terms": [
            {
                "offset": t.offset,
                "value": str(t.value),
                "rep": [str(t.rep.a), str(t.rep.b)],
                "nonzero": t.nonzero,
            }
            for t in cert.terms
        ],
    }


def dumps(cert: SequenceCertificate, *, indent: int | None = None) -> str:
    return json.dumps(to_document(cert), indent=indent)


def _integer(text, what: str) -> int:
    if not isinstance(text, str) or not _DECIMAL.match(text):
        raise CertificateFormatError(f"{what}: expected a canonical decimal string, got {text!r}")
    return int(text)


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise CertificateFormatError(message)


def from_document(doc) -> SequenceCertificate:
    """Parse a document; structural problems raise CertificateFormatError.

    Arithmetic is not checked here (see :meth:`SequenceCertificate.failures`),
    except that a ``nonzero`` flag contradicting its rep is reported by
    :func:`document_failures`.
    """
    _expect(isinstance(doc, dict), "document must be a JSON object")
    _expect(set(doc) == _TOP_KEYS, f"document keys must be {sorted(_TOP_KEYS)}")
    _expect(doc["schema-version"] == SCHEMA_VERSION,
            f"unsupported schema-version {doc['schema-version']!r}")
    _expect(isinstance(doc["method"], str), "method must be a string")
    _expect(isinstance(doc["parameters"], dict), "parameters must be an object")
    params = {k: _integer(v, f"parameter {k}") for k, v in doc["parameters"].items()}
    n = _integer(doc["n"], "n")
    _expect(isinstance(doc["terms"], list) and doc["terms"], "terms must be a nonempty list")
    terms = []
    for i, raw in enumerate(doc["terms"]):
        _expect(isinstance(raw, dict) and set(raw) == _TERM_KEYS, f"term {i}: bad keys")
        offset = raw["offset"]
        _expect(type(offset) is int, f"term {i}: offset must be an integer")
        _expect(isinstance(raw["rep"], list) and len(raw["rep"]) == 2,
                f"term {i}: rep must be a pair")
        _expect(isinstance(raw["nonzero"], bool), f"term {i}: nonzero must be a boolean")
        value = _integer(raw["value"], f"term {i} value")
        a = _integer(raw["rep"][0], f"term {i} rep")
        b = _integer(raw["rep"][1], f"term {i} rep")
        terms.append(Term(offset, value, TwoSquareRep(a, b, value)))
    return SequenceCertificate(n, doc["method"], tuple(terms), params)


def document_failures(doc: dict) -> list[str]:
    """Verification failures of a parsed-able document, including flag mismatches."""
    cert = from_document(doc)
    problems = list(cert.failures())
    for raw, t in zip(doc["terms"], cert.terms):
        if raw["nonzero"] != (t.rep.a > 0):
            problems.append(f"term at offset {t.offset}: nonzero flag contradicts rep")
    return problems


def loads(text: str) -> SequenceCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def parse_stream(text: str) -> list[dict]:
    """Documents from a file holding one JSON object or one object per line."""
    try:
        whole = json.loads(text)
    except json.JSONDecodeError:
        whole = None
    if isinstance(whole, dict):
        return [whole]
    if isinstance(whole, list):
        return whole
    docs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            docs.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(f"line {lineno}: invalid JSON: {exc}") from None
    if not docs:
        raise CertificateFormatError("no certificate documents found")
    return docs


def write_stream(certs: Iterable[SequenceCertificate]) -> str:
    return "".join(dumps(c) + "\n" for c in certs)
