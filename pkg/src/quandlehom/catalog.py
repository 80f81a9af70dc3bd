"""Named quandles and bundled fixture files.

Keys: ``trivial:N``, ``dihedral:N``, ``alexander:N:POLY``, ``qs5``, ``qs6``.
"""

import os
from dataclasses import dataclass
from importlib import resources

from . import quandle

BUNDLED = (
    "trivial:1",
    "trivial:2",
    "trivial:3",
    "trivial:4",
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "alexander:3:T+1",
    "alexander:2:T^2+T+1",
    "qs5",
    "qs6",
)


class UnknownQuandleError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    params: tuple = ()

    def build(self):
        if self.family == "trivial":
            return quandle.trivial(*self.params)
        if self.family == "dihedral":
            return quandle.dihedral(*self.params)
        if self.family == "alexander":
            n, poly = self.params
            return quandle.alexander(quandle.LaurentPolynomial.parse(n, poly))
        if self.family == "qs5":
            return quandle.qs5()
        if self.family == "qs6":
            return quandle.qs6()
        raise UnknownQuandleError(f"unknown family {self.family!r}")


def entry(key):
    parts = key.strip().split(":")
    family = parts[0].lower()
    try:
        if family in ("qs5", "qs6") and len(parts) == 1:
            return CatalogEntry(key, family)
        if family in ("trivial", "dihedral") and len(parts) == 2:
            n = int(parts[1])
            if n < 1:
                raise UnknownQuandleError(f"{key}: size must be positive")
            return CatalogEntry(key, family, (n,))
        if family == "alexander" and len(parts) == 3:
            return CatalogEntry(key, family, (int(parts[1]), parts[2]))
    except ValueError as exc:
        if isinstance(exc, UnknownQuandleError):
            raise
        raise UnknownQuandleError(f"bad catalog key {key!r}: {exc}") from None
    raise UnknownQuandleError(f"unknown catalog key {key!r}")


def is_key(text):
    try:
        entry(text)
    except UnknownQuandleError:
        return False
    return True


_cache = {}


def get(key):
    if key not in _cache:
        _cache[key] = entry(key).build()
    return _cache[key]


def resolve(source, overrides=None, mode="quandle"):
    """A catalog key or a path to a quandle file."""
    if overrides and source in overrides:
        return quandle.load_quandle(overrides[source], mode)
    if is_key(source):
        return get(source)
    if os.path.exists(source):
        return quandle.load_quandle(source, mode)
    raise UnknownQuandleError(f"{source!r} is neither a catalog key nor a readable file")


def small_entries(max_order):
    return [k for k in BUNDLED if get(k).size <= max_order]


def data_path(name):
    """Path of a bundled fixture such as ``fig3.adk``."""
    return str(resources.files("quandlehom") / "data" / name)


def find_file(path):
    """``path`` itself if it exists, else the bundled fixture of that name."""
    if os.path.exists(path):
        return path
    bundled = data_path(os.path.basename(path))
    if os.path.exists(bundled):
        return bundled
    raise FileNotFoundError(path)
