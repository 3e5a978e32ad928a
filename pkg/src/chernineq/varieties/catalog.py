"""Built-in spaces and the ``family:params`` selector syntax."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .spacefile import SpaceFileError, load_space_file
from .spaces import PolarizedSpace, complete_intersection, hypersurface, product, projective_space

__all__ = ["CATALOG", "catalog_names", "get_space", "resolve_space", "SelectorError"]


class SelectorError(ValueError):
    pass


def _named(builder: Callable[[], PolarizedSpace], name: str) -> Callable[[], PolarizedSpace]:
    def build():
        space = builder()
        object.__setattr__(space, "name", name)
        return space
    return build


CATALOG: dict[str, Callable[[], PolarizedSpace]] = {}
for _n in range(1, 7):
    CATALOG[f"P{_n}"] = (lambda n=_n: projective_space(n))
CATALOG.update({
    "plane_conic": _named(lambda: hypersurface(1, 2), "plane_conic"),
    "plane_cubic": _named(lambda: hypersurface(1, 3), "plane_cubic"),
    "quadric_surface": _named(lambda: hypersurface(2, 2), "quadric_surface"),
    "cubic_surface": _named(lambda: hypersurface(2, 3), "cubic_surface"),
    "quartic_k3": _named(lambda: hypersurface(2, 4), "quartic_k3"),
    "quintic_surface": _named(lambda: hypersurface(2, 5), "quintic_surface"),
    "quadric_threefold": _named(lambda: hypersurface(3, 2), "quadric_threefold"),
    "cubic_threefold": _named(lambda: hypersurface(3, 3), "cubic_threefold"),
    "quintic_threefold": _named(lambda: hypersurface(3, 5), "quintic_threefold"),
    "septic_threefold": _named(lambda: hypersurface(3, 7), "septic_threefold"),
    "sextic_fourfold": _named(lambda: hypersurface(4, 6), "sextic_fourfold"),
    "septic_fivefold": _named(lambda: hypersurface(5, 7), "septic_fivefold"),
    "quartic_del_pezzo": _named(lambda: complete_intersection(2, [2, 2]), "quartic_del_pezzo"),
    "k3_ci_2_3": _named(lambda: complete_intersection(2, [2, 3]), "k3_ci_2_3"),
    "bicubic_cy3": _named(lambda: complete_intersection(3, [3, 3]), "bicubic_cy3"),
    "cy3_ci_2_4": _named(lambda: complete_intersection(3, [2, 4]), "cy3_ci_2_4"),
    "P1xP1": _named(lambda: product([projective_space(1)] * 2, [1, 1]), "P1xP1"),
    "P1xP1_12": _named(lambda: product([projective_space(1)] * 2, [1, 2]), "P1xP1_12"),
    "P1xP2": _named(lambda: product([projective_space(1), projective_space(2)], [1, 1]), "P1xP2"),
    "P2xP2": _named(lambda: product([projective_space(2)] * 2, [1, 1]), "P2xP2"),
    "P1xP1xP1": _named(lambda: product([projective_space(1)] * 3, [1, 1, 1]), "P1xP1xP1"),
})


def catalog_names() -> list[str]:
    return list(CATALOG)


@lru_cache(maxsize=None)
def get_space(name: str) -> PolarizedSpace:
    try:
        return CATALOG[name]()
    except KeyError:
        raise SelectorError(f"unknown catalog space {name!r}") from None


def _ints(text: str, what: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise SelectorError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if not values:
        raise SelectorError(f"{what}: missing parameters")
    return values


def _single(text: str, what: str) -> int:
    values = _ints(text, what)
    if len(values) != 1:
        raise SelectorError(f"{what} takes a single dimension")
    return values[0]


def resolve_space(selector: str) -> PolarizedSpace:
    """Turn a selector into a space.

    Accepted forms: a catalog name; ``P:n``; ``hypersurface:n,d``;
    ``ci:n:d1,d2,...``; ``product:n1,n2,...:a1,a2,...`` (a product of
    projective spaces with polarization degrees a_i); ``file:path``.
    """
    if selector in CATALOG:
        return get_space(selector)
    family, _, rest = selector.partition(":")
    family = family.lower()
    try:
        if family == "file":
            if not rest:
                raise SelectorError("file: selector needs a path")
            return load_space_file(rest)
        if family in ("p", "projective"):
            return projective_space(_single(rest, "P:n"))
        if family == "hypersurface":
            vals = _ints(rest, "hypersurface")
            if len(vals) != 2:
                raise SelectorError("hypersurface:n,d takes two integers")
            return hypersurface(*vals)
        if family == "ci":
            dim_text, _, deg_text = rest.partition(":")
            return complete_intersection(_single(dim_text, "ci:n:d1,..."), _ints(deg_text, "ci degrees"))
        if family == "product":
            dims_text, _, degs_text = rest.partition(":")
            dims = _ints(dims_text, "product dimensions")
            degs = _ints(degs_text, "product degrees") if degs_text else [1] * len(dims)
            return product([projective_space(d) for d in dims], degs, name=selector)
    except (SelectorError, SpaceFileError):
        raise
    except ValueError as exc:
        raise SelectorError(f"bad parameters in {selector!r}: {exc}") from None
    raise SelectorError(f"unknown space selector {selector!r}")
