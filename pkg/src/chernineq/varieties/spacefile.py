"""Space-definition files.

A space file is TOML::

    name = "quintic_threefold"
    dim = 3
    ambient_dim = 4                       # optional: N of the Kodaira map
    generators = [{name = "h", degree = 1}]
    relations = ["h^4 = 0"]                # monomial = 0 rules
    tangent_chern = "(1+h)^5*(1+5h)^(-1)"
    polarization = "h"

    [integral]                            # top monomial -> rational
    "h^3" = "5"

    [flags]
    very_ample = true
    tangent_nef = false
    canonical_ample_gg = false
    notes = "O(1) restriction"

Monomials above ``dim`` vanish automatically.  Expression strings use the
grammar in :mod:`chernineq.varieties.expr`.
"""

from __future__ import annotations

from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from ..rational import as_fraction, format_rational
from . import expr as E
from .ring import CohomologyModel
from .spaces import PolarizedSpace

__all__ = ["SpaceFileError", "load_space_file", "parse_space_text", "space_to_toml"]

_FLAGS = ("very_ample", "tangent_nef", "canonical_ample_gg")
_KNOWN = {"name", "dim", "ambient_dim", "generators", "relations", "integral",
          "tangent_chern", "polarization", "flags"}


class SpaceFileError(ValueError):
    """Schema, syntax or consistency problem in a space file."""

    def __init__(self, message: str, source: str = "<space>", line: int | None = None,
                 column: int | None = None):
        self.source = source
        self.line = line
        self.column = column
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


def _key_line(text: str, key: str) -> int | None:
    """1-based line of the first assignment to ``key``, for error positions."""
    for no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip().strip('"')
        if stripped.startswith(key) and "=" in raw:
            head = raw.split("=", 1)[0].strip().strip('"')
            if head == key:
                return no
    return None


def _key_column(text: str, line: int | None, value: str) -> int:
    if line is None:
        return 0
    raw = text.splitlines()[line - 1]
    idx = raw.find(value)
    return idx if idx >= 0 else 0


def parse_space_text(text: str, source: str = "<space>") -> PolarizedSpace:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        line = getattr(exc, "lineno", None)
        col = getattr(exc, "colno", None)
        raise SpaceFileError(f"TOML syntax error: {exc}", source, line, col) from None

    def fail(message, key=None, ex: E.ExpressionError | None = None, value=None):
        line = _key_line(text, key) if key else None
        col = None
        if ex is not None and value is not None:
            col = _key_column(text, line, value) + ex.position + 1
        raise SpaceFileError(message, source, line, col)

    unknown = set(data) - _KNOWN
    if unknown:
        fail(f"unknown keys: {', '.join(sorted(unknown))}", sorted(unknown)[0])
    for key in ("name", "dim", "generators", "integral", "tangent_chern", "polarization"):
        if key not in data:
            fail(f"missing required key {key!r}")

    name = data["name"]
    dim = data["dim"]
    if not isinstance(name, str) or not name:
        fail("name must be a nonempty string", "name")
    if not isinstance(dim, int) or dim < 1:
        fail("dim must be a positive integer", "dim")
    ambient = data.get("ambient_dim")
    if ambient is not None and (not isinstance(ambient, int) or ambient < dim):
        fail("ambient_dim must be an integer >= dim", "ambient_dim")

    gens = []
    for g in data["generators"]:
        if not isinstance(g, dict) or set(g) - {"name", "degree"} or "name" not in g:
            fail("each generator needs exactly 'name' and optional 'degree'", "generators")
        gens.append((str(g["name"]), int(g.get("degree", 1))))
    if not gens:
        fail("at least one generator is required", "generators")

    free = CohomologyModel(dimension=10 ** 6, generators=tuple(gens))

    def monomial(text_value: str, key: str):
        try:
            tree = E.parse(text_value)
        except E.ExpressionError as ex:
            fail(f"in {key}: {ex}", key, ex, text_value)
        if E.has_negative_power(tree):
            fail(f"in {key}: monomials cannot have negative powers", key)
        try:
            value = E.evaluate(tree, free.gen, free.one(), text_value)
        except E.ExpressionError as ex:
            fail(f"in {key}: {ex}", key, ex, text_value)
        terms = value.terms
        if len(terms) != 1:
            fail(f"in {key}: {text_value!r} is not a single monomial", key)
        (mono, coeff), = terms.items()
        return mono, coeff

    zeros = []
    for rel in data.get("relations", []):
        if not isinstance(rel, str) or "=" not in rel:
            fail(f"relation {rel!r} must read 'monomial = 0'", "relations")
        lhs, rhs = rel.split("=", 1)
        if rhs.strip() != "0":
            fail(f"relation {rel!r}: only monomial = 0 rules are supported", "relations")
        zeros.append(monomial(lhs.strip(), "relations")[0])

    integral_data = data["integral"]
    if not isinstance(integral_data, dict) or not integral_data:
        fail("integral must be a nonempty table of top monomial -> rational", "integral")
    table = {}
    for mono_text, raw_value in integral_data.items():
        mono, coeff = monomial(mono_text, mono_text)
        try:
            value = as_fraction(raw_value if not isinstance(raw_value, float) else str(raw_value))
        except (TypeError, ValueError):
            fail(f"integral value {raw_value!r} is not an exact rational", mono_text)
        table[mono] = value / coeff

    try:
        model = CohomologyModel(dim, tuple(gens), tuple(zeros), table)
    except ValueError as exc:
        fail(str(exc), "integral")

    def element(key):
        value = data[key]
        if not isinstance(value, str):
            fail(f"{key} must be an expression string", key)
        try:
            return E.evaluate(E.parse(value), model.gen, model.one(), value)
        except E.ExpressionError as ex:
            fail(f"in {key}: {ex}", key, ex, value)

    tangent = element("tangent_chern")
    polarization = element("polarization")

    flags = data.get("flags", {})
    if not isinstance(flags, dict):
        fail("flags must be a table", "flags")
    extra = set(flags) - set(_FLAGS) - {"notes"}
    if extra:
        fail(f"unknown flags: {', '.join(sorted(extra))}", "flags")
    for f in _FLAGS:
        if f in flags and not isinstance(flags[f], bool):
            fail(f"flag {f} must be true or false", f)

    for k in tangent.degrees():
        if k > dim:
            fail("tangent_chern has terms above dim", "tangent_chern")
    try:
        return PolarizedSpace(
            name=name,
            model=model,
            tangent_chern=tangent,
            polarization=polarization,
            embedding_dim=ambient,
            very_ample=flags.get("very_ample", False),
            tangent_nef=flags.get("tangent_nef", False),
            canonical_ample_gg=flags.get("canonical_ample_gg", False),
            notes=str(flags.get("notes", "")),
            family="file",
        )
    except ValueError as exc:
        fail(f"inconsistent space: {exc}")


def load_space_file(path) -> PolarizedSpace:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpaceFileError(f"cannot read file: {exc.strerror}", str(path)) from None
    return parse_space_text(text, str(path))


def space_to_toml(space: PolarizedSpace) -> str:
    """Serialize a space back to the file format (round-trips via parse)."""
    names = space.model.names

    def mono_text(mono):
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
        return "*".join(factors) or "1"

    lines = [f'name = "{space.name}"', f"dim = {space.n}"]
    if space.embedding_dim is not None:
        lines.append(f"ambient_dim = {space.embedding_dim}")
    gens = ", ".join(f'{{name = "{n}", degree = {d}}}' for n, d in space.model.generators)
    lines.append(f"generators = [{gens}]")
    rels = ", ".join(f'"{mono_text(z)} = 0"' for z in space.model.zero_monomials)
    lines.append(f"relations = [{rels}]")
    lines.append(f'tangent_chern = "{space.tangent_chern}"')
    lines.append(f'polarization = "{space.polarization}"')
    lines.append("")
    lines.append("[integral]")
    for mono in sorted(space.model.integral):
        val = space.model.integral[mono]
        lines.append(f'"{mono_text(mono)}" = "{format_rational(val)}"')
    lines.append("")
    lines.append("[flags]")
    for f in _FLAGS:
        lines.append(f"{f} = {'true' if getattr(space, f) else 'false'}")
    notes = space.notes.replace('"', "'")
    lines.append(f'notes = "{notes}"')
    return "\n".join(lines) + "\n"
