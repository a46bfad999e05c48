"""The classified quadruples with hidden symmetry, as a machine-readable catalog.

Each record describes compact groups H in G over G' over L' over H', the five
weight-restriction matrices between them, the known real forms with their
fiber data, and flags for sphericity and computability.  Parameterized
families ship as concrete instances (one record per small parameter value,
sharing the roman-numeral id).  The bundled document is JSON: a top-level
array of records with fields "id", "groups", "embeddings", "realForms",
"spherical", "computable" (plus supplementary "params"/"definingImages").
Rationals are strings like "1/2" so nothing passes through floats.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterable

from .characters import EmbeddingSpec, weight_multiplicities
from .errors import (
    CatalogParseError,
    CatalogValidationError,
    UnsupportedRecordError,
)
from .lattice import RootSystem, Weight, product_system

CATALOG_VERSION = "1"

GROUP_ROLES = ("G", "H", "Gp", "Lp", "Hp")
EMBEDDING_ROLES = ("HinG", "GpinG", "HpinLp", "LpinGp", "HpinGp")

# friendly names for embeddings used on the command line
EMBEDDING_ALIASES = {
    "so15-in-so16": ("vi", "HinG"),
    "spin16": ("vi", "GpinG"),
    "spin7-in-spin8": ("vi", "HpinLp"),
    "spin8-in-spin9": ("vi", "LpinGp"),
    "spin7-in-spin9": ("vi", "HpinGp"),
}


@dataclass(frozen=True)
class GroupInfo:
    """A compact group: display label, weight-lattice model, spin flag."""

    label: str
    system: RootSystem | None
    spin: bool = False


@dataclass(frozen=True)
class RealFormRow:
    """One real form of a quadruple, with its fiber and compactness flags."""

    g: str
    h: str
    gp: str
    hp: str
    fiber: str
    fiber_compact: bool
    hp_compact: bool


@dataclass(frozen=True)
class QuadrupleRecord:
    """One (instantiated) row of the quadruple catalog."""

    id: str
    params: tuple[tuple[str, int], ...]
    groups: dict[str, GroupInfo]
    embeddings: dict[str, EmbeddingSpec]
    real_forms: tuple[RealFormRow, ...]
    spherical: bool
    computable: bool
    defining_images: dict[str, tuple[Weight, tuple[tuple[Weight, int], ...]]] = field(
        default_factory=dict
    )

    @property
    def key(self) -> str:
        if not self.params:
            return self.id
        return self.id + ":" + ",".join(f"{k}={v}" for k, v in self.params)

    def group(self, role: str) -> GroupInfo:
        return self.groups[role]

    def embedding(self, role: str) -> EmbeddingSpec:
        if not self.computable:
            raise UnsupportedRecordError(
                f"record {self.key} is stored but not computable in this version"
            )
        return self.embeddings[role]


# ---------------------------------------------------------------------------
# label arithmetic
# ---------------------------------------------------------------------------

_SIMPLE_DIM = {
    "SO": lambda n: n * (n - 1) // 2,
    "Spin": lambda n: n * (n - 1) // 2,
    "SU": lambda n: n * n - 1,
    "U": lambda n: n * n,
    "Sp": lambda n: n * (2 * n + 1),
}


def _split_factors(label: str) -> list[str]:
    return [p.strip() for p in label.split("·")]


def _strip_diag(factor: str) -> str:
    m = re.fullmatch(r"diag\((.+)\)", factor)
    return m.group(1) if m else factor


def group_dimension(label: str) -> int:
    """Real dimension of a compact group label such as "SO(16)" or "Sp(2)·U(1)"."""
    total = 0
    for factor in _split_factors(label):
        factor = _strip_diag(factor)
        if factor.startswith("G2"):
            total += 14
            continue
        m = re.fullmatch(r"(SO|Spin|SU|U|Sp)\((\d+)\)", factor)
        if not m:
            raise CatalogValidationError(f"unknown group label {factor!r}")
        total += _SIMPLE_DIM[m.group(1)](int(m.group(2)))
    return total


def label_is_compact(label: str) -> bool:
    """Compactness of a (possibly symbolic) real-form label.

    Symbolic signature slots like "p" or "q-1" are treated as positive,
    matching the generic parameter ranges of the catalog rows.
    """
    for factor in _split_factors(label):
        factor = _strip_diag(factor)
        if factor in ("R", "pt"):
            return factor == "pt"
        if factor.endswith("(R)") or ",R)" in factor:
            return False
        m = re.fullmatch(r"[A-Za-z]+\(([^)]*)\)", factor)
        if m and "," in m.group(1):
            slots = [s.strip() for s in m.group(1).split(",")]
            if all(s != "0" for s in slots):
                return False
    return True


_FIBER_SIGNED = re.compile(r"S\^\{([^,}]+),([^,}]+)\}")
_FIBER_TWO_SLOT = re.compile(r"(OU|US)_\{?([^,}]+),([^,}]+)\}?")
_FIBER_ONE_SLOT = re.compile(r"(OG|GS)_\{?([^}]+)\}?")


def fiber_is_compact(label: str) -> bool:
    """Compactness of a fiber label such as "S^7", "S^{1,1}", "OU_{p,q-1}"."""
    if label == "pt":
        return True
    if label == "R":
        return False
    if _FIBER_SIGNED.fullmatch(label):
        return False
    m = _FIBER_TWO_SLOT.fullmatch(label)
    if m:
        return m.group(2) == "0" or m.group(3) == "0"
    m = _FIBER_ONE_SLOT.fullmatch(label)
    if m:
        return m.group(2) == "0"
    if re.fullmatch(r"S\^\d+", label):
        return True
    raise CatalogValidationError(f"unknown fiber label {label!r}")


def verify_dimension_identity(rec: QuadrupleRecord) -> bool:
    """dim G = dim G' + dim H - dim H', resolved from the group labels."""
    dims = {role: group_dimension(rec.groups[role].label) for role in ("G", "H", "Gp", "Hp")}
    return dims["G"] == dims["Gp"] + dims["H"] - dims["Hp"]


def discrete_decomposability_flag(rec: QuadrupleRecord, row: RealFormRow) -> bool:
    """True iff the record is spherical and the real fiber is compact."""
    return rec.spherical and row.fiber_compact


# ---------------------------------------------------------------------------
# JSON (de)serialization
# ---------------------------------------------------------------------------


def _frac_str(e2: int) -> str:
    return str(e2 // 2) if e2 % 2 == 0 else f"{e2}/2"


def _parse_frac2(text: str) -> int:
    f = Fraction(text)
    doubled = f * 2
    if doubled.denominator != 1:
        raise CatalogParseError(f"rational {text!r} has denominator not dividing 2")
    return int(doubled)


def record_to_dict(rec: QuadrupleRecord) -> dict:
    out: dict = {
        "id": rec.id,
        "params": {k: v for k, v in rec.params},
        "groups": {
            role: {
                "label": gi.label,
                "factors": list(map(list, gi.system.factors)) if gi.system else None,
                "spin": gi.spin if gi.system else None,
            }
            for role, gi in rec.groups.items()
        },
        "embeddings": {
            role: [[_frac_str(e) for e in row] for row in emb.matrix2]
            for role, emb in rec.embeddings.items()
        },
        "realForms": [
            {
                "G": r.g,
                "H": r.h,
                "Gp": r.gp,
                "Hp": r.hp,
                "fiber": r.fiber,
                "fiberCompact": r.fiber_compact,
                "hPrimeCompact": r.hp_compact,
            }
            for r in rec.real_forms
        ],
        "spherical": rec.spherical,
        "computable": rec.computable,
    }
    if rec.defining_images:
        out["definingImages"] = {
            role: {
                "hw": str(hw),
                "image": [[str(w), m] for w, m in image],
            }
            for role, (hw, image) in rec.defining_images.items()
        }
    return out


def _record_from_dict(d: dict) -> QuadrupleRecord:
    try:
        rid = d["id"]
        groups: dict[str, GroupInfo] = {}
        for role in GROUP_ROLES:
            g = d["groups"][role]
            system = None
            if g.get("factors") is not None:
                system = product_system([tuple(f) for f in g["factors"]])
            groups[role] = GroupInfo(label=g["label"], system=system, spin=bool(g.get("spin")))
        embeddings: dict[str, EmbeddingSpec] = {}
        emb_source_target = {
            "HinG": ("G", "H"),
            "GpinG": ("G", "Gp"),
            "HpinLp": ("Lp", "Hp"),
            "LpinGp": ("Gp", "Lp"),
            "HpinGp": ("Gp", "Hp"),
        }
        for role, rows in d.get("embeddings", {}).items():
            src_role, tgt_role = emb_source_target[role]
            src, tgt = groups[src_role], groups[tgt_role]
            if src.system is None or tgt.system is None:
                raise CatalogParseError(f"record {rid}: embedding {role} without systems")
            m2 = tuple(tuple(_parse_frac2(e) for e in row) for row in rows)
            embeddings[role] = EmbeddingSpec(
                name=f"{rid}:{role}",
                source=src.system,
                target=tgt.system,
                matrix2=m2,
                source_spin=src.spin,
            )
        real_forms = tuple(
            RealFormRow(
                g=r["G"],
                h=r["H"],
                gp=r["Gp"],
                hp=r["Hp"],
                fiber=r["fiber"],
                fiber_compact=bool(r["fiberCompact"]),
                hp_compact=bool(r["hPrimeCompact"]),
            )
            for r in d.get("realForms", [])
        )
        defining_images: dict[str, tuple[Weight, tuple[tuple[Weight, int], ...]]] = {}
        for role, di in d.get("definingImages", {}).items():
            hw = Weight.parse(di["hw"])
            image = tuple((Weight.parse(w), int(m)) for w, m in di["image"])
            defining_images[role] = (hw, image)
        return QuadrupleRecord(
            id=rid,
            params=tuple(sorted((k, int(v)) for k, v in d.get("params", {}).items())),
            groups=groups,
            embeddings=embeddings,
            real_forms=real_forms,
            spherical=bool(d["spherical"]),
            computable=bool(d["computable"]),
            defining_images=defining_images,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogParseError(f"malformed catalog record ({exc!r}): {d.get('id', '?')}") from exc


def catalog_to_json(records: Iterable[QuadrupleRecord]) -> str:
    return json.dumps([record_to_dict(r) for r in records], indent=1, sort_keys=True) + "\n"


def _validate_record(rec: QuadrupleRecord) -> None:
    if not verify_dimension_identity(rec):
        raise CatalogValidationError(f"record {rec.key}: dimension identity fails")
    for row in rec.real_forms:
        if fiber_is_compact(row.fiber) != row.fiber_compact:
            raise CatalogValidationError(
                f"record {rec.key}: fiberCompact flag inconsistent with fiber {row.fiber!r}"
            )
        if label_is_compact(row.hp) != row.hp_compact:
            raise CatalogValidationError(
                f"record {rec.key}: hPrimeCompact flag inconsistent with {row.hp!r}"
            )
    if not rec.computable:
        return
    missing = [role for role in EMBEDDING_ROLES if role not in rec.embeddings]
    if missing:
        raise CatalogValidationError(f"record {rec.key}: missing embeddings {missing}")
    for emb in rec.embeddings.values():
        emb.validate_lattice()
    # H' in G' must factor exactly through L'
    a = rec.embeddings["HpinLp"].matrix2
    b = rec.embeddings["LpinGp"].matrix2
    c = rec.embeddings["HpinGp"].matrix2
    n_rows, n_mid, n_cols = len(a), len(b), len(b[0]) if b else 0
    for i in range(n_rows):
        for j in range(n_cols):
            s = sum(a[i][k] * b[k][j] for k in range(n_mid))
            if s != 2 * c[i][j]:
                raise CatalogValidationError(
                    f"record {rec.key}: HpinGp does not equal HpinLp o LpinGp"
                )
    for role, (hw, image) in rec.defining_images.items():
        emb = rec.embeddings[role]
        wm = weight_multiplicities(hw, emb.source)
        got: dict[Weight, int] = {}
        for w, m in wm.items():
            img = emb.project(w)
            got[img] = got.get(img, 0) + m
        expected: dict[Weight, int] = {}
        for w, m in image:
            expected[w] = expected.get(w, 0) + m
        if got != expected:
            raise CatalogValidationError(
                f"record {rec.key}: defining-representation image mismatch for {role}"
            )


def load_catalog(source) -> list[QuadrupleRecord]:
    """Parse and validate a catalog document (bytes, str, or file-like)."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise CatalogParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, list):
        raise CatalogParseError("catalog document must be a top-level array of records")
    records = [_record_from_dict(d) for d in data]
    for rec in records:
        _validate_record(rec)
    return records


@lru_cache(maxsize=1)
def bundled_catalog() -> tuple[QuadrupleRecord, ...]:
    """The catalog shipped with the package."""
    text = resources.files("hsb.data").joinpath("catalog.json").read_text("utf-8")
    return tuple(load_catalog(text))


def find_record(row_id: str, **params: int) -> QuadrupleRecord:
    """Fetch a bundled record by roman-numeral id and parameter values."""
    wanted = tuple(sorted(params.items()))
    matches = [r for r in bundled_catalog() if r.id == row_id]
    if not matches:
        raise UnsupportedRecordError(f"no catalog row {row_id!r}")
    for r in matches:
        if r.params == wanted:
            return r
    if not wanted and len(matches) > 0 and matches[0].params:
        raise UnsupportedRecordError(
            f"row {row_id!r} is parameterized; available: "
            + ", ".join(r.key for r in matches)
        )
    raise UnsupportedRecordError(
        f"row {row_id!r} has no instance with parameters {dict(params)!r}"
    )


def family_ids() -> list[str]:
    seen: list[str] = []
    for r in bundled_catalog():
        if r.id not in seen:
            seen.append(r.id)
    return seen


def resolve_embedding(name: str) -> EmbeddingSpec:
    """Resolve an embedding by alias ("spin16") or "row:role[:n=K]" syntax."""
    if name in EMBEDDING_ALIASES:
        row_id, role = EMBEDDING_ALIASES[name]
        return find_record(row_id).embedding(role)
    parts = name.split(":")
    if len(parts) >= 2:
        row_id, role = parts[0], parts[1]
        params: dict[str, int] = {}
        for extra in parts[2:]:
            k, _, v = extra.partition("=")
            params[k] = int(v)
        rec = find_record(row_id, **params)
        if role not in rec.embeddings:
            raise UnsupportedRecordError(f"record {rec.key} has no embedding {role!r}")
        return rec.embedding(role)
    raise UnsupportedRecordError(
        f"unknown embedding {name!r}; use an alias or row:role[:n=K] syntax"
    )


def gl_variant(n: int) -> QuadrupleRecord:
    """The GL-style variant of the (iii)/(iv) family used for power-sum checks.

    G = U(2n+2) over H = Sp(n+1), G' = U(2n+1) over L' = U(2n)xU(1) over
    H' = Sp(n).  Built programmatically; not part of the bundled tables.
    """
    from ._catalog_build import build_gl_variant

    return build_gl_variant(n)
