"""Programmatic construction of the bundled catalog.

Run ``python -m hsb._catalog_build`` to regenerate ``data/catalog.json``.
The JSON file is the runtime source of truth; this module exists so the
bundled data stays reproducible.
"""

from __future__ import annotations

from itertools import product as _cartesian
from pathlib import Path

from .catalog import (
    GroupInfo,
    QuadrupleRecord,
    RealFormRow,
    catalog_to_json,
)
from .characters import EmbeddingSpec
from .lattice import RootSystem, Weight, build_root_system, product_system

M2Row = tuple[int, ...]


def _rows(n_rows: int, n_cols: int, entries: dict[tuple[int, int], int]) -> tuple[M2Row, ...]:
    return tuple(
        tuple(entries.get((r, c), 0) for c in range(n_cols)) for r in range(n_rows)
    )


def _ident(k: int) -> tuple[M2Row, ...]:
    return _rows(k, k, {(i, i): 2 for i in range(k)})


def _drop_tail(k: int, n_cols: int) -> tuple[M2Row, ...]:
    return _rows(k, n_cols, {(i, i): 2 for i in range(k)})


def _emb(name, source: GroupInfo, target: GroupInfo, m2) -> EmbeddingSpec:
    return EmbeddingSpec(
        name=name,
        source=source.system,
        target=target.system,
        matrix2=m2,
        source_spin=source.spin,
    )


def _gl(k: int) -> RootSystem:
    """The U(k) weight lattice: gl-style A-factor with k coordinates."""
    return product_system([("A", k - 1)])


def _record(rid, params, groups, embeddings, real_forms, computable=True, defining=None):
    return QuadrupleRecord(
        id=rid,
        params=tuple(sorted(params.items())),
        groups=groups,
        embeddings=embeddings,
        real_forms=tuple(real_forms),
        spherical=True,
        computable=computable,
        defining_images=defining or {},
    )


# ---------------------------------------------------------------------------
# real-form rows per family (Table data; labels kept symbolic)
# ---------------------------------------------------------------------------


def _rf(g, h, gp, hp, fiber, fiber_compact, hp_compact):
    return RealFormRow(g, h, gp, hp, fiber, fiber_compact, hp_compact)


_REAL_FORMS = {
    "i": [
        _rf("SO(2p,2q)", "SO(2p,2q-1)", "U(p,q)", "U(p,q-1)", "S^1", True, False),
        _rf("SO(n,n)", "SO(n,n-1)", "GL(n,R)", "GL(n-1,R)", "R", False, False),
    ],
    "ii": [
        _rf("SO(2p,2q)", "U(p,q)", "SO(2p,2q-1)", "U(p,q-1)", "OU_{p,q-1}", False, False),
        _rf("SO(n,n)", "GL(n,R)", "SO(n,n-1)", "GL(n-1,R)", "OG_{n-1}", False, False),
    ],
    "iii": [
        _rf("SU(2p,2q)", "U(2p,2q-1)", "Sp(p,q)", "Sp(p,q-1)·U(1)", "S^2", True, False),
        _rf(
            "SL(2n,R)",
            "GL(2n-1,R)",
            "Sp(n,R)",
            "Sp(n-1,R)·GL(1,R)",
            "S^{1,1}",
            False,
            False,
        ),
    ],
    "iv": [
        _rf("SU(2p,2q)", "Sp(p,q)", "U(2p,2q-1)", "Sp(p,q-1)·U(1)", "US_{p,q-1}", False, False),
        _rf(
            "SL(2n,R)",
            "Sp(n,R)",
            "GL(2n-1,R)",
            "Sp(n-1,R)·GL(1,R)",
            "GS_{n-1}",
            False,
            False,
        ),
    ],
    "v": [
        _rf(
            "SO(4p,4q)",
            "SO(4p,4q-1)",
            "Sp(p,q)·Sp(1)",
            "Sp(p,q-1)·diag(Sp(1))",
            "S^3",
            True,
            False,
        ),
    ],
    "vi": [
        _rf("SO(8,8)", "SO(8,7)", "Spin(8,1)", "Spin(7)", "S^7", True, True),
    ],
    "vii": [
        _rf(
            "SO(4,4)",
            "Spin(4,3)",
            "SO(4,1)·SO(3)",
            "SU(2)·diag(SU(2))",
            "S^3",
            True,
            True,
        ),
    ],
    "viii": [
        _rf(
            "SO(4,3)",
            "G2(R)",
            "SO(4,1)·SO(2)",
            "SU(2)·diag(SO(2))",
            "S^3",
            True,
            True,
        ),
        _rf(
            "SO(4,3)",
            "G2(R)",
            "SO(2,3)·SO(2)",
            "SL(2,R)·diag(SO(2))",
            "S^{2,1}",
            False,
            False,
        ),
        _rf(
            "SO(4,3)",
            "G2(R)",
            "SO(3,2)·SO(1,1)",
            "SL(2,R)·diag(SO(1,1))",
            "S^{2,1}",
            False,
            False,
        ),
    ],
    "ix": [
        _rf("SO(4,3)", "G2(R)", "SO(3,3)", "SL(3,R)", "R", False, False),
        _rf("SO(4,3)", "G2(R)", "SO(4,2)", "SU(2,1)", "S^1", True, False),
    ],
    "x": [
        _rf("SO(4,3)", "SO(3,3)", "G2(R)", "SL(3,R)", "pt", True, False),
        _rf("SO(4,3)", "SO(4,2)", "G2(R)", "SU(2,1)", "pt", True, False),
    ],
    "xi": [
        _rf("SO(4,4)", "Spin(4,3)", "SO(4,3)", "G2(R)", "pt", True, False),
    ],
    "xii": [
        _rf("SO(4,4)", "SO(4,3)", "Spin(4,3)", "G2(R)", "pt", True, False),
    ],
    "xiii": [
        _rf(
            "SO(4,4)",
            "Spin(4,3)",
            "SO(4,2)·SO(2)",
            "SU(2,1)·diag(SO(2))",
            "S^1",
            True,
            False,
        ),
        _rf(
            "SO(4,4)",
            "Spin(4,3)",
            "SO(3,3)·SO(1,1)",
            "SL(3,R)·diag(SO(1,1))",
            "R",
            False,
            False,
        ),
    ],
    "xiv": [
        _rf(
            "SO(4,4)",
            "SO(4,2)·SO(2)",
            "Spin(4,3)",
            "SU(2,1)·diag(SO(2))",
            "OU_{2,1}",
            False,
            False,
        ),
        _rf(
            "SO(4,4)",
            "SO(3,3)·SO(1,1)",
            "Spin(4,3)",
            "SL(3,R)·diag(SO(1,1))",
            "OG_3",
            False,
            False,
        ),
    ],
}


# ---------------------------------------------------------------------------
# computable families
# ---------------------------------------------------------------------------


def _row_i(n: int) -> QuadrupleRecord:
    g = GroupInfo(f"SO({2 * n + 2})", build_root_system("D", n + 1))
    h = GroupInfo(f"SO({2 * n + 1})", build_root_system("B", n))
    gp = GroupInfo(f"U({n + 1})", _gl(n + 1))
    hp = GroupInfo(f"U({n})", _gl(n))
    lp = GroupInfo(f"U({n})·U(1)", product_system([("A", n - 1), ("A", 0)]))
    groups = {"G": g, "H": h, "Gp": gp, "Lp": lp, "Hp": hp}
    emb = {
        "HinG": _emb("i:HinG", g, h, _drop_tail(n, n + 1)),
        "GpinG": _emb("i:GpinG", g, gp, _ident(n + 1)),
        "HpinLp": _emb("i:HpinLp", lp, hp, _drop_tail(n, n + 1)),
        "LpinGp": _emb("i:LpinGp", gp, lp, _ident(n + 1)),
        "HpinGp": _emb("i:HpinGp", gp, hp, _drop_tail(n, n + 1)),
    }
    return _record("i", {"n": n}, groups, emb, _REAL_FORMS["i"])


def _row_ii(n: int) -> QuadrupleRecord:
    g = GroupInfo(f"SO({2 * n + 2})", build_root_system("D", n + 1))
    h = GroupInfo(f"U({n + 1})", _gl(n + 1))
    gp = GroupInfo(f"SO({2 * n + 1})", build_root_system("B", n))
    hp = GroupInfo(f"U({n})", _gl(n))
    lp_sys = build_root_system("D", n) if n >= 2 else product_system([("A", 0)])
    lp = GroupInfo(f"SO({2 * n})", lp_sys)
    groups = {"G": g, "H": h, "Gp": gp, "Lp": lp, "Hp": hp}
    emb = {
        "HinG": _emb("ii:HinG", g, h, _ident(n + 1)),
        "GpinG": _emb("ii:GpinG", g, gp, _drop_tail(n, n + 1)),
        "HpinLp": _emb("ii:HpinLp", lp, hp, _ident(n)),
        "LpinGp": _emb("ii:LpinGp", gp, lp, _ident(n)),
        "HpinGp": _emb("ii:HpinGp", gp, hp, _ident(n)),
    }
    return _record("ii", {"n": n}, groups, emb, _REAL_FORMS["ii"])


def _row_iii(n: int) -> QuadrupleRecord:
    # SU quotients modeled on the U(2n+2) torus; dimension identity uses the
    # paper's SU labels
    g = GroupInfo(f"SU({2 * n + 2})", _gl(2 * n + 2))
    h = GroupInfo(f"U({2 * n + 1})", product_system([("A", 2 * n), ("A", 0)]))
    gp = GroupInfo(f"Sp({n + 1})", build_root_system("C", n + 1))
    hp = GroupInfo(f"Sp({n})·U(1)", product_system([("C", n), ("A", 0)]))
    lp = GroupInfo(f"Sp({n})·Sp(1)", product_system([("C", n), ("C", 1)]))
    groups = {"G": g, "H": h, "Gp": gp, "Lp": lp, "Hp": hp}
    sp_in_u = _rows(
        n + 1, 2 * n + 2, {(r, r): 2 for r in range(n + 1)} | {(r, n + 1 + r): -2 for r in range(n + 1)}
    )
    emb = {
        "HinG": _emb("iii:HinG", g, h, _ident(2 * n + 2)),
        "GpinG": _emb("iii:GpinG", g, gp, sp_in_u),
        "HpinLp": _emb("iii:HpinLp", lp, hp, _ident(n + 1)),
        "LpinGp": _emb("iii:LpinGp", gp, lp, _ident(n + 1)),
        "HpinGp": _emb("iii:HpinGp", gp, hp, _ident(n + 1)),
    }
    return _record("iii", {"n": n}, groups, emb, _REAL_FORMS["iii"])


def _iv_hp_in_gl(n: int, n_cols: int) -> tuple[M2Row, ...]:
    """Sp(n) x U(1) inside U(2n) x U(1) (or U(2n+1)): epsilon_r = a_r - a_{n+r}."""
    entries = {(r, r): 2 for r in range(n)}
    entries |= {(r, n + r): -2 for r in range(n)}
    entries[(n, n_cols - 1)] = 2
    return _rows(n + 1, n_cols, entries)


def _row_iv(n: int) -> QuadrupleRecord:
    g = GroupInfo(f"SU({2 * n + 2})", _gl(2 * n + 2))
    h = GroupInfo(f"Sp({n + 1})", build_root_system("C", n + 1))
    gp = GroupInfo(f"U({2 * n + 1})", _gl(2 * n + 1))
    hp = GroupInfo(f"Sp({n})·U(1)", product_system([("C", n), ("A", 0)]))
    lp = GroupInfo(f"U({2 * n})·U(1)", product_system([("A", 2 * n - 1), ("A", 0)]))
    groups = {"G": g, "H": h, "Gp": gp, "Lp": lp, "Hp": hp}
    sp_in_u = _rows(
        n + 1, 2 * n + 2, {(r, r): 2 for r in range(n + 1)} | {(r, n + 1 + r): -2 for r in range(n + 1)}
    )
    emb = {
        "HinG": _emb("iv:HinG", g, h, sp_in_u),
        "GpinG": _emb("iv:GpinG", g, gp, _drop_tail(2 * n + 1, 2 * n + 2)),
        "HpinLp": _emb("iv:HpinLp", lp, hp, _iv_hp_in_gl(n, 2 * n + 1)),
        "LpinGp": _emb("iv:LpinGp", gp, lp, _ident(2 * n + 1)),
        "HpinGp": _emb("iv:HpinGp", gp, hp, _iv_hp_in_gl(n, 2 * n + 1)),
    }
    return _record("iv", {"n": n}, groups, emb, _REAL_FORMS["iv"])


def _row_v(n: int) -> QuadrupleRecord:
    g = GroupInfo(f"SO({4 * n + 4})", build_root_system("D", 2 * n + 2))
    h = GroupInfo(f"SO({4 * n + 3})", build_root_system("B", 2 * n + 1))
    gp = GroupInfo(
        f"Sp({n + 1})·Sp(1)", product_system([("C", n + 1), ("C", 1)])
    )
    hp = GroupInfo(
        f"Sp({n})·diag(Sp(1))", product_system([("C", n), ("C", 1)])
    )
    lp = GroupInfo(
        f"Sp({n})·Sp(1)·Sp(1)",
        product_system([("C", n), ("C", 1), ("C", 1)]),
    )
    groups = {"G": g, "H": h, "Gp": gp, "Lp": lp, "Hp": hp}
    # H^{n+1} (x) H: e_i -> eps_i + delta, e_{n+1+i} -> eps_i - delta
    gp_entries: dict[tuple[int, int], int] = {}
    for r in range(n + 1):
        gp_entries[(r, r)] = 2
        gp_entries[(r, n + 1 + r)] = 2
    for c in range(n + 1):
        gp_entries[(n + 1, c)] = 2
        gp_entries[(n + 1, n + 1 + c)] = -2
    hp_in_lp = _rows(
        n + 1, n + 2, {(r, r): 2 for r in range(n)} | {(n, n): 2, (n, n + 1): 2}
    )
    emb = {
        "HinG": _emb("v:HinG", g, h, _drop_tail(2 * n + 1, 2 * n + 2)),
        "GpinG": _emb("v:GpinG", g, gp, _rows(n + 2, 2 * n + 2, gp_entries)),
        "HpinLp": _emb("v:HpinLp", lp, hp, hp_in_lp),
        "LpinGp": _emb("v:LpinGp", gp, lp, _ident(n + 2)),
        "HpinGp": _emb("v:HpinGp", gp, hp, hp_in_lp),
    }
    return _record("v", {"n": n}, groups, emb, _REAL_FORMS["v"])


def _spin16_matrix() -> tuple[M2Row, ...]:
    """Columns are the eight sign vectors (1, +-1, +-1, +-1)/1 (twice 1/2)."""
    rows = [[1] * 8]
    for r in range(3):
        rows.append([-1 if (c >> (2 - r)) & 1 else 1 for c in range(8)])
    return tuple(tuple(row) for row in rows)


_TRIALITY = (
    (1, 1, 1, 1),
    (1, 1, -1, -1),
    (1, -1, 1, -1),
)


def _spin_weights(rank: int, even_only: bool | None = None) -> list[Weight]:
    """All (+-1/2, ..., +-1/2) weights, optionally restricted by sign parity."""
    out = []
    for signs in _cartesian((1, -1), repeat=rank):
        if even_only is True and sum(1 for s in signs if s < 0) % 2:
            continue
        if even_only is False and sum(1 for s in signs if s < 0) % 2 == 0:
            continue
        out.append(Weight(signs))
    return out


def _row_vi() -> QuadrupleRecord:
    g = GroupInfo("SO(16)", build_root_system("D", 8))
    h = GroupInfo("SO(15)", build_root_system("B", 7))
    gp = GroupInfo("Spin(9)", build_root_system("B", 4), spin=True)
    lp = GroupInfo("Spin(8)", build_root_system("D", 4), spin=True)
    hp = GroupInfo("Spin(7)", build_root_system("B", 3), spin=True)
    groups = {"G": g, "H": h, "Gp": gp, "Lp": lp, "Hp": hp}
    emb = {
        "HinG": _emb("vi:HinG", g, h, _drop_tail(7, 8)),
        "GpinG": _emb("vi:GpinG", g, gp, _spin16_matrix()),
        "HpinLp": _emb("vi:HpinLp", lp, hp, _TRIALITY),
        "LpinGp": _emb("vi:LpinGp", gp, lp, _ident(4)),
        "HpinGp": _emb("vi:HpinGp", gp, hp, _TRIALITY),
    }
    e = lambda k, r: Weight([2 if i == k else 0 for i in range(r)])  # noqa: E731
    zero = lambda r: Weight([0] * r)  # noqa: E731
    defining = {
        # the 16 weights +-e_i map onto the 16 spin weights of Spin(9)
        "GpinG": (
            e(0, 8),
            tuple((w, 1) for w in _spin_weights(4)),
        ),
        # the vector representation of Spin(8) restricts to the 8-dim spin
        # representation of Spin(7) (triality twist)
        "HpinLp": (
            e(0, 4),
            tuple((w, 1) for w in _spin_weights(3)),
        ),
        # 9 = 8 + 1 under the spin-compatible chain
        "HpinGp": (
            e(0, 4),
            tuple((w, 1) for w in _spin_weights(3)) + ((zero(3), 1),),
        ),
        "HinG": (
            e(0, 8),
            tuple((e(i, 7), 1) for i in range(7))
            + tuple((-e(i, 7), 1) for i in range(7))
            + ((zero(7), 2),),
        ),
        "LpinGp": (
            e(0, 4),
            tuple((e(i, 4), 1) for i in range(4))
            + tuple((-e(i, 4), 1) for i in range(4))
            + ((zero(4), 1),),
        ),
    }
    return _record("vi", {}, groups, emb, _REAL_FORMS["vi"], defining=defining)


def _noncomputable(rid: str, labels: tuple[str, str, str, str, str]) -> QuadrupleRecord:
    g, h, gp, hp, lp = labels
    groups = {
        "G": GroupInfo(g, None),
        "H": GroupInfo(h, None),
        "Gp": GroupInfo(gp, None),
        "Lp": GroupInfo(lp, None),
        "Hp": GroupInfo(hp, None),
    }
    return _record(rid, {}, groups, {}, _REAL_FORMS[rid], computable=False)


_NONCOMPUTABLE_ROWS = {
    "vii": ("SO(8)", "Spin(7)", "SO(5)·SO(3)", "SU(2)·diag(SU(2))", "SO(4)·SO(3)"),
    "viii": ("SO(7)", "G2(-14)", "SO(5)·SO(2)", "SU(2)·diag(SO(2))", "SO(4)·SO(2)"),
    "ix": ("SO(7)", "G2(-14)", "SO(6)", "SU(3)", "U(3)"),
    "x": ("SO(7)", "SO(6)", "G2(-14)", "SU(3)", "SU(3)"),
    "xi": ("SO(8)", "Spin(7)", "SO(7)", "G2(-14)", "G2(-14)"),
    "xii": ("SO(8)", "SO(7)", "Spin(7)", "G2(-14)", "G2(-14)"),
    "xiii": (
        "SO(8)",
        "Spin(7)",
        "SO(6)·SO(2)",
        "SU(3)·diag(SO(2))",
        "U(3)·SO(2)",
    ),
    "xiv": (
        "SO(8)",
        "SO(6)·SO(2)",
        "Spin(7)",
        "SU(3)·diag(SO(2))",
        "Spin(6)",
    ),
}

PARAM_RANGE = {"i": (1, 4), "ii": (1, 4), "iii": (1, 4), "iv": (1, 4), "v": (1, 4)}

_BUILDERS = {"i": _row_i, "ii": _row_ii, "iii": _row_iii, "iv": _row_iv, "v": _row_v}


def build_gl_variant(n: int) -> QuadrupleRecord:
    g = GroupInfo(f"U({2 * n + 2})", _gl(2 * n + 2))
    h = GroupInfo(f"Sp({n + 1})", build_root_system("C", n + 1))
    gp = GroupInfo(f"U({2 * n + 1})", _gl(2 * n + 1))
    hp = GroupInfo(f"Sp({n})", build_root_system("C", n))
    lp = GroupInfo(f"U({2 * n})·U(1)", product_system([("A", 2 * n - 1), ("A", 0)]))
    groups = {"G": g, "H": h, "Gp": gp, "Lp": lp, "Hp": hp}
    sp_in_u = _rows(
        n + 1, 2 * n + 2, {(r, r): 2 for r in range(n + 1)} | {(r, n + 1 + r): -2 for r in range(n + 1)}
    )
    hp_in_lp = _rows(
        n, 2 * n + 1, {(r, r): 2 for r in range(n)} | {(r, n + r): -2 for r in range(n)}
    )
    emb = {
        "HinG": _emb("iv-gl:HinG", g, h, sp_in_u),
        "GpinG": _emb("iv-gl:GpinG", g, gp, _drop_tail(2 * n + 1, 2 * n + 2)),
        "HpinLp": _emb("iv-gl:HpinLp", lp, hp, hp_in_lp),
        "LpinGp": _emb("iv-gl:LpinGp", gp, lp, _ident(2 * n + 1)),
        "HpinGp": _emb("iv-gl:HpinGp", gp, hp, hp_in_lp),
    }
    return _record("iv-gl", {"n": n}, groups, emb, [])


def build_records() -> list[QuadrupleRecord]:
    records: list[QuadrupleRecord] = []
    for rid in ("i", "ii", "iii", "iv", "v"):
        lo, hi = PARAM_RANGE[rid]
        for n in range(lo, hi + 1):
            records.append(_BUILDERS[rid](n))
    records.append(_row_vi())
    for rid, labels in _NONCOMPUTABLE_ROWS.items():
        records.append(_noncomputable(rid, labels))
    return records


def main() -> None:
    path = Path(__file__).parent / "data" / "catalog.json"
    path.write_text(catalog_to_json(build_records()), "utf-8")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
