"""Command-line surface: Hilbert series, embeddings, builds, parameter
search and the self-check suites.

Exit codes: 0 ok, 1 check failure, 2 input error.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction as Q
from typing import Dict, List, Optional, Tuple

import click

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from . import equations, hilbert, reps, variety, weyl
from .errors import WSF4Error
from .lattice import (
    FUNDAMENTAL_WEIGHTS,
    WEYL_VECTOR,
    ZERO,
    positive_roots,
    wv,
)


def _parse_mu(text: str) -> Tuple[int, int, int, int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise click.BadParameter("mu needs 4 comma-separated integers")
    return tuple(int(p) for p in parts)  # type: ignore[return-value]


def _numerator_text(num) -> str:
    bits = []
    for e in sorted(num.terms):
        c = num.terms[e]
        ex = Q(e, 2)
        exs = "" if ex == 0 else ("t" if ex == 1 else f"t^{ex}")
        if c == 1 and exs:
            cs = ""
        elif c == -1 and exs:
            cs = "-"
        else:
            cs = str(c) + ("*" if exs else "")
        bits.append(cs + exs if exs else str(c))
    out = " + ".join(bits)
    return out.replace("+ -", "- ")


def _fail_input(err: Exception) -> None:
    click.echo(f"error: {type(err).__name__}: {err}", err=True)
    sys.exit(2)


@click.group()
def main() -> None:
    """Exact Hilbert series and builds of weighted homogeneous F4 varieties."""


@main.command("hilbert")
@click.option("--mu", default="0,0,0,0", show_default=True, help="coweight a1,a2,a3,a4")
@click.option("--u", "u", default=1, show_default=True, type=int)
@click.option("--terms", default=0, type=int, help="also print this many expansion coefficients")
@click.option("--engine", type=click.Choice(["compact", "general"]), default="compact", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def cmd_hilbert(mu: str, u: int, terms: int, engine: str, fmt: str) -> None:
    """Hilbert series for parameters (mu, u)."""
    try:
        p = hilbert.HilbertParams(_parse_mu(mu), u)
        series = hilbert.hs_general(p) if engine == "general" else hilbert.hs_compact(p)
        coeffs = series.expand(terms) if terms else None
    except WSF4Error as err:
        _fail_input(err)
    if fmt == "json":
        doc = series.to_json_dict()
        if coeffs is not None:
            doc["coefficients"] = coeffs
        click.echo(json.dumps(doc, sort_keys=True))
        return
    click.echo(f"numerator: {_numerator_text(series.numerator)}")
    click.echo(
        "denominator weights: "
        + ", ".join(str(w) for w in series.denominator_weights())
    )
    if coeffs is not None:
        click.echo(f"coefficients: {coeffs}")


@main.command("weights")
@click.option("--mu", default="0,0,0,0", show_default=True)
@click.option("--u", "u", default=1, show_default=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def cmd_weights(mu: str, u: int, fmt: str) -> None:
    """The 26 embedding weights and well-formedness of the ambient space."""
    try:
        emb = variety.embedding(_parse_mu(mu), u)
    except WSF4Error as err:
        _fail_input(err)
    wf = variety.is_wellformed_weights(emb.weights)
    if fmt == "json":
        click.echo(
            json.dumps(
                {"weights": list(emb.weights), "dim": emb.dim, "wellformed_gcd": wf},
                sort_keys=True,
            )
        )
        return
    click.echo(f"weights: {list(emb.weights)}")
    click.echo(f"dim: {emb.dim}  codim: {len(emb.weights) - 1 - emb.dim}")
    click.echo(f"wellformed (gcd half): {wf}")


def _build_from_config(doc: dict) -> variety.VarietyBuild:
    base = doc["base"]
    b = variety.VarietyBuild.from_embedding(
        variety.embedding(tuple(base["mu"]), int(base["u"]))
    )
    for _ in range(int(doc.get("cones", 0))):
        b = variety.cone(b)
    for sec in doc.get("sections", []):
        for _ in range(int(sec.get("count", 1))):
            b = variety.section(b, int(sec["d"]), bool(sec.get("quasilinear", False)))
    return b


def _report(b: variety.VarietyBuild) -> dict:
    deg = variety.degree(b)
    try:
        pts = variety.orbifold_point_count(b)
        orbifold: dict = {"count": pts}
        if pts:
            weights2 = sorted({w for w in b.weights if w != 1})
            sing = variety.QuotSingularity(2, (1, 1, 1)) if weights2 == [2] else None
            if sing and b.dim == 3:
                orbifold["type"] = [sing.r, list(sing.a)]
                orbifold["isolated"] = variety.is_isolated(sing)
                orbifold["terminal"] = variety.is_terminal(sing)
    except WSF4Error as err:
        orbifold = {"error": type(err).__name__}
    return {
        "mu": list(b.base.params.mu),
        "u": b.base.params.u,
        "cones": b.cones,
        "sections": [list(s) for s in b.section_degrees],
        "dim": b.dim,
        "weights": list(b.weights),
        "canonical_weight": b.canonical_weight,
        "wellformed_gcd": variety.is_wellformed_weights(b.weights),
        "degree": f"{deg.numerator}/{deg.denominator}" if deg.denominator != 1 else str(deg),
        "quasi_smoothness": "unverified (reported per construction only)",
        "orbifold": orbifold,
    }


@main.command("build")
@click.argument("config_path", type=click.Path(exists=True))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def cmd_build(config_path: str, fmt: str) -> None:
    """Execute a variety build recipe from a TOML config."""
    with open(config_path, "rb") as fh:
        doc = tomllib.load(fh)
    try:
        b = _build_from_config(doc)
        rep = _report(b)
    except WSF4Error as err:
        _fail_input(err)
    if fmt == "json":
        click.echo(json.dumps(rep, sort_keys=True))
        return
    for k in ("mu", "u", "cones", "dim", "weights", "canonical_weight", "degree"):
        click.echo(f"{k}: {rep[k]}")
    click.echo(f"wellformed (gcd half): {rep['wellformed_gcd']}")
    click.echo(f"orbifold: {rep['orbifold']}")
    click.echo(f"quasi-smoothness: {rep['quasi_smoothness']}")


def _canonical_mu(mu: Tuple[int, ...]) -> Tuple[int, ...]:
    """Sign-normalised, descending representative (mu and -mu coincide)."""
    s = tuple(sorted(mu, key=abs, reverse=True))
    for a in s:
        if a > 0:
            return mu
        if a < 0:
            return tuple(-x for x in mu)
    return mu


@main.command("search")
@click.option("--mu-bound", default=1, show_default=True, type=int)
@click.option("--u-max", default=2, show_default=True, type=int)
@click.option("--canonical-min", default=-200, show_default=True, type=int)
@click.option("--canonical-max", default=200, show_default=True, type=int)
@click.option("--wellformed/--no-wellformed", default=False, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="json", show_default=True)
def cmd_search(
    mu_bound: int, u_max: int, canonical_min: int, canonical_max: int,
    wellformed: bool, fmt: str,
) -> None:
    """Sweep base parameters (mu, u); emits one candidate per line."""
    if mu_bound < 0 or u_max < 1 or canonical_min > canonical_max:
        _fail_input(ValueError("empty search specification"))
    B = mu_bound
    seen = set()
    for a1 in range(-B, B + 1):
        for a2 in range(-B, B + 1):
            for a3 in range(-B, B + 1):
                for a4 in range(-B, B + 1):
                    mu = (a1, a2, a3, a4)
                    if sum(mu) % 2 != 0:
                        continue
                    key = _canonical_mu(mu)
                    if key != mu or key in seen:
                        continue
                    seen.add(key)
                    for u in range(1, u_max + 1):
                        try:
                            emb = variety.embedding(mu, u)
                        except WSF4Error:
                            continue
                        canonical = -11 * u
                        if not canonical_min <= canonical <= canonical_max:
                            continue
                        wf = variety.is_wellformed_weights(emb.weights)
                        if wellformed and not wf:
                            continue
                        rec = {
                            "mu": list(mu),
                            "u": u,
                            "weights": list(emb.weights),
                            "canonical_weight": canonical,
                            "wellformed_gcd": wf,
                        }
                        if fmt == "json":
                            click.echo(json.dumps(rec, sort_keys=True))
                        else:
                            click.echo(
                                f"mu={mu} u={u} K={canonical} wf={wf} "
                                f"weights={list(emb.weights)}"
                            )


@main.command("rep")
@click.argument("label")
@click.option("--character", "show_char", is_flag=True, help="also print weight multiplicities")
def cmd_rep(label: str, show_char: bool) -> None:
    """Dimension (and optionally character) of w1..w4, 0, or k*w4 (e.g. 2w4)."""
    table = {"w1": 0, "w2": 1, "w3": 2, "w4": 3}
    try:
        if label == "0":
            hw = ZERO
        elif label in table:
            hw = FUNDAMENTAL_WEIGHTS[table[label]]
        elif label.endswith("w4"):
            from .lattice import scale

            hw = scale(int(label[:-2]), FUNDAMENTAL_WEIGHTS[3])
        else:
            raise click.BadParameter(f"unknown representation label {label!r}")
        click.echo(f"dim: {reps.weyl_dim(hw)}")
        if show_char:
            tab = reps.character(hw)
            for w in sorted(tab, reverse=True):
                coords = ",".join(str(c) for c in w)
                click.echo(f"({coords}): {tab[w]}")
    except WSF4Error as err:
        _fail_input(err)


def _check_weyl() -> List[Tuple[str, bool]]:
    g = weyl.generate()
    out = [("weyl order 1152", len(g) == 1152)]
    from .lattice import SIMPLE_ROOTS
    from .weyl import IDENTITY, mat_mul, reflection_matrix

    refl = [reflection_matrix(a) for a in SIMPLE_ROOTS]
    orders = {(0, 1): 3, (0, 2): 2, (0, 3): 2, (1, 2): 4, (1, 3): 2, (2, 3): 3}
    ok = all(mat_mul(r, r) == IDENTITY for r in refl)
    for (i, j), n in orders.items():
        m = mat_mul(refl[i], refl[j])
        acc = IDENTITY
        for _ in range(n):
            acc = mat_mul(acc, m)
        ok = ok and acc == IDENTITY
    out.append(("presentation relations", ok))
    out.append(("orbit of w4 has 24 elements", len(weyl.orbit(wv(1, 0, 0, 0), g)) == 24))
    return out


def _check_reps() -> List[Tuple[str, bool]]:
    from .lattice import OMEGA1, OMEGA4, scale

    return [
        ("dim w4 = 26", reps.weyl_dim(OMEGA4) == 26),
        ("dim w1 = 52", reps.weyl_dim(OMEGA1) == 52),
        ("dim 2w4 = 324", reps.weyl_dim(scale(2, OMEGA4)) == 324),
        ("homogeneous dims (37,15,10)", reps.homogeneous_dims(OMEGA4) == (37, 15, 10)),
        (
            "sym2 w4 = 2w4 + w4 + 0",
            sorted(reps.sym2_decompose(OMEGA4).items(), reverse=True)
            == [(scale(2, OMEGA4), 1), (OMEGA4, 1), (ZERO, 1)],
        ),
    ]


def _check_equations(exact: bool) -> List[Tuple[str, bool]]:
    qs = equations.load()
    e1 = [1] + [0] * 25
    p = hilbert.HilbertParams((0, 0, 0, 0), 1)
    coeffs = hilbert.hs_compact(p).expand(4)
    return [
        ("27 quadrics load", len(qs) == 27),
        ("span rank 27", equations.span_rank(qs, exact) == 27),
        ("degree-2 quotient 324", equations.graded_piece_dim(qs, 2, exact) == 324),
        (
            "degree-3 quotient matches series",
            equations.graded_piece_dim(qs, 3, exact) == coeffs[3],
        ),
        ("jacobian rank 10 at x1", equations.jacobian_rank_at(qs, e1) == 10),
    ]


def _check_cross(samples: int, seed: int) -> List[Tuple[str, bool]]:
    import random

    from .lattice import is_regular

    rng = random.Random(seed)
    out = []
    found = 0
    while found < samples:
        mu = tuple(rng.randint(-9, 9) for _ in range(4))
        if sum(mu) % 2 != 0 or not is_regular(mu):
            continue
        found += 1
        u = 1 + max(
            abs(hilbert.pairing2(w, mu)) // 2 for w in hilbert.orbit_weights()
        )
        p = hilbert.HilbertParams(mu, u)
        g = hilbert.hs_general(p)
        c = hilbert.hs_compact(p)
        same = g.numerator == c.numerator and g.expand(50) == c.expand(50)
        out.append((f"cross mu={mu} u={u}", same))
    return out


@main.command("check")
@click.argument("what", type=click.Choice(["weyl", "reps", "equations", "cross"]))
@click.option("--samples", default=5, show_default=True, type=int)
@click.option("--seed", default=20260826, show_default=True, type=int)
@click.option("--exact", is_flag=True, help="use exact rational ranks")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def cmd_check(what: str, samples: int, seed: int, exact: bool, fmt: str) -> None:
    """Run one of the verification suites."""
    if what == "weyl":
        results = _check_weyl()
    elif what == "reps":
        results = _check_reps()
    elif what == "equations":
        results = _check_equations(exact)
    else:
        results = _check_cross(samples, seed)
    failed = [name for name, ok in results if not ok]
    if fmt == "json":
        click.echo(json.dumps({name: ok for name, ok in results}, sort_keys=True))
    else:
        for name, ok in results:
            click.echo(f"{'PASS' if ok else 'FAIL'}  {name}")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
