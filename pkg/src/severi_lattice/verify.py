"""Verification harness: drives every cross-check over a polygon corpus.

Each check pits a formula path against an independent oracle (brute-force
point scans, exhaustive direction searches, literal condition tests) and
reports pass/fail counts.  Used by the ``verify`` CLI command and by the
acceptance suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from . import severi
from .corpus import (
    CorpusSpec,
    apply_affine_map,
    enumerate_corpus,
    random_polygon,
    random_unimodular_map,
)
from .errors import DomainError
from .intmat import IntMat, invariant_factors, minor_gcd
from .lattices import AffineLattice2, rotate90
from .polygons import InteriorClassification, LatticePolygon, brute_force_width

__all__ = [
    "CheckOutcome",
    "VerificationReport",
    "run_verification",
    "random_homogeneous_matrix",
    "perturb_homogeneous",
    "random_unimodular",
    "random_gl_h",
]


@dataclass
class CheckOutcome:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: Optional[str] = None

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = detail()


@dataclass
class VerificationReport:
    checks: list[CheckOutcome]

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks)

    def table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [f"{'check'.ljust(width)}  pass     fail"]
        for c in self.checks:
            lines.append(f"{c.name.ljust(width)}  {c.passed:<8d} {c.failed:<8d}")
            if c.first_failure:
                lines.append(f"  first failure: {c.first_failure}")
        status = "ALL CHECKS PASSED" if self.ok else "FAILURES DETECTED"
        lines.append(status)
        return "\n".join(lines)


# -- random matrix machinery (shared with the acceptance suite) -----------


def random_unimodular(n: int, rng: random.Random, max_ops: int = 20) -> IntMat:
    """Random GL_n(Z) element: a short product of elementary operations."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(1, max_ops)):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice((-3, -2, -1, 1, 2, 3))
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 2:
            rows[i] = [-x for x in rows[i]]
    return IntMat.from_rows(rows)


def random_gl_h(n: int, rng: random.Random, max_ops: int = 20) -> IntMat:
    """Random element of GL_n^h(Z) (unimodular, fixing the all-ones vector).

    Generators: permutations and paired transvections that add c times one
    coordinate to a second while subtracting it from a third, which keeps
    every row sum equal to one.
    """
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n == 1:
        return IntMat.from_rows(rows)
    for _ in range(rng.randint(1, max_ops)):
        if n >= 3 and rng.randrange(2):
            i, j, k = rng.sample(range(n), 3)
            c = rng.choice((-3, -2, -1, 1, 2, 3))
            # right-multiplication matrix I + c*e_i (e_j - e_k)^T acts on rows
            rows[i] = [
                x + c * (y - z) for x, y, z in zip(rows[i], rows[j], rows[k])
            ]
        else:
            i, j = rng.sample(range(n), 2)
            rows[i], rows[j] = rows[j], rows[i]
    return IntMat.from_rows(rows)


def random_homogeneous_matrix(
    rng: random.Random, max_rows: int = 6, max_cols: int = 8, bound: int = 9
) -> IntMat:
    """Random zero-row-sum matrix: random entries plus a balancing column."""
    s = rng.randint(1, max_rows)
    c = rng.randint(1, max_cols)
    rows = []
    for _ in range(s):
        r = [rng.randint(-bound, bound) for _ in range(c)]
        r.append(-sum(r))
        rows.append(r)
    return IntMat.from_rows(rows)


def perturb_homogeneous(x: IntMat, rng: random.Random, max_ops: int = 20) -> IntMat:
    """A random point of the GL_s(Z) x GL_l^h(Z) orbit of ``x``.

    Applies elementary operations directly: arbitrary row operations on the
    left, and on the right only column permutations and paired column
    operations (add c * col_i to col_j, subtract it from col_k), which are
    exactly the elementary factors of GL^h.
    """
    s, l = x.rows, x.cols
    cols = x.to_cols()
    gb = rng.getrandbits
    for _ in range(4 + gb(4)):
        bits = gb(24)
        kind = bits & 3
        if kind == 0 and s > 1:
            i = (bits >> 2) % s
            j = (bits >> 7) % s
            if i != j:
                c = ((bits >> 12) % 6) - 3
                if c == 0:
                    c = 3
                for col in cols:
                    col[i] += c * col[j]
        elif kind == 1:
            i = (bits >> 2) % l
            j = (bits >> 7) % l
            if i != j:
                cols[i], cols[j] = cols[j], cols[i]
        elif kind == 2 and l > 2:
            i = (bits >> 2) % l
            j = (bits >> 7) % l
            k = (bits >> 12) % l
            if i != j and i != k and j != k:
                c = ((bits >> 17) % 6) - 3
                if c == 0:
                    c = 3
                ci = cols[i]
                cols[j] = [x0 + c * y0 for x0, y0 in zip(cols[j], ci)]
                cols[k] = [x0 - c * y0 for x0, y0 in zip(cols[k], ci)]
        elif s > 1:
            i = (bits >> 2) % s
            j = (bits >> 7) % s
            if i != j:
                for col in cols:
                    col[i], col[j] = col[j], col[i]
    flat = tuple(v for row in zip(*cols) for v in row)
    return IntMat(s, l, flat)


# -- polygon checks --------------------------------------------------------


def run_verification(
    max_coord: int = 4,
    trials: int = 100,
    seed: int = 0,
    width_oracle_sup_norm: int = 25,
) -> VerificationReport:
    """Run the full battery over the exhaustive corpus plus random trials."""
    corpus = enumerate_corpus(CorpusSpec(max_coordinate=max_coord))
    pick_z2 = CheckOutcome("pick identity over Z^2")
    pick_m0 = CheckOutcome("pick identity over M0")
    width_oracle = CheckOutcome("lattice width vs brute force")
    lemma = CheckOutcome("empty interior lemma")
    counts = CheckOutcome("count formula vs oracle")
    factors_check = CheckOutcome("normal matrix invariant factors (1, idx)")
    rotation = CheckOutcome("rotation duality M0 <-> N0")
    rank_width = CheckOutcome("width-one rank criterion")
    signature = CheckOutcome("component signature shape")
    monotone = CheckOutcome("interior counts grow with the lattice")
    unimodular = CheckOutcome("unimodular invariance of the count")
    random_counts = CheckOutcome("count formula vs oracle (random polygons)")

    for poly in corpus:
        profile = severi.build_profile(poly)
        pick_z2.record(poly.verify_pick(AffineLattice2.standard()), lambda: repr(poly))
        pick_m0.record(poly.verify_pick(profile.m0), lambda: repr(poly))

        w_alg = poly.lattice_width(AffineLattice2.standard())
        w_ref = brute_force_width(poly, width_oracle_sup_norm)
        width_oracle.record(w_alg == w_ref, lambda: f"{poly!r}: {w_alg} vs {w_ref}")

        empty = not poly.interior_points()
        cls = poly.classify_interior_empty(AffineLattice2.standard())
        lemma.record(
            empty == (cls is not InteriorClassification.NON_EMPTY_INTERIOR),
            lambda: f"{poly!r}: interior empty={empty} classified {cls}",
        )

        formula = severi.count_components(poly)
        oracle = severi.count_components_oracle(poly)
        counts.record(formula == oracle, lambda: f"{poly!r}: {formula} vs {oracle}")

        fs = invariant_factors(profile.a_delta)
        g1 = minor_gcd(profile.a_delta, 1)
        g2 = minor_gcd(profile.a_delta, 2)
        factors_check.record(
            fs == (1, profile.idx) and g1 == 1 and g2 == profile.idx,
            lambda: f"{poly!r}: snf {fs}, minors ({g1}, {g2}), idx {profile.idx}",
        )

        rotation.record(
            rotate90(profile.m0.linear_part()) == profile.n0, lambda: repr(poly)
        )

        pair = severi.width_one_by_rank(profile)
        w_m0 = poly.lattice_width(profile.m0.linear_part())[0]
        rank_width.record(
            (pair is not None) == (w_m0 == 1),
            lambda: f"{poly!r}: pair {pair}, width {w_m0}",
        )

        z = severi.component_signature(profile)
        blocks_ok = all(
            z[i] == z[i - 1]
            for i in range(1, profile.l)
            if profile.owner[i] == profile.owner[i - 1]
        )
        signature.record(
            sum(z) == 0 and blocks_ok, lambda: f"{poly!r}: z = {z}"
        )

        base = len(poly.interior_points_in(profile.m0))
        mono_ok = True
        for comp in severi.enumerate_components(poly):
            if comp.d > 1 and comp.interior_count <= base:
                mono_ok = False
        monotone.record(mono_ok, lambda: repr(poly))

    rng = random.Random(seed)
    for _ in range(trials):
        poly = random_polygon(rng, 8)
        formula = severi.count_components(poly)
        oracle = severi.count_components_oracle(poly)
        random_counts.record(
            formula == oracle, lambda: f"{poly!r}: {formula} vs {oracle}"
        )
        for _ in range(3):
            image = _random_image_in_bounds(poly, rng)
            unimodular.record(
                severi.count_components(image) == formula,
                lambda: f"{poly!r} -> {image!r}",
            )

    return VerificationReport(
        checks=[
            pick_z2,
            pick_m0,
            width_oracle,
            lemma,
            counts,
            factors_check,
            rotation,
            rank_width,
            signature,
            monotone,
            unimodular,
            random_counts,
        ]
    )


def _random_image_in_bounds(
    poly: LatticePolygon, rng: random.Random
) -> LatticePolygon:
    """Apply a random unimodular affine map, resampling if coordinates leave
    the documented bound."""
    while True:
        umap = random_unimodular_map(rng)
        try:
            return apply_affine_map(umap, poly)
        except DomainError:
            continue
