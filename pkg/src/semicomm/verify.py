"""Reproduction harness: every headline value and theorem check as a report entry."""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator

from . import oracles
from .commgraph import (
    chromatic_number,
    clique_number,
    commuting_graph,
    cycle_space_dimension,
    girth,
    knit_degree,
)
from .constructions import (
    GIRTH4_MAPS,
    GIRTH4_TABLE,
    ReesMatrixData,
    alternating_group,
    cyclic_group,
    direct_product,
    girth4_band,
    girth_2n_family,
    girth_2n_from_transformations,
    partial_injections,
    rees_matrix,
    semigroup_from_maps,
    symmetric_group,
    symmetric_inverse_monoid,
    vagner_preston,
    zero_union,
)
from .enumeration import class_filter, semigroups_up_to
from .errors import UnknownTheorem
from .semigroup import (
    FiniteSemigroup,
    center,
    idempotents,
    inverse_map,
    is_clifford,
    is_commutative,
)
from .tableio import dumps


@dataclass
class CheckEntry:
    id: str
    expected: object
    actual: object
    passed: bool
    provenance: str
    ms: float
    witness: str | None = None


@dataclass
class VerificationReport:
    suite: str
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(e.passed for e in self.entries)

    def sorted(self) -> "VerificationReport":
        return VerificationReport(self.suite, sorted(self.entries, key=lambda e: e.id))

    def to_dict(self) -> dict:
        entries = []
        for e in self.entries:
            d = asdict(e)
            d["pass"] = d.pop("passed")
            entries.append(d)
        return {"suite": self.suite, "entries": entries, "overall": self.overall}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=str)

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            line = (f"{mark}  {e.id}: expected {e.expected!r} [{e.provenance}], "
                    f"actual {e.actual!r} ({e.ms:.1f} ms)")
            if e.witness:
                line += f"\n      {e.witness}"
            lines.append(line)
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'} "
                     f"({sum(e.passed for e in self.entries)}/{len(self.entries)})")
        return "\n".join(lines)


def _run(check_id: str, expected, provenance: str, fn: Callable[[], object],
         witnessed: bool = False) -> CheckEntry:
    """Time ``fn``; with ``witnessed`` it returns ``(actual, witness_text)``."""
    start = time.perf_counter()
    out = fn()
    ms = (time.perf_counter() - start) * 1000
    actual, witness = out if witnessed else (out, None)
    return CheckEntry(check_id, expected, actual, actual == expected, provenance,
                      round(ms, 3), witness)


def parse_range(text: str) -> list[int]:
    """``"3..6"`` -> [3, 4, 5, 6]; ``"2,5"`` and ``"4"`` also work."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


# --------------------------------------------------------------------------
# Published results


def _graph_summary(S: FiniteSemigroup, with_solvers: bool = True) -> dict:
    G = commuting_graph(S)
    out = {"vertices": G.vertex_count, "edges": G.edge_count, "girth": girth(G)}
    if with_solvers:
        out["clique"] = clique_number(G)
        out["chromatic"] = chromatic_number(G)
    return out


def check_band4() -> list[CheckEntry]:
    expected = [list(r) for r in GIRTH4_TABLE]

    def from_maps():
        S = semigroup_from_maps(list(GIRTH4_MAPS))
        return S.table.tolist()

    return [
        _run("band4.entries", expected, "published", lambda: girth4_band().table.tolist()),
        _run("band4.from-transformations", expected, "published", from_maps),
        _run("band4.graph", {"vertices": 4, "edges": 4, "girth": 4}, "published",
             lambda: _graph_summary(girth4_band(), with_solvers=False)),
    ]


def check_girth_family(ns: Iterable[int] = range(3, 7)) -> list[CheckEntry]:
    out = []
    for n in ns:
        def run(n=n):
            G = commuting_graph(girth_2n_family(n))
            return {"girth": girth(G), "cycle_space_dim": cycle_space_dimension(G)}
        out.append(_run(f"girth.family.n={n}", {"girth": 2 * n, "cycle_space_dim": 1},
                        "published", run))
    return out


def check_crosscheck(ns: Iterable[int] = (3, 4)) -> list[CheckEntry]:
    return [_run(f"girth.crosscheck.n={n}", True, "oracle",
                 lambda n=n: girth_2n_family(n) == girth_2n_from_transformations(n))
            for n in ns]


def check_groups() -> list[CheckEntry]:
    return [
        _run("groups.sym3", {"vertices": 5, "edges": 1, "girth": None, "clique": 2,
                             "chromatic": 2}, "published",
             lambda: _graph_summary(symmetric_group(3))),
        _run("groups.alt4", {"vertices": 11, "edges": 7, "girth": 3, "clique": 3,
                             "chromatic": 3}, "published",
             lambda: _graph_summary(alternating_group(4))),
    ]


def _sym3_times_cyclic(n: int) -> FiniteSemigroup:
    return direct_product([symmetric_group(3), cyclic_group(n)])


def check_direct_products(ns: Iterable[int] = range(1, 5), clique: bool = True,
                          chromatic: bool = True) -> list[CheckEntry]:
    out = []
    for n in ns:
        if clique:
            out.append(_run(f"clique.sym3xC{n}", 2 * n, "published",
                            lambda n=n: clique_number(commuting_graph(_sym3_times_cyclic(n)))))
        if chromatic:
            out.append(_run(f"chromatic.sym3xC{n}", 2 * n, "published",
                            lambda n=n: chromatic_number(commuting_graph(_sym3_times_cyclic(n)))))
    return out


def a4_with_sym3_copies(k: int) -> FiniteSemigroup:
    """Zero-union of A4 with ``k - 1`` copies of Sym(3)."""
    return zero_union([alternating_group(4)] + [symmetric_group(3)] * (k - 1))


def check_zero_unions(ks: Iterable[int] = (2, 3, 4), clique: bool = True,
                      chromatic: bool = True) -> list[CheckEntry]:
    out = []
    for k in ks:
        def run(k=k):
            S = a4_with_sym3_copies(k)
            res = {"clifford": is_clifford(S)}
            G = commuting_graph(S)
            if clique:
                res["clique"] = clique_number(G)
            if chromatic:
                res["chromatic"] = chromatic_number(G)
            return res
        expected = {"clifford": True}
        if clique:
            expected["clique"] = 2 * k + 1
        if chromatic:
            expected["chromatic"] = 2 * k + 1
        prefix = "" if clique and chromatic else ("clique." if clique else "chromatic.")
        out.append(_run(f"{prefix}zerounion.k={k}", expected, "published", run))
    return out


def check_knit(ms: Iterable[int] = (2, 3, 4)) -> list[CheckEntry]:
    out = []
    for m in ms:
        def run(m=m):
            S = symmetric_inverse_monoid(m)
            res = knit_degree(S)
            if res is None:
                return None, "no left paths"
            length, wit = res
            if not wit.is_valid(S):
                return "invalid witness", str(wit)
            return length, "witness " + " - ".join(S.label(x) for x in wit.vertices)
        out.append(_run(f"knit.I{m}", None if m == 2 else 1, "published", run, witnessed=True))
    return out


def vagner_preston_ok(S: FiniteSemigroup) -> bool:
    rho = vagner_preston(S)
    if len(set(rho)) != S.order:
        return False
    if not all(r.is_injective() for r in rho):
        return False
    t = S.table
    return all(rho[x] * rho[y] == rho[int(t[x, y])]
               for x in range(S.order) for y in range(S.order))


def check_vagner_preston(ms: Iterable[int] = (2, 3)) -> list[CheckEntry]:
    return [_run(f"vp.I{m}", True, "published",
                 lambda m=m: vagner_preston_ok(symmetric_inverse_monoid(m))) for m in ms]


# --------------------------------------------------------------------------
# Lemma-level identities


def clifford_lemma_failures(S: FiniteSemigroup) -> list[tuple[int, int]]:
    """Pairs breaking ``xy=yx <=> x'y=yx'`` or ``xxy=xyx => xy=yx``."""
    inv = inverse_map(S)
    t = S.table
    bad = []
    for x in range(S.order):
        xi = inv[x]
        for y in range(S.order):
            commute = t[x, y] == t[y, x]
            if commute != (t[xi, y] == t[y, xi]):
                bad.append((x, y))
            elif t[t[x, x], y] == t[t[x, y], x] and not commute:
                bad.append((x, y))
    return bad


def dom_im_lemma_failures(m: int = 3) -> list[str]:
    """In I_m, ``dom a != im a`` forces distinct non-central idempotents ``aa'`` and ``a'a``
    that fail to commute with ``a``."""
    maps = partial_injections(m)
    S = symmetric_inverse_monoid(m)
    inv = inverse_map(S)
    Z = center(S)
    E = idempotents(S)
    t = S.table
    bad = []
    for a, alpha in enumerate(maps):
        if alpha.domain == alpha.image:
            continue
        e1, e2 = int(t[a, inv[a]]), int(t[inv[a], a])
        ok = (e1 != e2 and e1 in E and e2 in E and e1 not in Z and e2 not in Z
              and t[a, e1] != t[e1, a] and t[a, e2] != t[e2, a])
        if not ok:
            bad.append(str(alpha))
    return bad


def constructed_suite() -> list[FiniteSemigroup]:
    """Named constructions used as a non-exhaustive test corpus."""
    c2 = cyclic_group(2)
    suite = [
        symmetric_group(3), alternating_group(4), cyclic_group(4),
        _sym3_times_cyclic(2), _sym3_times_cyclic(3),
        a4_with_sym3_copies(2), a4_with_sym3_copies(3),
        zero_union([symmetric_group(3), cyclic_group(3)]),
        symmetric_inverse_monoid(2), symmetric_inverse_monoid(3),
        girth4_band(), girth_2n_family(3), girth_2n_family(4),
        rees_matrix(ReesMatrixData(c2, 2, 2, ((0, 0), (0, 1)))),
        rees_matrix(ReesMatrixData(symmetric_group(3), 2, 1, ((0, 1),))),
        direct_product([girth4_band(), c2]),
    ]
    return suite


def check_lemmas(max_order: int = 4) -> list[CheckEntry]:
    def constructed():
        cliffords = [S for S in constructed_suite() if is_clifford(S)]
        bad = [S.name for S in cliffords if clifford_lemma_failures(S)]
        return len(bad), f"clifford instances={len(cliffords)}" + (f" failing={bad}" if bad else "")

    def enumerated():
        count, bad = 0, []
        for S in semigroups_up_to(max_order, "clifford"):
            count += 1
            if clifford_lemma_failures(S):
                bad.append(dumps(S))
        return len(bad), f"clifford instances={count}" + ("\n" + "\n".join(bad) if bad else "")

    def dom_im():
        bad = dom_im_lemma_failures(3)
        return len(bad), ("failing " + ", ".join(bad)) if bad else None

    return [
        _run("lemma.clifford.constructed", 0, "published", constructed, witnessed=True),
        _run(f"lemma.clifford.order<={max_order}", 0, "oracle", enumerated, witnessed=True),
        _run("lemma.dom-im.I3", 0, "published", dom_im, witnessed=True),
    ]


# --------------------------------------------------------------------------
# Theorem checks over all small semigroups


def _inverse_clique(S: FiniteSemigroup) -> bool:
    G = commuting_graph(S)
    return clique_number(G) >= 2 and chromatic_number(G) >= 2


def _clifford_no_left_paths(S: FiniteSemigroup) -> bool:
    return knit_degree(S) is None


def _inverse_girth(S: FiniteSemigroup) -> bool:
    return girth(commuting_graph(S)) in (None, 3)


def _cr_knit(S: FiniteSemigroup) -> bool:
    res = knit_degree(S)
    return res is None or res[0] != 1


@dataclass(frozen=True)
class Theorem:
    id: str
    class_spec: str
    holds: Callable[[FiniteSemigroup], bool]
    statement: str


THEOREMS: dict[str, Theorem] = {t.id: t for t in (
    Theorem("inverse-clique-ge-2", "inverse+non-commutative", _inverse_clique,
            "non-commutative inverse: clique and chromatic number at least 2"),
    Theorem("clifford-no-left-paths", "clifford+non-commutative", _clifford_no_left_paths,
            "non-commutative Clifford: no left paths"),
    Theorem("inverse-girth-3", "inverse+non-commutative", _inverse_girth,
            "non-commutative inverse with a cycle: girth 3"),
    Theorem("cr-knit-ne-1", "completely-regular+non-commutative", _cr_knit,
            "non-commutative completely regular: knit degree is not 1"),
)}


def _theorem_entry(check_id: str, theorem: Theorem, corpus: Iterator[FiniteSemigroup],
                   provenance: str) -> CheckEntry:
    def run():
        count, bad = 0, []
        for S in corpus:
            if not class_filter(theorem.class_spec)(S):
                continue
            count += 1
            if not theorem.holds(S):
                bad.append(dumps(S))
        witness = f"instances={count}"
        if bad:
            witness += "\ncounterexamples:\n" + "\n".join(bad)
        return len(bad), witness
    return _run(check_id, 0, provenance, run, witnessed=True)


def exhaustive_check(theorem_id: str, max_order: int = 4,
                     allow_long: bool = False) -> VerificationReport:
    """Run one theorem over every semigroup of order ``<= max_order``."""
    try:
        theorem = THEOREMS[theorem_id]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem {theorem_id!r}; "
                             f"known: {', '.join(sorted(THEOREMS))}") from None
    corpus = semigroups_up_to(max_order, theorem.class_spec, allow_long=allow_long)
    entry = _theorem_entry(f"exhaustive.{theorem_id}.order<={max_order}", theorem,
                           corpus, "oracle")
    return VerificationReport(f"exhaustive:{theorem_id}", [entry])


def check_exhaustive(max_order: int = 4, allow_long: bool = False,
                     constructed: bool = True) -> list[CheckEntry]:
    out = []
    for tid in THEOREMS:
        out.extend(exhaustive_check(tid, max_order, allow_long).entries)
    if constructed:
        suite = [S for S in constructed_suite() if not is_commutative(S)]
        for tid, theorem in THEOREMS.items():
            out.append(_theorem_entry(f"constructed.{tid}", theorem, iter(suite), "published"))
    return out


# --------------------------------------------------------------------------
# Solver oracles


def solver_mismatches(count: int = 200, seed: int = 0, max_vertices: int = 12) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for k in range(count):
        G = oracles.random_graph(rng, max_vertices)
        fast = (girth(G), clique_number(G), chromatic_number(G))
        slow = (oracles.girth(G), oracles.clique_number(G), oracles.chromatic_number(G))
        if fast != slow:
            bad.append(f"graph {k}: edges={G.edges()} fast={fast} brute={slow}")
    return bad


def check_solvers(count: int = 200, seed: int = 0) -> list[CheckEntry]:
    def run():
        bad = solver_mismatches(count, seed)
        return len(bad), (f"graphs={count}" + ("\n" + "\n".join(bad) if bad else ""))
    return [_run("solvers.random-graphs", 0, "oracle", run, witnessed=True)]


# --------------------------------------------------------------------------


SUITES = ("all", "band4", "girth", "groups", "clique", "chromatic", "knit", "vp",
          "lemma", "exhaustive", "solvers")


def run_suite(suite: str = "all", n_range: list[int] | None = None, max_order: int = 4,
              allow_long: bool = False) -> VerificationReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    entries: list[CheckEntry] = []
    want = (lambda name: suite in ("all", name))
    if want("band4"):
        entries += check_band4()
    if want("girth"):
        entries += check_girth_family(n_range if suite == "girth" and n_range else range(3, 7))
        entries += check_crosscheck()
    if want("groups"):
        entries += check_groups()
    if want("clique"):
        entries += check_direct_products(
            n_range if suite == "clique" and n_range else range(1, 5), chromatic=False)
        entries += check_zero_unions(chromatic=False)
    if want("chromatic"):
        entries += check_direct_products(
            n_range if suite == "chromatic" and n_range else range(1, 5), clique=False)
        entries += check_zero_unions(clique=False)
    if want("knit"):
        entries += check_knit(n_range if suite == "knit" and n_range else (2, 3, 4))
    if want("vp"):
        entries += check_vagner_preston()
    if want("lemma"):
        entries += check_lemmas(max_order)
    if want("exhaustive"):
        entries += check_exhaustive(max_order, allow_long)
    if want("solvers"):
        entries += check_solvers()
    return VerificationReport(suite, entries).sorted()
