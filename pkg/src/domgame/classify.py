"""Class 0/1/2 labels, closed forms for trees, claim checkers and open-problem scanners."""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any

from .families import (cartesian_product, complete, corona, cycle, direct_product, family_D15,
                       family_F, family_G, generalized_corona, path, paw, star)
from .formats import emit_graph6, parse_graph6
from .game import GameSolver, Player, Variant, solve
from .graph import Graph, GraphError, bits, is_complete, is_connected, is_non_inclusive, is_tree
from .invariants import connected_domination_number, minimum_connected_dominating_sets


class ClassificationError(RuntimeError):
    """The two game values differ by something other than 0, 1 or 2."""

    def __init__(self, G: Graph, gamma_cg: int, gamma_tcg: int):
        super().__init__(f"gamma_tcg - gamma_cg = {gamma_tcg - gamma_cg} on {emit_graph6(G)}")
        self.graph = G
        self.gamma_cg = gamma_cg
        self.gamma_tcg = gamma_tcg


@dataclass(frozen=True)
class ClassLabel:
    cls: int
    gamma_cg: int
    gamma_tcg: int

    def to_dict(self) -> dict[str, int]:
        return {"gamma_cg": self.gamma_cg, "gamma_tcg": self.gamma_tcg, "class": self.cls}


@dataclass(frozen=True)
class VerificationResult:
    claim: str
    holds: bool
    counterexample: tuple[Graph, dict[str, Any]] | None = None
    observed: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.holds == (self.counterexample is not None):
            raise ValueError("a result carries a counterexample exactly when the claim fails")

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"claim": self.claim, "holds": self.holds, **self.observed}
        if self.counterexample is not None:
            G, values = self.counterexample
            out["counterexample"] = {"graph": emit_graph6(G), **values}
        return out


def _result(claim: str, G: Graph | None, holds: bool, observed: dict[str, Any]) -> VerificationResult:
    if G is not None:
        observed = {"graph": emit_graph6(G), **observed}
    if holds:
        return VerificationResult(claim, True, None, observed)
    return VerificationResult(claim, False, (G, dict(observed)), observed)


def game_values(G: Graph, order: Sequence[int] | None = None) -> tuple[int, int]:
    """``(gamma_cg, gamma_tcg)``, both Dominator-start."""
    return (solve(G, Variant.CONNECTED, Player.DOMINATOR, order),
            solve(G, Variant.TOTAL, Player.DOMINATOR, order))


def classify(G: Graph, order: Sequence[int] | None = None) -> ClassLabel:
    if not is_connected(G):
        raise GraphError("classification needs a connected graph")
    if G.n < 2:
        raise GraphError("classification needs at least two vertices")
    cg, tcg = game_values(G, order)
    if not 0 <= tcg - cg <= 2:
        raise ClassificationError(G, cg, tcg)
    return ClassLabel(tcg - cg, cg, tcg)


# trees


def _require_tree(T: Graph, least: int) -> None:
    if not is_tree(T):
        raise GraphError("input is not a tree")
    if T.n < least:
        raise GraphError(f"tree needs at least {least} vertices")


def tree_game_value(T: Graph) -> int:
    """gamma_cg of a tree: the number of non-leaves, and 1 for K_2."""
    _require_tree(T, 2)
    if T.n == 2:
        return 1
    return T.n - T.leaves()


def tree_class(T: Graph) -> int:
    """1 when every internal vertex carries a leaf (T is a corona by edgeless graphs), else 0."""
    _require_tree(T, 3)
    deg = T.degrees()
    for v in range(T.n):
        if deg[v] >= 2 and not any(deg[u] == 1 for u in bits(T.open_nbhd(v))):
            return 0
    return 1


# claim checkers


def verify_theorem3(G: Graph, order: Sequence[int] | None = None) -> VerificationResult:
    """gamma_cg <= gamma_tcg <= gamma_cg + 2."""
    cg, tcg = game_values(G, order)
    return _result("theorem3", G, cg <= tcg <= cg + 2, {"gamma_cg": cg, "gamma_tcg": tcg})


def verify_prop2(G: Graph, order: Sequence[int] | None = None,
                 gamma_tcg: int | None = None) -> VerificationResult:
    """gamma_tcg = 2 when gamma_c = 1, otherwise gamma_c <= gamma_tcg <= 2 gamma_c - 1."""
    gc, _ = connected_domination_number(G)
    tcg = solve(G, Variant.TOTAL, Player.DOMINATOR, order) if gamma_tcg is None else gamma_tcg
    holds = tcg == 2 if gc == 1 else gc <= tcg <= 2 * gc - 1
    return _result("prop2", G, holds, {"gamma_c": gc, "gamma_tcg": tcg})


def verify_prop4(G: Graph, order: Sequence[int] | None = None,
                 label: ClassLabel | None = None) -> VerificationResult:
    """Non-inclusive neighbourhoods imply Class 0; vacuous otherwise."""
    ok, witness = is_non_inclusive(G)
    if not ok:
        return _result("prop4", G, True, {"non_inclusive": False, "witness": list(witness)})
    label = classify(G, order) if label is None else label
    return _result("prop4", G, label.cls == 0, {"non_inclusive": True, **label.to_dict()})


def verify_prop6(G: Graph, H_list: Sequence[Graph]) -> VerificationResult:
    """Generalised coronas over connected G: gamma_cg = n(G), gamma_tcg = n(G) + 1."""
    if not is_connected(G):
        raise GraphError("the base graph must be connected")
    C = generalized_corona(G, H_list)
    cg, tcg = game_values(C)
    holds = cg == G.n and tcg == G.n + 1
    return _result("prop6", C, holds, {"n_base": G.n, "gamma_cg": cg, "gamma_tcg": tcg})


def verify_prop8(r: int) -> VerificationResult:
    """G_r has gamma_c = gamma_cg = 2r - 1, gamma_tcg = 2r + 1 and a unique minimum CDS X ∪ Y."""
    G = family_G(r)
    expected_cds = G.vertices(*[f"x{i}" for i in range(1, r + 1)], *[f"y{i}" for i in range(2, r + 1)])
    gc, _ = connected_domination_number(G)
    optimal = minimum_connected_dominating_sets(G)
    cg, tcg = game_values(G)
    holds = (gc == 2 * r - 1 and cg == 2 * r - 1 and tcg == 2 * r + 1
             and optimal == [expected_cds])
    return _result(f"prop8[r={r}]", G, holds, {
        "r": r, "gamma_c": gc, "gamma_cg": cg, "gamma_tcg": tcg,
        "min_cds_count": len(optimal), "min_cds_is_XY": optimal == [expected_cds],
    })


def verify_cor5a(G: Graph, H: Graph) -> VerificationResult:
    """The Cartesian product of non-trivial connected graphs is non-inclusive and Class 0."""
    P = cartesian_product(G, H)
    ok, witness = is_non_inclusive(P)
    label = classify(P)
    return _result("cor5a", P, ok and label.cls == 0,
                   {"non_inclusive": ok, "factors": [emit_graph6(G), emit_graph6(H)], **label.to_dict()})


def verify_tree(T: Graph, order: Sequence[int] | None = None) -> VerificationResult:
    """Closed forms for trees agree with the solver; no tree is Class 2."""
    label = classify(T, order)
    value, cls = tree_game_value(T), tree_class(T)
    holds = value == label.gamma_cg and cls == label.cls and label.cls != 2
    return _result("trees", T, holds, {"formula_value": value, "formula_class": cls,
                                       **label.to_dict()})


# scanning


def _parallel_map(fn: Callable[[str], Any], graphs: Iterable[Graph], workers: int,
                  chunk: int = 256) -> Iterator[Any]:
    """Apply ``fn`` to the graph6 encodings of ``graphs``; results keep input order."""
    codes = (emit_graph6(G) for G in graphs)
    if workers <= 1:
        yield from map(fn, codes)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, codes, chunksize=chunk)


def _theorem_checks(code: str, reverse: bool = False) -> list[VerificationResult]:
    G = parse_graph6(code)
    order = list(range(G.n))[::-1] if reverse else None
    t3 = verify_theorem3(G, order)
    cg, tcg = t3.observed["gamma_cg"], t3.observed["gamma_tcg"]
    out = [t3, verify_prop2(G, gamma_tcg=tcg)]
    if 0 <= tcg - cg <= 2:
        out.append(verify_prop4(G, label=ClassLabel(tcg - cg, cg, tcg)))
    return out


def _theorem_checks_reversed(code: str) -> list[VerificationResult]:
    return _theorem_checks(code, reverse=True)


def scan_theorems(graphs: Iterable[Graph], workers: int = 1,
                  reverse: bool = False) -> Iterator[list[VerificationResult]]:
    """Sandwich bound, gamma_c bounds and the non-inclusive rule per graph (graphs need n >= 2)."""
    fn = _theorem_checks_reversed if reverse else _theorem_checks
    yield from _parallel_map(fn, graphs, workers)


def _problem3_item(code: str) -> VerificationResult | None:
    G = parse_graph6(code)
    if is_complete(G):
        return None
    cg_s = solve(G, Variant.CONNECTED, Player.STALLER)
    tcg_s = solve(G, Variant.TOTAL, Player.STALLER)
    return _result("problem3", G, cg_s == tcg_s, {"gamma_cg_s": cg_s, "gamma_tcg_s": tcg_s})


def scan_problem3(graphs: Iterable[Graph], workers: int = 1) -> list[VerificationResult]:
    """Compare the Staller-start values on every non-complete graph; complete graphs are skipped."""
    return [r for r in _parallel_map(_problem3_item, graphs, workers) if r is not None]


def problem3_summary(results: Sequence[VerificationResult]) -> dict[str, Any]:
    equal = sum(r.holds for r in results)
    return {
        "compared": len(results),
        "equal": equal,
        "equality_rate": equal / len(results) if results else None,
        "counterexamples": [r.to_dict() for r in results if not r.holds],
    }


def _problem1_item(code: str) -> tuple[int, int] | None:
    G = parse_graph6(code)
    gc, _ = connected_domination_number(G)
    if gc < 2:
        return None
    return gc, solve(G, Variant.TOTAL, Player.DOMINATOR)


def scan_problem1(graphs: Iterable[Graph], workers: int = 1) -> dict[int, dict[str, Any]]:
    """Per gamma_c >= 2: which gamma_tcg values in [gamma_c, 2 gamma_c - 1] occur, and how often."""
    hist: dict[int, Counter] = {}
    for item in _parallel_map(_problem1_item, graphs, workers):
        if item is not None:
            hist.setdefault(item[0], Counter())[item[1]] += 1
    out = {}
    for gc in sorted(hist):
        window = range(gc, 2 * gc)
        out[gc] = {
            "counts": dict(sorted(hist[gc].items())),
            "hit": [v for v in window if v in hist[gc]],
            "missed": [v for v in window if v not in hist[gc]],
            "outside": sorted(v for v in hist[gc] if v not in window),
        }
    return out


# published regression values


def corona_cases() -> list[tuple[str, Graph, list[Graph]]]:
    """Generalised coronas over K_2, P_3, C_3, P_4 with K_1 / K_2 attachments."""
    K1, K2 = complete(1), complete(2)
    cases = []
    for base_name, base in (("K2", complete(2)), ("P3", path(3)), ("C3", cycle(3)), ("P4", path(4))):
        mixes = {
            "K1": [K1] * base.n,
            "K2": [K2] * base.n,
            "mixed": [K2 if i % 2 == 0 else K1 for i in range(base.n)],
        }
        for mix_name, hs in mixes.items():
            cases.append((f"{base_name};{mix_name}", base, hs))
    return cases


def _values_check(name: str, G: Graph, cg: int, tcg: int) -> VerificationResult:
    got = game_values(G)
    return _result(name, G, got == (cg, tcg),
                   {"gamma_cg": got[0], "gamma_tcg": got[1], "expected": [cg, tcg]})


def _class_check(name: str, G: Graph, expected: int) -> VerificationResult:
    label = classify(G)
    return _result(name, G, label.cls == expected, {**label.to_dict(), "expected_class": expected})


def _universal_check(name: str, G: Graph) -> VerificationResult:
    tcg = solve(G, Variant.TOTAL)
    return _result(name, G, tcg == 2, {"gamma_tcg": tcg})


def _d15_twins() -> VerificationResult:
    G = family_D15()
    c = GameSolver(G, Variant.CONNECTED).per_vertex_values()
    t = GameSolver(G, Variant.TOTAL).per_vertex_values()
    x, y = G.vertex("y2"), G.vertex("v2")
    vals = {"c_x": c[x], "t_x": t[x], "c_y": c[y], "t_y": t[y]}
    same = all(c[v] == t[v] for v in c)
    return _result("D15_twins", G, set(vals.values()) == {10} and same,
                   {**vals, "c_equals_t_everywhere": same})


def regression_claims(slow: bool = True) -> list[tuple[str, Callable[[], VerificationResult]]]:
    """Named zero-argument checks for every known regression value."""
    claims: list[tuple[str, Callable[[], VerificationResult]]] = [
        ("F8", partial(_values_check, "F8", family_F(2), 4, 4)),
        ("F12_class0", partial(_class_check, "F12_class0", family_F(3), 0)),
        ("D15", partial(_values_check, "D15", family_D15(), 9, 9)),
        ("D15_twins", _d15_twins),
        ("prop8[r=3]", partial(verify_prop8, 3)),
        ("prop8[r=4]", partial(verify_prop8, 4)),
        ("paw_x_K2", partial(_values_check, "paw_x_K2", direct_product(paw(), complete(2)), 5, 5)),
        ("C3oK1_x_K2",
         partial(_values_check, "C3oK1_x_K2", direct_product(corona(cycle(3)), complete(2)), 6, 7)),
        ("C5_x_K2_is_C10_class0", partial(_class_check, "C5_x_K2_is_C10_class0",
                                          direct_product(cycle(5), complete(2)), 0)),
    ]
    if slow:
        claims.append(("C5oK1_x_K2", partial(_values_check, "C5oK1_x_K2",
                                             direct_product(corona(cycle(5)), complete(2)), 10, 11)))
    for n in range(3, 9):
        claims.append((f"universal[star({n})]", partial(_universal_check, f"universal[star({n})]", star(n))))
        claims.append((f"universal[complete({n})]",
                       partial(_universal_check, f"universal[complete({n})]", complete(n))))
    for name, base, hs in corona_cases():
        claims.append((f"prop6[{name}]", partial(verify_prop6, base, hs)))
    for name, G, H in (("P3xP3", path(3), path(3)), ("C3xK2", cycle(3), complete(2)),
                       ("P2xC4", path(2), cycle(4))):
        claims.append((f"cor5a[{name}]", partial(_class_check, f"cor5a[{name}]", cartesian_product(G, H), 0)))
    return claims
