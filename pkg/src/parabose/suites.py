"""Verification suites and table builders used by the command line.

Every check becomes one record ``{suite, check_id, anchor, parameters,
status, witness}``; rational values inside records are strings "num/den".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional, Sequence

from . import fock, gamma, hopf, ideals
from .freealg import InvalidArgument, NCPoly, boson_relators, gamma2_relators, paraboson_relators

SUITES = (
    "hopf-axioms",
    "green-relations",
    "focklike",
    "single-paraboson",
    "ideal-inclusions",
    "gamma2",
    "generalized-ansatz",
)


@dataclass
class RunConfig:
    modes: int = 2
    order: int = 2
    factors: int = 2
    cutoff: int = 6
    bound: int = ideals.DEFAULT_BOUND
    format: str = "json"
    out: Optional[str] = None
    suites: Sequence[str] = SUITES
    relators_text: Optional[str] = None

    def validate(self) -> None:
        for name in ("modes", "order", "factors", "bound"):
            if getattr(self, name) < 1:
                raise InvalidArgument("--%s must be >= 1" % name)
        if self.cutoff < 0:
            raise InvalidArgument("--cutoff must be >= 0")
        if self.format not in ("json", "csv"):
            raise InvalidArgument("--format must be json or csv")
        for s in self.suites:
            if s not in SUITES and s != "custom-relators":
                raise InvalidArgument("unknown suite %r" % s)

    def as_dict(self) -> Dict[str, object]:
        return {"modes": self.modes, "order": self.order, "factors": self.factors,
                "cutoff": self.cutoff, "bound": self.bound, "suites": list(self.suites)}


def frac(x) -> str:
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def record(suite: str, check_id: str, anchor: str, parameters: Dict, ok: bool,
           witness: Optional[str] = None) -> Dict[str, object]:
    return {"suite": suite, "check_id": check_id, "anchor": anchor, "parameters": parameters,
            "status": "pass" if ok else "fail", "witness": witness}


def _first_witness(rep: fock.RelatorReport) -> Optional[str]:
    bad = rep.failures
    return None if not bad else "%s %s" % (bad[0].relator, bad[0].witness)


def _relator_record(suite, check_id, anchor, params, rep: fock.RelatorReport, expect_pass=True):
    p = dict(params, relators=len(rep.checks), failed=len(rep.failures),
             max_degree_checked=rep.max_degree_checked)
    ok = rep.passed == expect_pass
    if expect_pass:
        return record(suite, check_id, anchor, p, ok, _first_witness(rep))
    return record(suite, check_id, anchor, p, ok,
                  _first_witness(rep) if not rep.passed else "all relators vanished")


# --- suites --------------------------------------------------------------------

def suite_hopf(cfg: RunConfig) -> List[Dict]:
    m, p = cfg.modes, cfg.order
    rep = hopf.check_hopf_axioms(m)
    out = []
    for law in ("coassociativity", "counit", "antipode", "position-independence"):
        bad = [g for l, g, ok in rep.checks if l == law and not ok]
        out.append(record("hopf-axioms", law, "super-hopf-structure", {"modes": m, "max_arity": 4},
                          not bad, ", ".join(bad) or None))
    N = cfg.cutoff
    pairs = sorted({(1, 1), (1, p), (p, p)})
    for p1, p2 in pairs:
        r = fock.verify_coproduct_relators(p1, p2, m, N)
        out.append(_relator_record("hopf-axioms", "coproduct-relators-F%dxF%d" % (p1, p2),
                                   "coproduct-well-defined", {"modes": m, "orders": [p1, p2], "cutoff": N}, r))
    return out


def suite_green(cfg: RunConfig) -> List[Dict]:
    m, p, N = cfg.modes, cfg.order, cfg.cutoff
    params = {"order": p, "modes": m, "cutoff": N}
    out = [
        _relator_record("green-relations", "green-ansatz-relations", "green-ansatz",
                        params, fock.verify_green_relations(p, m, N)),
        _relator_record("green-relations", "paraboson-homomorphism", "paraboson-relations",
                        params, fock.verify_paraboson_relations(p, m, N)),
    ]
    bos = fock.verify_relators_on_space(boson_relators(m), fock.green_ops(p, m, N), fock.tensor_fock_space(p, m, N))
    out.append(_relator_record("green-relations", "boson-relations-%s" % ("hold" if p == 1 else "fail"),
                               "order-p-vacuum", params, bos, expect_pass=(p == 1)))
    if N >= 1:
        eig = fock.vacuum_eigenvalues(fock.green_ops(p, m, N), m, {0: Fraction(1)})
        ok = all(v == (p if i == j else 0) for (i, j), v in eig.items())
        out.append(record("green-relations", "vacuum-eigenvalue", "order-p-vacuum",
                          dict(params, eigenvalue=frac(p)), ok,
                          None if ok else repr({"%d,%d" % k: str(v) for k, v in eig.items()})))
    ops = fock.green_ops(1, m, N)
    base = fock.boson_ops(m, N)
    same = all(ops[g].entries == base[g].entries for g in base)
    out.append(record("green-relations", "order-1-is-boson", "replacement-map",
                      {"modes": m, "cutoff": N}, same))
    return out


def suite_focklike(cfg: RunConfig) -> List[Dict]:
    m, p, N = cfg.modes, cfg.order, cfg.cutoff
    params = {"order": p, "modes": m, "cutoff": N}
    basis = fock.focklike_closure(p, m, N)
    dims = fock.dimension_table(p, m, N)
    out = [
        record("focklike", "dimensions", "vacuum-generated-submodule",
               dict(params, submodule=[r.submodule for r in dims], full=[r.full for r in dims]), True),
        record("focklike", "lowering-closure", "vacuum-generated-submodule", params, basis.lowering_closed),
        record("focklike", "gram-positive-definite", "hilbert-module", params, fock.gram_positive_definite(basis)),
    ]
    kern = fock.vacuum_kernel_dims(basis)
    kern = {d: k for d, k in kern.items() if d <= N - 1}
    ok = kern.get(0, 1) == 1 and all(k == 0 for d, k in kern.items() if d > 0)
    out.append(record("focklike", "unique-vacuum", "hilbert-module",
                      dict(params, kernel_dims=[kern[d] for d in sorted(kern)]), ok))
    bad = fock.adjointness_defects(p, m, N, pairs=200, seed=0)
    out.append(record("focklike", "adjointness", "hilbert-module", dict(params, pairs=200, seed=0),
                      bad == 0, None if not bad else "%d defective pairs" % bad))
    if p >= 2:
        deficit = [r.degree for r in dims if r.submodule < r.full]
        out.append(record("focklike", "reducibility-witness", "reducible-tensor-module",
                          dict(params, deficit_degrees=deficit), bool(deficit)))
    one = fock.dimension_table(1, m, N)
    ok = all(r.submodule == r.full == comb(m + r.degree - 1, r.degree) for r in one)
    out.append(record("focklike", "order-1-collapse", "replacement-map",
                      {"modes": m, "cutoff": N, "dims": [r.submodule for r in one]}, ok))
    return out


def suite_single(cfg: RunConfig) -> List[Dict]:
    p = cfg.order
    n_max = max(cfg.cutoff, 1)
    rows = fock.single_paraboson_profile(p, n_max)
    bad_r = [r.n for r in rows if r.ratio != r.expected_ratio]
    bad_l = [r.n for r in rows if r.lowering != r.expected_lowering]
    params = {"order": p, "n_max": n_max}
    return [
        record("single-paraboson", "norm-ratios", "single-paraboson-action",
               dict(params, ratios=[frac(r.ratio) for r in rows]), not bad_r,
               None if not bad_r else "n=%s" % bad_r),
        record("single-paraboson", "lowering-coefficients", "single-paraboson-action",
               dict(params, lowering=[frac(r.lowering) for r in rows]), not bad_l,
               None if not bad_l else "n=%s" % bad_l),
    ]


def suite_ideals(cfg: RunConfig) -> List[Dict]:
    m, D = cfg.modes, cfg.bound
    pb, bos, g2 = paraboson_relators(m), boson_relators(m), gamma2_relators(m)
    out = []
    cases = [
        ("paraboson-in-boson", pb, bos, True, "boson-quotient"),
        ("paraboson-in-gamma2", pb, g2, True, "gamma2-quotient"),
        ("boson-not-in-paraboson", bos, pb, False, "boson-quotient"),
        ("gamma2-not-in-paraboson", g2, pb, False, "gamma2-quotient"),
    ]
    for cid, a, b, expect, anchor in cases:
        if D < max(r.degree for r in a + b):
            out.append(record("ideal-inclusions", cid, anchor, {"modes": m, "bound": D}, False,
                              "bound below relator degree"))
            continue
        rep = ideals.ideal_inclusion_check(a, b, m, D)
        params = {"modes": m, "bound": D, "checked": rep.checked, "span_rank": rep.span_rank,
                  "not_witnessed": len(rep.failures)}
        if expect:
            out.append(record("ideal-inclusions", cid, anchor, params, rep.passed,
                              None if rep.passed else str(rep.failures[0])))
        else:
            out.append(record("ideal-inclusions", cid, anchor, params, not rep.passed,
                              str(rep.failures[0]) if rep.failures else "all contained"))
        if expect and rep.passed:
            wb = ideals.minimal_witness_bound(a, b, m, D)
            out.append(record("ideal-inclusions", cid + "-minimal-bound", anchor,
                              {"modes": m, "minimal_bound": wb}, wb is not None))
    return out


def suite_gamma2(cfg: RunConfig) -> List[Dict]:
    m, N = cfg.modes, cfg.cutoff
    params = {"modes": m, "cutoff": N}
    out = [_relator_record("gamma2", "relations-on-F2", "gamma2-relations", dict(params, order=2),
                           gamma.verify_gamma2_relations(m, N))]
    car = gamma.gamma2_carrier(m, N)
    eig = fock.vacuum_eigenvalues(car.ops, m, {0: Fraction(1)}) if N >= 1 else {}
    ok = all(v == (2 if i == j else 0) for (i, j), v in eig.items())
    out.append(record("gamma2", "carrier-vacuum-eigenvalue", "gamma2-relations", dict(params, eigenvalue=frac(2)), ok))
    if m >= 2:
        out.append(_relator_record("gamma2", "relations-fail-on-F3", "gamma2-order-specific",
                                   dict(params, order=3), gamma.verify_gamma2_relations(m, N, order=3),
                                   expect_pass=False))
    return out


def suite_ansatz(cfg: RunConfig) -> List[Dict]:
    q, m, N = cfg.factors, cfg.modes, cfg.cutoff
    rep = gamma.generalized_ansatz(q, m, N)
    params = {"factors": q, "modes": m, "cutoff": N}
    bad_cross = [c.relator for c in rep.cross_slot if not c.ok]
    lam = rep.eigenvalue
    return [
        _relator_record("generalized-ansatz", "slot-gamma2-relations", "generalized-ansatz", params, rep.slot_relations),
        record("generalized-ansatz", "cross-slot-anticommutation", "generalized-ansatz",
               dict(params, pairs=len(rep.cross_slot)), not bad_cross, ", ".join(bad_cross[:3]) or None),
        _relator_record("generalized-ansatz", "paraboson-relations", "generalized-ansatz", params, rep.paraboson),
        record("generalized-ansatz", "vacuum-eigenvalue", "generalized-ansatz",
               dict(params, eigenvalue=None if lam is None else frac(lam)), lam == 2 * q),
    ]


def suite_custom(cfg: RunConfig) -> List[Dict]:
    from .exprlang import parse_relator_file
    rels = parse_relator_file(cfg.relators_text or "", cfg.modes)
    rep = gamma.verify_custom_relators(rels, cfg.order, cfg.modes, cfg.cutoff)
    out = []
    for k, c in enumerate(rep.checks):
        out.append(record("custom-relators", "relator-%d" % (k + 1), "user-supplied",
                          {"order": cfg.order, "modes": cfg.modes, "cutoff": cfg.cutoff, "relator": c.relator},
                          c.ok, c.witness))
    return out


RUNNERS: Dict[str, Callable[[RunConfig], List[Dict]]] = {
    "hopf-axioms": suite_hopf,
    "green-relations": suite_green,
    "focklike": suite_focklike,
    "single-paraboson": suite_single,
    "ideal-inclusions": suite_ideals,
    "gamma2": suite_gamma2,
    "generalized-ansatz": suite_ansatz,
    "custom-relators": suite_custom,
}


def run_suites(cfg: RunConfig) -> Dict[str, object]:
    cfg.validate()
    names = list(cfg.suites)
    if cfg.relators_text is not None and "custom-relators" not in names:
        names.append("custom-relators")
    checks = []
    for name in names:
        checks.extend(RUNNERS[name](cfg))
    status = "pass" if all(c["status"] == "pass" for c in checks) else "fail"
    return {"config": cfg.as_dict(), "status": status, "checks": checks}


# --- tables --------------------------------------------------------------------

@dataclass
class Table:
    name: str
    parameters: Dict[str, object]
    columns: List[str]
    rows: List[List[object]]
    extra: Dict[str, object] = field(default_factory=dict)


def dims_table(p: int, m: int, N: int) -> Table:
    rows = [[r.degree, r.submodule, r.full] for r in fock.dimension_table(p, m, N)]
    return Table("dimensions", {"order": p, "modes": m, "cutoff": N},
                 ["degree", "dim_submodule", "dim_full"], rows)


def gram_table(p: int, m: int, N: int) -> Table:
    basis = fock.focklike_closure(p, m, N)
    G = fock.gram_of_submodule(basis)
    rows = []
    for d in range(N + 1):
        idx = basis.block(d)
        for a in idx:
            for b in idx:
                rows.append([d, a, b, basis.word_str(a), basis.word_str(b), frac(G[a][b])])
    return Table("gram", {"order": p, "modes": m, "cutoff": N},
                 ["degree", "row", "col", "row_word", "col_word", "value"], rows)


def profile_table(p: int, N: int) -> Table:
    n_max = N - 1
    if n_max < 0:
        raise InvalidArgument("profile needs cutoff >= 1")
    rows = [[r.n, frac(r.norm2), frac(r.ratio), frac(r.expected_ratio), frac(r.lowering), frac(r.expected_lowering)]
            for r in fock.single_paraboson_profile(p, n_max)]
    return Table("single_paraboson_profile", {"order": p, "modes": 1, "cutoff": N},
                 ["n", "norm2", "ratio", "expected_ratio", "lowering", "expected_lowering"], rows)


def matelem_table(p: int, m: int, N: int) -> Table:
    me = fock.matrix_elements(p, m, N)
    norms = {a: nrm for a, _, _, nrm in me.norms}
    degs = {a: d for a, d, _, _ in me.norms}
    rows = [[g, r, c, degs[r], degs[c], frac(x), frac(norms[r])] for g, r, c, x in me.elements]
    extra = {"basis": [[a, d, w, frac(n)] for a, d, w, n in me.norms]}
    return Table("matrix_elements", {"order": p, "modes": m, "cutoff": N},
                 ["generator", "row", "col", "row_degree", "col_degree", "value", "row_norm2"], rows, extra)
