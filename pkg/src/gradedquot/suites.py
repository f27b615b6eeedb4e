"""Named check suites over the bundled fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Callable, Optional

from .algebra import center, skew_subspace, whole
from .constructors import full_matrix_algebra
from .derivations import (
    INNER,
    QM_REMARK,
    ad_kernel,
    check_zero_component_iso,
    derivation_space,
    inner_derivations,
    inner_ideal_tests,
    qm_compute,
    sderivations,
)
from .fields import GF, QQ
from .finitary import (
    GRADING,
    L0GEN,
    E,
    FinitaryFamily,
    PeriodicBandedMatrix,
    banded_sample,
    basis_change_uv,
    block_azd_identity_check,
    check_truncation,
    conjugate_skew,
    degree_additivity,
    finitary_snd_evidence,
    identity_rcf,
    is_block_form_o,
    l0_bracket_generation,
    rcf_derivation_check,
    symplectic_y,
    truncation_embeds,
)
from .fixtures import get
from .grading import (
    grading_from_idempotents,
    idempotents_from_grading,
    matrix_block_grading,
    peirce_system,
)
from .linalg import Matrix, Subspace
from .local import check_lemma_local, check_local_iso, check_qs_zero_component
from .nondegeneracy import (
    DEFAULT_BUDGET,
    check_gradid,
    check_grequiv,
    check_herencia1,
    check_homcuad,
)
from .report import PASS, Check, Report, check, expect_equal, timed

PEIRCE = "Peirce system of a graded algebra and its idempotents"


class UnknownSuite(KeyError):
    pass


@dataclass
class SuiteConfig:
    seed: int = 0
    fixtures: Optional[str] = None
    budget: int = DEFAULT_BUDGET
    samples: int = 200
    extra: dict = dc_field(default_factory=dict)

    def echo(self) -> dict:
        return {"seed": self.seed, "budget": self.budget, "samples": self.samples}


def check_peirce_idempotents(A, g, tag: str = "") -> list[Check]:
    pre = f"peirce{tag}"
    P = peirce_system(A, g)
    out = [
        check(f"{pre}/axioms", PEIRCE, P.axioms_ok, reason="; ".join(P.diagnosis)),
        check(f"{pre}/direct", PEIRCE, P.direct, expected=A.dim),
    ]
    es = idempotents_from_grading(A, g)
    total = tuple(sum(c, A.field.zero) for c in zip(*es))
    ortho = all(A.mul(e, f) == (e if i == j else A.zero_vector()) for i, e in enumerate(es) for j, f in enumerate(es))
    out.append(check(f"{pre}/complete-orthogonal", PEIRCE, ortho and total == A.unit, witness=es))
    back = grading_from_idempotents(A, es)
    same = set(back.support) == set(g.support) and all(back[k] == g[k] for k in g.support)
    out.append(check(f"{pre}/roundtrip", PEIRCE, same, expected=list(g.support), actual=list(back.support)))
    return out


# -- suites --------------------------------------------------------------------------


def suite_grequiv(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    for name in ("sl2_f5", "borel2_f3", "abelian2_f3", "nonabelian2_f3", "sl2_affine_f3", "gl2_f5", "sl2xsl2_f5"):
        fx = get(name, cfg.fixtures)
        with timed(out):
            out += check_grequiv(fx.algebra, fx.grading, cfg.budget, tag=f"/{name}")
    for name in ("nonabelian2_f3", "sl2_f3", "sl2_affine_f3", "sl2xsl2_f3"):
        fx = get(name, cfg.fixtures)
        with timed(out):
            out += check_homcuad(fx.algebra, fx.grading, fx.subspace("I"), cfg.budget, tag=f"/{name}")
    for name in ("sl2_f5", "sl2xsl2_f5"):
        fx = get(name, cfg.fixtures)
        with timed(out):
            out += check_gradid(fx.algebra, fx.grading, fx.subspace("I"), cfg.budget, tag=f"/{name}")
    return out


def suite_herencia1(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    for name in ("sl2_q", "sl2_f5", "sl3_q", "sl4_q"):
        fx = get(name, cfg.fixtures)
        with timed(out):
            out += check_herencia1(fx.algebra, fx.grading, cfg.budget, tag=f"/{name}")
    return out


def suite_peirce(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    for name in ("m2", "m3", "m4_22", "m5_122"):
        fx = get(name, cfg.fixtures)
        with timed(out):
            out += check_peirce_idempotents(fx.algebra, fx.grading, tag=f"/{name}")
    return out


def suite_local_iso(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    m3 = get("m3", cfg.fixtures)
    m2m3 = get("m2_m3", cfg.fixtures)
    cases = [("m3", m3, "idem"), ("m3", m3, "shift"), ("m2_m3", m2m3, "mixed")]
    for name, fx, el in cases:
        with timed(out):
            out += check_local_iso(fx.algebra, fx.element(el), tag=f"/{name}/{el}")
    for name, fx, el in cases + [("m3", m3, "rank1"), ("m2_m3", m2m3, "mixed_nonidem")]:
        with timed(out):
            out += check_lemma_local(fx.algebra, fx.element(el), tag=f"/{name}/{el}")
    return out


def suite_qs_zero(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    for name in ("m3", "m4_22", "m5_122"):
        fx = get(name, cfg.fixtures)
        with timed(out):
            out += check_qs_zero_component(fx.algebra, fx.grading, tag=f"/{name}")
    return out


DER = "derivation spaces by exact nullspace computation"


def suite_qm_der(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    for name, n in (("sl2_q", 2), ("sl3_q", 3), ("sl4_q", 4)):
        L = get(name, cfg.fixtures).algebra
        with timed(out):
            D = derivation_space(L)
            out.append(expect_equal(f"der/{name}/dim", DER, n * n - 1, D.dim))
            out.append(check(f"der/{name}/all-inner", DER, inner_derivations(L) == D.as_subspace()))
    for name, n in (("m2", 2), ("m3", 3)):
        A = get(name, cfg.fixtures).algebra
        with timed(out):
            out.append(expect_equal(f"der/{name}/dim", DER, n * n - 1, derivation_space(A).dim))
    for name, n in (("m3_transpose", 3), ("m5_transpose", 5)):
        A = get(name, cfg.fixtures).algebra
        with timed(out):
            out.append(expect_equal(f"sder/{name}/dim", DER, n * (n - 1) // 2, sderivations(A).dim))
            out.append(expect_equal(f"sder/{name}/skew-dim", DER, n * (n - 1) // 2, skew_subspace(A).dim))
    for name in ("sl2_q", "sl3_q", "gl2_f5", "borel2_f3", "nonabelian2_f3", "sl2_affine_f3", "abelian2_f3", "m2", "m3"):
        S = get(name, cfg.fixtures).algebra
        with timed(out):
            out.append(expect_equal(f"ad-kernel/{name}", DER, center(S), ad_kernel(S)))
    for name, expected in (("so5_q", 10), ("sl3_q", 8)):
        L = get(name, cfg.fixtures).algebra
        with timed(out):
            r = qm_compute(L)
            out.append(check(f"qm/{name}", QM_REMARK, r.status == "certified" and r.derivations.dim == expected,
                             expected=expected, actual=r.derivations.dim if r.derivations else r.status, reason=r.reason))
    return out


def suite_zero_component(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    for n, blocks in ((3, (1, 2)), (4, (2, 2)), (5, (2, 3))):
        A = full_matrix_algebra(n)
        g = matrix_block_grading(A, blocks)
        p, q = blocks
        with timed(out):
            out += check_zero_component_iso(A, g, tag=f"/M{n}-blocks{p}{q}", expected_c=p * p + q * q - 1,
                                            parts="ac" if n < 5 else "c")
    fx = get("m6_transpose_33", cfg.fixtures)
    with timed(out):
        out += check_zero_component_iso(fx.algebra, fx.grading, tag="/M6-transpose-blocks33", expected_d=6, parts="d")
    return out


def suite_inner_ideals(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    L = get("sl2_f5", cfg.fixtures).algebra
    e12 = L.unit_vector(L.labels.index("e12"))
    e21 = L.unit_vector(L.labels.index("e21"))
    cases = [
        ("span(e12)", Subspace.span(L.field, 3, [e12]), (True, True, True)),
        ("span(e12+e21)", Subspace.span(L.field, 3, [tuple(a + b for a, b in zip(e12, e21))]), (False, True, False)),
        ("L", whole(L), (True, False, False)),
    ]
    for label, B, expected in cases:
        with timed(out):
            r = inner_ideal_tests(L, B, cfg.budget)
            got = (r.is_inner_ideal, r.is_abelian, r.minimal)
            out.append(expect_equal(f"inner/sl2_f5/{label}", INNER, expected, got, witness=r.witness))
    return out


FAMILIES = (("sl", FinitaryFamily("sl", 1), (3, 4)), ("o", FinitaryFamily("o"), (2, 3)), ("sp", FinitaryFamily("sp"), (2, 3)))


def _min_slack(fam, N, limit=2) -> list[Check]:
    for s in range(limit + 1):
        c = l0_bracket_generation(fam, N, s)[0]
        if c.status == PASS:
            return [Check(f"l0gen/{fam}/N={N}", L0GEN, PASS, actual={"slack": s})]
    return [Check(f"l0gen/{fam}/N={N}", L0GEN, "fail", reason=f"no generation up to slack {limit}")]


def suite_finitary_grading(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    rng = random.Random(cfg.seed)
    for name, fam, sizes in FAMILIES:
        for N in sizes:
            with timed(out):
                out += check_truncation(fam, N)
                out.append(check(f"embeds/{fam}/N={N}", GRADING, truncation_embeds(fam, N)))
                out += _min_slack(fam, N)
        with timed(out):
            out += degree_additivity(fam, 100, rng.randrange(1 << 30))
    for m in (1, 2, 3):
        bc = basis_change_uv(m)
        out.append(check(f"basis-change/m={m}/gram", GRADING, bc.gram_ok))
        n = 2 * m
        x = Matrix(bc.P.field, tuple(tuple(1 if (i, j) == (0, 1) else -1 if (i, j) == (1, 0) else 0 for j in range(n))
                                     for i in range(n)), n)
        out.append(check(f"basis-change/m={m}/skew-block-form", GRADING, is_block_form_o(conjugate_skew(bc, x))))
    return out


def suite_finitary_snd(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    rng = random.Random(cfg.seed)
    cases = [(None, None), (FinitaryFamily("sl"), None)]
    cases += [(FinitaryFamily(f), d) for f in ("o", "sp") for d in (-1, 0, 1)]
    for fam, d in cases:
        for F in (GF(5), QQ):
            with timed(out):
                out += finitary_snd_evidence(fam, d, cfg.samples, rng.randrange(1 << 30), F)
    for F in (GF(5), QQ):
        with timed(out):
            out += block_azd_identity_check(50, rng.randrange(1 << 30), F)
    return out


def suite_finitary_qm(cfg: SuiteConfig) -> list[Check]:
    out: list[Check] = []
    qs = [("identity", identity_rcf()), ("y", symplectic_y()), ("E11", PeriodicBandedMatrix(correction=E(1, 1))),
          ("banded3", banded_sample())]
    for label, q in qs:
        with timed(out):
            out += rcf_derivation_check(q, 12, tag=f"/{label}")
    for label, q in (("identity", identity_rcf()), ("y", symplectic_y())):
        with timed(out):
            out += rcf_derivation_check(q, 6, FinitaryFamily("sp"), tag=f"/{label}")
    with timed(out):
        out += rcf_derivation_check(identity_rcf(3), 6, FinitaryFamily("o"), tag="/identity")
    return out


SUITES: dict[str, Callable[[SuiteConfig], list]] = {
    "grequiv": suite_grequiv,
    "herencia1": suite_herencia1,
    "peirce-idempotents": suite_peirce,
    "local-iso": suite_local_iso,
    "qs-zero": suite_qs_zero,
    "qm-der": suite_qm_der,
    "zero-component": suite_zero_component,
    "inner-ideals": suite_inner_ideals,
    "finitary-grading": suite_finitary_grading,
    "finitary-snd": suite_finitary_snd,
    "finitary-qm": suite_finitary_qm,
}


def run_suite(name: str, cfg: Optional[SuiteConfig] = None) -> Report:
    cfg = cfg or SuiteConfig()
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    checks = SUITES[name](cfg)
    return Report(name, cfg.seed, cfg.echo(), checks)
