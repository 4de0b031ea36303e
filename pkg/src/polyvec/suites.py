"""Named verification suites assembled into reports.

Each suite draws seeded samples, checks exact identities, and emits one
CheckRecord per identity family.  The CLI composes them into campaigns;
the acceptance tests call them directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import conventions, pvcalc
from .complexes import Variant, cohomology_model
from .contraction import build_datum, contraction_K, scale_homotopy, verify_datum
from .linf import (
    field_structure,
    jacobi_defect,
    minimal_model_structure,
    transfer,
)
from .reporting import Report
from .sho import (
    cocycle_check,
    ext_bracket_d3,
    ext_element,
    hamiltonian_vf,
    lie_jacobi_defect,
    membership,
    random_sho_generator,
    super_divergence,
    vf_bracket,
)
from .sl2 import equivariance_check_cocycle, equivariance_compare_theorem, sl2_relations_check
from .superpoly import SuperPoly, monomial_basis, random_poly


@dataclass
class CampaignConfig:
    d: int = 3
    variant: Variant = field(default_factory=Variant.mbcov)
    max_degree: int = 4
    trials: int = 100
    seed: int = 42
    arity_cap: int = 3
    checks: tuple[str, ...] = ()

    def validate(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        if self.max_degree < 0 or self.trials <= 0 or self.arity_cap < 2:
            raise ValueError("budgets must be positive and arity cap >= 2")
        self.variant.validate(self.d)
        unknown = set(self.checks) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


def _sample(d: int, deg: int, seed: int, xi_degree=None) -> SuperPoly:
    return random_poly(d, deg, xi_degree_filter=xi_degree, seed=seed)


def _homog(d, deg, seed) -> SuperPoly:
    import random as _r

    j = _r.Random(seed).randrange(0, d + 1)
    return _sample(d, deg, seed, xi_degree=j)


def suite_algebra(cfg: CampaignConfig) -> Report:
    """Ring axioms plus the shifted Lie axioms of the Schouten bracket."""
    report = Report()
    d, deg, seed = cfg.d, cfg.max_degree, cfg.seed
    n = cfg.trials

    bad = None
    for t in range(n):
        a, b, c = (_homog(d, deg, seed + 11 * t + i) for i in range(3))
        if (a * b) * c != a * (b * c):
            bad = {"a": str(a), "b": str(b), "c": str(c)}
            break
        pa, pb = a.parity(), b.parity()
        sign = -1 if pa & pb else 1
        if a * b != (b * a).scale(sign):
            bad = {"a": str(a), "b": str(b)}
            break
    report.add(f"algebra.d{d}.ring", bad is None, **({"witness": bad} if bad else {}))

    bad = None
    for t in range(n):
        a = _homog(d, deg, seed + 101 * t)
        b = _homog(d, deg, seed + 101 * t + 7)
        i = 1 + (t % d)
        lhs = (a * b).d_odd(i)
        rhs = a.d_odd(i) * b + (a * b.d_odd(i)).scale(-1 if a.parity() else 1)
        if lhs != rhs:
            bad = {"a": str(a), "b": str(b), "i": i}
            break
        j = 1 + ((t + 1) % d)
        if a.d_odd(i).d_odd(j) != -(a.d_odd(j).d_odd(i)):
            bad = {"a": str(a), "i": i, "j": j}
            break
    report.add(f"algebra.d{d}.leibniz", bad is None, **({"witness": bad} if bad else {}))

    bad = None
    for t in range(n):
        mu = _homog(d, deg, seed + 211 * t)
        if not pvcalc.divergence(pvcalc.divergence(mu)).is_zero():
            bad = {"mu": str(mu)}
            break
    report.add(f"algebra.d{d}.laplacian_squares_to_zero", bad is None,
               **({"witness": bad} if bad else {}))

    bad = None
    for t in range(n):
        a = _homog(d, deg, seed + 307 * t)
        b = _homog(d, deg, seed + 307 * t + 3)
        pa, pb = a.xi_degree(), b.xi_degree()
        sign = -1 if ((pa - 1) * (pb - 1)) & 1 else 1
        if pvcalc.schouten(a, b) != pvcalc.schouten(b, a).scale(-sign):
            bad = {"a": str(a), "b": str(b)}
            break
    report.add(f"algebra.d{d}.shifted_antisymmetry", bad is None,
               **({"witness": bad} if bad else {}))

    bad = None
    for t in range(n):
        a = _homog(d, deg, seed + 401 * t)
        b = _homog(d, deg, seed + 401 * t + 1)
        c = _homog(d, deg, seed + 401 * t + 2)
        sign = -1 if ((a.xi_degree() - 1) * (b.xi_degree() - 1)) & 1 else 1
        lhs = pvcalc.schouten(a, pvcalc.schouten(b, c))
        rhs = pvcalc.schouten(pvcalc.schouten(a, b), c) + pvcalc.schouten(b, pvcalc.schouten(a, c)).scale(sign)
        if lhs != rhs:
            bad = {"a": str(a), "b": str(b), "c": str(c)}
            break
    report.add(f"algebra.d{d}.shifted_jacobi", bad is None, **({"witness": bad} if bad else {}))

    bad = None
    for t in range(n):
        mu = _homog(d, deg, seed + 503 * t)
        nu = _homog(d, deg, seed + 503 * t + 5)
        sign = -1 if (mu.xi_degree() - 1) & 1 else 1
        lhs = pvcalc.divergence(pvcalc.schouten(mu, nu))
        rhs = pvcalc.schouten(pvcalc.divergence(mu), nu) + pvcalc.schouten(mu, pvcalc.divergence(nu)).scale(sign)
        if lhs != rhs:
            bad = {"mu": str(mu), "nu": str(nu)}
            break
        # second-order expansion of the divergence over a product
        k = mu.xi_degree()
        expand = (pvcalc.divergence(mu) * nu
                  + (mu * pvcalc.divergence(nu)).scale(-1 if k & 1 else 1)
                  + pvcalc.schouten(mu, nu).scale(-1 if (k - 1) & 1 else 1))
        if pvcalc.divergence(mu * nu) != expand:
            bad = {"mu": str(mu), "nu": str(nu), "kind": "second-order"}
            break
    report.add(f"algebra.d{d}.derivation_and_second_order", bad is None,
               **({"witness": bad} if bad else {}))

    if d == 3:
        bad = None
        for t in range(n):
            mu = _sample(3, cfg.max_degree, seed + 601 * t, xi_degree=1)
            beta = _sample(3, cfg.max_degree, seed + 601 * t + 1, xi_degree=0)
            top = SuperPoly.monomial(3, (0, 0, 0), (1, 2, 3))
            lhs = mu * pvcalc.divergence(beta * top)
            rhs = (pvcalc.schouten(mu, beta) * top).scale(conventions.LIFT_SIGN)
            if lhs != rhs:
                bad = {"mu": str(mu), "beta": str(beta)}
                break
        report.add("algebra.d3.lifted_bracket_identity", bad is None,
                   **({"witness": bad} if bad else {}))
    return report


def suite_contraction(cfg: CampaignConfig) -> Report:
    """Delta K + K Delta = id and the vanishing top constant term."""
    report = Report()
    d, deg, seed = cfg.d, cfg.max_degree, cfg.seed
    per_degree = max(1, cfg.trials // max(1, d))
    bad = None
    for j in range(d):
        for t in range(per_degree):
            mu = _sample(d, deg, seed + 31 * t + 7 * j, xi_degree=j)
            lhs = pvcalc.divergence(contraction_K(mu)) + contraction_K(pvcalc.divergence(mu))
            if lhs != mu:
                bad = {"xi_degree": j, "mu": str(mu)}
                break
        if bad:
            break
    report.add(f"contraction.d{d}.homotopy_identity", bad is None,
               **({"witness": bad} if bad else {}))

    bad = None
    for t in range(cfg.trials):
        mu = _sample(d, deg, seed + 97 * t, xi_degree=d - 1)
        if contraction_K(mu).top_constant() != 0:
            bad = {"mu": str(mu)}
            break
    report.add(f"contraction.d{d}.top_constant_vanishes", bad is None,
               **({"witness": bad} if bad else {}))

    bad = None
    for j in range(d + 1):
        for t in range(max(1, per_degree // 2)):
            mu = _sample(d, deg, seed + 13 * t + j, xi_degree=j)
            want = pvcalc.divergence(mu).scale(conventions.transport_sign(j))
            if pvcalc.divergence_via_transport(mu) != want:
                bad = {"xi_degree": j, "mu": str(mu)}
                break
    report.add(f"contraction.d{d}.transport_sign", bad is None,
               **({"witness": bad} if bad else {}))
    return report


def suite_homotopy(cfg: CampaignConfig) -> Report:
    """Homotopy data for the configured complex, every summand sampled."""
    datum = build_datum(cfg.d, cfg.variant)
    report = verify_datum(datum, sample_budget=cfg.trials, seed=cfg.seed,
                          max_degree=cfg.max_degree)
    # negative control: a corrupted homotopy must be rejected
    bad = verify_datum(scale_homotopy(datum, 2), sample_budget=max(10, cfg.trials // 5),
                       seed=cfg.seed, max_degree=cfg.max_degree)
    report.add(f"datum.{cfg.variant.label}.d{cfg.d}.negative_control", not bad.ok)
    return report


def suite_transfer(cfg: CampaignConfig) -> Report:
    """Tree-sum transfer against the closed-form minimal model (minimal theory)."""
    report = Report()
    d = cfg.d
    variant = Variant.mbcov()
    datum = build_datum(d, variant)
    structure = field_structure(d)
    transferred = transfer(structure, datum, arity_cap=cfg.arity_cap)
    model = minimal_model_structure(d, variant)
    carrier = cohomology_model(d, variant)
    slots = carrier.slots
    per = max(1, cfg.trials // max(1, len(slots) ** 2))

    bad = None
    for s1 in slots:
        for s2 in slots:
            for t in range(per):
                a = carrier.random_element(s1, cfg.max_degree, seed=cfg.seed + hash((s1, s2, t, 0)) % 10**6)
                b = carrier.random_element(s2, cfg.max_degree, seed=cfg.seed + hash((s1, s2, t, 1)) % 10**6)
                if transferred.brackets[2](a, b) != model.brackets[2](a, b):
                    bad = {"slots": [list(s1), list(s2)]}
                    break
                if not transferred.brackets[1](a).is_zero():
                    bad = {"kind": "differential", "slot": list(s1)}
                    break
    report.add(f"transfer.d{d}.l2_matches_schouten", bad is None,
               **({"witness": bad} if bad else {}))

    bad = None
    for n in range(3, cfg.arity_cap + 1):
        for t in range(cfg.trials // 2):
            xs = [carrier.random_element(slots[(t + i) % len(slots)], cfg.max_degree,
                                         seed=cfg.seed + 31 * t + i + 1000 * n)
                  for i in range(n)]
            if not transferred.brackets[n](*xs).is_zero():
                bad = {"arity": n}
                break
    report.add(f"transfer.d{d}.higher_brackets_vanish", bad is None,
               **({"witness": bad} if bad else {}))
    return report


def suite_jacobi(cfg: CampaignConfig) -> Report:
    """Generalized Jacobi identities of the configured minimal model."""
    report = Report()
    d, variant = cfg.d, cfg.variant
    structure = minimal_model_structure(d, variant)
    carrier = cohomology_model(d, variant)
    slots = carrier.slots
    arities = [n for n in structure.arities() if n >= 2]
    top_arity = max(arities)
    jacobi_range = range(2, max(4, top_arity + 2))

    for n in jacobi_range:
        bad = None
        for t in range(max(1, cfg.trials // max(1, len(jacobi_range)))):
            xs = [carrier.random_element(slots[hash((n, t, i)) % len(slots)],
                                         cfg.max_degree,
                                         seed=cfg.seed + 997 * t + 31 * n + i)
                  for i in range(n)]
            defect = jacobi_defect(structure, n, xs)
            if not defect.is_zero():
                bad = {"arity": n}
                break
        report.add(f"jacobi.{variant.label}.d{d}.arity{n}", bad is None,
                   **({"witness": bad} if bad else {}))

    if top_arity > 2:
        bad = None
        for t in range(cfg.trials // 2):
            xs = [carrier.random_element(slots[hash((t, i, 5)) % len(slots)],
                                         cfg.max_degree, seed=cfg.seed + 13 * t + i)
                  for i in range(top_arity)]
            out = structure.brackets[top_arity](*xs)
            if out.parts:
                bad = {"witness": "non-central output"}
                break
            center = cohomology_model(d, variant).element({}, scalar=out.scalar)
            probe = carrier.random_element(slots[t % len(slots)], cfg.max_degree, seed=cfg.seed + t)
            if not structure.brackets[2](center, probe).is_zero():
                bad = {"witness": "center is not central"}
                break
        report.add(f"jacobi.{variant.label}.d{d}.centrality", bad is None,
                   **({"witness": bad} if bad else {}))
    return report


def suite_sho(cfg: CampaignConfig) -> Report:
    """The super-divergence law, the Lie anti-map law, and membership."""
    report = Report()
    d, deg, seed = cfg.d, cfg.max_degree, cfg.seed

    bad = None
    for t in range(cfg.trials):
        f = _homog(d, deg, seed + 19 * t)
        if f.is_zero():
            continue
        kappa = conventions.KAPPA_EVEN if f.parity() == 0 else conventions.KAPPA_ODD
        if super_divergence(hamiltonian_vf(f)) != pvcalc.divergence(f).scale(kappa):
            bad = {"f": str(f)}
            break
        if pvcalc.divergence(f).is_zero() != super_divergence(hamiltonian_vf(f)).is_zero():
            bad = {"f": str(f), "kind": "kernel"}
            break
    report.add(f"sho.d{d}.divergence_law", bad is None, **({"witness": bad} if bad else {}))

    bad = None
    for t in range(cfg.trials):
        f = _homog(d, deg, seed + 23 * t)
        g = _homog(d, deg, seed + 23 * t + 9)
        if f.is_zero() or g.is_zero():
            continue
        sigma = conventions.SIGMA_TABLE[(f.parity(), g.parity())]
        lhs = vf_bracket(hamiltonian_vf(f), hamiltonian_vf(g))
        rhs = hamiltonian_vf(pvcalc.schouten(f, g)).scale(sigma)
        if lhs != rhs:
            bad = {"f": str(f), "g": str(g)}
            break
    report.add(f"sho.d{d}.hamiltonian_anti_map", bad is None, **({"witness": bad} if bad else {}))

    bad = None
    top = tuple(range(1, d + 1))
    for mono in monomial_basis(d, min(5, deg + 2)):
        poly = SuperPoly(d, {mono: Fraction(1)})
        got = membership(poly)
        core = poly - SuperPoly.const(d, poly.constant_term())
        if core.is_zero():
            want = "not-HO-generator"
        elif not pvcalc.divergence(core).is_zero():
            want = "HO"
        elif core.top_constant() != 0:
            want = "SHO-prime"
        else:
            want = "SHO"
        if got != want:
            bad = {"monomial": str(poly), "got": got, "want": want}
            break
    report.add(f"sho.d{d}.membership_criterion", bad is None, **({"witness": bad} if bad else {}))

    bad = None
    for t in range(cfg.trials // 2):
        f = random_sho_generator(deg, seed=seed + 41 * t, d=d)
        g = random_sho_generator(deg, seed=seed + 41 * t + 3, d=d)
        br = pvcalc.schouten(f, g)
        degs_f = set(f.homogeneous_components("principal"))
        degs_g = set(g.homogeneous_components("principal"))
        if len(degs_f) == 1 and len(degs_g) == 1 and not br.is_zero():
            want = {degs_f.pop() + degs_g.pop()}
            if set(br.homogeneous_components("principal")) - want:
                bad = {"f": str(f), "g": str(g)}
                break
    report.add(f"sho.d{d}.principal_grading", bad is None, **({"witness": bad} if bad else {}))
    return report


def suite_cocycles(cfg: CampaignConfig) -> Report:
    """The d = 3 extension: verbatim bracket identities, Jacobi, cocycles."""
    report = Report()
    xi = lambda i: SuperPoly.xi(3, i)
    x = lambda i: SuperPoly.x(3, i)

    def eps(i, j, k):
        if {i, j, k} != {1, 2, 3}:
            return 0
        return 1 if (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1

    bad = None
    for i, j, k in permutations((1, 2, 3)):
        out = ext_bracket_d3(ext_element(xi(i)), ext_element(-(xi(j) * xi(k))))
        if not (out.gen.is_zero() and out.c2 == 0 and out.c1 == eps(i, j, k)):
            bad = {"ijk": [i, j, k], "got": str(out)}
            break
    report.add("extension.identity_eps_e1", bad is None, **({"witness": bad} if bad else {}))

    bad = None
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            out = ext_bracket_d3(ext_element(-x(i)), ext_element(xi(j)))
            want = Fraction(1 if i == j else 0)
            if not (out.gen.is_zero() and out.c1 == 0 and out.c2 == want):
                bad = {"ij": [i, j], "got": str(out)}
                break
    report.add("extension.identity_delta_e2", bad is None, **({"witness": bad} if bad else {}))

    bad = None
    for t in range(cfg.trials):
        a = ext_element(random_sho_generator(cfg.max_degree, seed=cfg.seed + 3 * t))
        b = ext_element(random_sho_generator(cfg.max_degree, seed=cfg.seed + 3 * t + 1))
        c = ext_element(random_sho_generator(cfg.max_degree, seed=cfg.seed + 3 * t + 2))
        if not lie_jacobi_defect(a, b, c).is_zero():
            bad = {"a": str(a), "b": str(b), "c": str(c)}
            break
    report.add("extension.super_jacobi", bad is None, **({"witness": bad} if bad else {}))

    def c1_pairing(f, g):
        total = Fraction(0)
        for k2, comp in f.xi_components().items():
            decal = -1 if (k2 - 1) & 1 else 1
            total += conventions.EXT_C1_SIGN * decal * pvcalc.top_constant_pairing(comp, g)
        return total

    report.extend(cocycle_check(c1_pairing, trials=cfg.trials // 2, seed=cfg.seed,
                                max_degree=cfg.max_degree, label="extension.c1_cocycle"))
    report.extend(cocycle_check(lambda f, g: pvcalc.schouten(f, g).constant_term(),
                                trials=cfg.trials // 2, seed=cfg.seed,
                                max_degree=cfg.max_degree, label="extension.c2_cocycle"))
    # negative control: a perturbed pairing is not a cocycle
    def perturbed(f, g):
        return c1_pairing(f, g) + sum((f * g)._terms.values(), Fraction(0))

    broken = cocycle_check(perturbed, trials=cfg.trials, seed=cfg.seed,
                           max_degree=cfg.max_degree, label="extension.broken_pairing")
    report.add("extension.negative_control", not broken.ok)

    bad = None
    for t in range(cfg.trials // 2):
        v = ext_element(random_sho_generator(cfg.max_degree, seed=cfg.seed + 7 * t))
        center = ext_element(SuperPoly.zero(3), c1=1, c2=-2)
        if not ext_bracket_d3(center, v).is_zero() or not ext_bracket_d3(v, center).is_zero():
            bad = {"v": str(v)}
            break
    report.add("extension.centrality", bad is None, **({"witness": bad} if bad else {}))
    return report


def suite_sl2(cfg: CampaignConfig) -> Report:
    report = Report()
    report.extend(sl2_relations_check(truncation=min(4, cfg.max_degree),
                                      trials=cfg.trials // 2, seed=cfg.seed))
    report.extend(equivariance_check_cocycle(trials=cfg.trials // 2, seed=cfg.seed))
    report.extend(equivariance_compare_theorem(truncation=min(3, cfg.max_degree),
                                               trials=cfg.trials // 2, seed=cfg.seed))
    return report


SUITES = {
    "algebra": suite_algebra,
    "contraction": suite_contraction,
    "homotopy": suite_homotopy,
    "transfer": suite_transfer,
    "jacobi": suite_jacobi,
    "sho": suite_sho,
    "cocycles": suite_cocycles,
    "sl2": suite_sl2,
}


def default_checks(cfg: CampaignConfig) -> tuple[str, ...]:
    checks = ["algebra", "contraction", "homotopy", "sho", "jacobi"]
    if cfg.variant.kind == "mbcov":
        checks.insert(3, "transfer")
    if cfg.d == 3:
        checks += ["cocycles", "sl2"]
    return tuple(checks)


def run_campaign(cfg: CampaignConfig) -> Report:
    cfg.validate()
    checks = cfg.checks or default_checks(cfg)
    report = Report()
    for name in checks:
        if name in ("cocycles", "sl2") and cfg.d != 3:
            raise ValueError(f"suite {name!r} requires d = 3")
        report.extend(SUITES[name](cfg))
    return report
