"""Seeded verification suites.

Every trial draws from its own ``random.Random(seed ^ trial)``, so a trial's
outcome does not depend on the others or on execution order.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .dehn import is_identity, verify_trace
from .presentation import (
    PresentationParams,
    check_metric_condition,
    family_members,
    max_piece_length,
    relator,
    symmetrized_family,
)
from .word_maps import (
    GroupPolynomial,
    c_polynomial,
    eval_group,
    fresh_index,
    in_subbasic_closed_group,
    in_subbasic_closed_semigroup,
    normalize,
)
from .words import (
    Letter,
    Word,
    a,
    concat,
    concat_all,
    cyclic_permutation,
    free_reduce,
    invert,
    polarity,
    render_word,
    x,
    x_indices,
)
from .zero_monoid import (
    SGen,
    SPolynomial,
    SWord,
    eval_quotient,
    eval_s,
    kill_generator,
    project,
    s_equal,
    s_mul,
    s_normalize,
    s_poly_normalize,
    sx,
    sy,
)

MIN_ACTIVE_FRACTION = 0.5


@dataclass
class SuiteReport:
    suite: str
    params: dict[str, Any]
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    duration_ms: float = 0.0
    counterexample: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool | None, counterexample: Callable[[], dict] | dict | None = None) -> None:
        """Count one check: True passes, False fails, None skips."""
        if ok is None:
            self.skipped += 1
        elif ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None and counterexample is not None:
                self.counterexample = counterexample() if callable(counterexample) else counterexample

    def as_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["duration_ms"] = round(self.duration_ms, 3)
        if out["counterexample"] is None:
            del out["counterexample"]
        return out

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = (
            f"[{status}] {self.suite}: passed={self.passed} failed={self.failed} "
            f"skipped={self.skipped} ({self.duration_ms:.0f} ms)"
        )
        for key, value in self.details.items():
            line += f"\n    {key}: {value}"
        if self.counterexample is not None:
            line += f"\n    counterexample: {self.counterexample}"
        return line


class timed:
    def __init__(self, report: SuiteReport):
        self.report = report

    def __enter__(self) -> SuiteReport:
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc) -> None:
        self.report.duration_ms = (time.perf_counter() - self.start) * 1000


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed ^ trial)


def _enforce_activity(report: SuiteReport, trials: int) -> None:
    # a generator that only produces skipped trials must not pass vacuously
    active = trials - report.skipped
    report.details["active_fraction"] = round(active / trials, 4)
    if active < MIN_ACTIVE_FRACTION * trials:
        report.record(False, {"reason": f"only {active} of {trials} trials met the hypothesis"})


# random generation ----------------------------------------------------------


def random_word(rng: random.Random, letters: Sequence[Letter], length: int) -> Word:
    """Uniform over ``letters`` at each position, never choosing the inverse of
    the previous letter."""
    out: list[Letter] = []
    while len(out) < length:
        letter = rng.choice(letters)
        if out and letter == out[-1].inverse():
            continue
        out.append(letter)
    return Word(tuple(out))


def signed(letters: Sequence[Letter]) -> list[Letter]:
    return [l for base in letters for l in (base, base.inverse())]


def group_alphabet(k: int, x_bound: int) -> list[Letter]:
    return signed([a(r) for r in range(1, k + 2)] + [x(i) for i in range(1, x_bound + 1)])


def random_member(rng: random.Random, k: int, max_index: int) -> Word:
    return rng.choice(family_members(k, rng.randint(1, max_index)))[1]


def random_trivial_product(
    rng: random.Random, k: int, max_index: int = 5, max_factors: int = 3, max_conj: int = 6
) -> Word:
    """A product of 1..max_factors conjugates of family members: trivial by construction."""
    alphabet = group_alphabet(k, max_index)
    factors = []
    for _ in range(rng.randint(1, max_factors)):
        g = random_word(rng, alphabet, rng.randint(0, max_conj))
        factors += [g, random_member(rng, k, max_index), invert(g)]
    return concat_all(factors)


def random_group_polynomial(
    rng: random.Random, alphabet: Sequence[Letter], semigroup: bool = True,
    max_degree: int = 4, max_coeff: int = 6, max_exp: int = 3,
) -> GroupPolynomial:
    terms: list = [random_word(rng, alphabet, rng.randint(0, max_coeff))]
    for _ in range(rng.randint(1, max_degree)):
        e = rng.randint(1, max_exp)
        if not semigroup and rng.random() < 0.5:
            e = -e
        terms += [e, random_word(rng, alphabet, rng.randint(0, max_coeff))]
    return normalize(terms, semigroup=semigroup)


def random_sword(rng: random.Random, max_index: int, length: int) -> SWord:
    gens = [SGen(rng.choice("xy"), rng.randint(1, max_index)) for _ in range(length)]
    return s_normalize(gens)


def random_spolynomial(
    rng: random.Random, max_index: int = 5, max_degree: int = 4, max_coeff: int = 6, max_exp: int = 3
) -> SPolynomial:
    terms: list = []
    n = rng.randint(0, max_coeff)
    if n:
        terms.append(random_sword(rng, max_index, n))
    for _ in range(rng.randint(1, max_degree)):
        terms.append(rng.randint(1, max_exp))
        n = rng.randint(0, max_coeff)
        if n:
            terms.append(random_sword(rng, max_index, n))
    return s_poly_normalize(terms)


# suites ---------------------------------------------------------------------


def run_sc_check(k: int, max_index: int, lam: Fraction | None = None) -> SuiteReport:
    params = PresentationParams(k)
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    report = SuiteReport("sc-check", {"k": k, "max_index": max_index})
    if lam is not None:
        report.params["lambda"] = str(lam)
    with timed(report):
        family = symmetrized_family(params, range(1, max_index + 1))
        longest, witness = max_piece_length(family)
        report.details["members"] = len(family.words)
        report.details["max_piece_length"] = longest
        if witness is not None:
            report.details["witness"] = [render_word(w) for w in witness]
        report.record(len(family.words) == 4 * k * max_index,
                      {"check": "member count", "members": len(family.words)})
        report.record(longest == 1, {"check": "max piece length", "value": longest})
        bad = [w for w in family.words if len(w) != 2 * k]
        report.record(not bad, lambda: {"check": "member length", "word": render_word(bad[0])})
        at_1_over_k = check_metric_condition(family, Fraction(1, k))
        at_1_over_2k = check_metric_condition(family, Fraction(1, 2 * k))
        report.details[f"C'(1/{k})"] = at_1_over_k
        report.details[f"C'(1/{2 * k}) strict"] = at_1_over_2k
        report.record(at_1_over_k, {"check": f"C'(1/{k})"})
        # with strict inequality a length-1 piece in a length-2k relator fails 1 < 1
        report.record(not at_1_over_2k, {"check": f"C'(1/{2 * k}) expected to fail strictly"})
        if lam is not None:
            at_lam = check_metric_condition(family, lam)
            report.details[f"C'({lam})"] = at_lam
            report.record(at_lam, {"check": f"C'({lam})"})
    return report


def run_theorem_check(k: int, max_index: int) -> SuiteReport:
    params = PresentationParams(k)
    report = SuiteReport("theorem", {"k": k, "max_index": max_index})
    with timed(report):
        poly = c_polynomial(k)
        report.details["polynomial"] = str(poly)
        for i in range(1, max_index + 1):
            value = eval_group(poly, Word((x(i),)))
            trivial, trace = is_identity(value, params)
            ok = trivial and len(trace) == 1 and value == relator(params, i) and verify_trace(trace, params)
            report.record(ok, lambda: {"x": f"x{i}", "value": render_word(value), "trace": trace.render()})
        witness = Word((a(k + 1),))
        inside = in_subbasic_closed_group(poly, witness, params)
        report.details[f"a{k + 1} in C"] = inside
        report.record(not inside, {"x": f"a{k + 1}", "reason": "witness lies in C"})
    return report


def lemma_decomposition_trial(
    rng: random.Random, k: int, m: int, max_len: int, insert_relators: bool = False
) -> tuple[Word, Word]:
    others = [i for i in range(1, 4) if i != m][:2]
    base = signed([a(r) for r in range(1, k + 2)] + [x(i) for i in others])
    plus = random_word(rng, base + [x(m)], rng.randint(1, max_len))
    minus = random_word(rng, base + [x(m, -1)], rng.randint(1, max_len))
    if insert_relators:
        # relators of the other indices keep both polarities intact
        for side in ("plus", "minus"):
            if rng.random() < 0.5:
                w = plus if side == "plus" else minus
                p = rng.randint(0, len(w))
                r = rng.choice(family_members(k, rng.choice(others)))[1]
                w = concat_all([w[:p], r, w[p:]])
                if side == "plus":
                    plus = w
                else:
                    minus = w
    return plus, minus


def decomposition_outcome(plus: Word, minus: Word, params: PresentationParams, m: int):
    """None when the hypothesis fails (x_m gone after reduction), otherwise
    whether the solver correctly reports ``plus * minus`` nontrivial."""
    if not (polarity(plus, m)[0] and polarity(minus, m)[1]):
        raise ValueError("V+ must be positive and V- negative in x_m")
    v = concat(plus, minus)
    if m not in x_indices(v):
        return None, None
    trivial, trace = is_identity(v, params)
    return not trivial, trace


def run_lemma_decomposition_suite(
    k: int, m: int, trials: int, seed: int, max_len: int, insert_relators: bool = False
) -> SuiteReport:
    params = PresentationParams(k)
    if m < 1 or trials < 1 or max_len < 1:
        raise ValueError("m, trials and max_len must be positive")
    report = SuiteReport(
        "lemma-decomposition",
        {"k": k, "m": m, "trials": trials, "seed": seed, "max_len": max_len},
    )
    if insert_relators:
        report.params["insert_relators"] = True
    with timed(report):
        for t in range(trials):
            plus, minus = lemma_decomposition_trial(trial_rng(seed, t), k, m, max_len, insert_relators)
            outcome, trace = decomposition_outcome(plus, minus, params, m)
            report.record(outcome, lambda: {
                "trial": t, "V+": render_word(plus), "V-": render_word(minus), "trace": trace.as_dicts(),
            })
        _enforce_activity(report, trials)
    return report


def _density_pair(rng: random.Random, k: int, x_bound: int) -> tuple[GroupPolynomial, GroupPolynomial, str]:
    alphabet = group_alphabet(k, x_bound)
    p = random_group_polynomial(rng, alphabet)
    mode = rng.choices(["independent", "equal", "relator-twin"], weights=[2, 1, 1])[0]
    if mode == "independent":
        q = random_group_polynomial(rng, alphabet)
    elif mode == "equal":
        q = p
    else:
        # splice a conjugated relator into one coefficient: equal as maps, different as words
        terms = p.terms()
        slot = rng.randrange(0, len(terms), 2)
        g = random_word(rng, alphabet, rng.randint(0, 3))
        r = random_member(rng, k, x_bound)
        c = terms[slot]
        cut = rng.randint(0, len(c))
        terms[slot] = concat_all([c[:cut], g, r, invert(g), c[cut:]])
        q = normalize(terms, semigroup=True)
    return p, q, mode


def run_density_suite(k: int, trials: int, seed: int, x_bound: int = 3) -> SuiteReport:
    params = PresentationParams(k)
    if trials < 1:
        raise ValueError("trials must be positive")
    report = SuiteReport("density", {"k": k, "trials": trials, "seed": seed})
    junction = escaped = closed = 0
    with timed(report):
        for t in range(trials):
            rng = trial_rng(seed, t)
            p, q, mode = _density_pair(rng, k, x_bound)
            m = fresh_index([p, q])
            xm = Word((x(m),))
            v = concat(eval_group(p, xm), invert(eval_group(q, xm)))
            if m not in x_indices(v):
                junction += 1
            inside = in_subbasic_closed_semigroup(p, q, xm, params)

            def failure(reason: str, at: Word | None = None) -> dict:
                out = {"trial": t, "P": str(p), "Q": str(q), "m": m, "reason": reason}
                if at is not None:
                    out["at"] = render_word(at)
                return out

            if mode != "independent" and not inside:
                report.record(False, failure("P and Q agree as maps but x_m was reported outside C"))
                continue
            if not inside:
                escaped += 1
                report.record(True)
                continue
            closed += 1
            alphabet = group_alphabet(k, m)
            points = [Word((x(m + d),)) for d in range(1, 6)]
            points += [random_word(rng, alphabet, rng.randint(1, 6)) for _ in range(5)]
            bad = next((pt for pt in points if not in_subbasic_closed_semigroup(p, q, pt, params)), None)
            report.record(bad is None, lambda: failure("x_m in C but P, Q differ elsewhere", bad))
        report.details["x_m escaped"] = escaped
        report.details["x_m in C (P = Q as maps)"] = closed
        report.details["junction cancellations"] = junction
    return report


def run_example_suite(trials: int, seed: int, max_index: int) -> SuiteReport:
    if trials < 1 or max_index < 1:
        raise ValueError("trials and max_index must be positive")
    report = SuiteReport("sgp-example", {"trials": trials, "seed": seed, "max_index": max_index})
    with timed(report):
        for i in range(1, max_index + 1):
            report.record(s_mul(sx(i), sy(i)).is_zero, {"block": "D-membership", "i": i})
        report.record(not s_mul(sx(1), sy(2)).is_zero, {"block": "D-membership", "pair": "(x1, y2)"})
        blocks = {"renaming": 0, "free-factor": 0, "kill": 0}
        for t in range(trials):
            rng = trial_rng(seed, t)
            p = random_spolynomial(rng, max_index=5)
            q = p if rng.random() < 1 / 3 else random_spolynomial(rng, max_index=5)
            base = max(p.indices() | q.indices() | {0})
            i, j = base + rng.randint(1, 5), base + rng.randint(6, 10)
            for gen in (sx, sy):
                at_i = s_equal(eval_s(p, gen(i)), eval_s(q, gen(i)))
                at_j = s_equal(eval_s(p, gen(j)), eval_s(q, gen(j)))
                report.record(at_i == at_j, lambda: {
                    "block": "renaming", "P": str(p), "Q": str(q), "i": i, "j": j, "gen": gen.__name__,
                })
                blocks["renaming"] += 1
                # a fresh generator marks every variable occurrence, so agreement is formal equality
                report.record(at_i == (p == q), lambda: {
                    "block": "free-factor", "P": str(p), "Q": str(q), "at": f"{gen.__name__}({i})",
                })
                blocks["free-factor"] += 1
        for t in range(100):
            rng = trial_rng(seed, trials + t)
            p = random_spolynomial(rng, max_index=5)
            i = rng.randint(1, 5)
            s = random_sword(rng, 5, rng.randint(1, 4))
            lhs = project(eval_s(p, s), i)
            rhs = eval_quotient(kill_generator(p, i), s, i)
            report.record(s_equal(lhs, rhs), lambda: {
                "block": "kill", "P": str(p), "i": i, "s": str(s), "lhs": str(lhs), "rhs": str(rhs),
            })
            blocks["kill"] += 1
        report.details["checks per block"] = blocks
    return report


def _all_reduced_words(letters: Sequence[Letter], length: int):
    def extend(prefix: tuple[Letter, ...]):
        if len(prefix) == length:
            yield prefix
            return
        for letter in letters:
            if prefix and letter == prefix[-1].inverse():
                continue
            yield from extend(prefix + (letter,))

    return extend(())


def run_dehn_suite(
    k: int = 8, seed: int = 0, products: int = 300, exhaustive_len: int = 4,
    sampled_len: int = 8, samples: int = 10_000, conjugation: int = 200,
) -> SuiteReport:
    params = PresentationParams(k)
    report = SuiteReport("dehn", {
        "k": k, "seed": seed, "products": products, "exhaustive_len": exhaustive_len,
        "sampled_len": sampled_len, "samples": samples, "conjugation": conjugation,
    })
    with timed(report):
        for t in range(products):
            v = random_trivial_product(trial_rng(seed, t), k)
            trivial, trace = is_identity(v, params)
            report.record(trivial and verify_trace(trace, params), lambda: {
                "block": "known-trivial", "word": render_word(v), "trace": trace.as_dicts(),
            })
        alphabet = signed([a(r) for r in range(1, k + 2)] + [x(i) for i in range(1, 4)])
        short = 0
        for length in range(1, exhaustive_len + 1):
            for letters in _all_reduced_words(alphabet, length):
                v = Word(letters)
                trivial, _ = is_identity(v, params)
                report.record(not trivial, {"block": "short-nontrivial", "word": render_word(v)})
                short += 1
        for t in range(samples):
            rng = trial_rng(seed, products + t)
            v = random_word(rng, alphabet, rng.randint(exhaustive_len + 1, sampled_len))
            trivial, _ = is_identity(v, params)
            report.record(not trivial, {"block": "short-nontrivial", "word": render_word(v)})
            short += 1
        big = group_alphabet(k, 5)
        for t in range(conjugation):
            rng = trial_rng(seed, products + samples + t)
            if t % 2:
                v = random_trivial_product(rng, k)
            else:
                v = random_word(rng, big, rng.randint(1, 30))
            g = random_word(rng, big, rng.randint(1, 6))
            conj = concat_all([g, v, invert(g)])
            report.record(is_identity(v, params)[0] == is_identity(conj, params)[0], lambda: {
                "block": "conjugation", "word": render_word(v), "conjugator": render_word(g),
            })
        report.details["short words checked"] = short
    return report


def run_word_core_suite(seed: int = 0, cases: int = 10_000) -> SuiteReport:
    report = SuiteReport("word-core", {"seed": seed, "cases": cases})
    alphabet = signed([a(1), a(2), a(3), x(1), x(2)])
    with timed(report):
        for t in range(cases):
            rng = trial_rng(seed, t)
            raw = [rng.choice(alphabet) for _ in range(rng.randint(0, 20))]
            once = free_reduce(raw)
            report.record(free_reduce(once.letters) == once,
                          {"block": "idempotence", "raw": " ".join(map(str, raw))})
            u, v, w = (free_reduce(rng.choice(alphabet) for _ in range(rng.randint(0, 12))) for _ in range(3))
            report.record(invert(concat(u, v)) == concat(invert(v), invert(u)),
                          {"block": "anti-homomorphism", "u": str(u), "v": str(v)})
            report.record(concat(concat(u, v), w) == concat(u, concat(v, w)),
                          {"block": "associativity", "u": str(u), "v": str(v), "w": str(w)})
            c = random_word(rng, alphabet, rng.randint(1, 15))
            while len(c) > 1 and c[0] == c[-1].inverse():
                c = c[1:]
            j = rng.randrange(len(c))
            back = cyclic_permutation(cyclic_permutation(c, j), (len(c) - j) % len(c))
            report.record(back == c, {"block": "rotation", "word": str(c), "j": j})
    return report


SUITES = {
    "sc-check": run_sc_check,
    "theorem": run_theorem_check,
    "lemma-decomposition": run_lemma_decomposition_suite,
    "density": run_density_suite,
    "sgp-example": run_example_suite,
    "dehn": run_dehn_suite,
    "word-core": run_word_core_suite,
}
