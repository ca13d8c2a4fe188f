"""Catalogue of parameter families attainable by rank-3 actions with a
regular normal vector group, and the coset decision for order-3
multivalued groups.

An involutive order-3 group with swap star is a coset group exactly
when it is isomorphic to the (2k+1)-valued swap group with 4k+3 a prime
power; with symmetric star, exactly when its reduced diagonal ratios
invert to a parameter set (v, k, lambda, mu) realised by one of the
nine closed-form families or the fixed table of sporadic parameter
sets.  mu = 0 sets do not determine v, so everything is keyed on the
full quadruple.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .algebra import is_prime, is_prime_power, mult_order
from .core import (
    SWAP_STAR,
    SYMMETRIC_STAR,
    MultivaluedGroup,
    Signature,
    signature,
    verify_axioms,
    verify_involutive,
)
from .errors import InputError
from .srg import (
    VLS_EXCLUSIONS,
    SrgParams,
    alternating_params,
    bilinear_params,
    clique_union_params,
    complement_params,
    conference_params,
    grid_params,
    halfspin_params,
    polar_params,
    polar_plus_complement_params,
    vls_params,
)

FAMILIES = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "TABLE")

# Sporadic parameter sets attainable only by the exceptional actions;
# rows are (v, k, lambda, mu) and are referenced by 1-based row index.
SPORADIC_TABLE = (
    (64, 18, 2, 6),
    (169, 72, 31, 30),
    (243, 22, 1, 2),
    (243, 110, 37, 60),
    (256, 45, 16, 6),
    (256, 102, 38, 42),
    (361, 144, 59, 56),
    (625, 144, 43, 30),
    (625, 240, 95, 90),
    (841, 168, 47, 30),
    (961, 240, 71, 56),
    (961, 360, 139, 132),
    (1681, 480, 149, 132),
    (2048, 276, 44, 36),
    (2048, 759, 310, 264),
    (2401, 240, 59, 20),
    (2401, 720, 229, 210),
    (2401, 960, 389, 380),
    (4096, 1575, 614, 600),
    (5041, 840, 179, 132),
    (6241, 1560, 419, 380),
    (6561, 1440, 351, 306),
    (15625, 7560, 3655, 3660),
    (531441, 65520, 8559, 8010),
)


@dataclass(frozen=True)
class FamilyDescriptor:
    """One attainable parameter set with its defining integers.

    params is always in the lower-valency orientation; witness is a
    tuple of (name, value) pairs, e.g. (("p", 2), ("t", 1), ("s", 1)).
    """

    family: str
    params: tuple[int, int, int, int]
    witness: tuple[tuple[str, object], ...]

    @property
    def witness_dict(self) -> dict:
        return dict(self.witness)

    def witness_str(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.witness)


@dataclass
class Verdict:
    """Outcome of the order-3 coset decision.

    kind is "xk" (swap star, carries k), "srg" (symmetric star, carries
    the first matching family and all matches), or "none" (carries the
    reason).  derived is the inverted parameter quadruple when the
    signature admits one.
    """

    coset: bool
    kind: str
    k: int | None = None
    family: FamilyDescriptor | None = None
    matches: tuple[FamilyDescriptor, ...] = ()
    derived: tuple[int, int, int, int] | None = None
    reason: str | None = None


def canonicalize(params: SrgParams) -> SrgParams:
    """Flip to the complement when its valency is lower."""
    if params.k > params.kbar:
        return complement_params(params)
    return params


def _canonical_tuple(params: SrgParams) -> tuple[int, int, int, int]:
    return canonicalize(params).as_tuple()


def _descriptor(family, params, witness) -> FamilyDescriptor:
    return FamilyDescriptor(family, _canonical_tuple(params), tuple(witness))


def _vls_admissible(p, c, t) -> bool:
    """Tuples acceptable to the catalogue: primitive-root condition, the
    published exclusions, and mu > 0 (the two tuples with mu = 0,
    (2,3,1) and (2,5,1), are disjoint clique unions already produced by
    family I; the exclusion list exists precisely to avoid such
    duplicates)."""
    if p % c == 0 or mult_order(p, c) != c - 1:
        return False
    if (p, c, t) in VLS_EXCLUSIONS:
        return False
    return vls_params(p, c, t).mu > 0


def _primes(limit):
    return [n for n in range(2, limit + 1) if is_prime(n)]


def _prime_powers(limit):
    return [n for n in range(2, limit + 1) if is_prime_power(n) is not None]


def enumerate_families(v_max: int) -> list[FamilyDescriptor]:
    """Every attainable descriptor with v <= v_max, in the lower-valency
    orientation, sorted by (params, family, witness).  Parameter sets
    hit by several families are all emitted; see collisions()."""
    if v_max < 4:
        raise InputError("v_max must be at least 4")
    found: list[FamilyDescriptor] = []

    for p in _primes(isqrt(v_max)):
        total = 2
        while p**total <= v_max:
            for t in range(1, total):
                s = total - t
                found.append(
                    _descriptor("I", clique_union_params(p, t, s), (("p", p), ("t", t), ("s", s)))
                )
            total += 1

    for q in _prime_powers(isqrt(v_max)):
        found.append(_descriptor("II", grid_params(q), (("q", q),)))

    t = 1
    while 4 * t + 1 <= v_max:
        if is_prime_power(4 * t + 1) is not None:
            found.append(_descriptor("III", conference_params(t), (("t", t),)))
        t += 1

    for c in _primes(v_max.bit_length() + 1):
        if c == 2:
            continue
        for p in _primes(isqrt(v_max)):
            if p ** (c - 1) > v_max:
                break
            t = 1
            while p ** ((c - 1) * t) <= v_max:
                if _vls_admissible(p, c, t):
                    found.append(
                        _descriptor("IV", vls_params(p, c, t), (("p", p), ("c", c), ("t", t)))
                    )
                t += 1

    for q in _prime_powers(isqrt(v_max)):
        e = 3
        while q ** (2 * e) <= v_max:
            found.append(_descriptor("V", bilinear_params(q, e), (("q", q), ("e", e))))
            e += 1

    for q in _prime_powers(isqrt(v_max)):
        e = 2
        while q ** (2 * e) <= v_max:
            for eps, sign in ((1, "+"), (-1, "-")):
                if (q, eps) == (2, 1):
                    continue
                found.append(
                    _descriptor("VI", polar_params(q, e, eps), (("q", q), ("e", e), ("eps", sign)))
                )
            e += 1

    e = 2
    while 2 ** (2 * e) <= v_max:
        found.append(_descriptor("VII", polar_plus_complement_params(e), (("e", e),)))
        e += 1

    for q in _prime_powers(isqrt(v_max)):
        if q**10 <= v_max:
            found.append(_descriptor("VIII", alternating_params(q), (("q", q),)))
        if q**16 <= v_max:
            found.append(_descriptor("IX", halfspin_params(q), (("q", q),)))

    for row, (v, k, lam, mu) in enumerate(SPORADIC_TABLE, start=1):
        if v <= v_max:
            found.append(_descriptor("TABLE", SrgParams(v, k, lam, mu), (("row", row),)))

    found.sort(key=lambda d: (d.params, FAMILIES.index(d.family), d.witness_str()))
    return found


def collisions(descriptors) -> dict[tuple[int, int, int, int], tuple[str, ...]]:
    """Parameter quadruples emitted by more than one family, mapping to
    the family names in catalogue order."""
    by_params: dict[tuple, list[str]] = {}
    for desc in descriptors:
        fams = by_params.setdefault(desc.params, [])
        if desc.family not in fams:
            fams.append(desc.family)
    return {
        params: tuple(sorted(fams, key=FAMILIES.index))
        for params, fams in sorted(by_params.items())
        if len(fams) > 1
    }


def _exponent_of(base: int, value: int):
    """t with base**t == value, or None."""
    t, acc = 0, 1
    while acc < value:
        acc *= base
        t += 1
    return t if acc == value else None


def match_params(v: int, k: int, lam: int, mu: int) -> list[FamilyDescriptor]:
    """All catalogue descriptors whose parameters equal the given ones
    after flipping to the lower-valency orientation; an empty list means
    the parameters are not attainable."""
    params = canonicalize(SrgParams(v, k, lam, mu))
    target = params.as_tuple()
    v = params.v
    out: list[FamilyDescriptor] = []
    pp = is_prime_power(v)

    if pp is not None:
        p, d = pp

        t = _exponent_of(p, params.k + 1)
        if t is not None and 1 <= t < d:
            s = d - t
            if clique_union_params(p, t, s).as_tuple() == target:
                out.append(FamilyDescriptor("I", target, (("p", p), ("t", t), ("s", s))))

        q = isqrt(v)
        if q * q == v and q >= 2 and is_prime_power(q) is not None:
            if _canonical_tuple(grid_params(q)) == target:
                out.append(FamilyDescriptor("II", target, (("q", q),)))

        if v % 4 == 1 and v >= 5:
            t = (v - 1) // 4
            if conference_params(t).as_tuple() == target:
                out.append(FamilyDescriptor("III", target, (("t", t),)))

        for c in _primes(d + 1):
            if c == 2 or d % (c - 1):
                continue
            t = d // (c - 1)
            if _vls_admissible(p, c, t) and vls_params(p, c, t).as_tuple() == target:
                out.append(FamilyDescriptor("IV", target, (("p", p), ("c", c), ("t", t))))

        for e in range(3, d // 2 + 1):
            if d % (2 * e):
                continue
            q = p ** (d // (2 * e))
            if bilinear_params(q, e).as_tuple() == target:
                out.append(FamilyDescriptor("V", target, (("q", q), ("e", e))))

        for e in range(2, d // 2 + 1):
            if d % (2 * e):
                continue
            q = p ** (d // (2 * e))
            for eps, sign in ((1, "+"), (-1, "-")):
                if (q, eps) == (2, 1):
                    continue
                if polar_params(q, e, eps).as_tuple() == target:
                    out.append(
                        FamilyDescriptor("VI", target, (("q", q), ("e", e), ("eps", sign)))
                    )

        if p == 2 and d % 2 == 0 and d >= 4:
            e = d // 2
            if polar_plus_complement_params(e).as_tuple() == target:
                out.append(FamilyDescriptor("VII", target, (("e", e),)))

        if d % 10 == 0:
            q = p ** (d // 10)
            if alternating_params(q).as_tuple() == target:
                out.append(FamilyDescriptor("VIII", target, (("q", q),)))

        if d % 16 == 0:
            q = p ** (d // 16)
            if halfspin_params(q).as_tuple() == target:
                out.append(FamilyDescriptor("IX", target, (("q", q),)))

    for row, entry in enumerate(SPORADIC_TABLE, start=1):
        if entry == target:
            out.append(FamilyDescriptor("TABLE", target, (("row", row),)))

    return out


def derive_params(sig: Signature):
    """Invert a symmetric-star signature to its parameter quadruple.

    With ratios (m1/n, m2/n, a/n) in lowest terms: k and kbar are the
    denominators of the first two (whose numerators must be 1),
    lambda = (a/n)k, v = k + kbar + 1 and mu = k(k-1-lambda)/kbar.
    Returns None if any derived value is non-integral or out of range.
    """
    if sig.kind != SYMMETRIC_STAR:
        raise InputError("parameters are derived from symmetric-star signatures only")
    m1n, m2n, an = sig.ratios
    if m1n.numerator != 1 or m2n.numerator != 1:
        return None
    k, kbar = m1n.denominator, m2n.denominator
    lam = an * k
    if lam.denominator != 1:
        return None
    lam = int(lam)
    if lam > k - 1:
        return None
    v = k + kbar + 1
    mu_num = k * (k - 1 - lam)
    if mu_num % kbar:
        return None
    try:
        return SrgParams(v, k, lam, mu_num // kbar)
    except InputError:
        return None


def classify_order3(g: MultivaluedGroup) -> Verdict:
    """Decide whether an order-3 involutive multivalued group is (up to
    isomorphism) a coset group, and name the witnessing family.

    Swap star: with diagonal value a and valency n, the group is the
    swap group of some k exactly when d = n - 2a satisfies d > 0 and
    d = gcd(a, n) (then a/n = k/(2k+1) with k = a/d); it is coset iff
    additionally 4k+3 is a prime power.  Symmetric star: invert the
    signature and look the parameters up in the catalogue.
    """
    if g.order != 3:
        raise InputError("classification requires a group of order 3")
    report = verify_axioms(g).merge(verify_involutive(g))
    if not report.ok:
        raise InputError(
            f"classification requires a verified involutive group; witnesses: "
            f"{report.counterexamples[:3]}"
        )
    sig = signature(g)

    if sig.kind == SWAP_STAR:
        ratio = sig.ratios[0]
        a, n = ratio.numerator, ratio.denominator  # already reduced
        # reduced a/n equals k/(2k+1) iff n = 2a + 1
        if n != 2 * a + 1:
            return Verdict(
                coset=False,
                kind="none",
                reason=f"swap ratio {ratio} is not of the form k/(2k+1)",
            )
        k = a
        if is_prime_power(4 * k + 3) is None:
            return Verdict(
                coset=False,
                kind="none",
                k=k,
                reason=f"4k+3 = {4 * k + 3} is not a prime power",
            )
        return Verdict(coset=True, kind="xk", k=k)

    derived = derive_params(sig)
    if derived is None:
        return Verdict(
            coset=False,
            kind="none",
            reason="signature does not invert to a strongly regular parameter set",
        )
    matches = tuple(match_params(*derived.as_tuple()))
    if not matches:
        return Verdict(
            coset=False,
            kind="none",
            derived=derived.as_tuple(),
            reason=f"parameters {derived.as_tuple()} are not attainable",
        )
    return Verdict(
        coset=True,
        kind="srg",
        family=matches[0],
        matches=matches,
        derived=derived.as_tuple(),
    )


def verdict_to_json_dict(verdict: Verdict) -> dict:
    data: dict = {"coset": verdict.coset, "kind": verdict.kind}
    if verdict.kind == "xk":
        data["witness"] = {"k": verdict.k}
    elif verdict.kind == "srg":
        desc = verdict.family
        data["witness"] = {"family": desc.family, **desc.witness_dict}
        data["matches"] = [
            {"family": m.family, **m.witness_dict} for m in verdict.matches
        ]
    else:
        data["witness"] = None
        data["reason"] = verdict.reason
        if verdict.k is not None:
            data["k"] = verdict.k
    if verdict.derived is not None:
        data["derived"] = list(verdict.derived)
    return data


def catalogue_csv(descriptors) -> str:
    """CSV export of a descriptor list: v,k,lambda,mu,family,witness."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["v", "k", "lambda", "mu", "family", "witness"])
    for desc in descriptors:
        v, k, lam, mu = desc.params
        writer.writerow([v, k, lam, mu, desc.family, desc.witness_str()])
    return buf.getvalue()


def swap_ratio(g: MultivaluedGroup) -> Fraction:
    """Reduced a/n of a swap-star order-3 group (helper for reports)."""
    sig = signature(g)
    if sig.kind != SWAP_STAR:
        raise InputError("not a swap-star group")
    return sig.ratios[0]
