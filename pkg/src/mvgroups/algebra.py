"""Finite fields, explicit finite groups, automorphism actions, and the
coset construction of multivalued groups.

Groups are multiplication tables on 0..size-1; automorphisms are
permutations of that index set.  The coset construction takes a group G
and an automorphism group A, forms the A-orbits, and counts for each
orbit triple how many action elements realise the product:
m[x][y][z] = #{a in A : g0 * a(h0) in z} with g0, h0 the least orbit
representatives.  Representative independence can be verified on demand.
"""

from __future__ import annotations

import json
import random
from array import array
from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt

from .core import MultivaluedGroup, verify_axioms, verify_involutive
from .errors import CapError, InputError, InternalError

GROUP_CAP = 4096
ACTION_CAP = 20000
FIELD_CAP = 4096

GRP_FORMAT = "grp-v1"
ACT_FORMAT = "act-v1"

# Exhaustive structure checks (associativity, homomorphism property) are
# run up to this size; larger objects get a seeded random sample.
_EXHAUSTIVE_LIMIT = 256
_SAMPLE_SIZE = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_prime_power(v: int):
    """The unique (p, d) with v = p**d and p prime, or None."""
    if v <= 0:
        raise InputError(f"prime-power test needs a positive integer, got {v}")
    if v == 1:
        return None
    p = None
    if v % 2 == 0:
        p = 2
    else:
        f = 3
        while f * f <= v:
            if v % f == 0:
                p = f
                break
            f += 2
        else:
            return (v, 1)
    m, d = v, 0
    while m % p == 0:
        m //= p
        d += 1
    return (p, d) if m == 1 else None


def mult_order(p: int, m: int) -> int:
    """Least t >= 1 with p**t congruent to 1 modulo m."""
    if m < 2:
        raise InputError("modulus must be at least 2")
    if gcd(p, m) != 1:
        raise InputError(f"{p} and {m} are not coprime")
    t, val = 1, p % m
    while val != 1:
        val = (val * p) % m
        t += 1
    return t


def is_sum_of_two_squares(v: int) -> bool:
    if v < 0:
        raise InputError("expected a nonnegative integer")
    for a in range(isqrt(v) + 1):
        b = isqrt(v - a * a)
        if a * a + b * b == v:
            return True
    return False


# ---------------------------------------------------------------------------
# Finite fields


def _poly_trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mod(a, modulus, p):
    a = list(a)
    dm = len(modulus) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        shift = len(a) - 1 - dm
        if lead:
            for i, c in enumerate(modulus):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return _poly_trim(a)


def _poly_mulmod(a, b, modulus, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _poly_mod(out, modulus, p)


def _is_irreducible(coeffs, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_mod(coeffs, divisor, p):
                return False
    return True


class FiniteField:
    """GF(p**s) with elements indexed 0..q-1.

    Index i encodes the coefficient vector of a residue polynomial in
    base-p digits (low degree first), so 0 is zero and 1 is one.
    Multiplication goes through discrete log tables built from the least
    primitive element, which makes the whole construction reproducible.
    """

    __slots__ = ("p", "s", "q", "modulus", "generator", "_exp", "_log")

    def __init__(self, p, s, modulus):
        modulus = tuple(modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise InputError(f"modulus must be monic of degree {s}")
        if s > 1 and not _is_irreducible(list(modulus), p):
            raise InputError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.s = s
        self.q = p**s
        self.modulus = modulus
        self._build_log_tables()
        self._self_check()

    # encoding helpers -----------------------------------------------------
    def _decode(self, idx):
        digits = []
        for _ in range(self.s):
            idx, r = divmod(idx, self.p)
            digits.append(r)
        return digits

    def _encode(self, digits):
        idx = 0
        for c in reversed(digits):
            idx = idx * self.p + c
        return idx

    def _raw_mul(self, a, b):
        pa = _poly_trim(self._decode(a))
        pb = _poly_trim(self._decode(b))
        prod_ = _poly_mulmod(pa, pb, list(self.modulus), self.p)
        return self._encode(prod_ + [0] * (self.s - len(prod_)))

    def _build_log_tables(self):
        q = self.q
        order = q - 1
        factors = set()
        m = order
        f = 2
        while f * f <= m:
            while m % f == 0:
                factors.add(f)
                m //= f
            f += 1
        if m > 1:
            factors.add(m)

        def raw_pow(a, k):
            result, base = 1, a
            while k:
                if k & 1:
                    result = self._raw_mul(result, base)
                base = self._raw_mul(base, base)
                k >>= 1
            return result

        gen = None
        for cand in range(1, q):
            if all(raw_pow(cand, order // f) != 1 for f in factors):
                gen = cand
                break
        if gen is None:
            raise InternalError(f"no primitive element found in GF({q})")
        exp = [1] * order
        for i in range(1, order):
            exp[i] = self._raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, val in enumerate(exp):
            log[val] = i
        self.generator = gen
        self._exp = tuple(exp)
        self._log = tuple(log)

    def _self_check(self):
        rng = random.Random(self.q)
        for _ in range(32):
            a, b, c = (rng.randrange(self.q) for _ in range(3))
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                raise InternalError(f"distributivity fails in GF({self.q})")
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise InternalError(f"associativity fails in GF({self.q})")
            if a and self.mul(a, self.inv(a)) != 1:
                raise InternalError(f"inversion fails in GF({self.q})")

    # arithmetic -----------------------------------------------------------
    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.s == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._encode([(-x) % self.p for x in self._decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise InputError("zero has no multiplicative inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise InputError("zero has no negative powers")
            return 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def nth_powers(self, n: int) -> frozenset:
        """The set of nonzero n-th powers."""
        return frozenset(self.pow(x, n) for x in range(1, self.q))

    def __repr__(self):
        return f"FiniteField(p={self.p}, s={self.s})"


def make_field(p: int, s: int, cap: int = FIELD_CAP) -> FiniteField:
    """GF(p**s) with the lexicographically least monic irreducible modulus
    (coefficients compared low degree first), so identical across runs."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if s < 1:
        raise InputError("the extension degree must be at least 1")
    if p**s > cap:
        raise CapError(f"field size {p**s} exceeds the cap {cap}")
    if s == 1:
        return FiniteField(p, 1, (0, 1))
    for low in product(range(p), repeat=s):
        coeffs = list(low) + [1]
        if _is_irreducible(coeffs, p):
            return FiniteField(p, s, coeffs)
    raise InternalError(f"no irreducible polynomial of degree {s} over GF({p})")


# ---------------------------------------------------------------------------
# Finite groups


def _sample_triples(size, count, seed):
    rng = random.Random(seed)
    return [(rng.randrange(size), rng.randrange(size), rng.randrange(size)) for _ in range(count)]


class FiniteGroup:
    """Finite group as an explicit multiplication table on 0..size-1.

    The identity and inverse tables are derived from the table at
    construction; the group laws are checked exhaustively for sizes up
    to 256 and on a seeded random sample above that.
    """

    __slots__ = ("size", "op", "identity", "inv")

    def __init__(self, op):
        size = len(op)
        if size < 1:
            raise InputError("a group needs at least one element")
        rows = []
        for x, row in enumerate(op):
            if len(row) != size:
                raise InputError(f"op row {x} has length {len(row)}, expected {size}")
            for val in row:
                if not 0 <= val < size:
                    raise InputError(f"op entry {val} out of range in row {x}")
            rows.append(tuple(row) if size <= _EXHAUSTIVE_LIMIT else array("i", row))
        self.size = size
        self.op = tuple(rows) if size <= _EXHAUSTIVE_LIMIT else rows

        identity = None
        for e in range(size):
            if all(self.op[e][x] == x and self.op[x][e] == x for x in range(size)):
                identity = e
                break
        if identity is None:
            raise InputError("multiplication table has no identity element")
        self.identity = identity

        inv = [None] * size
        for x in range(size):
            for y in range(size):
                if self.op[x][y] == identity and self.op[y][x] == identity:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise InputError(f"element {x} has no inverse")
        self.inv = tuple(inv)

        if size <= _EXHAUSTIVE_LIMIT:
            triples = product(range(size), repeat=3)
        else:
            triples = _sample_triples(size, _SAMPLE_SIZE, seed=size)
        for a, b, c in triples:
            if self.op[self.op[a][b]][c] != self.op[a][self.op[b][c]]:
                raise InputError(f"multiplication table is not associative at {(a, b, c)}")

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    @property
    def elements(self) -> range:
        return range(self.size)

    def __repr__(self):
        return f"FiniteGroup(size={self.size})"


def cyclic_group(m: int, cap: int = GROUP_CAP) -> FiniteGroup:
    """The integers modulo m under addition."""
    if m < 1:
        raise InputError("the order must be positive")
    if m > cap:
        raise CapError(f"group size {m} exceeds the cap {cap}")
    return FiniteGroup([[(i + j) % m for j in range(m)] for i in range(m)])


def make_elementary_abelian(p: int, d: int, cap: int = GROUP_CAP) -> FiniteGroup:
    """Additive group of d-vectors over GF(p), indexed base-p."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if d < 1:
        raise InputError("the dimension must be at least 1")
    size = p**d
    if size > cap:
        raise CapError(f"group size {size} exceeds the cap {cap}")
    if p == 2:
        return FiniteGroup([[i ^ j for j in range(size)] for i in range(size)])
    digits = []
    for i in range(size):
        v, ds = i, []
        for _ in range(d):
            v, r = divmod(v, p)
            ds.append(r)
        digits.append(ds)
    powers = [p**k for k in range(d)]
    rows = []
    for i in range(size):
        di = digits[i]
        rows.append(
            [sum(((di[k] + digits[j][k]) % p) * powers[k] for k in range(d)) for j in range(size)]
        )
    return FiniteGroup(rows)


def additive_group(field: FiniteField, cap: int = GROUP_CAP) -> FiniteGroup:
    """The additive group of a finite field, same element indexing."""
    if field.q > cap:
        raise CapError(f"group size {field.q} exceeds the cap {cap}")
    q = field.q
    return FiniteGroup([[field.add(i, j) for j in range(q)] for i in range(q)])


# ---------------------------------------------------------------------------
# Automorphism actions


@dataclass(frozen=True)
class Automorphism:
    """A permutation of group element indices respecting the product."""

    perm: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.perm[x]

    def compose(self, other: "Automorphism") -> "Automorphism":
        return Automorphism(tuple(self.perm[i] for i in other.perm))


def _automorphism_failure(group: FiniteGroup, perm):
    size = group.size
    if len(perm) != size or sorted(perm) != list(range(size)):
        return "not a permutation of the element indices"
    if perm[group.identity] != group.identity:
        return "does not fix the identity"
    if size <= _EXHAUSTIVE_LIMIT:
        pairs = product(range(size), repeat=2)
    else:
        pairs = ((a, b) for a, b, _ in _sample_triples(size, _SAMPLE_SIZE, seed=size + 1))
    for a, b in pairs:
        if perm[group.mul(a, b)] != group.mul(perm[a], perm[b]):
            return f"not multiplicative at ({a}, {b})"
    return None


def identity_automorphism(group: FiniteGroup) -> Automorphism:
    return Automorphism(tuple(range(group.size)))


def multiplier_automorphism(field: FiniteField, u: int) -> Automorphism:
    """Multiplication by a nonzero field element, as a map of the
    additive group."""
    if not 0 < u < field.q:
        raise InputError(f"multiplier {u} out of range")
    return Automorphism(tuple(field.mul(u, g) for g in range(field.q)))


@dataclass(frozen=True)
class ActionGroup:
    """A composition-closed set of automorphisms, canonically sorted."""

    elements: tuple[Automorphism, ...]

    @property
    def n(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def close_action(group: FiniteGroup, generators, cap: int = ACTION_CAP) -> ActionGroup:
    """Breadth-first closure of the generators under composition.

    Each generator is checked to be an automorphism of the group; the
    result always contains the identity and is sorted lexicographically
    on permutation images so the same subgroup closes identically no
    matter how it was presented.
    """
    gens = []
    for gen in generators:
        auto = gen if isinstance(gen, Automorphism) else Automorphism(tuple(gen))
        failure = _automorphism_failure(group, auto.perm)
        if failure is not None:
            raise InputError(f"generator {auto.perm} is not an automorphism: {failure}")
        gens.append(auto)
    ident = identity_automorphism(group)
    seen = {ident.perm: ident}
    frontier = [ident]
    while frontier:
        new = []
        for gen in gens:
            for current in frontier:
                nxt = gen.compose(current)
                if nxt.perm not in seen:
                    seen[nxt.perm] = nxt
                    new.append(nxt)
                    if len(seen) > cap:
                        raise CapError(f"action closure exceeds the cap {cap}")
        frontier = new
    return ActionGroup(tuple(seen[key] for key in sorted(seen)))


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of group elements into action orbits.

    The identity's orbit (always a singleton) comes first; the remaining
    orbits are sorted by least element, and each orbit lists its
    elements in ascending order.
    """

    orbit_of: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]


def orbits(group: FiniteGroup, action: ActionGroup) -> OrbitPartition:
    size = group.size
    orbit_of = [-1] * size
    orbit_lists = []

    def add_orbit(start):
        members = sorted({auto(start) for auto in action})
        idx = len(orbit_lists)
        for member in members:
            orbit_of[member] = idx
        orbit_lists.append(tuple(members))

    add_orbit(group.identity)
    for x in range(size):
        if orbit_of[x] == -1:
            add_orbit(x)
    return OrbitPartition(tuple(orbit_of), tuple(orbit_lists))


def coset_group(
    group: FiniteGroup,
    action: ActionGroup,
    check_representatives: bool = False,
) -> MultivaluedGroup:
    """The |A|-valued group on the A-orbits of G.

    m[x][y][z] counts the action elements a with g0 * a(h0) in orbit z,
    where g0 and h0 are the least representatives of x and y; star(x) is
    the orbit of g0^-1.  A non-faithful action would only scale every
    multiplicity by the kernel size, which gives an isomorphic group, so
    working with concrete automorphism groups loses no generality.  The
    output is re-verified; any failure is a bug, not bad input.
    """
    part = orbits(group, action)
    count = len(part.orbits)
    reps = [orb[0] for orb in part.orbits]
    n = action.n

    def row(gx, hy):
        counts = [0] * count
        for auto in action:
            counts[part.orbit_of[group.mul(gx, auto(hy))]] += 1
        return counts

    table = [[row(reps[x], reps[y]) for y in range(count)] for x in range(count)]

    if check_representatives:
        for x in range(count):
            for y in range(count):
                for gx in part.orbits[x]:
                    for hy in part.orbits[y]:
                        if row(gx, hy) != table[x][y]:
                            raise InternalError(
                                "multiplicities depend on the representatives at "
                                f"orbits ({x}, {y}), pair ({gx}, {hy})"
                            )

    star = tuple(part.orbit_of[group.inverse(rep)] for rep in reps)
    try:
        result = MultivaluedGroup(n, part.orbit_of[group.identity], star, table)
    except InputError as exc:
        raise InternalError(f"coset table failed validation: {exc}") from exc
    report = verify_axioms(result).merge(verify_involutive(result))
    if not report.ok:
        raise InternalError(
            f"coset construction produced an invalid group; witnesses: {report.counterexamples[:3]}"
        )
    return result


# ---------------------------------------------------------------------------
# Serialization


def group_to_json_dict(group: FiniteGroup) -> dict:
    return {"format": GRP_FORMAT, "size": group.size, "op": [list(r) for r in group.op]}


def group_from_json_dict(data) -> FiniteGroup:
    if not isinstance(data, dict) or data.get("format") != GRP_FORMAT:
        raise InputError(f'expected "format": "{GRP_FORMAT}"')
    try:
        size, op = data["size"], data["op"]
    except KeyError as missing:
        raise InputError(f"missing field {missing} in group document") from None
    if len(op) != size:
        raise InputError("op table size does not match the declared size")
    return FiniteGroup(op)


def generators_from_json_dict(data) -> list[Automorphism]:
    if not isinstance(data, dict) or data.get("format") != ACT_FORMAT:
        raise InputError(f'expected "format": "{ACT_FORMAT}"')
    try:
        gens = data["generators"]
    except KeyError as missing:
        raise InputError(f"missing field {missing} in action document") from None
    return [Automorphism(tuple(perm)) for perm in gens]


def generators_to_json_dict(generators) -> dict:
    return {"format": ACT_FORMAT, "generators": [list(g.perm) for g in generators]}


def group_loads(text: str) -> FiniteGroup:
    try:
        return group_from_json_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def generators_loads(text: str) -> list[Automorphism]:
    try:
        return generators_from_json_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
