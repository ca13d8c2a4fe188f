"""Finite multivalued groups as explicit multiplicity tables.

An n-valued group on a finite set multiplies two elements into an
n-multiset.  We store the whole multiplication as an integer table
``m[x][y][z]`` (the multiplicity of z in the product x*y, every row
summing to the valency n) together with the identity index and the
inverse permutation ``star``.

Construction validates the table shape: nonnegative integers, row sums
equal to n, and star a self-inverse permutation fixing the identity.
The actual group axioms (identity behaviour, inverse positivity,
associativity, involutivity) are checked by the verify_* functions,
which report every failing witness instead of raising.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .errors import AxiomError, InputError

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is an optional accelerator
    _np = None

MVG_FORMAT = "mvg-v1"

# Past this order the associativity scan uses vectorised integer matrix
# products when numpy is available; below it plain loops are faster.
_NUMPY_ORDER_THRESHOLD = 6


class Multiset:
    """Multiset of element indices with positive integer multiplicities."""

    __slots__ = ("counts", "total")

    def __init__(self, counts):
        items = counts.items() if isinstance(counts, dict) else counts
        clean = {}
        for idx, mult in sorted(items):
            if mult < 0:
                raise InputError(f"negative multiplicity {mult} for element {idx}")
            if mult:
                clean[idx] = mult
        self.counts = clean
        self.total = sum(clean.values())

    def __getitem__(self, idx: int) -> int:
        return self.counts.get(idx, 0)

    def __iter__(self):
        return iter(self.counts.items())

    def __eq__(self, other):
        if isinstance(other, Multiset):
            return self.counts == other.counts
        if isinstance(other, dict):
            return self.counts == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.counts.items()))

    def __repr__(self):
        return f"Multiset({self.counts})"

    def format(self, names) -> str:
        parts = [f"{names[idx]}:{mult}" for idx, mult in self.counts.items()]
        return "{" + ", ".join(parts) + "}"


class MultivaluedGroup:
    """A finite multivalued group given by its full multiplicity table.

    Values are immutable after construction; all operations on them are
    pure functions, so instances are safe to share between threads.
    Element names are cosmetic (used for display and serialization) and
    do not take part in equality.
    """

    __slots__ = ("order", "n", "identity", "star", "table", "names")

    def __init__(self, n, identity, star, table, names=None):
        order = len(table)
        if order < 1:
            raise InputError("a multivalued group needs at least one element")
        if not isinstance(n, int) or n < 1:
            raise InputError(f"valency must be a positive integer, got {n!r}")
        if not isinstance(identity, int) or not 0 <= identity < order:
            raise InputError(f"identity index {identity!r} out of range for order {order}")

        rows = []
        for x, plane in enumerate(table):
            if len(plane) != order:
                raise InputError(f"table row block {x} has length {len(plane)}, expected {order}")
            plane_rows = []
            for y, row in enumerate(plane):
                if len(row) != order:
                    raise InputError(f"table row ({x},{y}) has length {len(row)}, expected {order}")
                total = 0
                for z, mult in enumerate(row):
                    if not isinstance(mult, int) or isinstance(mult, bool) or mult < 0:
                        raise InputError(f"m[{x}][{y}][{z}] = {mult!r} is not a nonnegative integer")
                    total += mult
                if total != n:
                    raise InputError(f"row sum of m[{x}][{y}] is {total}, expected the valency {n}")
                plane_rows.append(tuple(row))
            rows.append(tuple(plane_rows))

        star = tuple(star)
        if sorted(star) != list(range(order)):
            raise InputError("star is not a permutation of the element indices")
        for x in range(order):
            if star[star[x]] != x:
                raise InputError(f"star is not an involution at element {x}")
        if star[identity] != identity:
            raise InputError("star must fix the identity element")

        if names is None:
            names = tuple("e" if i == identity else f"x{i}" for i in range(order))
        else:
            names = tuple(str(s) for s in names)
            if len(names) != order:
                raise InputError("element name list does not match the order")

        self.order = order
        self.n = n
        self.identity = identity
        self.star = star
        self.table = tuple(rows)
        self.names = names

    def product(self, x: int, y: int) -> Multiset:
        """The n-multiset x*y, read off the multiplicity table."""
        if not (0 <= x < self.order and 0 <= y < self.order):
            raise InputError(f"element index out of range: ({x}, {y})")
        return Multiset({z: m for z, m in enumerate(self.table[x][y]) if m})

    def m(self, x: int) -> int:
        """Diagonal multiplicity of the identity in x * star(x)."""
        if not 0 <= x < self.order:
            raise InputError(f"element index out of range: {x}")
        return self.table[x][self.star[x]][self.identity]

    def __eq__(self, other):
        if not isinstance(other, MultivaluedGroup):
            return NotImplemented
        return (
            self.n == other.n
            and self.identity == other.identity
            and self.star == other.star
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.n, self.identity, self.star, self.table))

    def __repr__(self):
        return f"MultivaluedGroup(order={self.order}, n={self.n})"


@dataclass
class AxiomReport:
    """Outcome of verifying a multiplicity table against the axioms.

    Flags left as None were not examined by the producing check.  A flag
    is False exactly when at least one counterexample carrying its axiom
    name is listed.
    """

    associative: bool | None = None
    has_identity: bool | None = None
    has_inverses: bool | None = None
    involutive: bool | None = None
    reciprocity_holds: bool | None = None
    counterexamples: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        flags = (
            self.associative,
            self.has_identity,
            self.has_inverses,
            self.involutive,
            self.reciprocity_holds,
        )
        return all(f is not False for f in flags)

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        merged = AxiomReport(
            associative=other.associative if other.associative is not None else self.associative,
            has_identity=other.has_identity if other.has_identity is not None else self.has_identity,
            has_inverses=other.has_inverses if other.has_inverses is not None else self.has_inverses,
            involutive=other.involutive if other.involutive is not None else self.involutive,
            reciprocity_holds=(
                other.reciprocity_holds
                if other.reciprocity_holds is not None
                else self.reciprocity_holds
            ),
        )
        merged.counterexamples = list(self.counterexamples) + list(other.counterexamples)
        return merged


@dataclass(frozen=True)
class Signature:
    """Isomorphism invariant of an involutive order-3 group.

    kind is "symmetric-star" with ratios (m1/n, m2/n, a/n) or
    "swap-star" with the single ratio (a/n); all ratios are exact
    reduced fractions.
    """

    kind: str
    ratios: tuple[Fraction, ...]

    def __post_init__(self):
        if self.kind not in ("symmetric-star", "swap-star"):
            raise InputError(f"unknown signature kind {self.kind!r}")
        for r in self.ratios:
            if not 0 <= r <= 1:
                raise InputError(f"signature ratio {r} outside [0, 1]")


SYMMETRIC_STAR = "symmetric-star"
SWAP_STAR = "swap-star"


def _one_valued_products(g):
    prod = []
    for x in range(g.order):
        row = []
        for y in range(g.order):
            row.append(next(z for z, c in enumerate(g.table[x][y]) if c))
        prod.append(row)
    return prod


def _assoc_failures(g):
    """All quadruples (x,y,z,t) where the two triple products disagree."""
    o, n, t = g.order, g.n, g.table
    fails = []
    if n == 1:
        prod = _one_valued_products(g)
        for x in range(o):
            px = prod[x]
            for y in range(o):
                pxy = prod[px[y]]
                for z in range(o):
                    left = pxy[z]
                    right = px[prod[y][z]]
                    if left != right:
                        fails.append((x, y, z, left))
        return fails

    if _np is not None and o > _NUMPY_ORDER_THRESHOLD and o * n * n < 2**62:
        a = _np.asarray(t, dtype=_np.int64)
        flat = a.reshape(o, o * o)  # w -> (z, t)
        for x in range(o):
            lhs = (a[x] @ flat).reshape(o, o, o)  # sum_w m[x][y][w] m[w][z][t]
            rhs = _np.tensordot(a, a[x], axes=([2], [0]))  # sum_w m[y][z][w] m[x][w][t]
            diff = lhs != rhs
            if diff.any():
                for y, z, tt in zip(*_np.nonzero(diff)):
                    fails.append((x, int(y), int(z), int(tt)))
        return fails

    rng = range(o)
    for x in rng:
        tx = t[x]
        for y in rng:
            txy = tx[y]
            for z in rng:
                for tt in rng:
                    lhs = sum(txy[w] * t[w][z][tt] for w in rng)
                    rhs = sum(t[y][z][w] * tx[w][tt] for w in rng)
                    if lhs != rhs:
                        fails.append((x, y, z, tt))
    return fails


def verify_axioms(g: MultivaluedGroup) -> AxiomReport:
    """Check associativity, the identity axiom, and the inverse axiom.

    Associativity is the convolution identity
    ``sum_w m[x][y][w]*m[w][z][t] == sum_w m[y][z][w]*m[x][w][t]``
    for all quadruples, i.e. equality of the two n^2-multiset triple
    products.  Every failing witness is listed in the report.
    """
    report = AxiomReport()
    e, o, n, t = g.identity, g.order, g.n, g.table

    identity_fails = []
    for x in range(o):
        for z in range(o):
            want = n if z == x else 0
            if t[e][x][z] != want:
                identity_fails.append(("identity", (e, x, z)))
            if t[x][e][z] != want:
                identity_fails.append(("identity", (x, e, z)))
    report.has_identity = not identity_fails

    inverse_fails = []
    for x in range(o):
        sx = g.star[x]
        if t[x][sx][e] <= 0 or t[sx][x][e] <= 0:
            inverse_fails.append(("inverse", (x,)))
    report.has_inverses = not inverse_fails

    assoc_fails = [("associative", quad) for quad in _assoc_failures(g)]
    report.associative = not assoc_fails

    report.counterexamples = identity_fails + inverse_fails + assoc_fails
    return report


def verify_involutive(g: MultivaluedGroup) -> AxiomReport:
    """Check the involutivity conditions against the declared star map.

    (a) the identity occurs in x*y exactly when y = star(x);
    (b) the diagonal multiplicities satisfy m(x) = m(star(x));
    (c) star is an anti-automorphism: m[x][y][z] equals
        m[star(y)][star(x)][star(z)] for every triple.
    """
    report = AxiomReport()
    e, o, t, star = g.identity, g.order, g.table, g.star
    fails = []
    for x in range(o):
        for y in range(o):
            if (t[x][y][e] > 0) != (y == star[x]):
                fails.append(("involutive", (x, y)))
    for x in range(o):
        if g.m(x) != g.m(star[x]):
            fails.append(("involutive", (x,)))
    for x in range(o):
        for y in range(o):
            for z in range(o):
                if t[x][y][z] != t[star[y]][star[x]][star[z]]:
                    fails.append(("involutive", (x, y, z)))
    report.involutive = not fails
    report.counterexamples = fails
    return report


def check_reciprocity(g: MultivaluedGroup) -> bool:
    """Check m(x)*m[y][z][star(x)] == m(y)*m[z][x][star(y)] for all triples.

    Requires an involutive group (the identity is stated in terms of the
    diagonal multiplicities m(x)).
    """
    inv = verify_involutive(g)
    if not inv.involutive:
        raise InputError("reciprocity is only defined for involutive groups")
    t, star, o = g.table, g.star, g.order
    diag = [g.m(x) for x in range(o)]
    for x in range(o):
        for y in range(o):
            for z in range(o):
                if diag[x] * t[y][z][star[x]] != diag[y] * t[z][x][star[y]]:
                    return False
    return True


def verify_all(g: MultivaluedGroup) -> AxiomReport:
    """Run every verification and merge the reports.

    Reciprocity is only evaluated when the group is involutive (its
    statement needs the diagonal multiplicities); otherwise the flag is
    left None.
    """
    report = verify_axioms(g).merge(verify_involutive(g))
    if report.involutive:
        holds = check_reciprocity(g)
        report.reciprocity_holds = holds
        if not holds:
            report.counterexamples.append(("reciprocity", ()))
    return report


def _require_valid(g: MultivaluedGroup, context: str) -> MultivaluedGroup:
    report = verify_axioms(g).merge(verify_involutive(g))
    if not report.ok:
        witness = report.counterexamples[0] if report.counterexamples else None
        raise AxiomError(
            f"{context} does not define a multivalued group; first witness: {witness}",
            report=report,
        )
    return g


def _order3_table(e_row_free_entries):
    """Assemble a full order-3 table from the four nonidentity rows."""
    n, xx, xy, yx, yy = e_row_free_entries
    return (
        ((n, 0, 0), (0, n, 0), (0, 0, n)),
        ((0, n, 0), xx, xy),
        ((0, 0, n), yx, yy),
    )


def build_type1(n: int, m1: int, m2: int, a: int) -> MultivaluedGroup:
    """Order-3 group with both nonidentity elements self-inverse.

    x*x = {e:m1, x:a, y:n-m1-a}; the remaining rows are forced by the
    reciprocity identity with r = m2/m1: the multiplicity of x in x*y is
    r*(n-m1-a) and the multiplicity of x in y*y is r*(n - that).  The
    result is fully re-verified; parameters whose forced entries are
    non-integral or negative are rejected.
    """
    if n < 1 or m1 < 1 or m2 < 1 or a < 0:
        raise InputError("need n >= 1, m1 >= 1, m2 >= 1, a >= 0")
    r = Fraction(m2, m1)
    xx_y = n - m1 - a
    a_xy = r * xx_y
    yy_x = r * (n - a_xy)
    derived = {"x in x*y": a_xy, "x in y*y": yy_x}
    for label, value in derived.items():
        if value.denominator != 1 or value < 0:
            raise InputError(f"derived multiplicity of {label} is {value}, not a nonnegative integer")
    a_xy = int(a_xy)
    yy_x = int(yy_x)
    entries = {
        "y in x*x": xx_y,
        "y in x*y": n - a_xy,
        "y in y*y": n - m2 - yy_x,
    }
    for label, value in entries.items():
        if value < 0:
            raise InputError(f"derived multiplicity of {label} is {value}, negative")
    table = _order3_table(
        (
            n,
            (m1, a, xx_y),
            (0, a_xy, n - a_xy),
            (0, a_xy, n - a_xy),
            (m2, yy_x, n - m2 - yy_x),
        )
    )
    g = MultivaluedGroup(n, 0, (0, 1, 2), table)
    return _require_valid(g, f"type-1 parameters (n={n}, m1={m1}, m2={m2}, a={a})")


def build_type2(n: int, a: int) -> MultivaluedGroup:
    """Order-3 group whose star swaps the two nonidentity elements.

    x*x = {x:a, y:n-a}, y*y = {x:n-a, y:a}, x*y = {e:n-2a, x:a, y:a}.
    The table is re-verified; 2a = n is accepted by the range check but
    then fails the inverse axiom and is rejected with a witness.
    """
    if n < 1 or a < 0 or 2 * a > n:
        raise InputError("need n >= 1 and 0 <= 2a <= n")
    table = _order3_table(
        (
            n,
            (0, a, n - a),
            (n - 2 * a, a, a),
            (n - 2 * a, a, a),
            (0, n - a, a),
        )
    )
    g = MultivaluedGroup(n, 0, (0, 2, 1), table)
    return _require_valid(g, f"type-2 parameters (n={n}, a={a})")


def build_xk(k: int) -> MultivaluedGroup:
    """The (2k+1)-valued order-3 group with swap star and a = k."""
    if k < 0:
        raise InputError("k must be nonnegative")
    return build_type2(2 * k + 1, k)


def scale(g: MultivaluedGroup, factor: int) -> MultivaluedGroup:
    """Multiply every multiplicity by a positive integer factor."""
    if not isinstance(factor, int) or factor < 1:
        raise InputError("scale factor must be a positive integer")
    table = tuple(
        tuple(tuple(m * factor for m in row) for row in plane) for plane in g.table
    )
    return MultivaluedGroup(g.n * factor, g.identity, g.star, table, names=g.names)


def signature(g: MultivaluedGroup) -> Signature:
    """Reduced-ratio invariant deciding isomorphism for involutive order-3 groups.

    For a symmetric star the two nonidentity elements are ordered so the
    larger diagonal ratio m/n comes first, ties broken by the larger
    a/n; the result is then independent of the labelling.
    """
    if g.order != 3:
        raise InputError("signatures are defined for groups of order 3 only")
    if not verify_involutive(g).involutive:
        raise InputError("signatures are defined for involutive groups only")
    e, n, t = g.identity, g.n, g.table
    x, y = (i for i in range(3) if i != e)
    if g.star[x] == y:
        return Signature(SWAP_STAR, (Fraction(t[x][x][x], n),))

    def sort_key(i):
        return (Fraction(t[i][i][e], n), Fraction(t[i][i][i], n))

    first, second = sorted((x, y), key=sort_key, reverse=True)
    return Signature(
        SYMMETRIC_STAR,
        (
            Fraction(t[first][first][e], n),
            Fraction(t[second][second][e], n),
            Fraction(t[first][first][first], n),
        ),
    )


def are_isomorphic(g1: MultivaluedGroup, g2: MultivaluedGroup):
    """Return an identity-preserving bijection with equal multiplicity
    ratios m/n on every triple, or None if none exists.

    Involutive order-3 pairs are first screened by signature equality;
    the general case searches all identity-preserving bijections.
    """
    if g1.order != g2.order:
        return None
    if g1.order == 3:
        if verify_involutive(g1).involutive and verify_involutive(g2).involutive:
            if signature(g1) != signature(g2):
                return None
    o, n1, n2 = g1.order, g1.n, g2.n
    t1, t2 = g1.table, g2.table
    rest1 = [i for i in range(o) if i != g1.identity]
    rest2 = [i for i in range(o) if i != g2.identity]
    indices = range(o)
    for image in permutations(rest2):
        f = [0] * o
        f[g1.identity] = g2.identity
        for src, dst in zip(rest1, image):
            f[src] = dst
        if all(
            t1[x][y][z] * n2 == t2[f[x]][f[y]][f[z]] * n1
            for x in indices
            for y in indices
            for z in indices
        ):
            return tuple(f)
    return None


def to_json_dict(g: MultivaluedGroup) -> dict:
    return {
        "format": MVG_FORMAT,
        "n": g.n,
        "elements": list(g.names),
        "identity": g.identity,
        "star": list(g.star),
        "table": [[list(row) for row in plane] for plane in g.table],
    }


def dumps(g: MultivaluedGroup) -> str:
    return json.dumps(to_json_dict(g), indent=2) + "\n"


def from_json_dict(data) -> MultivaluedGroup:
    if not isinstance(data, dict):
        raise InputError("multivalued-group document must be a JSON object")
    if data.get("format") != MVG_FORMAT:
        raise InputError(f'expected "format": "{MVG_FORMAT}"')
    try:
        n = data["n"]
        elements = data["elements"]
        identity = data["identity"]
        star = data["star"]
        table = data["table"]
    except KeyError as missing:
        raise InputError(f"missing field {missing} in multivalued-group document") from None
    if not isinstance(elements, list):
        raise InputError('"elements" must be a list of names')
    if not isinstance(n, int) or not isinstance(identity, int):
        raise InputError('"n" and "identity" must be integers')
    if len(table) != len(elements) or len(star) != len(elements):
        raise InputError("table/star dimensions do not match the element list")
    return MultivaluedGroup(n, identity, star, table, names=elements)


def loads(text: str) -> MultivaluedGroup:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    return from_json_dict(data)
