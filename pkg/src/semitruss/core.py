"""Cayley-table magmas and single-operation structure analysis.

Elements of a carrier of size n are the integers 0..n-1.  An operation is a
dense n x n table with the left operand indexing the row: table[a][b] = a*b.
All types are immutable after construction and all functions are pure, so
everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAssociative, NotLeftCancellative

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteBinaryOp:
    """A binary operation on {0, ..., n-1} stored as a dense Cayley table."""

    n: int
    table: Table

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"carrier size must be >= 1, got {self.n}")
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", rows)
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise ValueError(f"table must be {self.n}x{self.n}")
        for a, row in enumerate(rows):
            for b, v in enumerate(row):
                if not 0 <= v < self.n:
                    raise ValueError(f"entry {v} at ({a},{b}) outside [0, {self.n})")

    @classmethod
    def from_rows(cls, rows) -> FiniteBinaryOp:
        rows = tuple(tuple(row) for row in rows)
        return cls(len(rows), rows)

    @classmethod
    def from_function(cls, n: int, fn) -> FiniteBinaryOp:
        return cls(n, tuple(tuple(fn(a, b) for b in range(n)) for a in range(n)))

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exhaustive law check; witness is the first violation."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StructureReport:
    """Everything the rest of the package wants to know about one operation."""

    associative: bool
    idempotents: tuple[int, ...]
    left_identities: tuple[int, ...]
    two_sided_identity: int | None
    left_cancellative: bool
    is_group: bool
    group_inverse: tuple[int, ...] | None
    is_inverse_semigroup: bool


@dataclass(frozen=True)
class InverseStructure:
    """Unique-inverse map, idempotent set and natural partial order.

    leq[a][b] means a <= b, i.e. a = b*e for some idempotent e.  The relation
    is a partial order, compatible with the operation on both sides, and
    preserved by the inverse map (all verified exhaustively in the tests).
    """

    inv: tuple[int, ...]
    idempotent_set: tuple[int, ...]
    leq: tuple[tuple[bool, ...], ...]


# ---------------------------------------------------------------------------
# small named tables used throughout tests, docs and the CLI


def cyclic_group(n: int) -> FiniteBinaryOp:
    """Addition mod n."""
    return FiniteBinaryOp.from_function(n, lambda a, b: (a + b) % n)


def right_zero(n: int) -> FiniteBinaryOp:
    """a*b = b (right projection); left-cancellative, every element idempotent."""
    return FiniteBinaryOp.from_function(n, lambda a, b: b)


def left_zero(n: int) -> FiniteBinaryOp:
    """a*b = a; associative but not left-cancellative for n >= 2."""
    return FiniteBinaryOp.from_function(n, lambda a, b: a)


def chain_meet_semilattice(n: int) -> FiniteBinaryOp:
    """min(a, b) on the chain 0 < 1 < ... < n-1."""
    return FiniteBinaryOp.from_function(n, lambda a, b: min(a, b))


# ---------------------------------------------------------------------------
# predicates


def associativity_counterexample(op: FiniteBinaryOp) -> tuple[int, int, int] | None:
    """First (a, b, c) with (a*b)*c != a*(b*c), scanning all n^3 triples."""
    t = op.table
    for a in range(op.n):
        row_a = t[a]
        for b in range(op.n):
            ab = row_a[b]
            row_b = t[b]
            for c in range(op.n):
                if t[ab][c] != row_a[row_b[c]]:
                    return (a, b, c)
    return None


def is_associative(op: FiniteBinaryOp) -> bool:
    return associativity_counterexample(op) is None


def idempotents(op: FiniteBinaryOp) -> tuple[int, ...]:
    """All a with a*a = a, ascending."""
    return tuple(a for a in range(op.n) if op.table[a][a] == a)


def left_identities(op: FiniteBinaryOp) -> tuple[int, ...]:
    """All e with e*a = a for every a, ascending."""
    ident = tuple(range(op.n))
    return tuple(e for e in range(op.n) if op.table[e] == ident)


def is_left_cancellative(op: FiniteBinaryOp) -> bool:
    """True iff every row of the table is injective."""
    return all(len(set(row)) == op.n for row in op.table)


def left_quotient(op: FiniteBinaryOp, a: int, b: int) -> int | None:
    """The unique c with a*c = b, or None when b is not in a's row.

    Only meaningful when op is an associative, left-cancellative operation
    (the quotient is then unique); raises NotLeftCancellative otherwise.
    """
    if not is_left_cancellative(op):
        raise NotLeftCancellative("left quotient requires a left-cancellative operation")
    if not is_associative(op):
        raise NotLeftCancellative("left quotient requires an associative operation")
    row = op.table[a]
    for c in range(op.n):
        if row[c] == b:
            return c
    return None


def left_quotient_table(op: FiniteBinaryOp) -> tuple[tuple[int | None, ...], ...]:
    """q[a][b] = the unique c with a*c = b, or None.  Same precondition as left_quotient."""
    if not is_left_cancellative(op):
        raise NotLeftCancellative("left quotient requires a left-cancellative operation")
    if not is_associative(op):
        raise NotLeftCancellative("left quotient requires an associative operation")
    n = op.n
    q: list[list[int | None]] = [[None] * n for _ in range(n)]
    for a in range(n):
        for c in range(n):
            q[a][op.table[a][c]] = c
    return tuple(tuple(row) for row in q)


def _two_sided_identity(op: FiniteBinaryOp) -> int | None:
    t = op.table
    ident = tuple(range(op.n))
    for e in range(op.n):
        if t[e] == ident and all(t[a][e] == a for a in range(op.n)):
            return e
    return None


def _group_inverse(op: FiniteBinaryOp, e: int) -> tuple[int, ...] | None:
    """Two-sided inverse map with respect to identity e, or None."""
    t = op.table
    inv = []
    for a in range(op.n):
        cand = [b for b in range(op.n) if t[a][b] == e and t[b][a] == e]
        if not cand:
            return None
        inv.append(cand[0])
    return tuple(inv)


def _unique_inverse_map(op: FiniteBinaryOp) -> tuple[int, ...] | None:
    """a -> the unique x with a*x*a = a and x*a*x = x, or None if any a has
    zero or several such x."""
    t = op.table
    inv = []
    for a in range(op.n):
        cand = [
            x
            for x in range(op.n)
            if t[t[a][x]][a] == a and t[t[x][a]][x] == x
        ]
        if len(cand) != 1:
            return None
        inv.append(cand[0])
    return tuple(inv)


def structure_report(op: FiniteBinaryOp) -> StructureReport:
    """Classify one operation: semigroup / cancellative / group / inverse."""
    assoc = is_associative(op)
    idem = idempotents(op)
    lids = left_identities(op)
    ident = _two_sided_identity(op)
    lc = is_left_cancellative(op)
    ginv = None
    group = False
    if assoc and ident is not None:
        ginv = _group_inverse(op, ident)
        group = ginv is not None
    inverse_sg = assoc and _unique_inverse_map(op) is not None
    return StructureReport(
        associative=assoc,
        idempotents=idem,
        left_identities=lids,
        two_sided_identity=ident,
        left_cancellative=lc,
        is_group=group,
        group_inverse=ginv,
        is_inverse_semigroup=inverse_sg,
    )


def inverse_structure(op: FiniteBinaryOp) -> InverseStructure | None:
    """Inverse map, idempotents and natural partial order, when they exist.

    Returns None unless every element has exactly one inverse.  The order is
    a <= b iff a = b*e for some idempotent e.
    """
    if not is_associative(op):
        raise NotAssociative("inverse structure requires an associative operation")
    inv = _unique_inverse_map(op)
    if inv is None:
        return None
    t = op.table
    idem = idempotents(op)
    leq = tuple(
        tuple(any(t[b][e] == a for e in idem) for b in range(op.n))
        for a in range(op.n)
    )
    return InverseStructure(inv=inv, idempotent_set=idem, leq=leq)


def left_compatible(istr: InverseStructure, op: FiniteBinaryOp, a: int, b: int) -> bool:
    """True iff a * b^inv is idempotent."""
    return op.table[a][istr.inv[b]] in istr.idempotent_set
