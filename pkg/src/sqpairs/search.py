"""Enumerations: square pairs, discriminant grids and related products.

Pruning rests on one fact: k(k+1) = f*g^2 with f squarefree, and
Pi(k, j) = k(k+1) s(s+1) (s = k + j) is a square iff s(s+1) = f*h^2.  So for
fixed k only s with s(s+1) = 0 (mod f) need an exact square test.

Scans split their outer range into contiguous stripes, one per worker, and
sort the merged result, so output does not depend on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .arith import DomainError, InvariantError, exact_div, is_perfect_square
from .families import family_index, is_bi_pythagorean, quadratic_number
from .intervals import CaseParams, RationalRoots, roots
from .pell import square_triangular, square_triangular_index

Range = Tuple[int, int]


# --------------------------------------------------------------------------
# helpers

def squarefree_part(n: int) -> int:
    """Smallest f with n = f * g^2 (n >= 1)."""
    if n < 1:
        raise DomainError(f"squarefree_part needs n >= 1, got {n}")
    f = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                f *= p
        p += 1 if p == 2 else 2
    return f * n


def _pronic_split(k: int) -> Tuple[int, int]:
    """(f, g) with k(k+1) = f g^2 and f squarefree."""
    f = squarefree_part(k) * squarefree_part(k + 1)  # coprime factors
    g = is_perfect_square(exact_div(k * (k + 1), f))
    if g is None:
        raise InvariantError(f"bad squarefree split for {k}")
    return f, g


def _pronic_residues(f: int) -> List[int]:
    return [r for r in range(f) if (r * (r + 1)) % f == 0]


def _stripes(lo: int, hi: int, parts: int) -> List[Range]:
    parts = max(1, min(parts, hi - lo + 1))
    size, extra = divmod(hi - lo + 1, parts)
    out, start = [], lo
    for w in range(parts):
        stop = start + size + (1 if w < extra else 0) - 1
        out.append((start, stop))
        start = stop + 1
    return out


def _run_striped(fn: Callable, lo: int, hi: int, workers: int, *args) -> list:
    if hi < lo:
        return []
    stripes = _stripes(lo, hi, workers)
    if workers <= 1 or len(stripes) == 1:
        chunks = [fn(a, b, *args) for a, b in stripes]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(fn, a, b, *args) for a, b in stripes]
            chunks = [f.result() for f in futures]
    merged = []
    for c in chunks:
        merged.extend(c)
    return merged


@dataclass(frozen=True)
class SearchConfig:
    j_range: Range = (0, 0)
    m_range: Range = (1, 100)
    k_range: Range = (1, 100)
    workers: int = 1
    fmt: str = "csv"
    strict: bool = False

    def __post_init__(self) -> None:
        for name, (lo, hi), floor in (("j", self.j_range, 0), ("m", self.m_range, 0),
                                      ("k", self.k_range, 1)):
            if lo < floor:
                raise DomainError(f"{name} range must start at >= {floor}, got {lo}")
            if hi < lo:
                raise DomainError(f"empty {name} range {lo}..{hi}")
        if self.workers < 1:
            raise DomainError("workers must be >= 1")
        if self.fmt not in ("csv", "json"):
            raise DomainError(f"unknown format {self.fmt!r}")


# --------------------------------------------------------------------------
# square pairs

DOSTOR, FAMILY, BIPYTH, EXCEPTION = "Dostor", "Family", "BiPythOpposite", "Exception"


@dataclass(frozen=True, order=True)
class SquarePairRecord:
    k: int
    j: int
    sqrt_pi: int
    kind: str
    family: Optional[int] = None
    # square-triangular indices of k and k+j, filled for bi-Pythagorean pairs
    p_index: Optional[int] = None
    q_index: Optional[int] = None

    @property
    def label(self) -> str:
        return f"Family({self.family})" if self.kind == FAMILY else self.kind

    @property
    def same_parity(self) -> Optional[bool]:
        if self.p_index is None or self.q_index is None:
            return None
        return self.p_index % 2 == self.q_index % 2


def classify_pair(k: int, j: int, sqrt_pi: int) -> SquarePairRecord:
    """Dostor, then least family index, then bi-Pythagorean, else Exception."""
    if j == 0:
        return SquarePairRecord(k, j, sqrt_pi, DOSTOR)
    i = family_index(k, j)
    if i is not None:
        return SquarePairRecord(k, j, sqrt_pi, FAMILY, family=i)
    if is_bi_pythagorean(k, j):
        return SquarePairRecord(k, j, sqrt_pi, BIPYTH,
                                p_index=square_triangular_index(k),
                                q_index=square_triangular_index(k + j))
    return SquarePairRecord(k, j, sqrt_pi, EXCEPTION)


def _square_pairs_stripe(k_lo: int, k_hi: int, smax: int) -> List[Tuple[int, int, int]]:
    hits = []
    for k in range(k_lo, k_hi + 1):
        f, g = _pronic_split(k)
        residues = _pronic_residues(f)
        base = k - k % f
        for r in residues:
            s = base + r
            if s < k:
                s += f
            while s <= smax:
                h = is_perfect_square(s * (s + 1) // f)
                if h is not None:
                    hits.append((k, s - k, f * g * h))
                s += f
    return hits


def scan_square_pairs(kmax: int, smax: int, workers: int = 1) -> List[SquarePairRecord]:
    """All square pairs with 1 <= k <= kmax, j >= 0, k + j <= smax, classified."""
    if kmax < 1 or smax < 1:
        raise DomainError("kmax and smax must be >= 1")
    raw = _run_striped(_square_pairs_stripe, 1, kmax, workers, smax)
    out = []
    for k, j, root in sorted(raw):
        if root * root != quadratic_number(k, j):
            raise InvariantError(f"bad root for ({k}, {j})")
        out.append(classify_pair(k, j, root))
    return out


def exceptions(records: Iterable[SquarePairRecord]) -> List[SquarePairRecord]:
    return [r for r in records if r.kind == EXCEPTION]


# --------------------------------------------------------------------------
# discriminant grid

@dataclass(frozen=True, order=True)
class DiscHit:
    j: int
    m: int
    k: int
    sqrtD: int
    roots: Tuple[Fraction, Fraction]
    double_root: bool

    def rows(self) -> List[Tuple[int, int, int, Fraction, int]]:
        """One (j, m, k, n, sqrtD) row per distinct root, ascending."""
        ns = [self.roots[0]] if self.double_root else list(self.roots)
        return [(self.j, self.m, self.k, n, self.sqrtD) for n in ns]


@dataclass(frozen=True)
class J0Bound:
    m: int
    k_upper: Optional[int]   # None: unbounded (m = 0); 0: no k at all
    k_lower_feasible: int

    def k_range(self, kmax: int) -> range:
        hi = kmax if self.k_upper is None else min(kmax, self.k_upper)
        return range(self.k_lower_feasible, hi + 1)


def j0_k_bound(m: int) -> J0Bound:
    """Bounds on k for which D(0, m, k) can be a perfect square.

    D(0, m, k) = X^2 - g with X = 2k(k+m+1), g = m(m+1)^2(m+2)/3.  A square
    Y^2 < X^2 needs g >= X^2 - (X-1)^2 = 2X - 1, i.e. 4k(k+m+1) <= g + 1.
    Nonnegativity needs X^2 >= g.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    g = exact_div(m * (m + 1) ** 2 * (m + 2), 3)
    lower = 1
    while (2 * lower * (lower + m + 1)) ** 2 < g:
        lower += 1
    if m == 0:
        return J0Bound(m, None, lower)
    upper = 0
    while 4 * (upper + 1) * (upper + m + 2) <= g + 1:
        upper += 1
    return J0Bound(m, upper, lower)


def _disc_stripe(k_lo: int, k_hi: int, js: Sequence[int], m_lo: int, m_hi: int,
                 prune_j0: bool) -> List[DiscHit]:
    hits = []
    for j in js:
        for m in range(m_lo, m_hi + 1):
            if j == 0 and prune_j0:
                b = j0_k_bound(m)
                ks = range(max(k_lo, b.k_lower_feasible),
                           k_hi + 1 if b.k_upper is None else min(k_hi, b.k_upper) + 1)
            else:
                ks = range(k_lo, k_hi + 1)
            for k in ks:
                st = roots(CaseParams(j, m, k))
                if isinstance(st, RationalRoots):
                    hits.append(DiscHit(j, m, k, st.sqrtD, st.roots, st.double_root))
    return hits


def scan_discriminant(js: Iterable[int], mmax: int, kmax: int, *, mmin: int = 1,
                      kmin: int = 1, workers: int = 1, prune_j0: bool = True) -> List[DiscHit]:
    """Every (j, m, k) on the grid whose discriminant is a perfect square."""
    js = sorted(set(js))
    if any(j < 0 for j in js) or mmin < 0 or kmin < 1:
        raise DomainError("need j >= 0, m >= 0, k >= 1")
    hits = _run_striped(_disc_stripe, kmin, kmax, workers, js, mmin, mmax, prune_j0)
    hits.sort(key=lambda h: (h.j, h.m, h.k))
    return hits


def disc_rows(hits: Iterable[DiscHit]) -> List[Tuple[int, int, int, Fraction, int]]:
    out = []
    for h in hits:
        out.extend(h.rows())
    return out


# --------------------------------------------------------------------------
# products of two pronic numbers

@dataclass(frozen=True, order=True)
class Type2Hit:
    """2 * a(a+1) * b(b+1) == d^2."""

    a: int
    b: int
    d: int


def type2_scan(amax: int, bmax: int) -> List[Type2Hit]:
    if amax < 1 or bmax < 1:
        raise DomainError("amax and bmax must be >= 1")
    hits = []
    for a in range(1, amax + 1):
        f, g = _pronic_split(a)
        # need 2 f b(b+1) square: b(b+1) = F h^2 with F = sqf(2f)
        F = f // 2 if f % 2 == 0 else 2 * f
        extra = 2 * f // F  # a square, since 2f = F * extra
        e = is_perfect_square(extra)
        for b in range(a, bmax + 1):
            pr = b * (b + 1)
            if pr % F:
                continue
            h = is_perfect_square(pr // F)
            if h is not None:
                hits.append(Type2Hit(a, b, F * g * h * e))
    for h in hits:
        if 2 * h.a * (h.a + 1) * h.b * (h.b + 1) != h.d * h.d:
            raise InvariantError(f"bad type (ii) hit {h}")
    return sorted(hits)


@dataclass(frozen=True)
class EulerType2:
    k: int           # 2k(k+1) = euler_d^2
    euler_d: int
    a: int           # 2k
    b: int           # 2k + 1
    euler_root: int  # d(2k+1): a(a+1) b(b+1) = 2 * euler_root^2
    d: int           # 2 a(a+1) b(b+1) = d^2


def type2_from_euler(i: int) -> EulerType2:
    """The i-th (i >= 1) solution of 2k(k+1) = d^2 lifted to a pair (2k, 2k+1)."""
    if i < 1:
        raise DomainError(f"index must be >= 1, got {i}")
    st = square_triangular(i)
    k, ed = st.t, 2 * st.d
    if 2 * k * (k + 1) != ed * ed:
        raise InvariantError("Euler solution check failed")
    a, b = 2 * k, 2 * k + 1
    root = ed * (2 * k + 1)
    prod = a * (a + 1) * b * (b + 1)
    if prod != 2 * root * root:
        raise InvariantError(f"type (ii) identity fails for k={k}")
    return EulerType2(k, ed, a, b, root, 2 * root)


def product_type(values: Sequence[int]) -> Optional[str]:
    """'i' if prod v(v+1) is a square, 'ii' if twice it is, else None."""
    prod = 1
    for v in values:
        prod *= v * (v + 1)
    if is_perfect_square(prod) is not None:
        return "i"
    if is_perfect_square(2 * prod) is not None:
        return "ii"
    return None


def swap23(values: Sequence[int]) -> List[int]:
    """Replace the first entry equal to 2 or 3 by the other one."""
    out = list(values)
    for idx, v in enumerate(out):
        if v in (2, 3):
            out[idx] = 5 - v
            return out
    raise DomainError(f"no entry equal to 2 or 3 in {list(values)}")


@dataclass(frozen=True)
class SRatio:
    N: int
    S_N: int
    ratio: Fraction


def s_ratio(N: int, distinct: bool = False) -> SRatio:
    """Ordered pairs (a, b) in [1, N]^2 with a(a+1)b(b+1) a perfect square.

    Pairs share a squarefree class exactly when the product is a square, so
    the count is the sum of squared class sizes.  ``distinct`` drops a == b.
    """
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    sqf = _squarefree_sieve(N + 1)
    classes: Dict[int, int] = {}
    for a in range(1, N + 1):
        key = sqf[a] * sqf[a + 1]
        classes[key] = classes.get(key, 0) + 1
    total = sum(c * c for c in classes.values())
    if distinct:
        total -= N
    return SRatio(N, total, Fraction(total, N))


def _squarefree_sieve(n: int) -> List[int]:
    sqf = list(range(n + 1))
    p = 2
    while p * p <= n:
        sq = p * p
        for q in range(sq, n + 1, sq):
            while sqf[q] % sq == 0:
                sqf[q] //= sq
        p += 1
    return sqf


# --------------------------------------------------------------------------
# output

def fmt_value(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if x is None:
        return ""
    return str(x)


def render(header: Sequence[str], rows: Iterable[Sequence], fmt: str = "csv") -> str:
    """CSV with a header line, or JSON lines; all numbers as decimal strings."""
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([fmt_value(v) for v in r])
    elif fmt == "json":
        for r in rows:
            buf.write(json.dumps({h: fmt_value(v) for h, v in zip(header, r)}) + "\n")
    else:
        raise DomainError(f"unknown format {fmt!r}")
    return buf.getvalue()


DISC_HEADER = ("j", "m", "k", "n", "sqrtD")
PAIR_HEADER = ("k", "j", "sqrtPi", "class")


def pair_rows(records: Iterable[SquarePairRecord]) -> List[Tuple[int, int, int, str]]:
    return [(r.k, r.j, r.sqrt_pi, r.label) for r in records]
