"""Prime spectra of finite commutative rigs.

A finite commutative rig is given by its operation tables and validated
at construction.  Ideals are subsets containing 0 and closed under sums
and arbitrary scaling; a proper ideal is prime when its complement is
multiplicatively closed.  At finite scale everything in sight is
enumerable, so radicals, localizations, the Zariski topology and the
structure-sheaf description of basic opens are all checked literally
rather than symbolically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

__all__ = [
    "FiniteCRig",
    "Ideal",
    "ideal_generated",
    "all_ideals",
    "SpecSpace",
    "spec",
    "radical",
    "RadicalMismatch",
    "multiplicative_closure",
    "Localization",
    "localize",
    "theorem1_check",
    "Theorem1Report",
    "finite_rig_by_name",
]


class FiniteCRig:
    """Finite commutative rig given by addition and multiplication tables.

    Elements are indices 0..size-1; ``names`` carries display strings.
    The tables are validated exhaustively (commutativity, associativity,
    units, distributivity, absorbing zero) and a bad table is rejected
    with a witness.
    """

    __slots__ = ("size", "add_table", "mul_table", "zero", "one", "names", "name")

    def __init__(self, add_table, mul_table, zero=0, one=1, names=None, name="rig"):
        add_t = tuple(tuple(row) for row in add_table)
        mul_t = tuple(tuple(row) for row in mul_table)
        size = len(add_t)
        if any(len(r) != size for r in add_t) or len(mul_t) != size or any(
            len(r) != size for r in mul_t
        ):
            raise ValueError("tables must be square and equally sized")
        rng = range(size)
        if any(x not in rng for row in add_t + mul_t for x in row):
            raise ValueError("table entries must be element indices")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "add_table", add_t)
        object.__setattr__(self, "mul_table", mul_t)
        object.__setattr__(self, "zero", zero)
        object.__setattr__(self, "one", one)
        object.__setattr__(
            self, "names", tuple(names) if names else tuple(str(i) for i in rng)
        )
        object.__setattr__(self, "name", name)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("FiniteCRig is immutable")

    def _validate(self):
        rng = range(self.size)
        add, mul = self.add, self.mul
        z, e = self.zero, self.one
        for x in rng:
            if add(x, z) != x:
                raise ValueError(f"additive unit fails at {x}")
            if mul(x, e) != x:
                raise ValueError(f"multiplicative unit fails at {x}")
            if mul(x, z) != z:
                raise ValueError(f"absorbing zero fails at {x}")
        for x, y in itertools.product(rng, repeat=2):
            if add(x, y) != add(y, x):
                raise ValueError(f"addition not commutative at {x},{y}")
            if mul(x, y) != mul(y, x):
                raise ValueError(f"multiplication not commutative at {x},{y}")
        for x, y, w in itertools.product(rng, repeat=3):
            if add(add(x, y), w) != add(x, add(y, w)):
                raise ValueError(f"addition not associative at {x},{y},{w}")
            if mul(mul(x, y), w) != mul(x, mul(y, w)):
                raise ValueError(f"multiplication not associative at {x},{y},{w}")
            if mul(x, add(y, w)) != add(mul(x, y), mul(x, w)):
                raise ValueError(f"distributivity fails at {x},{y},{w}")

    def add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]

    def elements(self) -> range:
        return range(self.size)

    def element_by_name(self, s: str) -> int:
        if s in self.names:
            return self.names.index(s)
        raise ValueError(f"no element named {s!r} in {self.name}")

    def describe(self, subset) -> str:
        return "{" + ", ".join(self.names[x] for x in sorted(subset)) + "}"

    def __repr__(self):
        return f"FiniteCRig({self.name}, size={self.size})"

    @classmethod
    def zmod(cls, n: int) -> "FiniteCRig":
        rng = range(n)
        return cls(
            [[(x + y) % n for y in rng] for x in rng],
            [[(x * y) % n for y in rng] for x in rng],
            zero=0,
            one=1 % n,
            name=f"zmod:{n}",
        )

    @classmethod
    def boolean(cls) -> "FiniteCRig":
        return cls(
            [[0, 1], [1, 1]],
            [[0, 0], [0, 1]],
            name="boolean",
        )

    @classmethod
    def tropical4(cls) -> "FiniteCRig":
        """Four tropical values 0 < eps < 1 < top with max as addition;
        eps*eps = 0, eps*top = eps, top*top = top."""
        order = [0, 1, 2, 3]  # 0, eps, one, top
        add = [[max(x, y) for y in order] for x in order]
        mul = [
            [0, 0, 0, 0],
            [0, 0, 1, 1],
            [0, 1, 2, 3],
            [0, 1, 3, 3],
        ]
        return cls(add, mul, zero=0, one=2, names=("0", "eps", "1", "top"), name="tropical4")

    @classmethod
    def from_text(cls, text: str) -> "FiniteCRig":
        """Parse the small table format::

            size 2
            zero 0
            one 1
            names 0 1
            add
            0 1
            1 1
            mul
            0 0
            0 1

        The ``names`` line is optional.
        """
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        header: dict[str, str] = {}
        i = 0
        while i < len(lines) and lines[i].split()[0] not in ("add", "mul"):
            key, _, val = lines[i].partition(" ")
            header[key] = val.strip()
            i += 1
        size = int(header["size"])

        def read_table(idx):
            if lines[idx] not in ("add", "mul"):
                raise ValueError(f"expected table marker, got {lines[idx]!r}")
            rows = [[int(x) for x in lines[idx + 1 + k].split()] for k in range(size)]
            return lines[idx], rows, idx + 1 + size

        kind1, t1, i = read_table(i)
        kind2, t2, i = read_table(i)
        tables = {kind1: t1, kind2: t2}
        if set(tables) != {"add", "mul"}:
            raise ValueError("need exactly one add table and one mul table")
        names = tuple(header["names"].split()) if "names" in header else None
        return cls(
            tables["add"],
            tables["mul"],
            zero=int(header.get("zero", 0)),
            one=int(header.get("one", 1)),
            names=names,
            name=header.get("name", "custom"),
        )


def finite_rig_by_name(name: str) -> FiniteCRig:
    if name == "boolean":
        return FiniteCRig.boolean()
    if name == "tropical4":
        return FiniteCRig.tropical4()
    if name.startswith("zmod:"):
        return FiniteCRig.zmod(int(name.split(":", 1)[1]))
    raise ValueError(
        f"unknown finite rig {name!r} (use boolean | zmod:N | tropical4, "
        f"or load a table file)"
    )


@dataclass(frozen=True)
class Ideal:
    """Subset containing 0, closed under sums and scaling by any element."""

    rig: FiniteCRig
    elements: frozenset

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def is_proper(self) -> bool:
        return self.rig.one not in self.elements

    def __repr__(self):
        return f"Ideal({self.rig.describe(self.elements)})"


def ideal_generated(r: FiniteCRig, seed) -> Ideal:
    """Least ideal containing the seed set: the closure of seed + {0}
    under pairwise sums and scaling."""
    cur = set(seed) | {r.zero}
    while True:
        nxt = set(cur)
        for x, y in itertools.product(cur, repeat=2):
            nxt.add(r.add(x, y))
        for c in r.elements():
            for x in cur:
                nxt.add(r.mul(c, x))
        if nxt == cur:
            return Ideal(r, frozenset(cur))
        cur = nxt


def _is_ideal(r: FiniteCRig, s: frozenset) -> bool:
    if r.zero not in s:
        return False
    for x, y in itertools.product(s, repeat=2):
        if r.add(x, y) not in s:
            return False
    for c in r.elements():
        for x in s:
            if r.mul(c, x) not in s:
                return False
    return True


def all_ideals(r: FiniteCRig) -> list[frozenset]:
    """Every ideal, by closure-lattice search from {0} (never by subset
    enumeration); sorted by size then contents."""
    start = ideal_generated(r, ()).elements
    seen = {start}
    queue = [start]
    while queue:
        base = queue.pop()
        for x in r.elements():
            if x in base:
                continue
            nxt = ideal_generated(r, base | {x}).elements
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class SpecSpace:
    """The set of primes of a finite rig, with the closed/basic-open
    operators of the Zariski topology."""

    rig: FiniteCRig
    primes: tuple

    def closed_set(self, ideal_elements) -> tuple:
        s = frozenset(ideal_elements)
        return tuple(p for p in self.primes if p >= s)

    def basic_open(self, f: int) -> tuple:
        return tuple(p for p in self.primes if f not in p)

    def __len__(self):
        return len(self.primes)


def spec(r: FiniteCRig) -> SpecSpace:
    """All primes: proper ideals with multiplicatively closed complement."""
    primes = []
    for cand in all_ideals(r):
        if r.one in cand:
            continue
        comp = [x for x in r.elements() if x not in cand]
        if all(r.mul(x, y) not in cand for x in comp for y in comp):
            primes.append(cand)
    return SpecSpace(r, tuple(primes))


class RadicalMismatch(RuntimeError):
    """The power test and the prime-intersection radical disagree (a bug)."""


def radical(r: FiniteCRig, a: Ideal, space: SpecSpace | None = None) -> Ideal:
    """Elements with some power inside the ideal.

    Computed twice -- by chasing powers and as the intersection of the
    primes containing the ideal -- and cross-checked; a mismatch raises
    RadicalMismatch loudly.
    """
    by_powers = set()
    for x in r.elements():
        y = x
        seen = set()
        while y not in seen:
            if y in a.elements:
                by_powers.add(x)
                break
            seen.add(y)
            y = r.mul(y, x)
    space = space or spec(r)
    containing = [p for p in space.primes if p >= a.elements]
    if containing:
        by_primes = frozenset.intersection(*containing)
    else:
        by_primes = frozenset(r.elements())
    if frozenset(by_powers) != by_primes:
        raise RadicalMismatch(
            f"power radical {r.describe(by_powers)} != prime intersection "
            f"{r.describe(by_primes)} over {r.name}"
        )
    return Ideal(r, frozenset(by_powers))


def multiplicative_closure(r: FiniteCRig, seed) -> frozenset:
    cur = set(seed) | {r.one}
    while True:
        nxt = set(cur) | {r.mul(x, y) for x in cur for y in cur}
        if nxt == cur:
            return frozenset(cur)
        cur = nxt


@dataclass(frozen=True)
class Localization:
    """Finite localization: the class rig, the canonical map, and the
    class lookup for arbitrary admissible fractions."""

    source: FiniteCRig
    denominators: frozenset
    rig: FiniteCRig
    _pair_class: dict

    def class_of(self, x: int, s: int | None = None) -> int:
        s = self.source.one if s is None else s
        if s not in self.denominators:
            raise ValueError(f"{s} is not an admissible denominator")
        return self._pair_class[(x, s)]

    def canonical(self, x: int) -> int:
        return self.class_of(x)


def localize(r: FiniteCRig, s_set) -> Localization:
    """Fractions x/s over a multiplicative set, identifying (x, s) with
    (x', s') when u*s'*x == u*s*x' for some u in the set."""
    s_set = frozenset(s_set)
    if r.one not in s_set or any(
        r.mul(a, b) not in s_set for a in s_set for b in s_set
    ):
        raise ValueError("denominator set must be multiplicative and contain 1")
    pairs = [(x, s) for x in r.elements() for s in sorted(s_set)]
    index = {p: i for i, p in enumerate(pairs)}

    # union-find over the expansion moves (x, s) -> (u*x, u*s)
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for (x, s), i in index.items():
        for u in s_set:
            union(i, index[(r.mul(u, x), r.mul(u, s))])

    reps: dict[int, int] = {}
    class_ids: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []
    for p in pairs:
        root = find(index[p])
        if root not in reps:
            reps[root] = len(order)
            order.append(p)
        class_ids[p] = reps[root]

    k = len(order)

    def add_pair(p, q):
        (x, s), (y, t) = p, q
        return (r.add(r.mul(x, t), r.mul(y, s)), r.mul(s, t))

    def mul_pair(p, q):
        (x, s), (y, t) = p, q
        return (r.mul(x, y), r.mul(s, t))

    add_table = [[class_ids[add_pair(order[i], order[j])] for j in range(k)] for i in range(k)]
    mul_table = [[class_ids[mul_pair(order[i], order[j])] for j in range(k)] for i in range(k)]
    names = tuple(
        f"{r.names[x]}/{r.names[s]}" if s != r.one else r.names[x] for x, s in order
    )
    loc_rig = FiniteCRig(
        add_table,
        mul_table,
        zero=class_ids[(r.zero, r.one)],
        one=class_ids[(r.one, r.one)],
        names=names,
        name=f"{r.name} localized",
    )
    return Localization(r, s_set, loc_rig, class_ids)


@dataclass
class Theorem1Report:
    """Literal check that fractions over s give exactly the families of
    stalk elements on the basic open of s that are locally fractions."""

    rig: str
    s: int
    opens: tuple = ()
    loc_size: int = 0
    families: int = 0
    local_families: int = 0
    bijective: bool = False
    preserves_ops: bool = False
    empty_case: bool = False
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bijective and self.preserves_ops and not self.failures

    def summary(self) -> str:
        verdict = "PASS" if self.ok else f"FAIL {self.failures[:2]}"
        if self.empty_case:
            return (
                f"structure sheaf over {self.rig}, s={self.s}: empty basic open, "
                f"localization has {self.loc_size} element(s): {verdict}"
            )
        return (
            f"structure sheaf over {self.rig}, s={self.s}: {len(self.opens)} prime(s), "
            f"|fractions|={self.loc_size}, |local families|={self.local_families}: {verdict}"
        )


def theorem1_check(r: FiniteCRig, s: int) -> Theorem1Report:
    """Compare the localization of r at the powers of s with the families
    of stalk elements over the basic open D(s) that are locally fractions.

    Families are enumerated exhaustively over the product of the finite
    stalks; the locally-a-fraction condition quantifies over basic-open
    neighborhoods and global numerator/denominator pairs, all finite.
    """
    sp = spec(r)
    opens = sp.basic_open(s)
    powers = multiplicative_closure(r, {s})
    loc = localize(r, powers)
    report = Theorem1Report(r.name, s, opens, loc.rig.size)

    if not opens:
        # empty basic open: the sheaf value is the one-point rig, so the
        # fraction rig must collapse (s is nilpotent-like, 0 in powers)
        report.empty_case = True
        report.families = report.local_families = 1
        report.bijective = loc.rig.size == 1
        report.preserves_ops = True
        if not report.bijective:
            report.failures.append(("nonempty localization over empty open", loc.rig.size))
        return report

    stalks = {
        p: localize(r, frozenset(x for x in r.elements() if x not in p))
        for p in opens
    }

    def family_of_fraction(x, s_pow):
        return tuple(stalks[p].class_of(x, s_pow) for p in opens)

    # image of the fraction rig
    image = {}
    for x in r.elements():
        for s_pow in powers:
            cls = loc.class_of(x, s_pow)
            fam = family_of_fraction(x, s_pow)
            if cls in image and image[cls] != fam:
                report.failures.append(("fraction maps to two families", x, s_pow))
            image[cls] = fam

    # all locally-fraction families: each point needs a basic-open
    # neighborhood inside D(s) on which the family is one global fraction
    prime_list = list(opens)
    pos = {p: i for i, p in enumerate(prime_list)}
    neighborhoods = []  # (member set, admissible (num, w) fractions)
    for t in r.elements():
        nbhd = tuple(q for q in sp.primes if t not in q)
        if not nbhd or not set(nbhd) <= set(prime_list):
            continue
        denoms = [w for w in r.elements() if all(w not in q for q in nbhd)]
        fracs = [(num, w) for w in denoms for num in r.elements()]
        neighborhoods.append((nbhd, fracs))

    all_fams = []
    total = 0
    for fam in itertools.product(*(range(stalks[p].rig.size) for p in prime_list)):
        total += 1
        good = True
        for p in prime_list:
            witnessed = any(
                p in nbhd
                and all(stalks[q].class_of(num, w) == fam[pos[q]] for q in nbhd)
                for nbhd, fracs in neighborhoods
                for num, w in fracs
            )
            if not witnessed:
                good = False
                break
        if good:
            all_fams.append(fam)

    report.families = total
    report.local_families = len(all_fams)
    image_fams = set(image.values())
    report.bijective = (
        len(image) == loc.rig.size
        and len(image_fams) == loc.rig.size
        and image_fams == set(all_fams)
    )
    if not report.bijective:
        missing = set(all_fams) - image_fams
        extra = image_fams - set(all_fams)
        if missing:
            report.failures.append(("families not hit by fractions", sorted(missing)))
        if extra:
            report.failures.append(("fractions outside local families", sorted(extra)))

    # operation preservation, checked through representatives
    ok_ops = True
    rev = {v: k for k, v in image.items()}
    for c1 in range(loc.rig.size):
        for c2 in range(loc.rig.size):
            fam_sum = tuple(
                stalks[p].rig.add(image[c1][i], image[c2][i])
                for i, p in enumerate(prime_list)
            )
            fam_prod = tuple(
                stalks[p].rig.mul(image[c1][i], image[c2][i])
                for i, p in enumerate(prime_list)
            )
            if image[loc.rig.add(c1, c2)] != fam_sum or image[loc.rig.mul(c1, c2)] != fam_prod:
                ok_ops = False
                report.failures.append(("operations disagree", c1, c2))
    report.preserves_ops = ok_ops
    return report
