"""Finite permutation groups: Schreier-Sims, orbits, blocks.

Permutations act on ``{0, ..., n-1}``.  Products read left to right:
``(p * q)(i) = q(p(i))``, so ``p * q`` means "apply ``p``, then ``q``", which
matches concatenation of paths in the monodromy module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a bijection: {imgs}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        imgs = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a] = b
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_full_cycle(self) -> bool:
        return self.cycle_type() == (self.degree,)

    def order(self) -> int:
        out = 1
        for length in self.cycle_type():
            out = out * length // gcd(out, length)
        return out


def product(perms, n: int) -> Permutation:
    acc = Permutation.identity(n)
    for p in perms:
        acc = acc * p
    return acc


@dataclass
class _Level:
    point: int
    generators: list[Permutation]
    transversal: dict[int, Permutation] = field(default_factory=dict)


class PermGroup:
    """Group generated by ``generators`` with a lazily built stabilizer chain."""

    def __init__(self, generators, degree: int | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree needed for a group without generators")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generators act on different degrees")
        self.degree = degree
        self.generators = gens

    # -- orbits ---------------------------------------------------------------

    def orbit(self, point: int, gens=None) -> list[int]:
        gens = self.generators if gens is None else gens
        seen = [point]
        known = {point}
        for p in seen:
            for g in gens:
                q = g(p)
                if q not in known:
                    known.add(q)
                    seen.append(q)
        return seen

    def orbits(self) -> list[list[int]]:
        out, covered = [], set()
        for p in range(self.degree):
            if p not in covered:
                orb = sorted(self.orbit(p))
                covered.update(orb)
                out.append(orb)
        return out

    @property
    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    # -- Schreier-Sims ----------------------------------------------------------

    def _orbit_transversal(self, point, gens):
        trans = {point: Permutation.identity(self.degree)}
        queue = [point]
        for p in queue:
            for g in gens:
                q = g(p)
                if q not in trans:
                    trans[q] = trans[p] * g
                    queue.append(q)
        return trans

    def _sift(self, levels, h):
        for i, lvl in enumerate(levels):
            b = h(lvl.point)
            if b not in lvl.transversal:
                return h, i
            h = h * lvl.transversal[b].inverse()
        return h, len(levels)

    @cached_property
    def chain(self) -> list[_Level]:
        """Base and strong generating set by the deterministic Schreier-Sims algorithm."""
        gens = [g for g in self.generators if not g.is_identity]
        levels: list[_Level] = []
        for g in gens:
            if all(g(lvl.point) == lvl.point for lvl in levels):
                levels.append(_Level(next(p for p in range(self.degree) if g(p) != p), []))
        for i, lvl in enumerate(levels):
            lvl.generators = [g for g in gens if all(g(levels[j].point) == levels[j].point for j in range(i))]
            lvl.transversal = self._orbit_transversal(lvl.point, lvl.generators)
        i = len(levels) - 1
        while i >= 0:
            lvl = levels[i]
            grew = False
            for beta, u in list(lvl.transversal.items()):
                for s in lvl.generators:
                    h = u * s * lvl.transversal[s(beta)].inverse()
                    if h.is_identity:
                        continue
                    h, j = self._sift(levels[i + 1 :], h)
                    j += i + 1
                    if j == len(levels) and h.is_identity:
                        continue
                    if j == len(levels):
                        moved = next(p for p in range(self.degree) if h(p) != p)
                        levels.append(_Level(moved, []))
                    for jj in range(i + 1, j + 1):
                        levels[jj].generators.append(h)
                        levels[jj].transversal = self._orbit_transversal(levels[jj].point, levels[jj].generators)
                    i = j
                    grew = True
                    break
                if grew:
                    break
            if not grew:
                i -= 1
        return levels

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self.chain]

    @property
    def order(self) -> int:
        out = 1
        for lvl in self.chain:
            out *= len(lvl.transversal)
        return out

    def contains(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            return False
        h, _ = self._sift(self.chain, perm)
        return h.is_identity

    def stabilizer_generators(self, point: int) -> list[Permutation]:
        """Generators of the stabilizer of ``point`` (Schreier generators, deduplicated)."""
        trans = self._orbit_transversal(point, self.generators)
        out = {}
        for b, u_b in trans.items():
            for s in self.generators:
                sg = u_b * s * trans[s(b)].inverse()
                if not sg.is_identity:
                    out[sg.images] = sg
        return list(out.values())

    @property
    def is_doubly_transitive(self) -> bool:
        if not self.is_transitive:
            return False
        if self.degree < 2:
            return True
        stab = self.stabilizer_generators(0)
        rest = set(range(1, self.degree))
        return set(self.orbit(1, stab)) == rest if stab else self.degree == 2

    # -- blocks ---------------------------------------------------------------------

    def minimal_block(self, points) -> frozenset[int]:
        """Smallest block containing ``points`` (union-find closure)."""
        parent = list(range(self.degree))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        pts = list(points)
        queue = []
        for p in pts[1:]:
            ra, rb = find(pts[0]), find(p)
            if ra != rb:
                parent[rb] = ra
                queue.append((pts[0], p))
        while queue:
            a, b = queue.pop()
            for g in self.generators:
                ga, gb = find(g(a)), find(g(b))
                if ga != gb:
                    parent[gb] = ga
                    queue.append((g(a), g(b)))
        root = find(pts[0])
        return frozenset(i for i in range(self.degree) if find(i) == root)

    def block_system(self, block) -> tuple[frozenset[int], ...]:
        """The partition generated by images of ``block``."""
        parts = {frozenset(block)}
        queue = [frozenset(block)]
        while queue:
            b = queue.pop()
            for g in self.generators:
                img = frozenset(g(i) for i in b)
                if img not in parts:
                    parts.add(img)
                    queue.append(img)
        return tuple(sorted(parts, key=min))

    @property
    def is_primitive(self) -> bool:
        if not self.is_transitive:
            return False
        return all(len(self.minimal_block((0, j))) == self.degree for j in range(1, self.degree))

    def block_systems(self, max_degree: int = 12) -> list[tuple[frozenset[int], ...]]:
        """All nontrivial block systems of a transitive group, smallest blocks first."""
        n = self.degree
        if n > max_degree:
            raise ValueError(f"block enumeration is limited to degree <= {max_degree}")
        if not self.is_transitive:
            raise ValueError("block systems need a transitive group")
        atoms = {self.minimal_block((0, j)) for j in range(1, n)}
        blocks = set(atoms)
        frontier = list(atoms)
        while frontier:
            b = frontier.pop()
            for a in atoms:
                if not a <= b:
                    j = self.minimal_block(sorted(a | b))
                    if j not in blocks:
                        blocks.add(j)
                        frontier.append(j)
        proper = sorted((b for b in blocks if 1 < len(b) < n), key=lambda b: (len(b), sorted(b)))
        return [self.block_system(b) for b in proper]
