"""
Finite categories with explicit composition tables.

A :class:`FinCat` is the value universe replacing the category of small
categories: every fibre of a pseudo-functor, every hom-category and every
arrow category is one of these.

"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from dblcat.core.order import ordered
from dblcat.types import Id, Pair

__all__ = ["FinCat", "arrow_category", "product_cat"]


@dataclass(frozen=True)
class FinCat:
    """A finite category. ``comp[(g, f)]`` is ``g∘f``, defined iff tgt(f) = src(g)."""

    objects: Tuple[Id, ...]
    src: Mapping[Id, Id]
    tgt: Mapping[Id, Id]
    identity: Mapping[Id, Id]
    comp: Mapping[Pair, Id]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", ordered(self.objects))
        for attr in ("src", "tgt", "identity", "comp"):
            object.__setattr__(self, attr, dict(getattr(self, attr)))

    @cached_property
    def morphisms(self) -> Tuple[Id, ...]:
        return ordered(self.src)

    @cached_property
    def _homs(self) -> Dict[Pair, Tuple[Id, ...]]:
        homs: Dict[Pair, list] = {}
        for m in self.morphisms:
            homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
        return {key: tuple(val) for key, val in homs.items()}

    def hom(self, a: Id, b: Id) -> Tuple[Id, ...]:
        return self._homs.get((a, b), ())

    def compose(self, *chain: Id) -> Id:
        """Compose ``g, f`` (or a longer chain, outermost first)."""
        result = chain[-1]
        for m in reversed(chain[:-1]):
            result = self.comp[(m, result)]
        return result

    def composable(self) -> Iterator[Pair]:
        for f in self.morphisms:
            for g in self.morphisms:
                if self.tgt[f] == self.src[g]:
                    yield (g, f)

    def is_identity(self, m: Id) -> bool:
        return self.identity.get(self.src[m]) == m

    def inverse(self, m: Id) -> Optional[Id]:
        """The inverse of ``m``, or None if ``m`` is not an isomorphism."""
        a, b = self.src[m], self.tgt[m]
        for n in self.hom(b, a):
            if self.comp.get((n, m)) == self.identity[a] \
                    and self.comp.get((m, n)) == self.identity[b]:
                return n
        return None

    def is_iso(self, m: Id) -> bool:
        return self.inverse(m) is not None

    def isos(self, a: Id, b: Id) -> Tuple[Id, ...]:
        return tuple(m for m in self.hom(a, b) if self.is_iso(m))

    def size(self) -> Dict[str, int]:
        return {"objects": len(self.objects), "morphisms": len(self.morphisms)}

    @classmethod
    def discrete(cls, objects: Iterable[Id], name: str = "") -> "FinCat":
        objs = ordered(objects)
        return cls(
            objects=objs,
            src={("id", x): x for x in objs},
            tgt={("id", x): x for x in objs},
            identity={x: ("id", x) for x in objs},
            comp={(("id", x), ("id", x)): ("id", x) for x in objs},
            name=name,
        )

    @classmethod
    def from_preorder(cls, objects: Iterable[Id], leq: Iterable[Pair],
                      name: str = "") -> "FinCat":
        """The thin category of the reflexive transitive closure of ``leq``.

        The morphism ``a → b`` is named ``(a, b)``.
        """
        objs = ordered(objects)
        rel = {(a, a) for a in objs} | set(leq)
        changed = True
        while changed:
            changed = False
            for (a, b) in list(rel):
                for (c, d) in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        morphisms = ordered(rel)
        comp = {}
        for (a, b) in morphisms:
            for (c, d) in morphisms:
                if b == c:
                    comp[((c, d), (a, b))] = (a, d)
        return cls(
            objects=objs,
            src={m: m[0] for m in morphisms},
            tgt={m: m[1] for m in morphisms},
            identity={a: (a, a) for a in objs},
            comp=comp,
            name=name,
        )


def arrow_category(cat: FinCat, name: str = "") -> FinCat:
    """The arrow category: objects the morphisms of ``cat``; a morphism
    ``f → f'`` is ``(f, f', s0, s1)`` with ``f'∘s0 = s1∘f``."""
    morphisms = []
    for f in cat.morphisms:
        for f2 in cat.morphisms:
            for s0 in cat.hom(cat.src[f], cat.src[f2]):
                for s1 in cat.hom(cat.tgt[f], cat.tgt[f2]):
                    if cat.comp[(f2, s0)] == cat.comp[(s1, f)]:
                        morphisms.append((f, f2, s0, s1))
    comp = {}
    for (f, f2, s0, s1) in morphisms:
        for (g, g2, t0, t1) in morphisms:
            if g == f2:
                comp[((g, g2, t0, t1), (f, f2, s0, s1))] = (
                    f, g2, cat.comp[(t0, s0)], cat.comp[(t1, s1)])
    return FinCat(
        objects=cat.morphisms,
        src={m: m[0] for m in morphisms},
        tgt={m: m[1] for m in morphisms},
        identity={f: (f, f, cat.identity[cat.src[f]], cat.identity[cat.tgt[f]])
                  for f in cat.morphisms},
        comp=comp,
        name=name or "ar({})".format(cat.name),
    )


def product_cat(left: FinCat, right: FinCat, name: str = "") -> FinCat:
    morphisms = [(m, n) for m in left.morphisms for n in right.morphisms]
    comp = {}
    for (g, f) in left.composable():
        for (k, h) in right.composable():
            comp[((g, k), (f, h))] = (left.comp[(g, f)], right.comp[(k, h)])
    return FinCat(
        objects=[(a, b) for a in left.objects for b in right.objects],
        src={(m, n): (left.src[m], right.src[n]) for (m, n) in morphisms},
        tgt={(m, n): (left.tgt[m], right.tgt[n]) for (m, n) in morphisms},
        identity={(a, b): (left.identity[a], right.identity[b])
                  for a in left.objects for b in right.objects},
        comp=comp,
        name=name or "{}x{}".format(left.name, right.name),
    )
